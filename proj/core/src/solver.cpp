#include "congruence/solver.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace congruence {

namespace {

constexpr std::size_t kMaxVars = 12;

std::vector<std::size_t> effective_significance(const MonomialOrder& order, std::size_t nvars) {
  if (order.significance.empty()) {
    std::vector<std::size_t> id(nvars);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  if (order.significance.size() != nvars) throw DomainError("monomial order arity does not match ring");
  std::vector<bool> seen(nvars, false);
  for (auto v : order.significance) {
    if (v >= nvars || seen[v]) throw DomainError("monomial order is not a permutation of the variables");
    seen[v] = true;
  }
  return order.significance;
}

// Exponents in significance order (index 0 is the most significant variable).
struct IMono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint32_t support = 0;  // bit i set iff e[i] > 0

  friend bool operator==(const IMono& a, const IMono& b) { return a.e == b.e; }
};

IMono imul(const IMono& a, const IMono& b, std::size_t n) {
  IMono r;
  for (std::size_t i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  r.support = a.support | b.support;
  return r;
}

IMono idiv(const IMono& a, const IMono& b, std::size_t n) {
  IMono r;
  r.deg = a.deg - b.deg;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    if (r.e[i]) r.support |= 1u << i;
  }
  return r;
}

IMono ilcm(const IMono& a, const IMono& b, std::size_t n) {
  IMono r;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  r.support = a.support | b.support;
  return r;
}

bool idivides(const IMono& a, const IMono& b, std::size_t n) {
  if ((a.support & ~b.support) != 0 || a.deg > b.deg) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

bool coprime(const IMono& a, const IMono& b) { return (a.support & b.support) == 0; }

struct Cmp {
  OrderKind kind;
  std::size_t n;
  int operator()(const IMono& a, const IMono& b) const {
    if (kind == OrderKind::Grevlex) {
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (std::size_t i = n; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
};

template <ExactField F>
struct ITerm {
  IMono m;
  typename F::Elem c;
};

template <ExactField F>
using IPoly = std::vector<ITerm<F>>;  // descending, no zero coefficients

template <ExactField F>
class Engine {
 public:
  using Elem = typename F::Elem;

  Engine(RingPtr<F> ring, const MonomialOrder& order)
      : ring_(std::move(ring)),
        k_(ring_->field()),
        n_(ring_->nvars()),
        sig_(effective_significance(order, n_)),
        cmp_{order.kind, n_},
        order_(order) {
    if (n_ > kMaxVars) throw DomainError("Groebner engine supports at most 12 variables");
  }

  IPoly<F> import(const MultiPoly<F>& f) const {
    IPoly<F> out;
    out.reserve(f.terms().size());
    for (auto& t : f.terms()) {
      IMono m;
      for (std::size_t k = 0; k < n_; ++k) {
        auto x = t.mono.e[sig_[k]];
        if (x > 0xFFFF) throw DomainError("exponent too large for the Groebner engine");
        m.e[k] = static_cast<std::uint16_t>(x);
        m.deg += x;
        if (x) m.support |= 1u << k;
      }
      out.push_back({m, t.coeff});
    }
    std::sort(out.begin(), out.end(), [&](const ITerm<F>& a, const ITerm<F>& b) { return cmp_(a.m, b.m) > 0; });
    return out;
  }

  MultiPoly<F> export_poly(const IPoly<F>& p) const {
    std::vector<typename MultiPoly<F>::Term> terms;
    terms.reserve(p.size());
    for (auto& t : p) {
      Monomial m(n_);
      for (std::size_t k = 0; k < n_; ++k) m.e[sig_[k]] = t.m.e[k];
      terms.push_back({std::move(m), t.c});
    }
    return MultiPoly<F>::from_terms(ring_, std::move(terms));
  }

  void make_monic(IPoly<F>& p) const {
    if (p.empty() || k_.equal(p.front().c, k_.one())) return;
    auto inv = k_.inv(p.front().c);
    for (auto& t : p) t.c = k_.mul(t.c, inv);
  }

  // a - coef * mono * b
  IPoly<F> sub_mul(const IPoly<F>& a, std::size_t a_from, const Elem& coef, const IMono& mono, const IPoly<F>& b,
                   std::size_t b_from) const {
    IPoly<F> out;
    out.reserve(a.size() - a_from + b.size() - b_from);
    std::size_t i = a_from, j = b_from;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      IMono bm = imul(b[j].m, mono, n_);
      int c = i == a.size() ? -1 : cmp_(a[i].m, bm);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back({bm, k_.neg(k_.mul(coef, b[j].c))});
        ++j;
      } else {
        auto v = k_.sub(a[i].c, k_.mul(coef, b[j].c));
        if (!k_.is_zero(v)) out.push_back({a[i].m, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  int find_reducer(const IMono& m, const std::vector<IPoly<F>>& basis, const std::vector<bool>* active) const {
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (active && !(*active)[g]) continue;
      if (basis[g].empty()) continue;
      if (idivides(basis[g].front().m, m, n_)) return static_cast<int>(g);
    }
    return -1;
  }

  // Monic basis elements assumed.
  IPoly<F> reduce(IPoly<F> p, const std::vector<IPoly<F>>& basis, bool full,
                  const std::vector<bool>* active = nullptr) const {
    IPoly<F> rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
      int g = find_reducer(p[pos].m, basis, active);
      if (g < 0) {
        if (!full) break;
        rem.push_back(p[pos]);
        ++pos;
        continue;
      }
      const auto& gp = basis[static_cast<std::size_t>(g)];
      IMono q = idiv(p[pos].m, gp.front().m, n_);
      Elem coef = p[pos].c;
      p = sub_mul(p, pos + 1, coef, q, gp, 1);
      pos = 0;
    }
    if (!full) return p;
    for (std::size_t i = pos; i < p.size(); ++i) rem.push_back(p[i]);
    return rem;
  }

  IPoly<F> spoly(const IPoly<F>& a, const IPoly<F>& b) const {
    IMono l = ilcm(a.front().m, b.front().m, n_);
    IMono qa = idiv(l, a.front().m, n_);
    IMono qb = idiv(l, b.front().m, n_);
    // monic a, b: s = qa*a - qb*b
    IPoly<F> sa;
    sa.reserve(a.size());
    for (std::size_t i = 1; i < a.size(); ++i) sa.push_back({imul(a[i].m, qa, n_), a[i].c});
    return sub_mul(sa, 0, k_.one(), qb, b, 1);
  }

  GroebnerBasis<F> run(std::span<const MultiPoly<F>> gens, BuchbergerStats* stats) {
    std::vector<IPoly<F>> basis;
    std::vector<bool> active;
    for (auto& g : gens) {
      if (!(*g.ring() == *ring_)) throw RingMismatch("generators live in different rings");
      auto p = import(g);
      if (p.empty()) continue;
      make_monic(p);
      basis.push_back(std::move(p));
      active.push_back(true);
    }
    struct Pair {
      std::size_t i, j;
      IMono lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
      int c = cmp_(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs_for = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i) {
        queue.push_back({i, j, ilcm(basis[i].front().m, basis[j].front().m, n_)});
        pending.insert({i, j});
      }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    BuchbergerStats local;
    while (!queue.empty()) {
      auto it = std::min_element(queue.begin(), queue.end(), pair_less);
      Pair pr = *it;
      *it = queue.back();
      queue.pop_back();
      pending.erase({pr.i, pr.j});
      ++local.pairs_considered;
      const auto& a = basis[pr.i];
      const auto& b = basis[pr.j];
      if (coprime(a.front().m, b.front().m)) {
        ++local.pairs_skipped_coprime;
        continue;
      }
      // chain criterion: some k with LM(k) | lcm and both (i,k), (j,k) already treated
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!idivides(basis[k].front().m, pr.lcm, n_)) continue;
        auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
        if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
      }
      if (chain) {
        ++local.pairs_skipped_chain;
        continue;
      }
      auto h = reduce(spoly(a, b), basis, true);
      if (h.empty()) {
        ++local.zero_reductions;
        continue;
      }
      make_monic(h);
      basis.push_back(std::move(h));
      active.push_back(true);
      if (basis.back().front().m.deg == 0) {
        // unit ideal
        basis = {basis.back()};
        active = {true};
        queue.clear();
        break;
      }
      add_pairs_for(basis.size() - 1);
    }
    if (stats) *stats = local;
    return finish(std::move(basis));
  }

  GroebnerBasis<F> finish(std::vector<IPoly<F>> basis) const {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        const auto& mi = basis[i].front().m;
        const auto& mj = basis[j].front().m;
        if (idivides(mj, mi, n_) && (!(mi == mj) || j < i)) keep[i] = false;
      }
    }
    std::vector<IPoly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (keep[i]) minimal.push_back(std::move(basis[i]));
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<bool> others(minimal.size(), true);
      others[i] = false;
      IPoly<F> head{minimal[i].front()};
      IPoly<F> tail(minimal[i].begin() + 1, minimal[i].end());
      auto red = reduce(std::move(tail), minimal, true, &others);
      head.insert(head.end(), red.begin(), red.end());
      minimal[i] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const IPoly<F>& a, const IPoly<F>& b) { return cmp_(a.front().m, b.front().m) < 0; });
    std::vector<MultiPoly<F>> out;
    for (auto& p : minimal) out.push_back(export_poly(p));
    return GroebnerBasis<F>(ring_, order_, std::move(out), true);
  }

  std::vector<IPoly<F>> import_basis(const GroebnerBasis<F>& g) const {
    std::vector<IPoly<F>> b;
    for (auto& p : g.generators()) {
      auto ip = import(p);
      make_monic(ip);
      b.push_back(std::move(ip));
    }
    return b;
  }

  IMono lm(const MultiPoly<F>& f) const { return import(f).front().m; }

  std::size_t nvars() const { return n_; }
  const std::vector<std::size_t>& significance() const { return sig_; }

 private:
  RingPtr<F> ring_;
  F k_;
  std::size_t n_;
  std::vector<std::size_t> sig_;
  Cmp cmp_;
  MonomialOrder order_;
};

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto sig = effective_significance(*this, a.size());
  if (kind == OrderKind::Grevlex) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = sig.size(); k-- > 0;) {
      auto x = a.e[sig[k]], y = b.e[sig[k]];
      if (x != y) return x < y ? 1 : -1;
    }
    return 0;
  }
  for (auto v : sig)
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
  return 0;
}

template <ExactField F>
Monomial GroebnerBasis<F>::leading_monomial(std::size_t i) const {
  const auto& p = gens_.at(i);
  const Monomial* best = &p.terms().front().mono;
  for (auto& t : p.terms())
    if (order_.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

template <ExactField F>
GroebnerBasis<F> buchberger(std::span<const MultiPoly<F>> gens, const MonomialOrder& order, BuchbergerStats* stats) {
  if (gens.empty()) throw DomainError("buchberger needs at least one generator to fix the ring");
  Engine<F> engine(gens[0].ring(), order);
  return engine.run(gens, stats);
}

template <ExactField F>
MultiPoly<F> normal_form(const MultiPoly<F>& f, const GroebnerBasis<F>& g) {
  if (!(*f.ring() == *g.ring())) throw RingMismatch("normal form across rings");
  Engine<F> engine(g.ring(), g.order());
  auto basis = engine.import_basis(g);
  return engine.export_poly(engine.reduce(engine.import(f), basis, true));
}

template <ExactField F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& a, const MultiPoly<F>& b, const MonomialOrder& order) {
  Engine<F> engine(a.ring(), order);
  auto ia = engine.import(a), ib = engine.import(b);
  engine.make_monic(ia);
  engine.make_monic(ib);
  return engine.export_poly(engine.spoly(ia, ib));
}

template <ExactField F>
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis<F>& g) {
  const std::size_t n = g.ring()->nvars();
  if (g.is_unit_ideal()) return 0;
  if (g.generators().empty()) return n == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < g.generators().size(); ++i) leads.push_back(g.leading_monomial(i));
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto& m : leads) {
      bool pure = m.e[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && m.e[w] != 0) pure = false;
      if (pure && (bound[v] == 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
    }
    if (bound[v] == 0) return std::nullopt;
  }
  auto in_lead_ideal = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::uint64_t count = 0;
  Monomial cur(n);
  // depth-first walk of the staircase; a monomial in the leading ideal
  // prunes all its multiples in the current variable
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (std::uint32_t a = 0; a < bound[v]; ++a) {
      cur.e[v] = a;
      if (in_lead_ideal(cur)) break;
      self(self, v + 1);
    }
    cur.e[v] = 0;
  };
  walk(walk, 0);
  return count;
}

template <ExactField F>
std::optional<MultiPoly<F>> univariate_eliminant(const GroebnerBasis<F>& g, std::size_t var) {
  for (auto& p : g.generators()) {
    bool only = !p.is_zero();
    for (auto& t : p.terms()) {
      for (std::size_t w = 0; w < t.mono.size() && only; ++w)
        if (w != var && t.mono.e[w] != 0) only = false;
      if (!only) break;
    }
    if (only && p.total_degree() > 0) return p;
  }
  return std::nullopt;
}

#define CONGRUENCE_INSTANTIATE_SOLVER(F)                                                                 \
  template class GroebnerBasis<F>;                                                                       \
  template GroebnerBasis<F> buchberger<F>(std::span<const MultiPoly<F>>, const MonomialOrder&,          \
                                          BuchbergerStats*);                                             \
  template MultiPoly<F> normal_form<F>(const MultiPoly<F>&, const GroebnerBasis<F>&);                    \
  template MultiPoly<F> s_polynomial<F>(const MultiPoly<F>&, const MultiPoly<F>&, const MonomialOrder&); \
  template std::optional<std::uint64_t> quotient_dimension<F>(const GroebnerBasis<F>&);                 \
  template std::optional<MultiPoly<F>> univariate_eliminant<F>(const GroebnerBasis<F>&, std::size_t);

CONGRUENCE_INSTANTIATE_SOLVER(RationalField)
CONGRUENCE_INSTANTIATE_SOLVER(PrimeField)

}  // namespace congruence
