#include "congruence/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "congruence/linalg.hpp"

namespace congruence {

// ---------------------------------------------------------------------------
// Monomial

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// ---------------------------------------------------------------------------
// MultiPoly

template <ExactField F>
MultiPoly<F>::MultiPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::constant(RingPtr<F> ring, const Elem& c) {
  MultiPoly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::variable(RingPtr<F> ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  Monomial m(ring->nvars());
  m.e[index] = 1;
  MultiPoly p(ring);
  p.terms_.push_back({std::move(m), ring->field().one()});
  return p;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::monomial(RingPtr<F> ring, Monomial m, const Elem& c) {
  if (m.size() != ring->nvars()) throw DomainError("monomial arity does not match ring");
  MultiPoly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), c});
  return p;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::from_terms(RingPtr<F> ring, std::vector<Term> terms) {
  const F& k = ring->field();
  std::map<Monomial, Elem, GrevlexGreater> acc;
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw DomainError("monomial arity does not match ring");
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second = k.add(it->second, t.coeff);
  }
  MultiPoly p(ring);
  for (auto& [m, c] : acc)
    if (!k.is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <ExactField F>
void MultiPoly<F>::require_same_ring(const MultiPoly& o) const {
  if (ring_ == o.ring_) return;
  ring_->field().require_same(o.ring_->field());
  if (!(*ring_ == *o.ring_)) throw RingMismatch("polynomials live in different rings");
}

template <ExactField F>
bool MultiPoly<F>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

template <ExactField F>
int MultiPoly<F>::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

template <ExactField F>
int MultiPoly<F>::degree_in(std::size_t var) const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.e.at(var)));
  return d;
}

template <ExactField F>
bool MultiPoly<F>::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

template <ExactField F>
const typename MultiPoly<F>::Term& MultiPoly<F>::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

template <ExactField F>
typename F::Elem MultiPoly<F>::coefficient(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return field().zero();
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

namespace {

template <ExactField F, class Term>
std::vector<Term> merge_terms(const F& k, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      auto s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (!k.is_zero(s)) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <ExactField F>
MultiPoly<F>& MultiPoly<F>::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  terms_ = merge_terms(field(), terms_, o.terms_, false);
  return *this;
}

template <ExactField F>
MultiPoly<F>& MultiPoly<F>::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  terms_ = merge_terms(field(), terms_, o.terms_, true);
  return *this;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::scale(const Elem& c) const {
  MultiPoly r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
  return r;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::times(const MultiPoly& o) const {
  require_same_ring(o);
  const F& k = field();
  if (is_zero() || o.is_zero()) return MultiPoly(ring_);
  std::map<Monomial, Elem, GrevlexGreater> acc;
  for (auto& a : terms_)
    for (auto& b : o.terms_) {
      auto m = a.mono * b.mono;
      auto c = k.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second = k.add(it->second, c);
    }
  MultiPoly r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!k.is_zero(c)) r.terms_.push_back({m, c});
  return r;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::pow(unsigned k) const {
  MultiPoly result = constant(ring_, field().one());
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (t.mono.e[var] == 0) continue;
    Term d{t.mono, field().mul(t.coeff, field().from_int(t.mono.e[var]))};
    d.mono.e[var] -= 1;
    out.push_back(std::move(d));
  }
  // lowering one exponent can reorder terms
  return from_terms(ring_, std::move(out));
}

template <ExactField F>
typename F::Elem MultiPoly<F>::evaluate(std::span<const Elem> point) const {
  if (point.size() != ring_->nvars()) throw DomainError("evaluation point has wrong arity");
  const F& k = field();
  Elem acc = k.zero();
  for (auto& t : terms_) {
    Elem v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t j = 0; j < t.mono.e[i]; ++j) v = k.mul(v, point[i]);
    acc = k.add(acc, v);
  }
  return acc;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != ring_->nvars()) throw DomainError("substitution has wrong arity");
  if (images.empty()) return *this;
  RingPtr<F> target = images[0].ring();
  for (auto& im : images) images[0].require_same_ring(im);
  // powers[i][j] = images[i]^j, built lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t j) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, target->field().one()));
    while (cache.size() <= j) cache.push_back(cache.back() * images[i]);
    return cache[j];
  };
  MultiPoly result(target);
  for (auto& t : terms_) {
    MultiPoly term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.e[i] > 0) term = term * power(i, t.mono.e[i]);
    result += term;
  }
  return result;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::exact_divide(const MultiPoly& d) const {
  require_same_ring(d);
  if (d.is_zero()) throw DivisionByZero();
  const F& k = field();
  const auto& lead = d.leading_term();
  auto lead_inv = k.inv(lead.coeff);
  MultiPoly quotient(ring_);
  MultiPoly rest = *this;
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!lead.mono.divides(lt.mono)) throw DomainError("inexact polynomial division");
    Term q{lt.mono / lead.mono, k.mul(lt.coeff, lead_inv)};
    MultiPoly step(ring_);
    step.terms_.reserve(d.terms_.size());
    for (auto& t : d.terms_) step.terms_.push_back({t.mono * q.mono, k.mul(t.coeff, q.coeff)});
    rest -= step;
    qterms.push_back(std::move(q));
  }
  quotient.terms_ = std::move(qterms);  // produced in descending order
  return quotient;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::homogeneous_part(unsigned degree) const {
  MultiPoly r(ring_);
  for (auto& t : terms_)
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  return r;
}

template <ExactField F>
MultiPoly<F> MultiPoly<F>::rename_into(RingPtr<F> target, std::span<const std::size_t> var_map) const {
  field().require_same(target->field());
  if (var_map.size() != ring_->nvars()) throw DomainError("variable map has wrong arity");
  std::vector<Term> out;
  for (auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (var_map[i] >= target->nvars()) throw DomainError("variable map out of range");
      m.e[var_map[i]] += t.mono.e[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

template <ExactField F>
std::string MultiPoly<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    std::string c = field().to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == "1");
    bool constant_term = t.mono.is_one();
    if (constant_term) {
      os << c;
      continue;
    }
    if (!unit) os << c << "*";
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->names()[i];
      if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
    }
  }
  return os.str();
}

template <ExactField F>
MultiPoly<F> polar(const MultiPoly<F>& f, std::span<const typename F::Elem> y) {
  if (f.is_zero()) throw DomainError("polar of the zero polynomial");
  if (y.size() != f.ring()->nvars()) throw DomainError("polar point has wrong arity");
  MultiPoly<F> out(f.ring());
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!f.field().is_zero(y[i])) out += f.derivative(i).scale(y[i]);
  return out;
}

template <ExactField F>
MultiPoly<F> hessian3(const MultiPoly<F>& f) {
  if (f.ring()->nvars() != 3) throw DomainError("hessian3 needs a ternary form");
  if (!f.is_homogeneous() || f.total_degree() < 2)
    throw DomainError("hessian3 needs a homogeneous form of degree >= 2");
  std::vector<std::vector<MultiPoly<F>>> h;
  for (std::size_t i = 0; i < 3; ++i) {
    auto fi = f.derivative(i);
    std::vector<MultiPoly<F>> row;
    for (std::size_t j = 0; j < 3; ++j) row.push_back(fi.derivative(j));
    h.push_back(std::move(row));
  }
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
         h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

// ---------------------------------------------------------------------------
// UnivariatePoly

template <ExactField F>
UnivariatePoly<F>::UnivariatePoly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

template <ExactField F>
void UnivariatePoly<F>::trim() {
  while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

template <ExactField F>
UnivariatePoly<F> UnivariatePoly<F>::monomial(F field, const Elem& c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, field.zero());
  v[degree] = c;
  return UnivariatePoly(std::move(field), std::move(v));
}

template <ExactField F>
typename F::Elem UnivariatePoly<F>::leading() const {
  return c_.empty() ? field_.zero() : c_.back();
}

template <ExactField F>
UnivariatePoly<F> UnivariatePoly<F>::monic() const {
  if (c_.empty()) return *this;
  return scale(field_.inv(c_.back()));
}

template <ExactField F>
UnivariatePoly<F> UnivariatePoly<F>::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.mul(c_[i], field_.from_int(static_cast<long>(i))));
  return UnivariatePoly(field_, std::move(d));
}

template <ExactField F>
typename F::Elem UnivariatePoly<F>::evaluate(const Elem& x) const {
  Elem acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

template <ExactField F>
UnivariatePoly<F>& UnivariatePoly<F>::operator+=(const UnivariatePoly& o) {
  field_.require_same(o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

template <ExactField F>
UnivariatePoly<F>& UnivariatePoly<F>::operator-=(const UnivariatePoly& o) {
  field_.require_same(o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

template <ExactField F>
UnivariatePoly<F> UnivariatePoly<F>::times(const UnivariatePoly& o) const {
  field_.require_same(o.field_);
  if (c_.empty() || o.c_.empty()) return UnivariatePoly(field_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (field_.is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return UnivariatePoly(field_, std::move(r));
}

template <ExactField F>
UnivariatePoly<F> UnivariatePoly<F>::scale(const Elem& c) const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (auto& x : c_) r.push_back(field_.mul(x, c));
  return UnivariatePoly(field_, std::move(r));
}

template <ExactField F>
UnivariatePoly<F> UnivariatePoly<F>::pow(unsigned k) const {
  UnivariatePoly result(field_, {field_.one()});
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

template <ExactField F>
std::pair<UnivariatePoly<F>, UnivariatePoly<F>> UnivariatePoly<F>::divmod(const UnivariatePoly& d) const {
  field_.require_same(d.field_);
  if (d.is_zero()) throw DivisionByZero();
  std::vector<Elem> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UnivariatePoly(field_), *this};
  std::vector<Elem> q(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
  auto inv = field_.inv(d.leading());
  for (int i = degree(); i >= dd; --i) {
    auto c = field_.mul(rem[static_cast<std::size_t>(i)], inv);
    q[static_cast<std::size_t>(i - dd)] = c;
    if (field_.is_zero(c)) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = field_.sub(slot, field_.mul(c, d.c_[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UnivariatePoly(field_, std::move(q)), UnivariatePoly(field_, std::move(rem))};
}

template <ExactField F>
std::string UnivariatePoly<F>::to_string(const std::string& var) const {
  auto ring = make_ring(field_, {var});
  return from_univariate(*this, ring).to_string();
}

template <ExactField F>
UnivariatePoly<F> gcd(const UnivariatePoly<F>& a, const UnivariatePoly<F>& b) {
  UnivariatePoly<F> x = a, y = b;
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

template <ExactField F>
UnivariateSquarefree<F> squarefree_decomposition(const UnivariatePoly<F>& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  const F& k = f.field();
  auto ch = k.characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(f.degree()))
    throw DomainError("characteristic " + std::to_string(ch) + " does not exceed degree " +
                      std::to_string(f.degree()) + "; squarefree decomposition refused");
  UnivariateSquarefree<F> out{f.leading(), {}};
  if (f.degree() == 0) return out;
  auto monic_f = f.monic();
  auto df = monic_f.derivative();
  auto a0 = gcd(monic_f, df);
  auto b = monic_f.divmod(a0).first;
  auto c = df.divmod(a0).first;
  auto d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    auto a = gcd(b, d);
    auto b_next = b.divmod(a).first;
    auto c_next = d.divmod(a).first;
    d = c_next - b_next.derivative();
    if (a.degree() > 0) out.parts.emplace_back(a, i);
    b = std::move(b_next);
    ++i;
  }
  return out;
}

template <ExactField F>
UnivariatePoly<F> squarefree_part(const UnivariatePoly<F>& f) {
  auto dec = squarefree_decomposition(f);
  UnivariatePoly<F> r(f.field(), {f.field().one()});
  for (auto& [p, m] : dec.parts) r = r * p;
  return r;
}

template <ExactField F>
UnivariatePoly<F> to_univariate(const MultiPoly<F>& f) {
  if (f.ring()->nvars() != 1) throw DomainError("to_univariate needs a one-variable ring");
  std::vector<typename F::Elem> c(static_cast<std::size_t>(std::max(0, f.total_degree() + 1)), f.field().zero());
  for (auto& t : f.terms()) c[t.mono.e[0]] = t.coeff;
  return UnivariatePoly<F>(f.field(), std::move(c));
}

template <ExactField F>
MultiPoly<F> from_univariate(const UnivariatePoly<F>& f, RingPtr<F> ring, std::size_t var) {
  std::vector<typename MultiPoly<F>::Term> terms;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    Monomial m(ring->nvars());
    m.e.at(var) = static_cast<std::uint32_t>(i);
    terms.push_back({std::move(m), f.coeffs()[i]});
  }
  return MultiPoly<F>::from_terms(std::move(ring), std::move(terms));
}

// ---------------------------------------------------------------------------
// BinaryForm

template <ExactField F>
BinaryForm<F>::BinaryForm(F field, int degree) : field_(std::move(field)), degree_(degree) {
  if (degree < 0) throw DomainError("binary form degree must be non-negative");
  c_.assign(static_cast<std::size_t>(degree + 1), field_.zero());
}

template <ExactField F>
BinaryForm<F>::BinaryForm(F field, std::vector<Elem> coeffs)
    : field_(std::move(field)), degree_(static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("binary form needs at least one coefficient");
}

template <ExactField F>
bool BinaryForm<F>::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [&](const Elem& x) { return field_.is_zero(x); });
}

template <ExactField F>
int BinaryForm<F>::t_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!field_.is_zero(c_[i])) return static_cast<int>(i);
  return degree_ + 1;
}

template <ExactField F>
BinaryForm<F> BinaryForm<F>::operator-() const {
  return scale(field_.neg(field_.one()));
}

template <ExactField F>
BinaryForm<F>& BinaryForm<F>::operator+=(const BinaryForm& o) {
  field_.require_same(o.field_);
  if (o.degree_ != degree_) throw DomainError("adding binary forms of different degrees");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  return *this;
}

template <ExactField F>
BinaryForm<F>& BinaryForm<F>::operator-=(const BinaryForm& o) {
  field_.require_same(o.field_);
  if (o.degree_ != degree_) throw DomainError("subtracting binary forms of different degrees");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  return *this;
}

template <ExactField F>
BinaryForm<F> BinaryForm<F>::times(const BinaryForm& o) const {
  field_.require_same(o.field_);
  BinaryForm r(field_, degree_ + o.degree_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = field_.add(r.c_[i + j], field_.mul(c_[i], o.c_[j]));
  return r;
}

template <ExactField F>
BinaryForm<F> BinaryForm<F>::scale(const Elem& c) const {
  BinaryForm r(*this);
  for (auto& x : r.c_) x = field_.mul(x, c);
  return r;
}

template <ExactField F>
BinaryForm<F> BinaryForm<F>::derivative_s() const {
  if (degree_ == 0) return BinaryForm(field_, 0);
  BinaryForm r(field_, degree_ - 1);
  for (int i = 0; i < degree_; ++i)
    r.c_[static_cast<std::size_t>(i)] = field_.mul(c_[static_cast<std::size_t>(i)], field_.from_int(degree_ - i));
  return r;
}

template <ExactField F>
BinaryForm<F> BinaryForm<F>::derivative_t() const {
  if (degree_ == 0) return BinaryForm(field_, 0);
  BinaryForm r(field_, degree_ - 1);
  for (int i = 1; i <= degree_; ++i)
    r.c_[static_cast<std::size_t>(i - 1)] = field_.mul(c_[static_cast<std::size_t>(i)], field_.from_int(i));
  return r;
}

template <ExactField F>
typename F::Elem BinaryForm<F>::evaluate(const Elem& s, const Elem& t) const {
  Elem acc = field_.zero();
  for (int i = 0; i <= degree_; ++i) {
    Elem term = c_[static_cast<std::size_t>(i)];
    for (int j = 0; j < degree_ - i; ++j) term = field_.mul(term, s);
    for (int j = 0; j < i; ++j) term = field_.mul(term, t);
    acc = field_.add(acc, term);
  }
  return acc;
}

template <ExactField F>
UnivariatePoly<F> BinaryForm<F>::dehomogenize() const {
  std::vector<Elem> v(c_.size(), field_.zero());
  for (int i = 0; i <= degree_; ++i) v[static_cast<std::size_t>(degree_ - i)] = c_[static_cast<std::size_t>(i)];
  return UnivariatePoly<F>(field_, std::move(v));
}

template <ExactField F>
BinaryForm<F> BinaryForm<F>::homogenize(const UnivariatePoly<F>& p, int degree) {
  if (p.degree() > degree) throw DomainError("homogenizing above the declared degree");
  BinaryForm r(p.field(), degree);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) r.c_[static_cast<std::size_t>(degree) - j] = p.coeffs()[j];
  return r;
}

template <ExactField F>
std::string BinaryForm<F>::to_string(const std::string& s, const std::string& t) const {
  auto ring = make_ring(field_, {s, t});
  std::vector<typename MultiPoly<F>::Term> terms;
  for (int i = 0; i <= degree_; ++i)
    terms.push_back({Monomial({static_cast<std::uint32_t>(degree_ - i), static_cast<std::uint32_t>(i)}),
                     c_[static_cast<std::size_t>(i)]});
  return MultiPoly<F>::from_terms(ring, std::move(terms)).to_string();
}

namespace {

template <class T>
Matrix<T> sylvester(std::span<const T> f, std::span<const T> g, const T& zero) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  Matrix<T> s(m + n, std::vector<T>(m + n, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f[j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g[j];
  return s;
}

template <ExactField F>
struct PolyOps {
  RingPtr<F> ring;
  MultiPoly<F> zero() const { return MultiPoly<F>(ring); }
  MultiPoly<F> one() const { return MultiPoly<F>::constant(ring, ring->field().one()); }
  bool is_zero(const MultiPoly<F>& a) const { return a.is_zero(); }
  MultiPoly<F> mul(const MultiPoly<F>& a, const MultiPoly<F>& b) const { return a * b; }
  MultiPoly<F> sub(const MultiPoly<F>& a, const MultiPoly<F>& b) const { return a - b; }
  MultiPoly<F> neg(const MultiPoly<F>& a) const { return -a; }
  MultiPoly<F> exact_div(const MultiPoly<F>& a, const MultiPoly<F>& b) const { return a.exact_divide(b); }
};

}  // namespace

template <ExactField F>
typename F::Elem resultant_binary(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  f.field().require_same(g.field());
  if (f.is_zero() && g.is_zero()) throw DomainError("resultant of two zero forms");
  auto s = sylvester<typename F::Elem>(f.coeffs(), g.coeffs(), f.field().zero());
  return determinant(f.field(), std::move(s));
}

template <ExactField F>
MultiPoly<F> resultant_symbolic(std::span<const MultiPoly<F>> f, std::span<const MultiPoly<F>> g) {
  if (f.empty() || g.empty()) throw DomainError("resultant needs coefficient vectors");
  auto ring = f[0].ring();
  bool all_zero = std::all_of(f.begin(), f.end(), [](auto& p) { return p.is_zero(); }) &&
                  std::all_of(g.begin(), g.end(), [](auto& p) { return p.is_zero(); });
  if (all_zero) throw DomainError("resultant of two zero forms");
  PolyOps<F> ops{ring};
  return bareiss_determinant(sylvester<MultiPoly<F>>(f, g, ops.zero()), ops);
}

template <ExactField F>
typename F::Elem discriminant(const BinaryForm<F>& f) {
  return resultant_binary(f.derivative_s(), f.derivative_t());
}

template <ExactField F>
BinaryForm<F> gcd(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  a.field().require_same(b.field());
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero forms");
  auto normalize = [](const BinaryForm<F>& x) {
    int k = x.t_order();
    auto g = x.dehomogenize().monic();
    BinaryForm<F> r = BinaryForm<F>::homogenize(g, g.degree());
    for (int i = 0; i < k; ++i) r = r * BinaryForm<F>(x.field(), {x.field().zero(), x.field().one()});
    return r;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  int k = std::min(a.t_order(), b.t_order());
  auto g = gcd(a.dehomogenize(), b.dehomogenize());
  BinaryForm<F> r = BinaryForm<F>::homogenize(g, g.degree());
  for (int i = 0; i < k; ++i) r = r * BinaryForm<F>(a.field(), {a.field().zero(), a.field().one()});
  return r;
}

template <ExactField F>
BinarySquarefree<F> squarefree_decomposition(const BinaryForm<F>& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero form");
  const F& k = f.field();
  auto ch = k.characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(f.degree()))
    throw DomainError("characteristic " + std::to_string(ch) + " does not exceed degree " +
                      std::to_string(f.degree()) + "; squarefree decomposition refused");
  const int t_mult = f.t_order();
  auto affine = squarefree_decomposition(f.dehomogenize());
  BinarySquarefree<F> out{affine.lead, {}};
  std::map<int, BinaryForm<F>> by_mult;
  for (auto& [p, m] : affine.parts) by_mult.emplace(m, BinaryForm<F>::homogenize(p, p.degree()));
  if (t_mult > 0) {
    BinaryForm<F> t(k, {k.zero(), k.one()});
    auto it = by_mult.find(t_mult);
    if (it == by_mult.end()) by_mult.emplace(t_mult, t);
    else it->second = it->second * t;
  }
  for (auto& [m, p] : by_mult) out.parts.emplace_back(p, m);
  return out;
}

template <ExactField F>
MultiplicityProfile multiplicity_profile(const BinaryForm<F>& f) {
  if (f.is_zero()) throw DomainError("multiplicity profile of the zero form");
  auto dec = squarefree_decomposition(f);
  MultiplicityProfile prof;
  for (auto& [p, m] : dec.parts) {
    prof.counts[m] += p.degree();
    prof.degree += m * p.degree();
  }
  return prof;
}

// ---------------------------------------------------------------------------
// MultiplicityProfile

MultiplicityProfile::MultiplicityProfile(std::initializer_list<std::pair<const int, int>> init) {
  for (auto& [m, c] : init) {
    if (m < 1 || c < 0) throw DomainError("invalid multiplicity profile entry");
    if (c == 0) continue;
    counts[m] += c;
    degree += m * c;
  }
}

int MultiplicityProfile::count(int multiplicity) const {
  auto it = counts.find(multiplicity);
  return it == counts.end() ? 0 : it->second;
}

int MultiplicityProfile::distinct_roots() const {
  int n = 0;
  for (auto& [m, c] : counts) n += c;
  return n;
}

int MultiplicityProfile::max_multiplicity() const { return counts.empty() ? 0 : counts.rbegin()->first; }

int MultiplicityProfile::roots_with_multiplicity_at_least(int m) const {
  int n = 0;
  for (auto& [mult, c] : counts)
    if (mult >= m) n += c;
  return n;
}

std::string MultiplicityProfile::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [m, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << m << ": " << c;
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------

#define CONGRUENCE_INSTANTIATE_POLYRING(F)                                                         \
  template class MultiPoly<F>;                                                                     \
  template class UnivariatePoly<F>;                                                                \
  template class BinaryForm<F>;                                                                    \
  template MultiPoly<F> polar<F>(const MultiPoly<F>&, std::span<const F::Elem>);                   \
  template MultiPoly<F> hessian3<F>(const MultiPoly<F>&);                                          \
  template UnivariatePoly<F> gcd<F>(const UnivariatePoly<F>&, const UnivariatePoly<F>&);           \
  template UnivariateSquarefree<F> squarefree_decomposition<F>(const UnivariatePoly<F>&);          \
  template UnivariatePoly<F> squarefree_part<F>(const UnivariatePoly<F>&);                         \
  template UnivariatePoly<F> to_univariate<F>(const MultiPoly<F>&);                                \
  template MultiPoly<F> from_univariate<F>(const UnivariatePoly<F>&, RingPtr<F>, std::size_t);     \
  template F::Elem resultant_binary<F>(const BinaryForm<F>&, const BinaryForm<F>&);                \
  template MultiPoly<F> resultant_symbolic<F>(std::span<const MultiPoly<F>>,                       \
                                              std::span<const MultiPoly<F>>);                      \
  template F::Elem discriminant<F>(const BinaryForm<F>&);                                          \
  template BinaryForm<F> gcd<F>(const BinaryForm<F>&, const BinaryForm<F>&);                       \
  template BinarySquarefree<F> squarefree_decomposition<F>(const BinaryForm<F>&);                  \
  template MultiplicityProfile multiplicity_profile<F>(const BinaryForm<F>&);

CONGRUENCE_INSTANTIATE_POLYRING(RationalField)
CONGRUENCE_INSTANTIATE_POLYRING(PrimeField)

}  // namespace congruence
