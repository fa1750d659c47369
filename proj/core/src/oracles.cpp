#include "congruence/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "congruence/error.hpp"
#include "congruence/linalg.hpp"
#include "congruence/linegeom.hpp"
#include "congruence/solver.hpp"

namespace congruence {

namespace {

constexpr std::size_t kSkip = std::numeric_limits<std::size_t>::max();

struct Count {
  std::int64_t count;
  std::optional<std::int64_t> with_multiplicity;
};

template <class Body>
OracleReport run_oracle(const std::string& name, std::uint64_t seed, const std::string& field, bool multiplicity,
                        const std::string& condition, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  for (int attempt = 0; attempt < kOracleAttempts; ++attempt) {
    Xoshiro256 rng(seed, static_cast<std::uint64_t>(attempt));
    if (auto c = body(rng)) {
      OracleReport r;
      r.name = name;
      r.seed = seed;
      r.count = c->count;
      r.count_with_multiplicity = c->with_multiplicity;
      r.multiplicity_counted = multiplicity;
      r.retries = attempt;
      r.field = field;
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  }
  throw GenericityFailure(name + ": " + condition + " failed in " + std::to_string(kOracleAttempts) +
                          " attempts (seed " + std::to_string(seed) + ")");
}

template <ExactField F>
typename F::Elem random_elem(const F& k, Xoshiro256& rng) {
  return k.from_int(static_cast<long>(rng.uniform(-kRandomCoordBound, kRandomCoordBound)));
}

template <ExactField F>
Matrix<typename F::Elem> random_invertible(const F& k, Xoshiro256& rng, std::size_t n) {
  for (;;) {
    Matrix<typename F::Elem> m(n, std::vector<typename F::Elem>(n, k.zero()));
    for (auto& row : m)
      for (auto& x : row) x = random_elem(k, rng);
    if (!k.is_zero(determinant(k, m))) return m;
  }
}

// f(M X)
template <ExactField F>
MultiPoly<F> linear_change(const MultiPoly<F>& f, const Matrix<typename F::Elem>& m) {
  const auto& ring = f.ring();
  std::vector<MultiPoly<F>> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    MultiPoly<F> x(ring);
    for (std::size_t j = 0; j < ring->nvars(); ++j)
      x += MultiPoly<F>::variable(ring, j).scale(m[i][j]);
    images.push_back(std::move(x));
  }
  return f.substitute(images);
}

// f(M (1, a_1, .., a_{n-1})) in the target ring of n-1 variables
template <ExactField F>
MultiPoly<F> affine_chart(const MultiPoly<F>& f, const Matrix<typename F::Elem>& m, const RingPtr<F>& target) {
  const std::size_t n = f.ring()->nvars();
  std::vector<MultiPoly<F>> images;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = MultiPoly<F>::constant(target, m[i][0]);
    for (std::size_t j = 1; j < n; ++j) x += MultiPoly<F>::variable(target, j - 1).scale(m[i][j]);
    images.push_back(std::move(x));
  }
  return f.substitute(images);
}

// Coefficients of f as a polynomial in `var`, indexed by exponent, with the
// remaining variables renamed into `target` (var_map[var] is ignored).
template <ExactField F>
std::vector<MultiPoly<F>> split_by(const MultiPoly<F>& f, std::size_t var, const RingPtr<F>& target,
                                   const std::vector<std::size_t>& var_map) {
  const int deg = f.degree_in(var);
  std::vector<std::vector<typename MultiPoly<F>::Term>> buckets(static_cast<std::size_t>(std::max(deg, 0)) + 1);
  for (auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i == var || t.mono.e[i] == 0) continue;
      m.e[var_map.at(i)] += t.mono.e[i];
    }
    buckets[t.mono.e[var]].push_back({std::move(m), t.coeff});
  }
  std::vector<MultiPoly<F>> out;
  for (auto& b : buckets) out.push_back(MultiPoly<F>::from_terms(target, std::move(b)));
  return out;
}

template <ExactField F>
UnivariatePoly<F> univariate_in(const MultiPoly<F>& f, std::size_t var) {
  const F& k = f.field();
  std::vector<typename F::Elem> c(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1, k.zero());
  for (auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (i != var && t.mono.e[i] != 0) throw DomainError("polynomial is not univariate");
    c[t.mono.e[var]] = t.coeff;
  }
  return UnivariatePoly<F>(k, std::move(c));
}

template <ExactField F>
BinaryForm<F> divide_form(const BinaryForm<F>& a, const BinaryForm<F>& g) {
  auto [q, r] = a.dehomogenize().divmod(g.dehomogenize());
  if (!r.is_zero()) throw DomainError("binary form division is not exact");
  return BinaryForm<F>::homogenize(q, a.degree() - g.degree());
}

// Common zero locus of the forms, as a gcd; nullopt when all are zero.
template <ExactField F>
std::optional<BinaryForm<F>> common_factor(const std::vector<BinaryForm<F>>& forms) {
  std::optional<BinaryForm<F>> g;
  for (auto& f : forms) {
    if (f.is_zero()) continue;
    g = g ? gcd(*g, f) : gcd(f, f);
  }
  return g;
}

// Number of parameters with the same image as a general parameter value,
// measured twice; nullopt when the two draws disagree.
template <ExactField F>
std::optional<int> map_degree(const std::vector<BinaryForm<F>>& phi, Xoshiro256& rng) {
  const F& k = phi[0].field();
  std::optional<int> seen;
  for (int draw = 0; draw < 2; ++draw) {
    auto a = random_elem(k, rng);
    std::vector<typename F::Elem> at;
    for (auto& f : phi) at.push_back(f.evaluate(a, k.one()));
    std::vector<BinaryForm<F>> w;
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = i + 1; j < phi.size(); ++j) w.push_back(phi[j].scale(at[i]) - phi[i].scale(at[j]));
    auto g = common_factor(w);
    if (!g) throw DomainError("parametrization is constant");
    if (seen && *seen != g->degree()) return std::nullopt;
    seen = g->degree();
  }
  return seen;
}

// Coefficients of the plane through three points (signed 3x3 minors),
// multilinear in the points.
template <ExactField F>
std::array<typename F::Elem, 4> plane_through(const F& k, const std::array<typename F::Elem, 4>& p,
                                              const std::array<typename F::Elem, 4>& q,
                                              const std::array<typename F::Elem, 4>& r) {
  std::array<typename F::Elem, 4> out;
  for (std::size_t drop = 0; drop < 4; ++drop) {
    Matrix<typename F::Elem> m(3);
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == drop) continue;
      m[0].push_back(p[j]);
      m[1].push_back(q[j]);
      m[2].push_back(r[j]);
    }
    auto det = determinant(k, m);
    out[drop] = drop % 2 == 0 ? det : k.neg(det);
  }
  return out;
}

template <ExactField F>
bool all_simple(const BinaryForm<F>& f) {
  if (f.is_zero()) return false;
  auto p = multiplicity_profile(f);
  return p.max_multiplicity() <= 1 && p.degree == f.degree();
}

template <ExactField F>
BinaryForm<F> restrict_curve_to_plane(const RationalSpaceCurve<F>& c, const std::array<typename F::Elem, 4>& h) {
  BinaryForm<F> out(c.field(), c.degree());
  for (std::size_t i = 0; i < 4; ++i) out += c.component(i).scale(h[i]);
  return out;
}

// p(alpha s + beta, gamma s + delta) for a binary form p.
template <ExactField F>
UnivariatePoly<F> reparametrize(const BinaryForm<F>& p, const std::array<typename F::Elem, 4>& mob) {
  const F& k = p.field();
  UnivariatePoly<F> a(k, {mob[1], mob[0]}), b(k, {mob[3], mob[2]});
  UnivariatePoly<F> out(k);
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    const auto& c = p.coeff(static_cast<std::size_t>(i));
    if (k.is_zero(c)) continue;
    out += (a.pow(static_cast<unsigned>(d - i)) * b.pow(static_cast<unsigned>(i))).scale(c);
  }
  return out;
}

template <ExactField F>
std::optional<std::int64_t> sec_order_chart(const RationalSpaceCurve<F>& c, Xoshiro256& rng) {
  const F& k = c.field();
  auto v = random_point(k, rng);
  Matrix<typename F::Elem> vrow{{v.x[0], v.x[1], v.x[2], v.x[3]}};
  auto forms = nullspace(k, vrow, 4);
  std::vector<BinaryForm<F>> psi;
  for (auto& l : forms) psi.push_back(restrict_curve_to_plane(c, {l[0], l[1], l[2], l[3]}));
  auto g = common_factor(psi);
  if (!g || g->degree() > 0) return std::nullopt;  // v on C

  std::array<typename F::Elem, 4> mob;
  do {
    for (auto& x : mob) x = random_elem(k, rng);
  } while (k.is_zero(k.sub(k.mul(mob[0], mob[3]), k.mul(mob[1], mob[2]))));

  auto ring = make_ring(k, {"s", "u"});
  std::vector<MultiPoly<F>> at_s, at_u;
  for (auto& p : psi) {
    auto a = reparametrize(p, mob);
    at_s.push_back(from_univariate(a, ring, 0));
    at_u.push_back(from_univariate(a, ring, 1));
  }
  const auto diagonal = MultiPoly<F>::variable(ring, 0) - MultiPoly<F>::variable(ring, 1);
  std::vector<MultiPoly<F>> minors;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      minors.push_back((at_s[i] * at_u[j] - at_s[j] * at_u[i]).exact_divide(diagonal));

  auto gb = buchberger<F>(minors, MonomialOrder::lex({0, 1}));
  auto n = quotient_dimension(gb);
  if (!n) return std::nullopt;
  if (*n == 0) return 0;
  auto elim = univariate_eliminant(gb, 1);
  if (!elim) return std::nullopt;
  const auto distinct = static_cast<std::uint64_t>(squarefree_part(univariate_in(*elim, 1)).degree());
  // every node contributes the ordered pairs (s1, s2) and (s2, s1), reduced
  if (distinct != *n || *n % 2 != 0) return std::nullopt;
  return static_cast<std::int64_t>(*n / 2);
}

template <ExactField F>
std::optional<std::uint64_t> chart_quotient_dimension(const std::vector<MultiPoly<F>>& system, Xoshiro256& rng) {
  const auto& ring = system.front().ring();
  const F& k = ring->field();
  const std::size_t n = ring->nvars();
  auto m = random_invertible(k, rng, n);
  std::vector<std::string> names;
  for (std::size_t i = 1; i < n; ++i) names.push_back("a" + std::to_string(i));
  auto target = make_ring(k, names);
  std::vector<MultiPoly<F>> affine;
  for (auto& f : system) affine.push_back(affine_chart(f, m, target));
  auto gb = buchberger<F>(affine);
  return quotient_dimension(gb);
}

// Quotient dimension in two independent random charts; nullopt on disagreement.
template <ExactField F>
std::optional<Count> two_chart_count(const std::vector<MultiPoly<F>>& system, Xoshiro256& rng) {
  auto r1 = rng.split(1), r2 = rng.split(2);
  auto a = chart_quotient_dimension(system, r1);
  if (!a) return std::nullopt;
  auto b = chart_quotient_dimension(system, r2);
  if (!b || *a != *b) return std::nullopt;
  return Count{static_cast<std::int64_t>(*a), std::nullopt};
}

template <ExactField F>
std::optional<std::pair<std::int64_t, std::int64_t>> inflection_chart(const MultiPoly<F>& f, Xoshiro256& rng) {
  const F& k = f.field();
  const int d = f.total_degree();
  const int e = 3 * (d - 2);
  auto g = linear_change(f, random_invertible(k, rng, 3));
  auto hes = hessian3(g);
  if (hes.is_zero()) return std::nullopt;
  auto xy = make_ring(k, {"x", "y"});
  std::vector<MultiPoly<F>> chart{MultiPoly<F>::variable(xy, 0), MultiPoly<F>::variable(xy, 1),
                                  MultiPoly<F>::constant(xy, k.one())};
  auto g1 = g.substitute(chart), h1 = hes.substitute(chart);
  auto xr = make_ring(k, {"x"});
  auto gy = split_by(g1, 1, xr, {0, kSkip});
  auto hy = split_by(h1, 1, xr, {0, kSkip});
  if (static_cast<int>(gy.size()) != d + 1 || static_cast<int>(hy.size()) != e + 1) return std::nullopt;
  if (!gy.back().is_constant() || !hy.back().is_constant()) return std::nullopt;
  std::reverse(gy.begin(), gy.end());
  std::reverse(hy.begin(), hy.end());
  auto r = univariate_in(resultant_symbolic<F>(gy, hy), 0);
  if (r.is_zero() || r.degree() != d * e) return std::nullopt;
  return std::make_pair(static_cast<std::int64_t>(squarefree_part(r).degree()), static_cast<std::int64_t>(r.degree()));
}

template <ExactField F>
std::optional<std::uint64_t> bitangent_chart(const MultiPoly<F>& f, Xoshiro256& rng) {
  const F& k = f.field();
  auto g = linear_change(f, random_invertible(k, rng, 3));
  auto xmb = make_ring(k, {"x", "m", "b"});
  auto x = MultiPoly<F>::variable(xmb, 0);
  std::vector<MultiPoly<F>> line{x, MultiPoly<F>::variable(xmb, 1) * x + MultiPoly<F>::variable(xmb, 2),
                                 MultiPoly<F>::constant(xmb, k.one())};
  auto restricted = g.substitute(line);
  auto sys = make_ring(k, {"m", "b", "p", "q"});
  auto a = split_by(restricted, 0, sys, {kSkip, 0, 1});
  if (a.size() != 5) return std::nullopt;
  auto p = MultiPoly<F>::variable(sys, 2), q = MultiPoly<F>::variable(sys, 3);
  auto two = MultiPoly<F>::constant(sys, k.from_int(2));
  // restriction = A4 (x^2 + p x + q)^2
  std::vector<MultiPoly<F>> eqs{a[3] - two * p * a[4], a[2] - (p * p + two * q) * a[4], a[1] - two * p * q * a[4],
                                a[0] - q * q * a[4]};
  auto gb = buchberger<F>(eqs);
  return quotient_dimension(gb);
}

}  // namespace

template <ExactField F>
OracleReport oracle_sec_order(const RationalSpaceCurve<F>& c, std::uint64_t seed) {
  return run_oracle("sec-order", seed, c.field().name(), false, "general projection center",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto r1 = rng.split(1), r2 = rng.split(2);
                      auto a = sec_order_chart(c, r1);
                      if (!a) return std::nullopt;
                      auto b = sec_order_chart(c, r2);
                      if (!b || *a != *b) return std::nullopt;
                      return Count{*a, std::nullopt};
                    });
}

template <ExactField F>
OracleReport oracle_sec_class(const RationalSpaceCurve<F>& c, std::uint64_t seed) {
  return run_oracle("sec-class", seed, c.field().name(), false, "transversal plane section",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto h = random_plane(c.field(), rng);
                      auto r = restrict_curve_to_plane(c, h.a);
                      if (!all_simple(r)) return std::nullopt;
                      const std::int64_t n = multiplicity_profile(r).distinct_roots();
                      return Count{n * (n - 1) / 2, std::nullopt};
                    });
}

template <ExactField F>
OracleReport oracle_ch0_degree(const RationalSpaceCurve<F>& c, std::uint64_t seed) {
  const F& k = c.field();
  return run_oracle(
      "ch0-degree", seed, k.name(), false, "pencil of lines with simple incidences",
      [&](Xoshiro256& rng) -> std::optional<Count> {
        auto h = random_plane(k, rng);
        auto v = random_point_on(h, rng);
        auto w0 = random_point_on(h, rng);
        auto w1 = random_point_on(h, rng);
        auto z = random_point(k, rng);
        if (h.contains(z) || v.same_as(w1)) return std::nullopt;
        if (meets_curve(join_points(v, w1), c)) return std::nullopt;
        // lines join(v, w0 + u w1) are cut out by H and the plane through them and z
        auto a0 = plane_through(k, v.x, w0.x, z.x);
        auto a1 = plane_through(k, v.x, w1.x, z.x);
        auto ur = make_ring(k, {"u"});
        auto u = MultiPoly<F>::variable(ur, 0);
        auto in_h = restrict_curve_to_plane(c, h.a);
        if (in_h.is_zero()) return std::nullopt;
        std::vector<MultiPoly<F>> f, g;
        for (int i = 0; i <= c.degree(); ++i) {
          f.push_back(MultiPoly<F>::constant(ur, in_h.coeff(static_cast<std::size_t>(i))));
          MultiPoly<F> gi(ur);
          for (std::size_t j = 0; j < 4; ++j) {
            const auto& phi = c.component(j).coeff(static_cast<std::size_t>(i));
            gi += MultiPoly<F>::constant(ur, k.mul(a0[j], phi)) + u.scale(k.mul(a1[j], phi));
          }
          g.push_back(std::move(gi));
        }
        auto res = univariate_in(resultant_symbolic<F>(f, g), 0);
        if (res.is_zero()) return std::nullopt;
        const std::int64_t distinct = squarefree_part(res).degree();
        if (distinct != res.degree()) return std::nullopt;
        return Count{distinct, res.degree()};
      });
}

template <ExactField F>
OracleReport oracle_ch1_degree(const SurfaceP3<F>& s, std::uint64_t seed) {
  const auto& f = s.poly();
  const F& k = f.field();
  const int d = s.degree();
  if (d < 2) throw DomainError("ch1 degree needs a surface of degree >= 2");
  return run_oracle(
      "ch1-degree", seed, k.name(), false, "pencil of lines transversal at infinity with simple tangents",
      [&](Xoshiro256& rng) -> std::optional<Count> {
        auto h = random_plane(k, rng);
        auto v = random_point_on(h, rng);
        auto w0 = random_point_on(h, rng);
        auto w1 = random_point_on(h, rng);
        if (v.same_as(w1)) return std::nullopt;
        // the line of the pencil at u = infinity
        if (!all_simple(restrict_to_points(f, v.x, w1.x))) return std::nullopt;
        auto stu = make_ring(k, {"s", "t", "u"});
        auto sv = MultiPoly<F>::variable(stu, 0), tv = MultiPoly<F>::variable(stu, 1),
             uv = MultiPoly<F>::variable(stu, 2);
        std::vector<MultiPoly<F>> images;
        for (std::size_t i = 0; i < 4; ++i)
          images.push_back(sv.scale(v.x[i]) + tv.scale(w0.x[i]) + (tv * uv).scale(w1.x[i]));
        auto restricted = f.substitute(images);
        auto ur = make_ring(k, {"u"});
        // coefficient of s^(d-i) t^i
        auto by_t = split_by(restricted, 1, make_ring(k, {"s", "u"}), {0, kSkip, 1});
        std::vector<MultiPoly<F>> c;
        for (int i = 0; i <= d; ++i) {
          MultiPoly<F> ci(ur);
          if (i < static_cast<int>(by_t.size())) {
            auto by_s = split_by(by_t[static_cast<std::size_t>(i)], 0, ur, {kSkip, 0});
            if (d - i < static_cast<int>(by_s.size())) ci = by_s[static_cast<std::size_t>(d - i)];
          }
          c.push_back(std::move(ci));
        }
        std::vector<MultiPoly<F>> fs, ft;
        for (int i = 0; i < d; ++i) {
          fs.push_back(c[static_cast<std::size_t>(i)].scale(k.from_int(d - i)));
          ft.push_back(c[static_cast<std::size_t>(i + 1)].scale(k.from_int(i + 1)));
        }
        auto disc = univariate_in(resultant_symbolic<F>(fs, ft), 0);
        if (disc.is_zero()) return std::nullopt;
        const std::int64_t distinct = squarefree_part(disc).degree();
        if (distinct != disc.degree()) return std::nullopt;
        return Count{distinct, disc.degree()};
      });
}

template <ExactField F>
void require_smooth_plane_curve(const MultiPoly<F>& f) {
  if (f.ring()->nvars() != 3 || f.is_zero() || !f.is_homogeneous())
    throw DomainError("plane curve must be a nonzero ternary form");
  const F& k = f.field();
  std::vector<MultiPoly<F>> system{f, f.derivative(0), f.derivative(1), f.derivative(2)};
  auto ab = make_ring(k, {"a", "b"});
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<MultiPoly<F>> chart;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 3; ++i)
      chart.push_back(i == c ? MultiPoly<F>::constant(ab, k.one()) : MultiPoly<F>::variable(ab, next++));
    std::vector<MultiPoly<F>> affine;
    for (auto& p : system) {
      auto q = p.substitute(chart);
      if (!q.is_zero()) affine.push_back(std::move(q));
    }
    if (affine.empty()) throw DomainError("plane curve is singular");
    auto gb = buchberger<F>(affine);
    if (!gb.is_unit_ideal()) throw DomainError("plane curve is singular");
  }
}

template <ExactField F>
OracleReport oracle_plane_inflections(const MultiPoly<F>& f, std::uint64_t seed) {
  require_smooth_plane_curve(f);
  if (f.total_degree() < 3) throw DomainError("inflection count needs a plane curve of degree >= 3");
  return run_oracle("plane-inflections", seed, f.field().name(), false, "general chart for curve and Hessian",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto r1 = rng.split(1), r2 = rng.split(2);
                      auto a = inflection_chart(f, r1);
                      if (!a) return std::nullopt;
                      auto b = inflection_chart(f, r2);
                      if (!b || *a != *b) return std::nullopt;
                      return Count{a->first, a->second};
                    });
}

template <ExactField F>
OracleReport oracle_plane_bitangents(const MultiPoly<F>& f, std::uint64_t seed) {
  if (f.ring()->nvars() != 3 || f.total_degree() != 4)
    throw DomainError("bitangent oracle is limited to plane quartics");
  require_smooth_plane_curve(f);
  return run_oracle("plane-bitangents", seed, f.field().name(), true, "zero-dimensional bitangent system",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto r1 = rng.split(1), r2 = rng.split(2);
                      auto a = bitangent_chart(f, r1);
                      if (!a) return std::nullopt;
                      auto b = bitangent_chart(f, r2);
                      if (!b || *a != *b) return std::nullopt;
                      return Count{static_cast<std::int64_t>(*a), std::nullopt};
                    });
}

template <ExactField F>
OracleReport oracle_infl_through_point(const SurfaceP3<F>& s, std::uint64_t seed) {
  const auto& f = s.poly();
  return run_oracle("infl-through-point", seed, f.field().name(), true, "zero-dimensional polar system",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto y = random_point(f.field(), rng);
                      auto g = polar<F>(f, y.x);
                      if (g.is_zero()) return std::nullopt;
                      auto h = g.is_constant() ? MultiPoly<F>::constant(f.ring(), f.field().zero())
                                               : polar<F>(g, y.x);
                      std::vector<MultiPoly<F>> system{f, g};
                      if (!h.is_zero()) system.push_back(h);
                      return two_chart_count(system, rng);
                    });
}

template <ExactField F>
OracleReport oracle_dual_surface_degree(const SurfaceP3<F>& s, std::uint64_t seed) {
  const auto& f = s.poly();
  return run_oracle("dual-surface-degree", seed, f.field().name(), true, "zero-dimensional polar system",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto y = random_point(f.field(), rng);
                      auto z = random_point(f.field(), rng);
                      auto g = polar<F>(f, y.x);
                      auto gt = polar<F>(f, z.x);
                      if (g.is_zero() || gt.is_zero()) return std::nullopt;
                      return two_chart_count(std::vector<MultiPoly<F>>{f, g, gt}, rng);
                    });
}

template <ExactField F>
OracleReport oracle_dual_curve_degree(const std::array<BinaryForm<F>, 3>& gamma, std::uint64_t seed) {
  const F& k = gamma[0].field();
  const int d = gamma[0].degree();
  for (auto& g : gamma)
    if (g.degree() != d) throw DomainError("plane parametrization components must share one degree");
  std::vector<BinaryForm<F>> phi(gamma.begin(), gamma.end());
  auto content = common_factor(phi);
  if (!content) throw DomainError("plane parametrization is zero");
  if (content->degree() > 0) throw DomainError("non-reduced parametrization: components share a factor");

  std::array<BinaryForm<F>, 3> ds{gamma[0].derivative_s(), gamma[1].derivative_s(), gamma[2].derivative_s()};
  std::array<BinaryForm<F>, 3> dt{gamma[0].derivative_t(), gamma[1].derivative_t(), gamma[2].derivative_t()};
  std::vector<BinaryForm<F>> delta{ds[1] * dt[2] - ds[2] * dt[1], ds[2] * dt[0] - ds[0] * dt[2],
                                   ds[0] * dt[1] - ds[1] * dt[0]};
  auto cg = common_factor(delta);
  if (!cg) throw DomainError("plane parametrization traces a line; its dual is a point");
  for (auto& x : delta) x = x.is_zero() ? BinaryForm<F>(k, x.degree() - cg->degree()) : divide_form(x, *cg);
  const int reduced_degree = delta[0].degree();

  return run_oracle("dual-curve-degree", seed, k.name(), false, "general parameter value",
                    [&](Xoshiro256& rng) -> std::optional<Count> {
                      auto own = map_degree(phi, rng);
                      if (!own) return std::nullopt;
                      if (*own != 1) throw DomainError("non-reduced parametrization: map is not birational");
                      auto e = map_degree(delta, rng);
                      if (!e) return std::nullopt;
                      if (reduced_degree % *e != 0) return std::nullopt;
                      return Count{reduced_degree / *e, std::nullopt};
                    });
}

template <ExactField F>
RationalSpaceCurve<F> twisted_cubic(const F& field) {
  return monomial_curve(field, 3, {3, 2, 1, 0});
}

template <ExactField F>
RationalSpaceCurve<F> rational_quartic(const F& field) {
  return monomial_curve(field, 4, {4, 3, 1, 0});
}

template <ExactField F>
RationalSpaceCurve<F> rational_quintic(const F& field) {
  return monomial_curve(field, 5, {5, 4, 1, 0});
}

template <ExactField F>
RationalSpaceCurve<F> planar_conic(const F& field) {
  std::array<BinaryForm<F>, 4> phi{BinaryForm<F>(field, {field.one(), field.zero(), field.zero()}),
                                   BinaryForm<F>(field, {field.zero(), field.one(), field.zero()}),
                                   BinaryForm<F>(field, {field.zero(), field.zero(), field.one()}),
                                   BinaryForm<F>(field, 2)};
  return RationalSpaceCurve<F>(std::move(phi));
}

template <ExactField F>
RingPtr<F> surface_ring(const F& field) {
  return make_ring(field, indexed_names("x", 4));
}

template <ExactField F>
RingPtr<F> plane_ring(const F& field) {
  return make_ring(field, {"x", "y", "z"});
}

namespace {

template <ExactField F>
MultiPoly<F> power_sum(const RingPtr<F>& ring, int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
  MultiPoly<F> f(ring);
  for (std::size_t i = 0; i < ring->nvars(); ++i) f += MultiPoly<F>::variable(ring, i).pow(static_cast<unsigned>(d));
  return f;
}

template <ExactField F>
MultiPoly<F> dense_form(const RingPtr<F>& ring, int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("degree must be >= 1");
  const F& k = ring->field();
  std::vector<Monomial> monos;
  std::vector<std::uint32_t> cur(ring->nvars(), 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == cur.size()) {
      cur[var] = left;
      monos.emplace_back(cur);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, static_cast<std::uint32_t>(d));
  Xoshiro256 rng(seed, 0xF0F);
  for (;;) {
    std::vector<typename MultiPoly<F>::Term> terms;
    for (auto& m : monos) terms.push_back({m, random_elem(k, rng)});
    auto f = MultiPoly<F>::from_terms(ring, std::move(terms));
    if (f.total_degree() == d) return f;
  }
}

}  // namespace

template <ExactField F>
SurfaceP3<F> fermat_surface(const F& field, int d) {
  return SurfaceP3<F>(power_sum(surface_ring(field), d));
}

template <ExactField F>
SurfaceP3<F> random_surface(const F& field, int d, std::uint64_t seed) {
  return SurfaceP3<F>(dense_form(surface_ring(field), d, seed));
}

template <ExactField F>
MultiPoly<F> fermat_plane_curve(const F& field, int d) {
  return power_sum(plane_ring(field), d);
}

template <ExactField F>
MultiPoly<F> random_plane_curve(const F& field, int d, std::uint64_t seed) {
  return dense_form(plane_ring(field), d, seed);
}

template <ExactField F>
MultiPoly<F> klein_quartic(const F& field) {
  auto r = plane_ring(field);
  auto x = MultiPoly<F>::variable(r, 0), y = MultiPoly<F>::variable(r, 1), z = MultiPoly<F>::variable(r, 2);
  return x.pow(3) * y + y.pow(3) * z + z.pow(3) * x;
}

template <ExactField F>
std::array<BinaryForm<F>, 3> conic_parametrization(const F& k) {
  auto o = k.one(), z = k.zero();
  return {BinaryForm<F>(k, {o, z, z}), BinaryForm<F>(k, {z, o, z}), BinaryForm<F>(k, {z, z, o})};
}

template <ExactField F>
std::array<BinaryForm<F>, 3> cuspidal_cubic_parametrization(const F& k) {
  auto o = k.one(), z = k.zero();
  return {BinaryForm<F>(k, {o, z, z, z}), BinaryForm<F>(k, {z, z, o, z}), BinaryForm<F>(k, {z, z, z, o})};
}

template <ExactField F>
std::array<BinaryForm<F>, 3> nodal_cubic_parametrization(const F& k) {
  auto o = k.one(), z = k.zero(), m = k.neg(k.one());
  // (s^2 t - t^3, s^3 - s t^2, t^3)
  return {BinaryForm<F>(k, {z, o, z, m}), BinaryForm<F>(k, {o, z, m, z}), BinaryForm<F>(k, {z, z, z, o})};
}

#define CONGRUENCE_INSTANTIATE_ORACLES(F)                                                               \
  template OracleReport oracle_sec_order<F>(const RationalSpaceCurve<F>&, std::uint64_t);               \
  template OracleReport oracle_sec_class<F>(const RationalSpaceCurve<F>&, std::uint64_t);               \
  template OracleReport oracle_ch0_degree<F>(const RationalSpaceCurve<F>&, std::uint64_t);              \
  template OracleReport oracle_ch1_degree<F>(const SurfaceP3<F>&, std::uint64_t);                       \
  template OracleReport oracle_plane_inflections<F>(const MultiPoly<F>&, std::uint64_t);                \
  template OracleReport oracle_plane_bitangents<F>(const MultiPoly<F>&, std::uint64_t);                 \
  template OracleReport oracle_infl_through_point<F>(const SurfaceP3<F>&, std::uint64_t);               \
  template OracleReport oracle_dual_surface_degree<F>(const SurfaceP3<F>&, std::uint64_t);              \
  template OracleReport oracle_dual_curve_degree<F>(const std::array<BinaryForm<F>, 3>&, std::uint64_t); \
  template void require_smooth_plane_curve<F>(const MultiPoly<F>&);                                     \
  template RationalSpaceCurve<F> twisted_cubic<F>(const F&);                                            \
  template RationalSpaceCurve<F> rational_quartic<F>(const F&);                                         \
  template RationalSpaceCurve<F> rational_quintic<F>(const F&);                                         \
  template RationalSpaceCurve<F> planar_conic<F>(const F&);                                             \
  template RingPtr<F> surface_ring<F>(const F&);                                                        \
  template RingPtr<F> plane_ring<F>(const F&);                                                          \
  template SurfaceP3<F> fermat_surface<F>(const F&, int);                                               \
  template SurfaceP3<F> random_surface<F>(const F&, int, std::uint64_t);                                \
  template MultiPoly<F> fermat_plane_curve<F>(const F&, int);                                           \
  template MultiPoly<F> random_plane_curve<F>(const F&, int, std::uint64_t);                            \
  template MultiPoly<F> klein_quartic<F>(const F&);                                                     \
  template std::array<BinaryForm<F>, 3> conic_parametrization<F>(const F&);                             \
  template std::array<BinaryForm<F>, 3> cuspidal_cubic_parametrization<F>(const F&);                    \
  template std::array<BinaryForm<F>, 3> nodal_cubic_parametrization<F>(const F&);

CONGRUENCE_INSTANTIATE_ORACLES(RationalField)
CONGRUENCE_INSTANTIATE_ORACLES(PrimeField)

}  // namespace congruence
