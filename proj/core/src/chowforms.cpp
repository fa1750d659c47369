#include "congruence/chowforms.hpp"

#include <algorithm>
#include <optional>
#include <type_traits>

#include "congruence/error.hpp"
#include "congruence/linalg.hpp"

namespace congruence {

namespace {

template <ExactField F>
std::size_t coefficient_rank(const std::array<BinaryForm<F>, 4>& phi) {
  Matrix<typename F::Elem> m;
  for (auto& f : phi) m.push_back(f.coeffs());
  return rank(phi[0].field(), m);
}

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<std::uint32_t>& cur, std::size_t var,
                         std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur[var] = degree;
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned k = degree + 1; k-- > 0;) {
    cur[var] = k;
    monomials_of_degree(nvars, degree - k, cur, var + 1, out);
  }
  cur[var] = 0;
}

// q01 is variable 0 and q23 is variable 5.
bool divisible_by_relation_monomial(const Monomial& m) { return m.e[0] > 0 && m.e[5] > 0; }

// Rational a/b with |a|, b <= sqrt(m/2) and a = u b mod m.
std::optional<BigRational> rational_reconstruction(const mpz_class& u, const mpz_class& m) {
  mpz_class bound = sqrt(m / 2);
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  return BigRational(r1, t1);
}

// The one-dimensional kernel of an integer-valued system, found modulo a run
// of 31-bit primes and lifted by CRT and rational reconstruction. The lift is
// checked against every row over Q; nullopt when it does not settle.
std::optional<std::vector<BigRational>> multimodular_kernel(const Matrix<BigRational>& rows, std::size_t n) {
  constexpr int kMaxPrimes = 40;
  std::vector<mpz_class> residues(n, 0);
  mpz_class modulus = 1;
  std::optional<std::size_t> anchor;
  std::uint32_t p = 2147483647u;
  for (int used = 0; used < kMaxPrimes; --p) {
    if (!is_prime(p)) continue;
    PrimeField k(p);
    Matrix<Fp> reduced;
    reduced.reserve(rows.size());
    try {
      for (auto& row : rows) {
        std::vector<Fp> r;
        r.reserve(n);
        for (auto& e : row) r.push_back(k.from_rational(e));
        reduced.push_back(std::move(r));
      }
    } catch (const DivisionByZero&) {
      continue;
    }
    auto ker = nullspace(k, reduced, n);
    if (ker.size() != 1) continue;
    auto& v = ker[0];
    if (!anchor) {
      for (std::size_t i = 0; i < n && !anchor; ++i)
        if (!k.is_zero(v[i])) anchor = i;
    }
    if (k.is_zero(v[*anchor])) continue;
    const Fp scale = k.inv(v[*anchor]);
    for (std::size_t i = 0; i < n; ++i) {
      // x = residues[i] mod modulus and x = v[i]*scale mod p
      const std::uint32_t target = k.mul(v[i], scale).v;
      const std::uint32_t cur = static_cast<std::uint32_t>(mpz_fdiv_ui(residues[i].get_mpz_t(), p));
      const std::uint32_t mod_inv = k.inv(Fp{static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), p))}).v;
      const std::uint32_t diff = k.sub(Fp{target}, Fp{cur}).v;
      residues[i] += modulus * k.mul(Fp{diff}, Fp{mod_inv}).v;
    }
    modulus *= p;
    ++used;

    std::vector<BigRational> candidate;
    candidate.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto q = rational_reconstruction(residues[i], modulus);
      if (!q) break;
      candidate.push_back(std::move(*q));
    }
    if (candidate.size() != n) continue;
    bool annihilates = std::all_of(rows.begin(), rows.end(), [&](const std::vector<BigRational>& row) {
      BigRational acc;
      for (std::size_t i = 0; i < n; ++i)
        if (!candidate[i].is_zero()) acc += row[i] * candidate[i];
      return acc.is_zero();
    });
    if (annihilates) return candidate;
  }
  return std::nullopt;
}

template <ExactField F>
Matrix<typename F::Elem> interpolation_kernel(const F& k, const Matrix<typename F::Elem>& rows, std::size_t n) {
  if constexpr (std::is_same_v<F, RationalField>) {
    // rank over Q is at least the rank mod p, so a verified vector spans the kernel
    if (auto v = multimodular_kernel(rows, n)) return {std::move(*v)};
  }
  return nullspace(k, rows, n);
}

template <ExactField F>
MultiPoly<F> reduce_modulo_pluecker(const MultiPoly<F>& f) {
  const auto& ring = f.ring();
  auto v = [&](std::size_t i) { return MultiPoly<F>::variable(ring, i); };
  const MultiPoly<F> rewrite = v(1) * v(4) - v(2) * v(3);
  MultiPoly<F> cur = f;
  while (true) {
    std::vector<typename MultiPoly<F>::Term> keep;
    MultiPoly<F> replaced(ring);
    bool any = false;
    for (auto& t : cur.terms()) {
      if (!divisible_by_relation_monomial(t.mono)) {
        keep.push_back(t);
        continue;
      }
      any = true;
      Monomial rest = t.mono;
      rest.e[0] -= 1;
      rest.e[5] -= 1;
      replaced += MultiPoly<F>::monomial(ring, rest, t.coeff) * rewrite;
    }
    if (!any) return cur;
    cur = MultiPoly<F>::from_terms(ring, std::move(keep)) + replaced;
  }
}

}  // namespace

template <ExactField F>
RationalSpaceCurve<F>::RationalSpaceCurve(std::array<BinaryForm<F>, 4> phi) : phi_(std::move(phi)) {
  const F& k = phi_[0].field();
  const int d = phi_[0].degree();
  if (d < 1) throw DomainError("curve degree must be >= 1");
  for (auto& f : phi_) {
    k.require_same(f.field());
    if (f.degree() != d) throw DomainError("curve components must share one degree");
  }
  std::optional<BinaryForm<F>> g;
  for (auto& f : phi_) {
    if (f.is_zero()) continue;
    g = g ? gcd(*g, f) : gcd(f, f);
  }
  if (!g) throw DomainError("curve components are all zero");
  if (g->degree() > 0) throw DomainError("curve components share the factor " + g->to_string());
  if (coefficient_rank(phi_) < 2) throw DomainError("curve image is a point");
}

template <ExactField F>
std::array<typename F::Elem, 4> RationalSpaceCurve<F>::point(const Elem& s, const Elem& t) const {
  std::array<Elem, 4> x;
  for (std::size_t i = 0; i < 4; ++i) x[i] = phi_[i].evaluate(s, t);
  return x;
}

template <ExactField F>
bool RationalSpaceCurve<F>::is_planar() const {
  return coefficient_rank(phi_) <= 3;
}

template <ExactField F>
std::string RationalSpaceCurve<F>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += " : ";
    out += phi_[i].to_string();
  }
  return out + ")";
}

template <ExactField F>
RationalSpaceCurve<F> monomial_curve(const F& field, int degree, std::array<int, 4> s_exponents) {
  std::array<BinaryForm<F>, 4> phi{BinaryForm<F>(field, degree), BinaryForm<F>(field, degree),
                                   BinaryForm<F>(field, degree), BinaryForm<F>(field, degree)};
  for (std::size_t i = 0; i < 4; ++i) {
    const int a = s_exponents[i];
    if (a < 0 || a > degree) throw DomainError("monomial curve exponent out of range");
    std::vector<typename F::Elem> c(static_cast<std::size_t>(degree) + 1, field.zero());
    c[static_cast<std::size_t>(degree - a)] = field.one();
    phi[i] = BinaryForm<F>(field, std::move(c));
  }
  return RationalSpaceCurve<F>(std::move(phi));
}

template <ExactField F>
SurfaceP3<F>::SurfaceP3(MultiPoly<F> f) : f_(std::move(f)) {
  if (f_.ring()->nvars() != 4) throw DomainError("surface equation must be in 4 variables");
  if (f_.is_zero()) throw DomainError("surface equation is zero");
  if (!f_.is_homogeneous()) throw DomainError("surface equation is not homogeneous");
  if (f_.total_degree() < 1) throw DomainError("surface equation is constant");
}

template <ExactField F>
std::pair<BinaryForm<F>, BinaryForm<F>> curve_restrictions(const LineP3<F>& line, const RationalSpaceCurve<F>& c) {
  line.field().require_same(c.field());
  const F& k = c.field();
  auto planes = line.spanning_planes();
  auto restrict = [&](const ProjPlane3<F>& h) {
    BinaryForm<F> out(k, c.degree());
    for (std::size_t i = 0; i < 4; ++i)
      if (!k.is_zero(h.a[i])) out += c.component(i).scale(h.a[i]);
    return out;
  };
  return {restrict(planes[0]), restrict(planes[1])};
}

template <ExactField F>
bool meets_curve(const LineP3<F>& line, const RationalSpaceCurve<F>& c) {
  auto [a, b] = curve_restrictions(line, c);
  if (a.is_zero() && b.is_zero()) throw DomainError("line lies on all planes through curve");
  if (a.is_zero() || b.is_zero()) return true;
  return c.field().is_zero(resultant_binary(a, b));
}

template <ExactField F>
MultiplicityProfile curve_line_profile(const LineP3<F>& line, const RationalSpaceCurve<F>& c) {
  auto [a, b] = curve_restrictions(line, c);
  if (a.is_zero() && b.is_zero()) throw DomainError("line lies on all planes through curve");
  return multiplicity_profile(gcd(a, b));
}

std::string to_string(SecantClass c) {
  switch (c) {
    case SecantClass::SmoothPointOfSec: return "SMOOTH_POINT_OF_SEC";
    case SecantClass::SingularPointOfSec: return "SINGULAR_POINT_OF_SEC";
    case SecantClass::NotInSec: return "NOT_IN_SEC";
  }
  return "?";
}

SecantClass classify_secant_singularity(const MultiplicityProfile& p) {
  const int roots = p.distinct_roots();
  const int top = p.max_multiplicity();
  if (roots >= 3) return SecantClass::SingularPointOfSec;
  if (roots == 2) return top >= 2 ? SecantClass::SingularPointOfSec : SecantClass::SmoothPointOfSec;
  if (roots == 1) {
    if (top >= 3) return SecantClass::SingularPointOfSec;
    if (top == 2) return SecantClass::SmoothPointOfSec;
  }
  return SecantClass::NotInSec;
}

template <ExactField F>
RingPtr<F> dual_pluecker_ring(const F& field) {
  return make_ring(field, pluecker_names('q'));
}

template <ExactField F>
MultiPoly<F> normalize_chow_form(const MultiPoly<F>& f) {
  if (f.ring()->nvars() != 6) throw DomainError("Chow forms live in six dual Pluecker variables");
  auto r = reduce_modulo_pluecker(f);
  if (r.is_zero()) throw DomainError("Chow form vanishes on the Grassmannian");
  const F& k = r.field();
  if constexpr (std::is_same_v<F, RationalField>) {
    mpz_class den = 1, num = 0;
    for (auto& t : r.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.den().get_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.num().get_mpz_t());
    }
    BigRational scale(den, num);
    if (r.leading_term().coeff.sign() < 0) scale = -scale;
    return r.scale(scale);
  } else {
    return r.scale(k.inv(r.leading_term().coeff));
  }
}

template <ExactField F>
MultiPoly<F> chow_form(const RationalSpaceCurve<F>& c, std::uint64_t seed) {
  using Elem = typename F::Elem;
  const F& k = c.field();
  const int d = c.degree();
  auto ring = dual_pluecker_ring(k);

  std::vector<Monomial> basis;
  {
    std::vector<Monomial> all;
    std::vector<std::uint32_t> cur(6, 0);
    monomials_of_degree(6, static_cast<unsigned>(d), cur, 0, all);
    for (auto& m : all)
      if (!divisible_by_relation_monomial(m)) basis.push_back(m);
  }
  const std::size_t n = basis.size();

  Xoshiro256 rng(seed, 0xC40);
  constexpr long kBound = 50;
  auto draw = [&] { return k.from_int(rng.uniform(-kBound, kBound)); };
  Matrix<Elem> rows;
  auto add_rows = [&](std::size_t count) {
    while (count > 0) {
      auto x = c.point(draw(), k.one());
      std::array<Elem, 4> y{draw(), draw(), draw(), draw()};
      if (std::all_of(y.begin(), y.end(), [&](const Elem& e) { return k.is_zero(e); })) continue;
      ProjPoint3<F> a(k, x), b(k, y);
      if (a.same_as(b)) continue;
      auto q = join_points(a, b).dual();
      std::vector<Elem> row;
      row.reserve(n);
      for (auto& m : basis) {
        Elem v = k.one();
        for (std::size_t i = 0; i < 6; ++i)
          for (std::uint32_t e = 0; e < m.e[i]; ++e) v = k.mul(v, q[i]);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
      --count;
    }
  };

  add_rows(n + 8);
  Matrix<Elem> kernel;
  for (int round = 0; round < 4; ++round) {
    kernel = interpolation_kernel(k, rows, n);
    if (kernel.size() <= 1) break;
    add_rows(n);
  }
  if (kernel.size() != 1)
    throw DomainError("Chow form interpolation space has dimension " + std::to_string(kernel.size()) +
                      "; curve invariants violated");
  std::vector<typename MultiPoly<F>::Term> terms;
  for (std::size_t i = 0; i < n; ++i)
    if (!k.is_zero(kernel[0][i])) terms.push_back({basis[i], kernel[0][i]});
  return normalize_chow_form(MultiPoly<F>::from_terms(ring, std::move(terms)));
}

template <ExactField F>
typename F::Elem evaluate_at_line(const MultiPoly<F>& chow, const LineP3<F>& line) {
  const auto& q = line.dual();
  return chow.evaluate(std::span<const typename F::Elem>(q.data(), q.size()));
}

template <ExactField F>
std::optional<MultiplicityProfile> hurwitz_profile(const LineP3<F>& line, const SurfaceP3<F>& s) {
  auto r = restrict_to_line(s.poly(), line);
  if (r.is_zero()) return std::nullopt;
  return multiplicity_profile(r);
}

std::string to_string(ContactClass c) {
  switch (c) {
    case ContactClass::NoContact: return "NO_CONTACT";
    case ContactClass::Transversal: return "TRANSVERSAL";
    case ContactClass::SimpleTangent: return "SIMPLE_TANGENT";
    case ContactClass::Bitangent: return "BITANGENT";
    case ContactClass::Inflectional: return "INFLECTIONAL";
    case ContactClass::InflAtTwoPoints: return "INFL_AT_TWO_POINTS";
    case ContactClass::ContactOrderGe4: return "CONTACT_ORDER_GE_4";
    case ContactClass::Contained: return "CONTAINED";
  }
  return "?";
}

std::string ContactClassification::flags_string() const {
  std::string out;
  for (unsigned bit = 1; bit <= static_cast<unsigned>(ContactClass::Contained); bit <<= 1) {
    if (!(flags & bit)) continue;
    if (!out.empty()) out += "|";
    out += to_string(static_cast<ContactClass>(bit));
  }
  return out;
}

ContactClassification classify_hurwitz_singularity(const std::optional<MultiplicityProfile>& profile) {
  if (!profile) throw DomainError("surface contains the line");
  ContactClassification out;
  out.profile = *profile;
  const auto& p = *profile;
  auto set = [&](ContactClass c) { out.flags |= static_cast<unsigned>(c); };
  if (p.empty()) {
    set(ContactClass::NoContact);
    out.primary = ContactClass::NoContact;
    return out;
  }
  const int tangent_points = p.roots_with_multiplicity_at_least(2);
  const int flex_points = p.roots_with_multiplicity_at_least(3);
  if (p.max_multiplicity() == 1) set(ContactClass::Transversal);
  if (tangent_points == 1 && p.max_multiplicity() == 2) set(ContactClass::SimpleTangent);
  if (tangent_points >= 2) set(ContactClass::Bitangent);
  if (flex_points >= 1) set(ContactClass::Inflectional);
  if (flex_points >= 2) set(ContactClass::InflAtTwoPoints);
  if (p.max_multiplicity() >= 4) set(ContactClass::ContactOrderGe4);

  if (out.has(ContactClass::Inflectional)) out.primary = ContactClass::Inflectional;
  else if (out.has(ContactClass::Bitangent)) out.primary = ContactClass::Bitangent;
  else if (out.has(ContactClass::SimpleTangent)) out.primary = ContactClass::SimpleTangent;
  else out.primary = ContactClass::Transversal;
  return out;
}

#define CONGRUENCE_INSTANTIATE_CHOWFORMS(F)                                                                  \
  template class RationalSpaceCurve<F>;                                                                      \
  template class SurfaceP3<F>;                                                                               \
  template RationalSpaceCurve<F> monomial_curve<F>(const F&, int, std::array<int, 4>);                       \
  template std::pair<BinaryForm<F>, BinaryForm<F>> curve_restrictions<F>(const LineP3<F>&,                   \
                                                                        const RationalSpaceCurve<F>&);       \
  template bool meets_curve<F>(const LineP3<F>&, const RationalSpaceCurve<F>&);                              \
  template MultiplicityProfile curve_line_profile<F>(const LineP3<F>&, const RationalSpaceCurve<F>&);        \
  template RingPtr<F> dual_pluecker_ring<F>(const F&);                                                       \
  template MultiPoly<F> normalize_chow_form<F>(const MultiPoly<F>&);                                         \
  template MultiPoly<F> chow_form<F>(const RationalSpaceCurve<F>&, std::uint64_t);                           \
  template typename F::Elem evaluate_at_line<F>(const MultiPoly<F>&, const LineP3<F>&);                      \
  template std::optional<MultiplicityProfile> hurwitz_profile<F>(const LineP3<F>&, const SurfaceP3<F>&);

CONGRUENCE_INSTANTIATE_CHOWFORMS(RationalField)
CONGRUENCE_INSTANTIATE_CHOWFORMS(PrimeField)

}  // namespace congruence
