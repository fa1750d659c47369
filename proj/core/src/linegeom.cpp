#include "congruence/linegeom.hpp"

#include <sstream>

#include "congruence/linalg.hpp"

namespace congruence {

std::vector<std::string> pluecker_names(char stem) {
  std::vector<std::string> out;
  for (auto [i, j] : kPlueckerPairs) out.push_back(std::string(1, stem) + std::to_string(i) + std::to_string(j));
  return out;
}

namespace {

template <ExactField F, std::size_t N>
bool proportional(const F& k, const std::array<typename F::Elem, N>& a, const std::array<typename F::Elem, N>& b) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (!k.equal(k.mul(a[i], b[j]), k.mul(a[j], b[i]))) return false;
  return true;
}

template <ExactField F, std::size_t N>
bool all_zero(const F& k, const std::array<typename F::Elem, N>& a) {
  for (auto& x : a)
    if (!k.is_zero(x)) return false;
  return true;
}

template <ExactField F, std::size_t N>
std::string join_scalars(const F& k, const std::array<typename F::Elem, N>& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << k.to_string(a[i]);
  return os.str();
}

// Index of the pair (i, j), i < j, in kPlueckerPairs.
constexpr int pair_index(int i, int j) {
  for (int k = 0; k < 6; ++k)
    if (kPlueckerPairs[static_cast<std::size_t>(k)][0] == i && kPlueckerPairs[static_cast<std::size_t>(k)][1] == j)
      return k;
  return -1;
}

// Entry (i, j) of the antisymmetric 4x4 matrix built from a Pluecker vector.
template <ExactField F>
typename F::Elem antisym(const F& k, const Pluecker<F>& v, int i, int j) {
  if (i == j) return k.zero();
  if (i < j) return v[static_cast<std::size_t>(pair_index(i, j))];
  return k.neg(v[static_cast<std::size_t>(pair_index(j, i))]);
}

template <ExactField F>
Matrix<typename F::Elem> antisym_rows(const F& k, const Pluecker<F>& v) {
  Matrix<typename F::Elem> m(4, std::vector<typename F::Elem>(4, k.zero()));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = antisym(k, v, i, j);
  return m;
}

template <ExactField F>
Pluecker<F> minors(const F& k, const std::array<typename F::Elem, 4>& a, const std::array<typename F::Elem, 4>& b) {
  Pluecker<F> out;
  for (std::size_t n = 0; n < 6; ++n) {
    auto [i, j] = kPlueckerPairs[n];
    out[n] = k.sub(k.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]),
                   k.mul(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(i)]));
  }
  return out;
}

template <ExactField F>
std::array<typename F::Elem, 4> random_coords(const F& k, Xoshiro256& rng) {
  std::array<typename F::Elem, 4> c{k.zero(), k.zero(), k.zero(), k.zero()};
  do {
    for (auto& x : c) x = k.from_int(static_cast<long>(rng.uniform(-kRandomCoordBound, kRandomCoordBound)));
  } while (all_zero<F, 4>(k, c));
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

template <ExactField F>
ProjPoint3<F>::ProjPoint3(F k, std::array<Elem, 4> coords) : field(std::move(k)), x(std::move(coords)) {
  if (all_zero<F, 4>(field, x)) throw DomainError("projective point with all coordinates zero");
}

template <ExactField F>
ProjPoint3<F> ProjPoint3<F>::from_ints(F k, std::array<long, 4> coords) {
  std::array<Elem, 4> c{k.from_int(coords[0]), k.from_int(coords[1]), k.from_int(coords[2]), k.from_int(coords[3])};
  return ProjPoint3(std::move(k), std::move(c));
}

template <ExactField F>
bool ProjPoint3<F>::same_as(const ProjPoint3& o) const {
  return proportional<F, 4>(field, x, o.x);
}

template <ExactField F>
std::string ProjPoint3<F>::to_string() const {
  return join_scalars<F, 4>(field, x);
}

template <ExactField F>
ProjPlane3<F>::ProjPlane3(F k, std::array<Elem, 4> coeffs) : field(std::move(k)), a(std::move(coeffs)) {
  if (all_zero<F, 4>(field, a)) throw DomainError("plane with all coefficients zero");
}

template <ExactField F>
ProjPlane3<F> ProjPlane3<F>::from_ints(F k, std::array<long, 4> coeffs) {
  std::array<Elem, 4> c{k.from_int(coeffs[0]), k.from_int(coeffs[1]), k.from_int(coeffs[2]), k.from_int(coeffs[3])};
  return ProjPlane3(std::move(k), std::move(c));
}

template <ExactField F>
bool ProjPlane3<F>::same_as(const ProjPlane3& o) const {
  return proportional<F, 4>(field, a, o.a);
}

template <ExactField F>
bool ProjPlane3<F>::contains(const ProjPoint3<F>& p) const {
  auto acc = field.zero();
  for (std::size_t i = 0; i < 4; ++i) acc = field.add(acc, field.mul(a[i], p.x[i]));
  return field.is_zero(acc);
}

template <ExactField F>
std::string ProjPlane3<F>::to_string() const {
  return join_scalars<F, 4>(field, a);
}

// ---------------------------------------------------------------------------

template <ExactField F>
typename F::Elem pluecker_relation(const F& k, const Pluecker<F>& v) {
  return k.add(k.sub(k.mul(v[0], v[5]), k.mul(v[1], v[4])), k.mul(v[2], v[3]));
}

template <ExactField F>
Pluecker<F> primal_to_dual(const F& k, const Pluecker<F>& p) {
  if (all_zero<F, 6>(k, p)) throw DomainError("Pluecker vector is zero");
  if (!k.is_zero(pluecker_relation(k, p))) throw DomainError("Pluecker relation violated");
  return {p[5], k.neg(p[4]), p[3], p[2], k.neg(p[1]), p[0]};
}

template <ExactField F>
Pluecker<F> dual_to_primal(const F& k, const Pluecker<F>& q) {
  return primal_to_dual(k, q);
}

template <ExactField F>
LineP3<F> LineP3<F>::from_primal(F k, const Pluecker<F>& p) {
  auto q = primal_to_dual(k, p);
  return LineP3(std::move(k), p, std::move(q));
}

template <ExactField F>
LineP3<F> LineP3<F>::from_dual(F k, const Pluecker<F>& q) {
  auto p = dual_to_primal(k, q);
  return LineP3(std::move(k), std::move(p), q);
}

template <ExactField F>
std::array<ProjPoint3<F>, 2> LineP3<F>::spanning_points() const {
  auto ech = rref(field_, antisym_rows(field_, p_));
  if (ech.rows.size() != 2) throw DomainError("Pluecker vector does not have rank 2");
  auto to_point = [&](const std::vector<Elem>& r) { return ProjPoint3<F>(field_, {r[0], r[1], r[2], r[3]}); };
  return {to_point(ech.rows[0]), to_point(ech.rows[1])};
}

template <ExactField F>
std::array<ProjPlane3<F>, 2> LineP3<F>::spanning_planes() const {
  auto ech = rref(field_, antisym_rows(field_, q_));
  if (ech.rows.size() != 2) throw DomainError("dual Pluecker vector does not have rank 2");
  auto to_plane = [&](const std::vector<Elem>& r) { return ProjPlane3<F>(field_, {r[0], r[1], r[2], r[3]}); };
  return {to_plane(ech.rows[0]), to_plane(ech.rows[1])};
}

template <ExactField F>
bool LineP3<F>::same_as(const LineP3& o) const {
  return proportional<F, 6>(field_, p_, o.p_);
}

template <ExactField F>
std::string LineP3<F>::to_string() const {
  return join_scalars<F, 6>(field_, p_);
}

template <ExactField F>
std::string LineP3<F>::dual_to_string() const {
  return join_scalars<F, 6>(field_, q_);
}

template <ExactField F>
LineP3<F> join_points(const ProjPoint3<F>& a, const ProjPoint3<F>& b) {
  a.field.require_same(b.field);
  if (a.same_as(b)) throw DomainError("points coincide");
  return LineP3<F>::from_primal(a.field, minors(a.field, a.x, b.x));
}

template <ExactField F>
LineP3<F> meet_planes(const ProjPlane3<F>& h1, const ProjPlane3<F>& h2) {
  h1.field.require_same(h2.field);
  if (h1.same_as(h2)) throw DomainError("planes coincide");
  return LineP3<F>::from_dual(h1.field, minors(h1.field, h1.a, h2.a));
}

template <ExactField F>
bool incident(const LineP3<F>& line, const ProjPoint3<F>& x) {
  const F& k = line.field();
  for (int i = 0; i < 4; ++i) {
    auto acc = k.zero();
    for (int j = 0; j < 4; ++j) acc = k.add(acc, k.mul(antisym(k, line.dual(), i, j), x.x[static_cast<std::size_t>(j)]));
    if (!k.is_zero(acc)) return false;
  }
  return true;
}

template <ExactField F>
bool incident(const LineP3<F>& line, const ProjPlane3<F>& h) {
  const F& k = line.field();
  for (int i = 0; i < 4; ++i) {
    auto acc = k.zero();
    for (int j = 0; j < 4; ++j) acc = k.add(acc, k.mul(antisym(k, line.primal(), i, j), h.a[static_cast<std::size_t>(j)]));
    if (!k.is_zero(acc)) return false;
  }
  return true;
}

template <ExactField F>
bool lines_meet(const LineP3<F>& l, const LineP3<F>& m) {
  const F& k = l.field();
  auto acc = k.zero();
  for (std::size_t i = 0; i < 6; ++i) acc = k.add(acc, k.mul(l.primal()[i], m.dual()[i]));
  return k.is_zero(acc);
}

template <ExactField F>
BinaryForm<F> restrict_to_points(const MultiPoly<F>& f, const std::array<typename F::Elem, 4>& p,
                                 const std::array<typename F::Elem, 4>& q) {
  if (f.ring()->nvars() != 4) throw DomainError("restriction to a line needs a quaternary form");
  if (!f.is_homogeneous()) throw DomainError("restriction to a line needs a homogeneous form");
  const F& k = f.field();
  const int d = std::max(0, f.total_degree());
  auto st = make_ring(k, {"s", "t"});
  auto s = MultiPoly<F>::variable(st, 0), t = MultiPoly<F>::variable(st, 1);
  std::vector<MultiPoly<F>> images;
  for (std::size_t i = 0; i < 4; ++i) images.push_back(s.scale(p[i]) + t.scale(q[i]));
  auto r = f.substitute(images);
  std::vector<typename F::Elem> c(static_cast<std::size_t>(d + 1), k.zero());
  for (auto& term : r.terms()) c[term.mono.e[1]] = term.coeff;
  return BinaryForm<F>(k, std::move(c));
}

template <ExactField F>
BinaryForm<F> restrict_to_line(const MultiPoly<F>& f, const LineP3<F>& line) {
  auto pts = line.spanning_points();
  return restrict_to_points(f, pts[0].x, pts[1].x);
}

// ---------------------------------------------------------------------------

template <ExactField F>
ProjPoint3<F> random_point(const F& field, Xoshiro256& rng) {
  return ProjPoint3<F>(field, random_coords(field, rng));
}

template <ExactField F>
ProjPlane3<F> random_plane(const F& field, Xoshiro256& rng) {
  return ProjPlane3<F>(field, random_coords(field, rng));
}

template <ExactField F>
ProjPoint3<F> random_point_on(const ProjPlane3<F>& h, Xoshiro256& rng) {
  const F& k = h.field;
  std::size_t c = 0;
  while (k.is_zero(h.a[c])) ++c;
  // integral basis of the plane: a_c e_j - a_j e_c for j != c
  for (;;) {
    std::array<typename F::Elem, 4> x{k.zero(), k.zero(), k.zero(), k.zero()};
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == c) continue;
      auto lambda = k.from_int(static_cast<long>(rng.uniform(-kRandomCoordBound, kRandomCoordBound)));
      x[j] = k.add(x[j], k.mul(lambda, h.a[c]));
      x[c] = k.sub(x[c], k.mul(lambda, h.a[j]));
    }
    if (!all_zero<F, 4>(k, x)) return ProjPoint3<F>(k, x);
  }
}

template <ExactField F>
LineP3<F> random_line_through(const ProjPoint3<F>& v, Xoshiro256& rng) {
  for (;;) {
    auto w = random_point(v.field, rng);
    if (!w.same_as(v)) return join_points(v, w);
  }
}

template <ExactField F>
LineP3<F> random_line_in(const ProjPlane3<F>& h, Xoshiro256& rng) {
  auto a = random_point_on(h, rng);
  for (;;) {
    auto b = random_point_on(h, rng);
    if (!b.same_as(a)) return join_points(a, b);
  }
}

template <ExactField F>
LineP3<F> random_line(const F& field, Xoshiro256& rng) {
  return random_line_through(random_point(field, rng), rng);
}

template <ExactField F>
Flag<F> random_flag(const F& field, Xoshiro256& rng) {
  auto h = random_plane(field, rng);
  auto v = random_point_on(h, rng);
  for (;;) {
    auto w = random_point_on(h, rng);
    if (!w.same_as(v)) return Flag<F>{v, join_points(v, w), h};
  }
}

template <ExactField F>
RandomConfig<F> random_config(const F& field, std::uint64_t seed, ConfigKind kind) {
  Xoshiro256 rng(seed);
  switch (kind) {
    case ConfigKind::Point:
      return random_point(field, rng);
    case ConfigKind::Plane:
      return random_plane(field, rng);
    case ConfigKind::LineThroughPoint: {
      auto v = random_point(field, rng);
      return random_line_through(v, rng);
    }
    case ConfigKind::LineInPlane: {
      auto h = random_plane(field, rng);
      return random_line_in(h, rng);
    }
    case ConfigKind::Flag:
      return random_flag(field, rng);
  }
  throw DomainError("unknown configuration kind");
}

#define CONGRUENCE_INSTANTIATE_LINEGEOM(F)                                                           \
  template struct ProjPoint3<F>;                                                                     \
  template struct ProjPlane3<F>;                                                                     \
  template class LineP3<F>;                                                                          \
  template Pluecker<F> primal_to_dual<F>(const F&, const Pluecker<F>&);                              \
  template Pluecker<F> dual_to_primal<F>(const F&, const Pluecker<F>&);                              \
  template F::Elem pluecker_relation<F>(const F&, const Pluecker<F>&);                               \
  template LineP3<F> join_points<F>(const ProjPoint3<F>&, const ProjPoint3<F>&);                     \
  template LineP3<F> meet_planes<F>(const ProjPlane3<F>&, const ProjPlane3<F>&);                     \
  template bool incident<F>(const LineP3<F>&, const ProjPoint3<F>&);                                 \
  template bool incident<F>(const LineP3<F>&, const ProjPlane3<F>&);                                 \
  template bool lines_meet<F>(const LineP3<F>&, const LineP3<F>&);                                   \
  template BinaryForm<F> restrict_to_line<F>(const MultiPoly<F>&, const LineP3<F>&);                 \
  template BinaryForm<F> restrict_to_points<F>(const MultiPoly<F>&, const std::array<F::Elem, 4>&,   \
                                               const std::array<F::Elem, 4>&);                       \
  template ProjPoint3<F> random_point<F>(const F&, Xoshiro256&);                                     \
  template ProjPlane3<F> random_plane<F>(const F&, Xoshiro256&);                                     \
  template ProjPoint3<F> random_point_on<F>(const ProjPlane3<F>&, Xoshiro256&);                      \
  template LineP3<F> random_line_through<F>(const ProjPoint3<F>&, Xoshiro256&);                      \
  template LineP3<F> random_line_in<F>(const ProjPlane3<F>&, Xoshiro256&);                           \
  template LineP3<F> random_line<F>(const F&, Xoshiro256&);                                          \
  template Flag<F> random_flag<F>(const F&, Xoshiro256&);                                            \
  template RandomConfig<F> random_config<F>(const F&, std::uint64_t, ConfigKind);

CONGRUENCE_INSTANTIATE_LINEGEOM(RationalField)
CONGRUENCE_INSTANTIATE_LINEGEOM(PrimeField)

}  // namespace congruence
