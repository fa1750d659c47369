#pragma once

// Points, planes and lines of P^3. Lines carry both Pluecker vectors
// p = (p01, p02, p03, p12, p13, p23) and the dual vector q in the same index
// order, related by
//   q01 = p23, q02 = -p13, q03 = p12, q12 = p03, q13 = -p02, q23 = p01.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "congruence/exactfield.hpp"
#include "congruence/polyring.hpp"
#include "congruence/random.hpp"

namespace congruence {

/// Index pairs of the six Pluecker coordinates, in storage order.
inline constexpr std::array<std::array<int, 2>, 6> kPlueckerPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
/// Names q01..q23 / p01..p23.
std::vector<std::string> pluecker_names(char stem);

template <ExactField F>
struct ProjPoint3 {
  using Elem = typename F::Elem;
  F field;
  std::array<Elem, 4> x;

  /// Throws DomainError for the zero vector.
  ProjPoint3(F k, std::array<Elem, 4> coords);
  static ProjPoint3 from_ints(F k, std::array<long, 4> coords);

  bool same_as(const ProjPoint3& o) const;
  std::string to_string() const;
};

template <ExactField F>
struct ProjPlane3 {
  using Elem = typename F::Elem;
  F field;
  std::array<Elem, 4> a;

  ProjPlane3(F k, std::array<Elem, 4> coeffs);
  static ProjPlane3 from_ints(F k, std::array<long, 4> coeffs);

  bool same_as(const ProjPlane3& o) const;
  bool contains(const ProjPoint3<F>& x) const;
  std::string to_string() const;
};

template <ExactField F>
using Pluecker = std::array<typename F::Elem, 6>;

/// p -> q by the signed permutation above; the map is an involution.
/// Throws DomainError if the Pluecker relation fails or the vector is zero.
template <ExactField F>
Pluecker<F> primal_to_dual(const F& field, const Pluecker<F>& p);
template <ExactField F>
Pluecker<F> dual_to_primal(const F& field, const Pluecker<F>& q);

/// p01 p23 - p02 p13 + p03 p12.
template <ExactField F>
typename F::Elem pluecker_relation(const F& field, const Pluecker<F>& v);

template <ExactField F>
class LineP3 {
 public:
  using Elem = typename F::Elem;

  static LineP3 from_primal(F k, const Pluecker<F>& p);
  static LineP3 from_dual(F k, const Pluecker<F>& q);

  const F& field() const { return field_; }
  const Pluecker<F>& primal() const { return p_; }
  const Pluecker<F>& dual() const { return q_; }

  /// Two points spanning the line: nonzero rows of the reduced row-echelon
  /// form of the 4x4 matrix of points (p_{i0}, .., p_{i3}). Deterministic.
  std::array<ProjPoint3<F>, 2> spanning_points() const;
  /// Two planes containing the line, from the dual coordinates likewise.
  std::array<ProjPlane3<F>, 2> spanning_planes() const;

  bool same_as(const LineP3& o) const;
  std::string to_string() const;       // "p01,p02,p03,p12,p13,p23"
  std::string dual_to_string() const;  // "q01,...,q23"

 private:
  LineP3(F k, Pluecker<F> p, Pluecker<F> q) : field_(std::move(k)), p_(std::move(p)), q_(std::move(q)) {}

  F field_;
  Pluecker<F> p_;
  Pluecker<F> q_;
};

/// Line through two points; p_{ij} is the (i,j) minor of [A; B].
/// Throws DomainError("points coincide").
template <ExactField F>
LineP3<F> join_points(const ProjPoint3<F>& a, const ProjPoint3<F>& b);

/// Line cut by two planes; q_{ij} is the (i,j) minor of [H1; H2].
template <ExactField F>
LineP3<F> meet_planes(const ProjPlane3<F>& h1, const ProjPlane3<F>& h2);

template <ExactField F>
bool incident(const LineP3<F>& line, const ProjPoint3<F>& x);
/// Line contained in the plane.
template <ExactField F>
bool incident(const LineP3<F>& line, const ProjPlane3<F>& h);
/// Two lines meet iff sum p_ij(L) q_ij(M) = 0.
template <ExactField F>
bool lines_meet(const LineP3<F>& l, const LineP3<F>& m);

/// Restriction of a homogeneous quaternary form to the line, parametrized as
/// s*P + t*Q with (P, Q) = line.spanning_points(). The zero form signals
/// containment.
template <ExactField F>
BinaryForm<F> restrict_to_line(const MultiPoly<F>& f, const LineP3<F>& line);

/// Restriction to s*P + t*Q for explicit points.
template <ExactField F>
BinaryForm<F> restrict_to_points(const MultiPoly<F>& f, const std::array<typename F::Elem, 4>& p,
                                 const std::array<typename F::Elem, 4>& q);

// ---------------------------------------------------------------------------
// Seeded general-position configurations. Sampled coordinates are integers
// with |c| <= kRandomCoordBound; derived objects stay integral.

inline constexpr long kRandomCoordBound = 10000;

template <ExactField F>
struct Flag {
  ProjPoint3<F> point;
  LineP3<F> line;
  ProjPlane3<F> plane;
};

template <ExactField F>
ProjPoint3<F> random_point(const F& field, Xoshiro256& rng);
template <ExactField F>
ProjPlane3<F> random_plane(const F& field, Xoshiro256& rng);
template <ExactField F>
ProjPoint3<F> random_point_on(const ProjPlane3<F>& h, Xoshiro256& rng);
template <ExactField F>
LineP3<F> random_line_through(const ProjPoint3<F>& v, Xoshiro256& rng);
template <ExactField F>
LineP3<F> random_line_in(const ProjPlane3<F>& h, Xoshiro256& rng);
template <ExactField F>
LineP3<F> random_line(const F& field, Xoshiro256& rng);
template <ExactField F>
Flag<F> random_flag(const F& field, Xoshiro256& rng);

enum class ConfigKind { Point, Plane, LineThroughPoint, LineInPlane, Flag };

template <ExactField F>
using RandomConfig = std::variant<ProjPoint3<F>, ProjPlane3<F>, LineP3<F>, Flag<F>>;

/// Deterministic object from the seed. LineThroughPoint / LineInPlane draw
/// their anchor point or plane first from the same stream.
template <ExactField F>
RandomConfig<F> random_config(const F& field, std::uint64_t seed, ConfigKind kind);

}  // namespace congruence
