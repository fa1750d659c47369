#include "congruence/formulas.hpp"

#include <string>

#include "congruence/error.hpp"

namespace congruence {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::int64_t singular_correction(const CurveData& c) {
  std::int64_t s = 0;
  for (int r : c.singular_multiplicities) s += binomial(r, 2);
  return s;
}

}  // namespace

void CurveData::validate() const {
  require(degree >= 1, "curve degree must be >= 1");
  require(genus >= 0, "curve genus must be >= 0");
  for (int r : singular_multiplicities) require(r >= 2, "singular multiplicities must be >= 2");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Bidegree sec_bidegree(const CurveData& c) {
  c.validate();
  require(c.degree >= 2, "secant congruence needs d >= 2");
  if (c.planar) return {0, 1};
  const std::int64_t order = binomial(c.degree - 1, 2) - c.genus - singular_correction(c);
  require(order >= 0, "curve invariants are inconsistent: secant order would be " + std::to_string(order));
  return {order, binomial(c.degree, 2)};
}

Bidegree sing_ch0_bidegree(const CurveData& c) {
  c.validate();
  require(c.degree >= 2, "Sing(CH0) bidegree needs d >= 2");
  const auto s = static_cast<std::int64_t>(c.singular_multiplicities.size());
  if (c.planar) return {s, 1};
  auto sec = sec_bidegree(c);
  return {sec.order + s, sec.cls};
}

Bidegree bit_bidegree(int d) {
  require(d >= 4, "Bit(S) bidegree needs d >= 4");
  const std::int64_t n = d;
  return {n * (n - 1) * (n - 2) * (n - 3) / 2, n * (n - 2) * (n - 3) * (n + 3) / 2};
}

Bidegree infl_bidegree(int d) {
  require(d >= 4, "Infl(S) bidegree needs d >= 4");
  const std::int64_t n = d;
  return {n * (n - 1) * (n - 2), 3 * n * (n - 2)};
}

std::int64_t ch0_degree(int d) {
  require(d >= 1, "ch0_degree needs d >= 1");
  return d;
}

std::int64_t ch1_degree(int d) {
  require(d >= 2, "ch1_degree needs d >= 2");
  return static_cast<std::int64_t>(d) * (d - 1);
}

std::int64_t dual_curve_degree(const PlaneCurveSing& p) {
  require(p.degree >= 1 && p.cusps >= 0 && p.nodes >= 0, "plane curve invariants must be non-negative");
  const std::int64_t deg = static_cast<std::int64_t>(p.degree) * (p.degree - 1) - 3 * p.cusps - 2 * p.nodes;
  require(deg > 0, "dual curve degree would be " + std::to_string(deg));
  return deg;
}

std::int64_t plane_genus(int d, const std::vector<int>& multiplicities) {
  require(d >= 1, "plane_genus needs d >= 1");
  std::int64_t g = binomial(d - 1, 2);
  for (int r : multiplicities) {
    require(r >= 2, "singular multiplicities must be >= 2");
    g -= binomial(r, 2);
  }
  require(g >= 0, "genus would be negative");
  return g;
}

std::int64_t plane_bitangent_count(int d) {
  require(d >= 4, "plane_bitangent_count needs d >= 4");
  const std::int64_t n = d;
  return n * (n - 2) * (n - 3) * (n + 3) / 2;
}

std::int64_t plane_infl_count(int d) {
  require(d >= 3, "plane_infl_count needs d >= 3");
  return 3 * static_cast<std::int64_t>(d) * (d - 2);
}

std::int64_t dual_surface_degree(int d) {
  require(d >= 2, "dual_surface_degree needs d >= 2");
  const std::int64_t n = d;
  return n * (n - 1) * (n - 1);
}

std::int64_t infl_through_point(int d) {
  require(d >= 3, "infl_through_point needs d >= 3");
  const std::int64_t n = d;
  return n * (n - 1) * (n - 2);
}

std::int64_t bit_through_point(int d) {
  require(d >= 4, "bit_through_point needs d >= 4");
  const std::int64_t n = d;
  return n * (n - 1) * (n - 2) * (n - 3) / 2;
}

std::int64_t bitangent_pair_count(int d1, int d2) {
  return intersection_count(class_of(bit_bidegree(d1)), class_of(bit_bidegree(d2)));
}

std::int64_t bitangent_pair_count_closed_form(int d1, int d2) {
  require(d1 >= 4 && d2 >= 4, "bitangent_pair_count needs d1, d2 >= 4");
  const std::int64_t a = d1, b = d2;
  return (a * (a - 1) * (a - 2) * (a - 3) * b * (b - 1) * (b - 2) * (b - 3) +
          a * (a - 2) * (a - 3) * (a + 3) * b * (b - 2) * (b - 3) * (b + 3)) /
         4;
}

std::int64_t bit_sec_count(int d1, const CurveData& c) {
  require(!c.planar, "bit_sec_count needs a nonplanar curve");
  return intersection_count(class_of(bit_bidegree(d1)), class_of(sec_bidegree(c)));
}

std::int64_t bit_sec_count_closed_form(int d1, int d2, int g) {
  require(d1 >= 4 && d2 >= 2 && g >= 0, "bit_sec_count needs d1 >= 4, d2 >= 2, g >= 0");
  const std::int64_t a = d1, b = d2;
  return (a * (a - 1) * (a - 2) * (a - 3) * ((b - 1) * (b - 2) - 2 * g) +
          a * (a - 2) * (a - 3) * (a + 3) * b * (b - 1)) /
         4;
}

}  // namespace congruence
