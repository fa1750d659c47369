#include "congruence/schubert.hpp"

#include <cctype>
#include <sstream>

#include "congruence/error.hpp"

namespace congruence {

namespace {

constexpr std::array<const char*, 6> kNames{"s0", "s1", "s11", "s2", "s21", "s22"};
// printing order: by codimension, s2 ahead of s11
constexpr std::array<Schubert, 6> kPrintOrder{Schubert::S0, Schubert::S1, Schubert::S2,
                                              Schubert::S11, Schubert::S21, Schubert::S22};

SchubertClass basis_product(Schubert a, Schubert b) {
  using S = Schubert;
  if (a == S::S0) return SchubertClass::basis(b);
  if (b == S::S0) return SchubertClass::basis(a);
  if (kSchubertCodim[static_cast<std::size_t>(a)] + kSchubertCodim[static_cast<std::size_t>(b)] > 4)
    return SchubertClass{};
  if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
  if (a == S::S1) {
    switch (b) {
      case S::S1: return SchubertClass::basis(S::S2) + SchubertClass::basis(S::S11);
      case S::S11: return SchubertClass::basis(S::S21);
      case S::S2: return SchubertClass::basis(S::S21);
      case S::S21: return SchubertClass::basis(S::S22);
      default: break;
    }
  }
  if (a == S::S11 && b == S::S11) return SchubertClass::basis(S::S22);
  if (a == S::S2 && b == S::S2) return SchubertClass::basis(S::S22);
  // s11 * s2 = 0
  return SchubertClass{};
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

Bidegree::Bidegree(std::int64_t o, std::int64_t c) : order(o), cls(c) {
  if (o < 0 || c < 0) throw DomainError("bidegree entries must be non-negative");
}

std::string Bidegree::to_string() const {
  return "(" + std::to_string(order) + ", " + std::to_string(cls) + ")";
}

SchubertClass SchubertClass::basis(Schubert s, std::int64_t coeff) {
  SchubertClass c;
  c.c_[static_cast<std::size_t>(s)] = coeff;
  return c;
}

SchubertClass SchubertClass::of_bidegree(const Bidegree& b) {
  return basis(Schubert::S2, b.order) + basis(Schubert::S11, b.cls);
}

bool SchubertClass::is_congruence_class() const {
  return c_[0] == 0 && c_[1] == 0 && c_[4] == 0 && c_[5] == 0 && c_[2] >= 0 && c_[3] >= 0;
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  for (std::size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
  return *this;
}

SchubertClass operator*(std::int64_t k, SchubertClass a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string SchubertClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto s : kPrintOrder) {
    auto c = c_[static_cast<std::size_t>(s)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    auto mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "*";
    os << kNames[static_cast<std::size_t>(s)];
  }
  return first ? "0" : os.str();
}

SchubertClass SchubertClass::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty Schubert class");
  if (s == "0") return SchubertClass{};
  SchubertClass out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in Schubert class '" + std::string(text) + "'");
    }
    std::int64_t coeff = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coeff = std::stoll(s.substr(i, j - i));
      i = j;
      if (i >= s.size() || s[i] != '*') throw ParseError("expected '*' after coefficient in '" + std::string(text) + "'");
      ++i;
    }
    if (i >= s.size() || s[i] != 's') throw ParseError("expected a basis name in '" + std::string(text) + "'");
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::string name = s.substr(i, j - i);
    bool found = false;
    for (std::size_t k = 0; k < kNames.size(); ++k)
      if (name == kNames[k]) {
        out.c_[k] += sign * coeff;
        found = true;
      }
    if (!found) throw ParseError("unknown Schubert basis element '" + name + "'");
    i = j;
  }
  return out;
}

SchubertClass sch_mul(const SchubertClass& a, const SchubertClass& b) {
  SchubertClass out;
  for (std::size_t i = 0; i < 6; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < 6; ++j) {
      if (b.coeffs()[j] == 0) continue;
      out += (a.coeffs()[i] * b.coeffs()[j]) * basis_product(static_cast<Schubert>(i), static_cast<Schubert>(j));
    }
  }
  return out;
}

SchubertClass operator*(const SchubertClass& a, const SchubertClass& b) { return sch_mul(a, b); }

Bidegree bidegree_of(const SchubertClass& a) {
  if (!a.is_congruence_class())
    throw DomainError("'" + a.to_string() + "' is not the class of a congruence");
  return Bidegree(a[Schubert::S2], a[Schubert::S11]);
}

SchubertClass perp(const SchubertClass& a) {
  auto c = a.coeffs();
  std::swap(c[static_cast<std::size_t>(Schubert::S2)], c[static_cast<std::size_t>(Schubert::S11)]);
  return SchubertClass(c);
}

std::int64_t intersection_count(const SchubertClass& a, const SchubertClass& b) {
  return sch_mul(a, b)[Schubert::S22];
}

ChernPair chern_tangent_pn(int n) {
  if (n < 1) throw DomainError("chern_tangent_pn needs n >= 1");
  return {n + 1, binom2(n + 1)};
}

ChernPair chern_tangent_hypersurface(int n, int d) {
  if (n < 2 || d < 1) throw DomainError("chern_tangent_hypersurface needs n >= 2 and d >= 1");
  const std::int64_t c1 = n + 1 - d;
  return {c1, binom2(n + 1) - c1 * d};
}

std::int64_t polar_degree(int d) {
  if (d < 2) throw DomainError("polar_degree needs d >= 2");
  // 3h - c1(T_S) = (3 - (4 - d)) h = (d - 1) h, and deg h = d on S
  const auto c1 = chern_tangent_hypersurface(3, d).c1;
  return (3 - c1) * static_cast<std::int64_t>(d);
}

}  // namespace congruence
