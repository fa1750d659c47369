#include "congruence/parse.hpp"

#include <cctype>
#include <string>

#include "congruence/error.hpp"

namespace congruence {

namespace {

template <ExactField F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  MultiPoly<F> parse() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    auto p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly<F> expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    auto acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly<F> term() {
    auto acc = power();
    while (accept('*')) acc = acc * power();
    skip();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      fail("juxtaposition is not allowed; use '*'");
    return acc;
  }

  MultiPoly<F> power() {
    auto base = atom();
    if (accept('^')) {
      auto e = digits();
      if (e.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly<F> atom() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (accept('/')) lit += "/" + digits();
      const F& k = ring_->field();
      try {
        return MultiPoly<F>::constant(ring_, k.from_rational(BigRational::parse(lit)));
      } catch (const DivisionByZero&) {
        fail("zero denominator in '" + lit + "'");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return MultiPoly<F>::variable(ring_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

template <ExactField F>
MultiPoly<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return PolyParser<F>(text, ring).parse();
}

template <ExactField F>
typename F::Elem parse_scalar(std::string_view text, const F& field) {
  auto t = trim(text);
  if (t.empty()) throw ParseError("empty scalar");
  try {
    return field.from_rational(BigRational::parse(t));
  } catch (const ParseError&) {
    throw;
  } catch (const DivisionByZero&) {
    throw ParseError("zero denominator in '" + t + "'");
  }
}

template <ExactField F>
std::vector<typename F::Elem> parse_scalar_list(std::string_view text, const F& field) {
  std::vector<typename F::Elem> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start),
                               field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <ExactField F>
LineP3<F> parse_line(std::string_view text, const F& field) {
  auto v = parse_scalar_list(text, field);
  if (v.size() != 6) throw ParseError("a line needs 6 Pluecker coordinates, got " + std::to_string(v.size()));
  Pluecker<F> p;
  for (std::size_t i = 0; i < 6; ++i) p[i] = v[i];
  return LineP3<F>::from_primal(field, p);
}

template <ExactField F>
BinaryForm<F> to_binary_form(const MultiPoly<F>& f, int degree) {
  const F& k = f.field();
  if (f.ring()->nvars() != 2) throw DomainError("binary forms live in two variables");
  std::vector<typename F::Elem> c(static_cast<std::size_t>(degree) + 1, k.zero());
  for (auto& t : f.terms()) {
    if (static_cast<int>(t.mono.degree()) != degree)
      throw DomainError("form is not homogeneous of degree " + std::to_string(degree));
    c[t.mono.e[1]] = t.coeff;
  }
  return BinaryForm<F>(k, std::move(c));
}

template <ExactField F>
BinaryForm<F> parse_binary_form(std::string_view text, const F& field, int degree) {
  auto ring = make_ring(field, {"s", "t"});
  return to_binary_form(parse_polynomial(text, ring), degree);
}

#define CONGRUENCE_INSTANTIATE_PARSE(F)                                                          \
  template MultiPoly<F> parse_polynomial<F>(std::string_view, const RingPtr<F>&);                \
  template typename F::Elem parse_scalar<F>(std::string_view, const F&);                         \
  template std::vector<typename F::Elem> parse_scalar_list<F>(std::string_view, const F&);       \
  template LineP3<F> parse_line<F>(std::string_view, const F&);                                  \
  template BinaryForm<F> to_binary_form<F>(const MultiPoly<F>&, int);                            \
  template BinaryForm<F> parse_binary_form<F>(std::string_view, const F&, int);

CONGRUENCE_INSTANTIATE_PARSE(RationalField)
CONGRUENCE_INSTANTIATE_PARSE(PrimeField)

}  // namespace congruence
