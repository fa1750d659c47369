#pragma once

// Text input: the polynomial grammar shared with the command line, and
// scalar lists for Pluecker vectors.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' integer]
//   atom   := integer ['/' integer] | variable | '(' expr ')'
//
// Juxtaposition is rejected and whitespace is ignored.

#include <string_view>
#include <vector>

#include "congruence/linegeom.hpp"
#include "congruence/polyring.hpp"

namespace congruence {

/// Throws ParseError with the offending position.
template <ExactField F>
MultiPoly<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring);

/// "a/b" or "a" into the field.
template <ExactField F>
typename F::Elem parse_scalar(std::string_view text, const F& field);

/// Comma separated scalars.
template <ExactField F>
std::vector<typename F::Elem> parse_scalar_list(std::string_view text, const F& field);

/// Six comma separated primal Pluecker coordinates p01,..,p23.
template <ExactField F>
LineP3<F> parse_line(std::string_view text, const F& field);

/// Homogeneous form in s, t of the given degree.
template <ExactField F>
BinaryForm<F> parse_binary_form(std::string_view text, const F& field, int degree);

/// Coefficient vector of a polynomial in {s, t} that is homogeneous of degree
/// `degree`; throws DomainError otherwise.
template <ExactField F>
BinaryForm<F> to_binary_form(const MultiPoly<F>& f, int degree);

}  // namespace congruence
