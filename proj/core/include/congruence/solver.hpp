#pragma once

// Buchberger's algorithm with the normal selection strategy and both
// Buchberger criteria, normal forms, and quotient-ring dimensions for
// zero-dimensional ideals.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "congruence/polyring.hpp"

namespace congruence {

enum class OrderKind { Grevlex, Lex };

/// A monomial order on a polynomial ring. `significance[k]` is the ring
/// variable that ranks k-th (most significant first); empty means identity.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<std::size_t> significance;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, {}}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder lex(std::vector<std::size_t> significance) { return {OrderKind::Lex, std::move(significance)}; }

  /// <0, 0, >0 on ring monomials.
  int compare(const Monomial& a, const Monomial& b) const;
};

template <ExactField F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<MultiPoly<F>> gens, bool reduced)
      : ring_(std::move(ring)), order_(std::move(order)), gens_(std::move(gens)), reduced_(reduced) {}

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  /// Sorted by increasing leading monomial.
  const std::vector<MultiPoly<F>>& generators() const { return gens_; }
  bool reduced() const { return reduced_; }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }

  /// Leading monomial of generator i under this basis' order.
  Monomial leading_monomial(std::size_t i) const;

 private:
  RingPtr<F> ring_;
  MonomialOrder order_;
  std::vector<MultiPoly<F>> gens_;
  bool reduced_;
};

struct BuchbergerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_skipped_chain = 0;
  std::uint64_t zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens` (all in one ring).
/// The zero ideal yields an empty basis.
template <ExactField F>
GroebnerBasis<F> buchberger(std::span<const MultiPoly<F>> gens, const MonomialOrder& order = MonomialOrder::grevlex(),
                            BuchbergerStats* stats = nullptr);

/// Fully reduced remainder of f modulo the basis; zero iff f is in the ideal.
template <ExactField F>
MultiPoly<F> normal_form(const MultiPoly<F>& f, const GroebnerBasis<F>& g);

/// S-polynomial of two polynomials under an order.
template <ExactField F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& a, const MultiPoly<F>& b, const MonomialOrder& order);

/// Number of standard monomials, or nullopt when the ideal is not
/// zero-dimensional. The unit ideal has dimension 0.
template <ExactField F>
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis<F>& g);

/// For a lex basis whose least significant variable is `var`, the generator
/// involving only `var` (the eliminant), if any.
template <ExactField F>
std::optional<MultiPoly<F>> univariate_eliminant(const GroebnerBasis<F>& g, std::size_t var);

}  // namespace congruence
