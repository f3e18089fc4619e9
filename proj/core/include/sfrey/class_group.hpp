#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sfrey/ideal.hpp"

namespace sfrey {

/// Integral binary quadratic form a x^2 + b x y + c y^2 (positive definite
/// when used for class groups).
struct QuadraticForm {
  Int a, b, c;

  Int disc() const { return b * b - 4 * a * c; }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Reduction of a positive definite form to the unique reduced representative.
QuadraticForm reduce(QuadraticForm f);
/// Dirichlet composition of primitive positive definite forms of equal
/// discriminant, reduced.
QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g);

/// The form attached to the primitive part of an ideal of an imaginary field.
QuadraticForm ideal_to_form(const QuadField& k, const IdealHNF& ideal);
IdealHNF form_to_ideal(const QuadField& k, const QuadraticForm& f);

struct IdealClassGroup {
  Int disc;
  std::size_t h = 1;
  /// Reduced forms, principal form first.
  std::vector<QuadraticForm> forms;
  /// representatives[0] is the unit ideal.
  std::vector<IdealHNF> representatives;
  /// table[i][j] = index of class i * class j.
  std::vector<std::vector<std::size_t>> table;

  std::size_t identity() const { return 0; }
  std::size_t inverse(std::size_t c) const;
};

/// Q or an imaginary quadratic field; throws unsupported_field for d > 0.
IdealClassGroup class_group(const QuadField& k);

std::size_t ideal_class_of(const QuadField& k, const IdealHNF& ideal, const IdealClassGroup& group);

/// Prime of smallest norm in class `c`, outside `avoid`, scanning norms up to
/// `bound` in canonical order (norm, p, HNF). Primes over 2 are skipped when
/// `skip_primes_over_two` is set, as required for the H_K choice.
PrimeIdeal smallest_prime_in_class(const QuadField& k, const IdealClassGroup& group, std::size_t c,
                                   std::span<const PrimeIdeal> avoid, std::uint64_t bound,
                                   bool skip_primes_over_two = true);

}  // namespace sfrey
