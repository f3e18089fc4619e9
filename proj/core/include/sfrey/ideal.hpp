#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "sfrey/integer.hpp"
#include "sfrey/quad_field.hpp"

namespace sfrey {

/// Nonzero integral ideal with Z-basis {n00, n01 + n11*omega}.
///
/// Canonical form: n00 > 0, n11 > 0, 0 <= n01 < n00, n11 | n00 and
/// n11 | n01. Over Q the ideal (n) is stored as [n, 0, 1].
struct IdealHNF {
  Int n00 = 1;
  Int n01 = 0;
  Int n11 = 1;

  Int norm() const { return n00 * n11; }
  bool is_unit() const { return n00 == 1 && n11 == 1; }

  friend bool operator==(const IdealHNF&, const IdealHNF&) = default;
  friend std::strong_ordering operator<=>(const IdealHNF& x, const IdealHNF& y);
};

IdealHNF unit_ideal();

/// The ideal generated by `gens` (at least one nonzero element).
IdealHNF ideal_from_generators(const QuadField& k, std::span<const AlgInt> gens);
IdealHNF principal_ideal(const QuadField& k, const AlgInt& x);

/// Validates the HNF conditions and that the lattice is an ideal.
IdealHNF make_ideal(const QuadField& k, const Int& n00, const Int& n01, const Int& n11);

std::array<AlgInt, 2> ideal_basis(const QuadField& k, const IdealHNF& ideal);
bool ideal_contains(const IdealHNF& ideal, const AlgInt& x);
IdealHNF ideal_mul(const QuadField& k, const IdealHNF& x, const IdealHNF& y);
IdealHNF ideal_pow(const QuadField& k, const IdealHNF& x, unsigned e);
/// Sum of ideals, i.e. their gcd.
IdealHNF ideal_add(const QuadField& k, const IdealHNF& x, const IdealHNF& y);
IdealHNF ideal_conj(const QuadField& k, const IdealHNF& x);

struct PrimeIdeal {
  Int p;
  int residue_degree = 1;
  int ramification = 1;
  IdealHNF hnf;
  /// omega = root mod the prime, meaningful when residue_degree == 1.
  Int root = 0;

  bool ramified() const { return ramification > 1; }
  Int norm() const { return residue_degree == 1 ? p : p * p; }

  friend bool operator==(const PrimeIdeal& x, const PrimeIdeal& y) { return x.p == y.p && x.hnf == y.hnf; }
  /// Canonical enumeration order: (norm, p, HNF entries).
  friend std::strong_ordering operator<=>(const PrimeIdeal& x, const PrimeIdeal& y);
};

/// Decomposition of (p); exponents are ramification indices.
std::vector<std::pair<PrimeIdeal, unsigned>> factor_rational_prime(const QuadField& k, const Int& p);

/// The prime with the given HNF (throws if the HNF is not a prime ideal).
PrimeIdeal prime_from_hnf(const QuadField& k, const IdealHNF& hnf);

/// All prime ideals of norm <= bound in canonical order.
std::vector<PrimeIdeal> primes_up_to_norm(const QuadField& k, std::uint64_t bound);

unsigned valuation(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime);
unsigned valuation(const QuadField& k, const IdealHNF& ideal, const PrimeIdeal& prime);

/// Full prime factorization of a nonzero ideal, canonical order.
std::vector<std::pair<PrimeIdeal, unsigned>> factor_ideal(const QuadField& k, const IdealHNF& ideal);

/// Precomputed support test for a finite set of primes. Stripping the
/// rational primes under the set from the norm avoids factoring anything.
class SupportSet {
 public:
  SupportSet(const QuadField& k, std::span<const PrimeIdeal> primes);

  bool supports(const AlgInt& x) const;
  bool supports(const IdealHNF& ideal) const;

 private:
  struct Fibre {
    Int p;
    std::vector<PrimeIdeal> excluded;  // primes over p that are not in the set
  };

  QuadField field_;
  std::vector<Fibre> fibres_;
};

/// Every prime divisor of `ideal` lies in `primes`.
bool is_supported_on(const QuadField& k, const IdealHNF& ideal, std::span<const PrimeIdeal> primes);
bool is_supported_on(const QuadField& k, const AlgInt& x, std::span<const PrimeIdeal> primes);

}  // namespace sfrey
