#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfrey/class_group.hpp"
#include "sfrey/frey.hpp"

namespace sfrey {

struct HkMember {
  std::size_t class_index = 0;
  PrimeIdeal prime;
};

struct ExceptionalSet {
  /// Canonical order, H_K members included.
  std::vector<PrimeIdeal> finite_primes;
  int real_places = 0;
  /// One odd prime of smallest norm per non-principal class.
  std::vector<HkMember> hk_members;

  bool contains(const PrimeIdeal& prime) const;
};

/// Prime ideals dividing a nonzero element, canonical order.
std::vector<PrimeIdeal> prime_divisors(const QuadField& k, const AlgInt& x);

ExceptionalSet build_SF(const QuadField& k, const BinaryCubic& f, std::uint64_t class_bound = 10000);

/// Primes q with v_q(disc F) = 1 and q not dividing 2 a0.
std::vector<PrimeIdeal> theorem_hypothesis(const QuadField& k, const BinaryCubic& f);

struct TMSolution {
  AlgInt x;
  AlgInt y;
  AlgInt value;
  std::vector<PrimeIdeal> support;
};

using Pair = std::pair<AlgInt, AlgInt>;

/// Largest (x.a, x.b, y.a, y.b) over the orbit under the unit group.
Pair unit_orbit_representative(const QuadField& k, const AlgInt& x, const AlgInt& y);

/// Max absolute coordinate over {1, omega}.
Int pair_height(const AlgInt& x, const AlgInt& y);

/// Orbit representatives of S-unit pairs whose height is exactly h, sorted.
std::vector<Pair> tm_search_shell(const QuadField& k, const BinaryCubic& f, const SupportSet& support, long h,
                                  unsigned workers = 1);

struct TMSearchOptions {
  unsigned workers = 1;
  long first_height = 1;
  /// Stop after the first shell that brings the total to at least this many (0 = no limit).
  std::size_t limit = 0;
  std::function<void(long height, std::size_t found)> progress;
};

TMSolution make_tm_solution(const QuadField& k, const BinaryCubic& f, const ExceptionalSet& s, const Pair& pair);
/// Canonical order: height, then (x, y).
void sort_solutions(std::vector<TMSolution>& sols);

std::vector<TMSolution> tm_search(const QuadField& k, const BinaryCubic& f, const ExceptionalSet& s, long height,
                                  const TMSearchOptions& options = {});

struct FiniteFlatEntry {
  PrimeIdeal prime;
  std::optional<long> v_delta;
  bool pass = false;
};

struct AuditReport {
  bool equation_holds = false;
  bool gcd_support_ok = false;
  bool q_not_dividing_z = false;
  std::optional<long> j_valuation;
  std::optional<long> h_valuation;
  bool j_valuation_ok = false;
  bool semistable_outside = false;
  std::vector<PrimeIdeal> non_semistable_primes;
  std::vector<FiniteFlatEntry> finite_flat;
  bool finite_flat_ok = false;
  bool fake_curve_excluded = false;
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

AuditReport audit_solution(const QuadField& k, const BinaryCubic& f, const AlgInt& x0, const AlgInt& y0,
                           const AlgInt& z0, long l, const PrimeIdeal& q, const ExceptionalSet& s);

struct NormalizedPair {
  AlgInt x;
  AlgInt y;
  std::size_t gcd_class = 0;
  IdealHNF gcd;
};

NormalizedPair normalize_pair(const QuadField& k, const BinaryCubic& f, const KFraction& x1, const KFraction& y1,
                              const IdealClassGroup& group, const ExceptionalSet& s);

/// The canonical generator of a principal ideal, if it is principal.
std::optional<AlgInt> principal_generator(const QuadField& k, const IdealHNF& ideal);

/// Exponent bound 2 + 3 v(3) + 6 v(2) at a prime.
unsigned conductor_exponent_bound(const QuadField& k, const PrimeIdeal& prime);

std::vector<IdealHNF> serre_level_candidates(const QuadField& k, const ExceptionalSet& s,
                                             std::uint64_t cap = 1000000);

struct DistinguishingResult {
  PrimeIdeal prime;
  Int trace1;
  Int trace2;
};

/// Scans primes with lo < N(P) <= hi in canonical order.
std::optional<DistinguishingResult> distinguishing_prime_in_range(const QuadField& k, const WeierstrassCurve& e1,
                                                                  const WeierstrassCurve& e2, const Int& p,
                                                                  const std::vector<PrimeIdeal>& avoid,
                                                                  std::uint64_t lo, std::uint64_t hi,
                                                                  unsigned workers = 1);

DistinguishingResult distinguishing_prime(const QuadField& k, const WeierstrassCurve& e1, const WeierstrassCurve& e2,
                                          const Int& p, const std::vector<PrimeIdeal>& avoid,
                                          std::uint64_t norm_bound, unsigned workers = 1);

}  // namespace sfrey
