#pragma once

#include <optional>

#include "sfrey/cubic.hpp"

namespace sfrey {

/// Y^2 = X^3 + a2 X^2 + a4 X + a6.
struct WeierstrassCurve {
  AlgInt a2;
  AlgInt a4;
  AlgInt a6;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// num / den with den a positive rational integer and gcd(num, den) = 1
/// coordinate-wise. Every element of K has exactly one such form.
struct KFraction {
  AlgInt num;
  Int den = 1;
  friend bool operator==(const KFraction&, const KFraction&) = default;
};

KFraction make_fraction(const QuadField& k, const AlgInt& num, const AlgInt& den);
/// v_P(num) - v_P(den); nullopt for zero.
std::optional<long> valuation(const QuadField& k, const KFraction& x, const PrimeIdeal& prime);

struct CurveInvariants {
  AlgInt c4;
  AlgInt c6;
  AlgInt delta;
  /// Absent exactly when delta == 0.
  std::optional<KFraction> j;
  bool singular() const { return delta.is_zero(); }
};

enum class ReductionType { good, multiplicative, additive, undetermined_small_prime };
const char* reduction_type_name(ReductionType t);

/// a2 = T, a4 = (T^2 + H)/3, a6 = (T^3 + 3TH + G)/27 with T = a1 x - a2 y.
WeierstrassCurve frey_curve(const QuadField& k, const BinaryCubic& f, const AlgInt& x, const AlgInt& y);
CurveInvariants invariants_standard(const QuadField& k, const WeierstrassCurve& e);
/// c4 = -16H, c6 = -32G, delta = 16 disc F^2, j = -256 H^3 / (disc F^2).
CurveInvariants frey_invariants(const QuadField& k, const BinaryCubic& f, const AlgInt& x, const AlgInt& y);

ReductionType reduction_type(const QuadField& k, const WeierstrassCurve& e, const PrimeIdeal& prime);

constexpr std::uint64_t kPointCountCap = 1000000;

/// #E(O_K/P) including the point at infinity.
std::uint64_t point_count(const QuadField& k, const WeierstrassCurve& e, const PrimeIdeal& prime,
                          std::uint64_t cap = kPointCountCap);
Int trace_a(const QuadField& k, const WeierstrassCurve& e, const PrimeIdeal& prime,
            std::uint64_t cap = kPointCountCap);

/// The 2-division cubic has no root in K.
bool two_torsion_irreducible(const WeierstrassCurve& e, const QuadField& k);

}  // namespace sfrey
