#include "sfrey/frey.hpp"

#include <vector>

#include "sfrey/errors.hpp"

namespace sfrey {

KFraction make_fraction(const QuadField& k, const AlgInt& num, const AlgInt& den) {
  if (den.is_zero()) throw Error(Errc::invalid_argument, "zero denominator");
  AlgInt n = num * k.conj(den);
  Int d = k.norm(den);
  if (k.is_rationals()) {
    n = num;
    d = den.a();
  }
  if (d < 0) {
    d = -d;
    n = -n;
  }
  Int g = gcd(gcd(n.a(), n.b()), d);
  if (g != 1) {
    n = divexact(n, g);
    d /= g;
  }
  return KFraction{n, d};
}

std::optional<long> valuation(const QuadField& k, const KFraction& x, const PrimeIdeal& prime) {
  if (x.num.is_zero()) return std::nullopt;
  return static_cast<long>(valuation(k, x.num, prime)) - static_cast<long>(valuation(k, AlgInt(x.den), prime));
}

const char* reduction_type_name(ReductionType t) {
  switch (t) {
    case ReductionType::good: return "GOOD";
    case ReductionType::multiplicative: return "MULTIPLICATIVE";
    case ReductionType::additive: return "ADDITIVE";
    case ReductionType::undetermined_small_prime: return "UNDETERMINED_SMALL_PRIME";
  }
  return "?";
}

WeierstrassCurve frey_curve(const QuadField& k, const BinaryCubic& f, const AlgInt& x, const AlgInt& y) {
  (void)k;
  if (discriminant(f).is_zero()) throw Error(Errc::singular, "form has zero discriminant");
  if (evaluate(f, x, y).is_zero()) throw Error(Errc::singular, "F(x, y) = 0");
  const AlgInt t = f.a[1] * x - f.a[2] * y;
  const AlgInt h = evaluate(hessian(f), x, y);
  const AlgInt g = evaluate(covariant_G(f), x, y);
  const AlgInt n4 = t * t + h;
  const AlgInt n6 = t * t * t + AlgInt(3) * t * h + g;
  if (!divisible(n4, 3) || !divisible(n6, 27)) {
    throw Error(Errc::integrality_violation, "Frey model coefficients are not integral");
  }
  return WeierstrassCurve{t, divexact(n4, 3), divexact(n6, 27)};
}

CurveInvariants invariants_standard(const QuadField& k, const WeierstrassCurve& e) {
  const AlgInt b2 = AlgInt(4) * e.a2;
  const AlgInt b4 = AlgInt(2) * e.a4;
  const AlgInt b6 = AlgInt(4) * e.a6;
  const AlgInt b8 = AlgInt(4) * e.a2 * e.a6 - e.a4 * e.a4;
  CurveInvariants out;
  out.c4 = b2 * b2 - AlgInt(24) * b4;
  out.c6 = -(b2 * b2 * b2) + AlgInt(36) * b2 * b4 - AlgInt(216) * b6;
  out.delta = -(b2 * b2 * b8) - AlgInt(8) * b4 * b4 * b4 - AlgInt(27) * b6 * b6 + AlgInt(9) * b2 * b4 * b6;
  if (!out.delta.is_zero()) out.j = make_fraction(k, out.c4 * out.c4 * out.c4, out.delta);
  return out;
}

CurveInvariants frey_invariants(const QuadField& k, const BinaryCubic& f, const AlgInt& x, const AlgInt& y) {
  const AlgInt disc = discriminant(f);
  const AlgInt v = evaluate(f, x, y);
  if (disc.is_zero() || v.is_zero()) throw Error(Errc::singular, "Frey curve is singular");
  const AlgInt h = evaluate(hessian(f), x, y);
  const AlgInt g = evaluate(covariant_G(f), x, y);
  CurveInvariants out;
  out.c4 = AlgInt(-16) * h;
  out.c6 = AlgInt(-32) * g;
  out.delta = AlgInt(16) * disc * v * v;
  out.j = make_fraction(k, AlgInt(-256) * h * h * h, disc * v * v);
  return out;
}

namespace {

constexpr long kInfinite = 1L << 40;

long val_or_inf(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime) {
  return x.is_zero() ? kInfinite : static_cast<long>(valuation(k, x, prime));
}

}  // namespace

ReductionType reduction_type(const QuadField& k, const WeierstrassCurve& e, const PrimeIdeal& prime) {
  const CurveInvariants inv = invariants_standard(k, e);
  if (inv.singular()) throw Error(Errc::singular, "curve is singular");
  long v4 = val_or_inf(k, inv.c4, prime);
  long v6 = val_or_inf(k, inv.c6, prime);
  long vd = val_or_inf(k, inv.delta, prime);
  if (prime.p == 2 || prime.p == 3) {
    if (vd == 0) return ReductionType::good;
    if (v4 == 0) return ReductionType::multiplicative;
    return ReductionType::undetermined_small_prime;
  }
  while (v4 >= 4 && v6 >= 6 && vd >= 12) {
    v4 -= 4;
    v6 -= 6;
    vd -= 12;
  }
  if (vd == 0) return ReductionType::good;
  if (v4 == 0) return ReductionType::multiplicative;
  return ReductionType::additive;
}

std::uint64_t point_count(const QuadField& k, const WeierstrassCurve& e, const PrimeIdeal& prime,
                          std::uint64_t cap) {
  if (prime.norm() > cap) {
    throw Error(Errc::cap_exceeded, "norm " + to_string(prime.norm()) + " exceeds the point counting cap");
  }
  const CurveInvariants inv = invariants_standard(k, e);
  if (inv.singular()) throw Error(Errc::singular, "curve is singular");
  if (valuation(k, inv.delta, prime) > 0) {
    if (reduction_type(k, e, prime) == ReductionType::good) {
      throw Error(Errc::non_minimal_model, "model is not minimal at the prime; reduction of the minimal model is good");
    }
    throw Error(Errc::bad_reduction, "curve has bad reduction at the prime");
  }
  const ResidueField r(k, prime);
  const std::uint64_t q = r.size();
  std::vector<std::uint32_t> squares(q, 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    const ResidueElem y = r.element(i);
    ++squares[r.index(r.mul(y, y))];
  }
  const ResidueElem a2 = r.reduce(e.a2);
  const ResidueElem a4 = r.reduce(e.a4);
  const ResidueElem a6 = r.reduce(e.a6);
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    const ResidueElem x = r.element(i);
    const ResidueElem rhs = r.add(r.mul(r.add(r.mul(r.add(x, a2), x), a4), x), a6);
    count += squares[r.index(rhs)];
  }
  return count;
}

Int trace_a(const QuadField& k, const WeierstrassCurve& e, const PrimeIdeal& prime, std::uint64_t cap) {
  const std::uint64_t n = point_count(k, e, prime, cap);
  Int count;
  mpz_set_ui(count.get_mpz_t(), n);
  return prime.norm() + 1 - count;
}

bool two_torsion_irreducible(const WeierstrassCurve& e, const QuadField& k) {
  return !integral_root_monic_cubic(k, e.a2, e.a4, e.a6).has_value();
}

}  // namespace sfrey
