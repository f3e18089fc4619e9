#include "sfrey/cubic.hpp"

#include <algorithm>

#include "sfrey/errors.hpp"

namespace sfrey {

BinaryCubic BinaryCubic::from_form(const BinaryForm& f) {
  if (f.degree() != 3) throw Error(Errc::invalid_argument, "expected a cubic form");
  return BinaryCubic{{f[0], f[1], f[2], f[3]}};
}

AlgInt discriminant(const BinaryCubic& f) {
  const auto& [a0, a1, a2, a3] = f.a;
  return a1 * a1 * a2 * a2 - AlgInt(4) * a0 * a2 * a2 * a2 - AlgInt(4) * a1 * a1 * a1 * a3 -
         AlgInt(27) * a0 * a0 * a3 * a3 + AlgInt(18) * a0 * a1 * a2 * a3;
}

BinaryQuadratic hessian(const BinaryCubic& f) {
  const auto& [a0, a1, a2, a3] = f.a;
  return BinaryQuadratic{{AlgInt(3) * a0 * a2 - a1 * a1, AlgInt(9) * a0 * a3 - a1 * a2,
                          AlgInt(3) * a1 * a3 - a2 * a2}};
}

BinaryCubic covariant_G(const BinaryCubic& f) {
  const auto& [a0, a1, a2, a3] = f.a;
  const auto h = hessian(f).q;
  return BinaryCubic{{AlgInt(3) * a0 * h[1] - AlgInt(2) * a1 * h[0],
                      AlgInt(6) * a0 * h[2] + a1 * h[1] - AlgInt(4) * a2 * h[0],
                      AlgInt(4) * a1 * h[2] - a2 * h[1] - AlgInt(6) * a3 * h[0],
                      AlgInt(2) * a2 * h[2] - AlgInt(3) * a3 * h[1]}};
}

CovariantTriple covariants(const BinaryCubic& f) {
  return CovariantTriple{f, hessian(f), covariant_G(f), discriminant(f)};
}

BinaryForm syzygy_residual(const BinaryCubic& f) {
  const BinaryForm F = f.as_form();
  const BinaryForm H = hessian(f).as_form();
  const BinaryForm G = covariant_G(f).as_form();
  return AlgInt(4) * (H * H * H) + G * G + (AlgInt(27) * discriminant(f)) * (F * F);
}

namespace {

AlgInt det_rec(const std::vector<std::vector<AlgInt>>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return AlgInt(1);
  AlgInt acc;
  long sign = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
      AlgInt minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
      if (sign > 0) {
        acc += m[row][c] * minor;
      } else {
        acc -= m[row][c] * minor;
      }
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

AlgInt determinant(const std::vector<std::vector<AlgInt>>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(Errc::invalid_argument, "matrix is not square");
  }
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

AlgInt sylvester_resultant(const BinaryForm& f, const BinaryForm& g) {
  const std::size_t m = f.degree();
  const std::size_t n = g.degree();
  const std::size_t size = m + n;
  std::vector<std::vector<AlgInt>> mat(size, std::vector<AlgInt>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) mat[r][r + i] = f[i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) mat[n + r][r + i] = g[i];
  }
  return determinant(mat);
}

AlgInt resultant_HF(const BinaryCubic& f) { return sylvester_resultant(hessian(f).as_form(), f.as_form()); }

AlgInt evaluate(const BinaryCubic& f, const AlgInt& x, const AlgInt& y) {
  const auto& [a0, a1, a2, a3] = f.a;
  const AlgInt x2 = x * x;
  const AlgInt y2 = y * y;
  return a0 * x2 * x + a1 * x2 * y + a2 * x * y2 + a3 * y2 * y;
}

AlgInt evaluate(const BinaryQuadratic& h, const AlgInt& x, const AlgInt& y) {
  return h.q[0] * x * x + h.q[1] * x * y + h.q[2] * y * y;
}

namespace {

Int abs_square(const QuadField& k, const AlgInt& x) {
  if (k.is_rationals()) return x.a() * x.a();
  Int n = k.norm(x);
  return abs(n);
}

}  // namespace

std::optional<AlgInt> integral_root_monic_cubic(const QuadField& k, const AlgInt& c2, const AlgInt& c1,
                                                const AlgInt& c0) {
  if (c0.is_zero()) return AlgInt(0);
  const Int m = std::max({abs_square(k, c2), abs_square(k, c1), abs_square(k, c0)});
  const Int radius = isqrt(m) + 2;
  const Int norm_bound = k.is_rationals() ? radius : radius * radius;
  const Int n0 = k.is_rationals() ? Int(abs(c0.a())) : Int(abs(k.norm(c0)));
  std::optional<AlgInt> best;
  for (const Int& n : divisors(factor_integer(n0))) {
    if (n > norm_bound) break;
    for (const AlgInt& x : k.elements_of_norm(n)) {
      if (!k.divide(c0, x)) continue;
      if (((x + c2) * x + c1) * x + c0 == AlgInt(0) && (!best || x < *best)) best = x;
    }
  }
  return best;
}

bool is_irreducible(const BinaryCubic& f, const QuadField& k) {
  const auto& [a0, a1, a2, a3] = f.a;
  if (a0.is_zero() || a3.is_zero()) return false;
  return !integral_root_monic_cubic(k, a1, a0 * a2, a0 * a0 * a3).has_value();
}

DoubleRootFactorization factor_mod_q(const QuadField& k, const BinaryCubic& f, const PrimeIdeal& q,
                                     std::uint64_t cap) {
  if (q.norm() > cap) throw Error(Errc::cap_exceeded, "residue field of size " + to_string(q.norm()) + " exceeds cap");
  const ResidueField r(k, q);
  std::array<ResidueElem, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = r.reduce(f.a[i]);
  if (r.is_zero(a[0])) throw Error(Errc::degenerate, "q divides the leading coefficient");
  const ResidueElem inv0 = r.inv(a[0]);
  const ResidueElem c2 = r.mul(a[1], inv0);
  const ResidueElem c1 = r.mul(a[2], inv0);
  const ResidueElem c0 = r.mul(a[3], inv0);
  const ResidueElem three = r.from_u64(3);
  const ResidueElem two = r.from_u64(2);

  std::optional<ResidueElem> dbl;
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    const ResidueElem x = r.element(i);
    const ResidueElem val = r.add(r.mul(r.add(r.mul(r.add(x, c2), x), c1), x), c0);
    if (!r.is_zero(val)) continue;
    const ResidueElem d1 = r.add(r.add(r.mul(three, r.mul(x, x)), r.mul(two, r.mul(c2, x))), c1);
    if (!r.is_zero(d1)) continue;
    const ResidueElem d2 = r.add(r.mul(three, x), c2);
    if (r.is_zero(d2)) throw Error(Errc::not_double_root, "F has a triple root mod q");
    dbl = x;
    break;
  }
  if (!dbl) throw Error(Errc::not_double_root, "F has no repeated root mod q");

  DoubleRootFactorization out;
  out.a = *dbl;
  out.b = r.sub(r.neg(c2), r.mul(two, out.a));
  const ResidueElem& ra = out.a;
  const ResidueElem& rb = out.b;

  const std::array<ResidueElem, 4> expanded{
      a[0], r.mul(a[0], r.neg(r.add(r.mul(two, ra), rb))),
      r.mul(a[0], r.add(r.mul(ra, ra), r.mul(two, r.mul(ra, rb)))),
      r.mul(a[0], r.neg(r.mul(r.mul(ra, ra), rb)))};
  out.factorization_verified = expanded == a;

  const auto h = hessian(f).q;
  const ResidueElem diff = r.sub(ra, rb);
  const ResidueElem lead = r.neg(r.mul(r.mul(a[0], a[0]), r.mul(diff, diff)));
  const std::array<ResidueElem, 3> expected_h{lead, r.mul(lead, r.neg(r.mul(two, ra))), r.mul(lead, r.mul(ra, ra))};
  out.hessian_verified =
      expected_h == std::array<ResidueElem, 3>{r.reduce(h[0]), r.reduce(h[1]), r.reduce(h[2])};
  return out;
}

}  // namespace sfrey
