#pragma once

#include <array>
#include <optional>

#include "sfrey/binary_form.hpp"
#include "sfrey/ideal.hpp"
#include "sfrey/residue_field.hpp"

namespace sfrey {

/// a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3.
struct BinaryCubic {
  std::array<AlgInt, 4> a;

  BinaryForm as_form() const { return BinaryForm({a[0], a[1], a[2], a[3]}); }
  static BinaryCubic from_form(const BinaryForm& f);
  friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
};

/// q0 x^2 + q1 x y + q2 y^2.
struct BinaryQuadratic {
  std::array<AlgInt, 3> q;

  BinaryForm as_form() const { return BinaryForm({q[0], q[1], q[2]}); }
  friend bool operator==(const BinaryQuadratic&, const BinaryQuadratic&) = default;
};

struct CovariantTriple {
  BinaryCubic F;
  BinaryQuadratic H;
  BinaryCubic G;
  AlgInt discF;
};

AlgInt discriminant(const BinaryCubic& f);
/// (F_xx F_yy - F_xy^2) / 4.
BinaryQuadratic hessian(const BinaryCubic& f);
/// F_x H_y - F_y H_x.
BinaryCubic covariant_G(const BinaryCubic& f);
CovariantTriple covariants(const BinaryCubic& f);
/// 4H^3 + G^2 + 27 disc F^2; identically zero.
BinaryForm syzygy_residual(const BinaryCubic& f);

/// Determinant of a square matrix by cofactor expansion (small sizes only).
AlgInt determinant(const std::vector<std::vector<AlgInt>>& m);
/// Sylvester resultant of two forms; rows of f come first.
AlgInt sylvester_resultant(const BinaryForm& f, const BinaryForm& g);
/// Res(H, F) from the 5x5 Sylvester matrix.
AlgInt resultant_HF(const BinaryCubic& f);

AlgInt evaluate(const BinaryCubic& f, const AlgInt& x, const AlgInt& y);
AlgInt evaluate(const BinaryQuadratic& h, const AlgInt& x, const AlgInt& y);

/// A root in O_K of X^3 + c2 X^2 + c1 X + c0, smallest in (a, b) order.
std::optional<AlgInt> integral_root_monic_cubic(const QuadField& k, const AlgInt& c2, const AlgInt& c1,
                                                const AlgInt& c0);

bool is_irreducible(const BinaryCubic& f, const QuadField& k);

struct DoubleRootFactorization {
  ResidueElem a;  // double root
  ResidueElem b;  // simple root
  bool factorization_verified = false;
  bool hessian_verified = false;
};

/// Roots of F(X, 1) mod q by exhaustive scan; residue fields up to `cap`.
DoubleRootFactorization factor_mod_q(const QuadField& k, const BinaryCubic& f, const PrimeIdeal& q,
                                     std::uint64_t cap = 1000000);

}  // namespace sfrey
