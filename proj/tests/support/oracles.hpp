#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sfrey/pipeline.hpp"

namespace sfrey::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
/// Coordinates in [-r, r]; b = 0 over Q.
AlgInt random_element(const QuadField& k, Rng& rng, long r);
BinaryCubic random_cubic(const QuadField& k, Rng& rng, long r);
/// Random cubic with nonzero discriminant.
BinaryCubic random_nondegenerate_cubic(const QuadField& k, Rng& rng, long r);

/// (F_xx F_yy - F_xy^2) / 4 by differentiating the form.
BinaryForm symbolic_hessian(const BinaryCubic& f);
/// F_x H_y - F_y H_x by differentiating the forms.
BinaryForm symbolic_G(const BinaryCubic& f);

/// Largest e with x in P^e, by ideal powers.
unsigned valuation_by_powers(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime);

/// Reduced primitive positive definite forms of discriminant D < 0.
std::size_t reduced_form_count(long D);

/// #{(X, Y) in F_p^2 : Y^2 = X^3 + a2 X^2 + a4 X + a6} + 1 over a rational prime.
std::uint64_t brute_point_count(std::uint64_t p, long a2, long a4, long a6);

/// Exhaustive search for x in K with F(x, 1) = 0 by scanning a box for the
/// monic transform X = a0 x.
bool brute_has_root(const QuadField& k, const BinaryCubic& f, long box);

/// A verified consistent solution F(x0, y0) = z0^l built from a Thue unit
/// value scaled by an S-supported element.
struct AuditInstance {
  QuadField field = QuadField::rationals();
  BinaryCubic form;
  ExceptionalSet s;
  PrimeIdeal q;
  long l = 29;
  long l_small = 23;
  AlgInt x0, y0, z0;
  /// z for the same (x0, y0) when the exponent is l_small.
  AlgInt z0_small;
  /// Element with v_q > 0 supported on S.
  AlgInt q_element;
  /// Rational prime with no prime above it in S.
  Int off_support;
};

std::optional<AuditInstance> make_audit_instance(const QuadField& k, Rng& rng);

/// Unit eta with eta^l = eps, if any.
std::optional<AlgInt> unit_root(const QuadField& k, const AlgInt& eps, long l);

}  // namespace sfrey::testing
