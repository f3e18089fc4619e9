#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sfrey/integer.hpp"

namespace sfrey {

/// An element a + b*omega of the ring of integers of Q or Q(sqrt d).
///
/// The element remembers the `d` of the field it was built in so the usual
/// operators work without threading the field through every expression.
/// Rational integers carry d = 0 and combine with elements of any field.
class AlgInt {
 public:
  AlgInt() = default;
  AlgInt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  AlgInt(const Int& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  AlgInt(Int a, Int b, std::int64_t d);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  std::int64_t field_d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  AlgInt operator-() const;
  AlgInt& operator+=(const AlgInt& o);
  AlgInt& operator-=(const AlgInt& o);
  AlgInt& operator*=(const AlgInt& o);
  friend AlgInt operator+(AlgInt x, const AlgInt& y) { return x += y; }
  friend AlgInt operator-(AlgInt x, const AlgInt& y) { return x -= y; }
  friend AlgInt operator*(AlgInt x, const AlgInt& y) { return x *= y; }

  friend bool operator==(const AlgInt& x, const AlgInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  /// Lexicographic on (a, b); used only for canonical ordering.
  friend std::strong_ordering operator<=>(const AlgInt& x, const AlgInt& y);

 private:
  std::int64_t merged_d(const AlgInt& o) const;

  Int a_;
  Int b_;
  std::int64_t d_ = 0;
};

AlgInt pow(const AlgInt& x, unsigned long e);

/// Prints a + b*w.
std::ostream& operator<<(std::ostream& os, const AlgInt& x);

/// True iff both coordinates are divisible by n.
bool divisible(const AlgInt& x, const Int& n);
/// x / n with both coordinates divisible; throws otherwise.
AlgInt divexact(const AlgInt& x, const Int& n);

/// Q, or an imaginary/real quadratic field Q(sqrt d) with basis {1, omega}.
///
/// omega = (1 + sqrt d)/2 when d = 1 mod 4, otherwise omega = sqrt d, so
/// omega^2 = t*omega + n with (t, n) = (1, (d-1)/4) or (0, d).
class QuadField {
 public:
  static QuadField rationals() { return QuadField(); }
  /// Validates d: squarefree, d != 0, 1.
  static QuadField make(std::int64_t d);

  bool is_rationals() const { return d_ == 0; }
  bool is_imaginary() const { return d_ < 0; }
  std::int64_t d() const { return d_; }
  int degree() const { return d_ == 0 ? 1 : 2; }
  /// Field discriminant; 1 for Q.
  Int disc() const;
  bool omega_is_half() const { return trace_term_ == 1; }
  int omega_trace() const { return trace_term_; }
  std::int64_t omega_norm_term() const { return norm_term_; }
  /// Real infinite places: 1 for Q, 2 for real quadratic, 0 otherwise.
  int real_places() const { return d_ == 0 ? 1 : (d_ > 0 ? 2 : 0); }

  AlgInt elem(const Int& a, const Int& b = 0) const;
  AlgInt omega() const { return elem(0, 1); }

  Int norm(const AlgInt& x) const;
  Int trace(const AlgInt& x) const;
  AlgInt conj(const AlgInt& x) const;

  /// x / y when the quotient lies in the ring of integers.
  std::optional<AlgInt> divide(const AlgInt& x, const AlgInt& y) const;

  /// The finite unit group (Q and imaginary fields only), sorted.
  std::vector<AlgInt> units() const;

  /// Elements whose norm has absolute value n, sorted. Over Q this is {-n, n}.
  std::vector<AlgInt> elements_of_norm(const Int& n) const;

  friend bool operator==(const QuadField& x, const QuadField& y) { return x.d_ == y.d_; }

 private:
  QuadField() = default;
  void require_finite_units() const;

  std::int64_t d_ = 0;
  int trace_term_ = 0;
  std::int64_t norm_term_ = 0;
};

bool is_squarefree(std::int64_t d);

}  // namespace sfrey
