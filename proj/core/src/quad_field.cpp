#include "sfrey/quad_field.hpp"

#include <algorithm>
#include <ostream>

#include "sfrey/errors.hpp"

namespace sfrey {

namespace {

struct OmegaRule {
  int trace;
  std::int64_t norm;
};

OmegaRule omega_rule(std::int64_t d) {
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return {1, (d - 1) / 4};
  return {0, d};
}

}  // namespace

AlgInt::AlgInt(Int a, Int b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0 && b_ != 0) throw Error(Errc::invalid_argument, "omega coordinate over Q");
}

std::int64_t AlgInt::merged_d(const AlgInt& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(Errc::field_mismatch, "elements of Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " +
                                        std::to_string(o.d_) + ")");
}

AlgInt AlgInt::operator-() const {
  AlgInt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

AlgInt& AlgInt::operator+=(const AlgInt& o) {
  d_ = merged_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

AlgInt& AlgInt::operator-=(const AlgInt& o) {
  d_ = merged_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

AlgInt& AlgInt::operator*=(const AlgInt& o) {
  const std::int64_t d = merged_d(o);
  if (b_ == 0) {
    Int a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
  } else if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
  } else {
    const OmegaRule rule = omega_rule(d);
    const Int bb = b_ * o.b_;
    Int a = a_ * o.a_ + from_i64(rule.norm) * bb;
    Int b = a_ * o.b_ + b_ * o.a_;
    if (rule.trace != 0) b += bb;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  return *this;
}

std::strong_ordering operator<=>(const AlgInt& x, const AlgInt& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const AlgInt& x) {
  if (x.is_rational()) return os << x.a();
  return os << x.a() << (x.b() < 0 ? " - " : " + ") << abs(x.b()) << "*w";
}

AlgInt pow(const AlgInt& x, unsigned long e) {
  AlgInt result(1);
  AlgInt base = x;
  while (e > 0) {
    if ((e & 1UL) != 0) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool divisible(const AlgInt& x, const Int& n) {
  return mpz_divisible_p(x.a().get_mpz_t(), n.get_mpz_t()) != 0 &&
         mpz_divisible_p(x.b().get_mpz_t(), n.get_mpz_t()) != 0;
}

AlgInt divexact(const AlgInt& x, const Int& n) {
  if (n == 0 || !divisible(x, n)) {
    throw Error(Errc::integrality_violation, "inexact division by " + n.get_str());
  }
  Int a, b;
  mpz_divexact(a.get_mpz_t(), x.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), x.b().get_mpz_t(), n.get_mpz_t());
  return {a, b, x.field_d()};
}

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  for (const auto& [p, e] : factor_integer(from_i64(d))) {
    if (e > 1) return false;
  }
  return true;
}

QuadField QuadField::make(std::int64_t d) {
  if (d == 0 || d == 1) throw Error(Errc::invalid_argument, "d must not be 0 or 1");
  if (!is_squarefree(d)) throw Error(Errc::not_squarefree, std::to_string(d) + " is not squarefree");
  QuadField k;
  k.d_ = d;
  const OmegaRule rule = omega_rule(d);
  k.trace_term_ = rule.trace;
  k.norm_term_ = rule.norm;
  return k;
}

Int QuadField::disc() const {
  if (d_ == 0) return 1;
  return trace_term_ == 1 ? from_i64(d_) : 4 * from_i64(d_);
}

AlgInt QuadField::elem(const Int& a, const Int& b) const {
  if (d_ == 0 && b != 0) throw Error(Errc::invalid_argument, "omega coordinate over Q");
  return {a, b, d_};
}

Int QuadField::norm(const AlgInt& x) const {
  if (d_ == 0) return x.a();
  // N(a + b w) = a^2 + t a b - n b^2
  Int r = x.a() * x.a() - from_i64(norm_term_) * x.b() * x.b();
  if (trace_term_ != 0) r += x.a() * x.b();
  return r;
}

Int QuadField::trace(const AlgInt& x) const {
  if (d_ == 0) return x.a();
  return 2 * x.a() + trace_term_ * x.b();
}

AlgInt QuadField::conj(const AlgInt& x) const {
  if (d_ == 0) return x;
  return elem(x.a() + trace_term_ * x.b(), -x.b());
}

std::optional<AlgInt> QuadField::divide(const AlgInt& x, const AlgInt& y) const {
  if (y.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  if (is_rationals()) {
    if (!divisible(x, y.a())) return std::nullopt;
    return divexact(x, y.a());
  }
  const Int n = norm(y);
  const AlgInt num = x * conj(y);
  if (!divisible(num, n)) return std::nullopt;
  AlgInt q = divexact(num, n);
  return elem(q.a(), q.b());
}

void QuadField::require_finite_units() const {
  if (d_ > 0) throw Error(Errc::unsupported_field, "real quadratic fields are not supported here");
}

std::vector<AlgInt> QuadField::units() const {
  require_finite_units();
  return elements_of_norm(1);
}

std::vector<AlgInt> QuadField::elements_of_norm(const Int& n_in) const {
  require_finite_units();
  const Int n = abs(n_in);
  std::vector<AlgInt> out;
  if (n == 0) return {elem(0)};
  if (d_ == 0) return {elem(-n), elem(n)};
  // 4N = s^2 - D b^2 with s = 2a + t b
  const Int disc_abs = abs(disc());
  const Int four_n = 4 * n;
  const Int b_max = isqrt(four_n / disc_abs);
  for (Int b = -b_max; b <= b_max; ++b) {
    const Int rest = four_n - disc_abs * b * b;
    Int s;
    if (!is_square(rest, &s)) continue;
    for (const Int& sv : {s, Int(-s)}) {
      const Int twice_a = sv - trace_term_ * b;
      if (mpz_even_p(twice_a.get_mpz_t()) == 0) continue;
      out.push_back(elem(twice_a / 2, b));
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sfrey
