#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfrey {

using Int = mpz_class;

/// Prime factorization with exponents, primes ascending. The sign of the
/// factored number is not recorded.
using Factorization = std::vector<std::pair<Int, unsigned>>;

inline Int from_i64(std::int64_t v) {
  Int r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

bool fits_i64(const Int& v);
std::int64_t to_i64(const Int& v);

Int pow(const Int& base, unsigned long exp);

/// Exact power of `p` dividing `n`; `n` is replaced by the cofactor.
unsigned remove_factor(Int& n, const Int& p);

/// v_p(n) for n != 0.
unsigned valuation(const Int& n, const Int& p);

/// Non-negative remainder.
Int mod(const Int& a, const Int& m);

Int isqrt(const Int& n);
bool is_square(const Int& n, Int* root = nullptr);

bool is_prime(const Int& n);

/// Kronecker symbol (a | n).
int kronecker(const Int& a, const Int& n);

/// A square root of `a` modulo the odd prime `p`, if one exists.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

/// Trial division followed by Brent's variant of Pollard rho. `n` must be
/// nonzero.
Factorization factor_integer(const Int& n);

/// All positive divisors, ascending.
std::vector<Int> divisors(const Factorization& f);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace sfrey
