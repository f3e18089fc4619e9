#include "sfrey/integer.hpp"

#include <algorithm>
#include <map>

#include "sfrey/errors.hpp"

namespace sfrey {

bool fits_i64(const Int& v) {
  static const Int lo = from_i64(INT64_MIN);
  static const Int hi = from_i64(INT64_MAX);
  return v >= lo && v <= hi;
}

std::int64_t to_i64(const Int& v) {
  if (!fits_i64(v)) throw Error(Errc::invalid_argument, "integer exceeds 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

unsigned remove_factor(Int& n, const Int& p) {
  if (n == 0) throw Error(Errc::invalid_argument, "valuation of zero");
  return static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

unsigned valuation(const Int& n, const Int& p) {
  Int m = n;
  return remove_factor(m, p);
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) *root = isqrt(n);
  return true;
}

bool is_prime(const Int& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

namespace {

Int powm(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Int> sqrt_mod(const Int& a_in, const Int& p) {
  Int a = mod(a_in, p);
  if (a == 0) return Int(0);
  if (p == 2) return a;
  if (kronecker(a, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  Int q = p - 1;
  unsigned s = remove_factor(q, Int(2));
  Int z = 2;
  while (kronecker(z, p) != -1) ++z;
  Int c = powm(z, q, p);
  Int r = powm(a, (q + 1) / 2, p);
  Int t = powm(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, p);
      ++i;
    }
    Int b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    r = mod(r * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return r;
}

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's cycle detection with batched gcds.
Int rho_factor(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, ys, g = 1, q = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Int& v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod(q * abs(x - y), n);
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factor_integer(const Int& n_in) {
  if (n_in == 0) throw Error(Errc::invalid_argument, "cannot factor zero");
  Int n = abs(n_in);
  std::map<Int, unsigned> acc;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    Int pp(p);
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) acc[pp] += remove_factor(n, pp);
  }
  // wheel mod 30 up to 2^16
  static const unsigned long steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  unsigned long d = 7;
  for (unsigned i = 0; d < 65536 && n > 1; d += steps[i++ % 8]) {
    if (Int(d) * Int(d) > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      Int dd(d);
      acc[dd] += remove_factor(n, dd);
    }
  }
  if (n > 1) factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace sfrey
