#include "sfrey/class_group.hpp"

#include <algorithm>

#include "sfrey/errors.hpp"

namespace sfrey {

namespace {

struct Xgcd {
  Int g, s, t;
};

Xgcd xgcd(const Int& a, const Int& b) {
  Xgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const Int& d, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

QuadraticForm reduce(QuadraticForm f) {
  if (f.a <= 0 || f.disc() >= 0) throw Error(Errc::invalid_argument, "form is not positive definite");
  for (;;) {
    if (!(-f.a < f.b && f.b <= f.a)) {
      // b <- b mod 2a into (-a, a]
      const Int two_a = 2 * f.a;
      Int q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
      if (r > f.a) {
        r -= two_a;
        ++q;
      }
      f.c -= q * (f.b + r) / 2;
      f.b = r;
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

QuadraticForm compose(const QuadraticForm& f_in, const QuadraticForm& g_in) {
  const Int disc = f_in.disc();
  if (disc != g_in.disc()) throw Error(Errc::invalid_argument, "forms of different discriminant");
  QuadraticForm f1 = f_in;
  QuadraticForm f2 = g_in;
  if (f1.a > f2.a) std::swap(f1, f2);
  const Int s = (f1.b + f2.b) / 2;
  const Int n = f2.b - s;
  Int y1, d;
  if (divides(f1.a, f2.a)) {
    y1 = 0;
    d = f1.a;
  } else {
    const Xgcd e = xgcd(f2.a, f1.a);
    y1 = e.s;
    d = e.g;
  }
  Int x2, y2, d1;
  if (divides(d, s)) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    const Xgcd e = xgcd(s, d);
    x2 = e.s;
    y2 = -e.t;
    d1 = e.g;
  }
  const Int v1 = f1.a / d1;
  const Int v2 = f2.a / d1;
  const Int r = mod(y1 * y2 * n - x2 * f2.c, v1);
  QuadraticForm out;
  out.b = f2.b + 2 * v2 * r;
  out.a = v1 * v2;
  out.c = (out.b * out.b - disc) / (4 * out.a);
  return reduce(out);
}

namespace {

void require_imaginary(const QuadField& k) {
  if (k.d() > 0) throw Error(Errc::unsupported_field, "class groups are implemented for Q and imaginary fields only");
}

}  // namespace

QuadraticForm ideal_to_form(const QuadField& k, const IdealHNF& ideal) {
  require_imaginary(k);
  if (k.is_rationals()) return {1, 1, 1};
  // primitive part A Z + (B + omega) Z with omega = (t + sqrt D)/2
  const Int a = ideal.n00 / ideal.n11;
  const Int big_b = ideal.n01 / ideal.n11;
  const Int b = -(2 * big_b + k.omega_trace());
  const Int c = (b * b - k.disc()) / (4 * a);
  return {a, b, c};
}

IdealHNF form_to_ideal(const QuadField& k, const QuadraticForm& f) {
  require_imaginary(k);
  if (k.is_rationals()) return unit_ideal();
  const Int twice = -f.b - k.omega_trace();
  return {f.a, mod(twice / 2, f.a), 1};
}

std::size_t IdealClassGroup::inverse(std::size_t c) const {
  for (std::size_t j = 0; j < h; ++j) {
    if (table[c][j] == identity()) return j;
  }
  throw Error(Errc::invalid_argument, "class has no inverse");
}

IdealClassGroup class_group(const QuadField& k) {
  require_imaginary(k);
  IdealClassGroup g;
  if (k.is_rationals()) {
    g.disc = 1;
    g.h = 1;
    g.forms = {QuadraticForm{1, 1, 1}};
    g.representatives = {unit_ideal()};
    g.table = {{0}};
    return g;
  }
  const Int disc = k.disc();
  g.disc = disc;
  const Int abs_d = -disc;
  for (Int a = 1; 3 * a * a <= abs_d; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      if (mod(b - disc, 2) != 0) continue;
      const Int num = b * b - disc;
      if (!divides(4 * a, num)) continue;
      const Int c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      Int gg;
      mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), c.get_mpz_t());
      if (gg != 1) continue;
      g.forms.push_back({a, b, c});
    }
  }
  g.h = g.forms.size();
  for (const QuadraticForm& f : g.forms) g.representatives.push_back(form_to_ideal(k, f));
  g.table.assign(g.h, std::vector<std::size_t>(g.h, 0));
  for (std::size_t i = 0; i < g.h; ++i) {
    for (std::size_t j = 0; j < g.h; ++j) {
      const QuadraticForm prod = compose(g.forms[i], g.forms[j]);
      const auto it = std::find(g.forms.begin(), g.forms.end(), prod);
      if (it == g.forms.end()) throw Error(Errc::invalid_argument, "composition left the reduced set");
      g.table[i][j] = static_cast<std::size_t>(it - g.forms.begin());
    }
  }
  return g;
}

std::size_t ideal_class_of(const QuadField& k, const IdealHNF& ideal, const IdealClassGroup& group) {
  if (k.is_rationals()) return 0;
  const QuadraticForm f = reduce(ideal_to_form(k, ideal));
  const auto it = std::find(group.forms.begin(), group.forms.end(), f);
  if (it == group.forms.end()) throw Error(Errc::invalid_argument, "ideal from a different field");
  return static_cast<std::size_t>(it - group.forms.begin());
}

PrimeIdeal smallest_prime_in_class(const QuadField& k, const IdealClassGroup& group, std::size_t c,
                                   std::span<const PrimeIdeal> avoid, std::uint64_t bound,
                                   bool skip_primes_over_two) {
  if (bound == 0) throw Error(Errc::invalid_argument, "bound must be positive");
  if (c >= group.h) throw Error(Errc::invalid_argument, "class index out of range");
  for (const PrimeIdeal& pr : primes_up_to_norm(k, bound)) {
    if (skip_primes_over_two && pr.p == 2) continue;
    if (std::find(avoid.begin(), avoid.end(), pr) != avoid.end()) continue;
    if (ideal_class_of(k, pr.hnf, group) == c) return pr;
  }
  throw Error(Errc::not_found, "no prime of norm <= " + std::to_string(bound) + " in class " + std::to_string(c));
}

}  // namespace sfrey
