#include "support/oracles.hpp"

#include <numeric>

namespace sfrey::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

AlgInt random_element(const QuadField& k, Rng& rng, long r) {
  const long a = uniform(rng, -r, r);
  const long b = k.is_rationals() ? 0 : uniform(rng, -r, r);
  return k.elem(a, b);
}

BinaryCubic random_cubic(const QuadField& k, Rng& rng, long r) {
  BinaryCubic f;
  for (auto& c : f.a) c = random_element(k, rng, r);
  return f;
}

BinaryCubic random_nondegenerate_cubic(const QuadField& k, Rng& rng, long r) {
  for (;;) {
    BinaryCubic f = random_cubic(k, rng, r);
    if (!discriminant(f).is_zero()) return f;
  }
}

BinaryForm symbolic_hessian(const BinaryCubic& f) {
  const BinaryForm F = f.as_form();
  const BinaryForm fxx = F.d_dx().d_dx();
  const BinaryForm fyy = F.d_dy().d_dy();
  const BinaryForm fxy = F.d_dx().d_dy();
  const BinaryForm four_h = fxx * fyy - fxy * fxy;
  std::vector<AlgInt> cs;
  for (const AlgInt& c : four_h.coeffs()) cs.push_back(divexact(c, 4));
  return BinaryForm(cs);
}

BinaryForm symbolic_G(const BinaryCubic& f) {
  const BinaryForm F = f.as_form();
  const BinaryForm H = symbolic_hessian(f);
  return F.d_dx() * H.d_dy() - F.d_dy() * H.d_dx();
}

unsigned valuation_by_powers(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime) {
  unsigned e = 0;
  IdealHNF power = prime.hnf;
  while (ideal_contains(power, x)) {
    ++e;
    power = ideal_mul(k, power, prime.hnf);
  }
  return e;
}

std::size_t reduced_form_count(long D) {
  std::size_t count = 0;
  const long abs_d = -D;
  for (long a = 1; 3 * a * a <= abs_d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::uint64_t brute_point_count(std::uint64_t p, long a2, long a4, long a6) {
  const long m = static_cast<long>(p);
  auto red = [m](long v) { return ((v % m) + m) % m; };
  std::uint64_t count = 1;
  for (long x = 0; x < m; ++x) {
    const long rhs = red(red(red(red(x + a2) * x) + a4) * x % m + a6);
    for (long y = 0; y < m; ++y) {
      if (red(y * y) == rhs) ++count;
    }
  }
  return count;
}

bool brute_has_root(const QuadField& k, const BinaryCubic& f, long box) {
  const auto& [a0, a1, a2, a3] = f.a;
  if (a0.is_zero() || a3.is_zero()) return true;
  const AlgInt c1 = a0 * a2;
  const AlgInt c0 = a0 * a0 * a3;
  const long bmax = k.is_rationals() ? 0 : box;
  for (long u = -box; u <= box; ++u) {
    for (long v = -bmax; v <= bmax; ++v) {
      const AlgInt x = k.elem(u, v);
      if (((x + a1) * x + c1) * x + c0 == AlgInt(0)) return true;
    }
  }
  return false;
}

std::optional<AlgInt> unit_root(const QuadField& k, const AlgInt& eps, long l) {
  for (const AlgInt& u : k.units()) {
    if (pow(u, static_cast<unsigned long>(l)) == eps) return u;
  }
  return std::nullopt;
}

namespace {

bool divides_over(const QuadField& k, const AlgInt& x, long l) {
  for (const auto& [prime, e] : factor_rational_prime(k, Int(l))) {
    if (valuation(k, x, prime) > 0) return true;
  }
  return false;
}

}  // namespace

std::optional<AuditInstance> make_audit_instance(const QuadField& k, Rng& rng) {
  for (int attempt = 0; attempt < 5000; ++attempt) {
    AuditInstance inst;
    inst.field = k;
    BinaryCubic& f = inst.form;
    f.a[0] = uniform(rng, 0, 1) == 0 ? AlgInt(1) : AlgInt(-1);
    for (int i = 1; i < 4; ++i) f.a[i] = random_element(k, rng, 9);
    const AlgInt disc = discriminant(f);
    if (disc.is_zero() || !is_irreducible(f, k)) continue;
    if (divides_over(k, disc, inst.l) || divides_over(k, disc, inst.l_small)) continue;
    const std::vector<PrimeIdeal> hyp = theorem_hypothesis(k, f);
    if (hyp.empty()) continue;
    inst.q = hyp[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(hyp.size()) - 1))];
    inst.s = build_SF(k, f, 10000);

    std::vector<Pair> unit_pairs;
    const long bmax = k.is_rationals() ? 0 : 2;
    for (long xa = -2; xa <= 2; ++xa) {
      for (long xb = -bmax; xb <= bmax; ++xb) {
        for (long ya = -2; ya <= 2; ++ya) {
          for (long yb = -bmax; yb <= bmax; ++yb) {
            const AlgInt x = k.elem(xa, xb);
            const AlgInt y = k.elem(ya, yb);
            const AlgInt v = evaluate(f, x, y);
            if (v.is_zero()) continue;
            const Int n = k.is_rationals() ? Int(abs(v.a())) : Int(abs(k.norm(v)));
            if (n == 1) unit_pairs.push_back({x, y});
          }
        }
      }
    }
    const Pair base = unit_pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(unit_pairs.size()) - 1))];

    std::vector<AlgInt> scalars;
    const SupportSet support(k, inst.s.finite_primes);
    for (long a = -3; a <= 3; ++a) {
      for (long b = -bmax; b <= bmax; ++b) {
        const AlgInt s = k.elem(a, b);
        if (s.is_zero() || !support.supports(s) || valuation(k, s, inst.q) > 0) continue;
        const Int n = k.is_rationals() ? Int(abs(s.a())) : Int(abs(k.norm(s)));
        if (n > 1) scalars.push_back(s);
      }
    }
    if (scalars.empty()) continue;
    const AlgInt s = scalars[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(scalars.size()) - 1))];

    const AlgInt eps = evaluate(f, base.first, base.second);
    const auto eta = unit_root(k, eps, inst.l);
    const auto eta_small = unit_root(k, eps, inst.l_small);
    if (!eta || !eta_small) continue;
    const auto n = static_cast<unsigned long>(inst.l * inst.l_small);
    const AlgInt scale = pow(s, n);
    inst.x0 = scale * base.first;
    inst.y0 = scale * base.second;
    inst.z0 = *eta * pow(s, static_cast<unsigned long>(3 * inst.l_small));
    inst.z0_small = *eta_small * pow(s, static_cast<unsigned long>(3 * inst.l));

    if (k.is_rationals()) {
      inst.q_element = AlgInt(inst.q.p);
    } else {
      IdealHNF power = inst.q.hnf;
      std::optional<AlgInt> gen;
      for (int e = 1; e <= 12 && !gen; ++e) {
        gen = principal_generator(k, power);
        power = ideal_mul(k, power, inst.q.hnf);
      }
      if (!gen) continue;
      inst.q_element = *gen;
    }
    for (std::uint64_t r : primes_up_to(1000)) {
      if (r < 5 || static_cast<long>(r) == inst.l || static_cast<long>(r) == inst.l_small) continue;
      bool touches = false;
      for (const auto& [prime, e] : factor_rational_prime(k, Int(std::to_string(r)))) {
        touches = touches || inst.s.contains(prime);
      }
      if (!touches) {
        inst.off_support = Int(std::to_string(r));
        break;
      }
    }
    return inst;
  }
  return std::nullopt;
}

}  // namespace sfrey::testing
