#include "sfrey/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "sfrey/errors.hpp"

namespace sfrey {

bool ExceptionalSet::contains(const PrimeIdeal& prime) const {
  return std::find(finite_primes.begin(), finite_primes.end(), prime) != finite_primes.end();
}

std::vector<PrimeIdeal> prime_divisors(const QuadField& k, const AlgInt& x) {
  if (x.is_zero()) throw Error(Errc::invalid_argument, "zero has no finite factorization");
  const Int n = k.is_rationals() ? Int(abs(x.a())) : Int(abs(k.norm(x)));
  std::vector<PrimeIdeal> out;
  if (n == 1) return out;
  for (const auto& [p, e] : factor_integer(n)) {
    for (const auto& [prime, ram] : factor_rational_prime(k, p)) {
      if (valuation(k, x, prime) > 0) out.push_back(prime);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExceptionalSet build_SF(const QuadField& k, const BinaryCubic& f, std::uint64_t class_bound) {
  const AlgInt disc = discriminant(f);
  if (disc.is_zero()) throw Error(Errc::singular, "form has zero discriminant");
  ExceptionalSet s;
  s.finite_primes = prime_divisors(k, AlgInt(2) * disc);
  s.real_places = k.real_places();
  if (!k.is_rationals()) {
    const IdealClassGroup group = class_group(k);
    for (std::size_t c = 1; c < group.h; ++c) {
      PrimeIdeal m = smallest_prime_in_class(k, group, c, {}, class_bound, true);
      s.hk_members.push_back(HkMember{c, m});
      s.finite_primes.push_back(m);
    }
  }
  std::sort(s.finite_primes.begin(), s.finite_primes.end());
  s.finite_primes.erase(std::unique(s.finite_primes.begin(), s.finite_primes.end()), s.finite_primes.end());
  return s;
}

std::vector<PrimeIdeal> theorem_hypothesis(const QuadField& k, const BinaryCubic& f) {
  const AlgInt disc = discriminant(f);
  if (disc.is_zero()) throw Error(Errc::singular, "form has zero discriminant");
  std::vector<PrimeIdeal> out;
  if (f.a[0].is_zero()) return out;
  for (const PrimeIdeal& q : prime_divisors(k, disc)) {
    if (q.p == 2) continue;
    if (valuation(k, disc, q) == 1 && valuation(k, f.a[0], q) == 0) out.push_back(q);
  }
  return out;
}

Pair unit_orbit_representative(const QuadField& k, const AlgInt& x, const AlgInt& y) {
  Pair best{x, y};
  for (const AlgInt& u : k.units()) {
    Pair cand{u * x, u * y};
    if (cand > best) best = std::move(cand);
  }
  return best;
}

Int pair_height(const AlgInt& x, const AlgInt& y) {
  Int h = abs(x.a());
  for (const Int* c : {&x.b(), &y.a(), &y.b()}) {
    if (abs(*c) > h) h = abs(*c);
  }
  return h;
}

namespace {

std::vector<AlgInt> box(const QuadField& k, long h, bool perimeter_only) {
  std::vector<AlgInt> out;
  const long bmax = k.is_rationals() ? 0 : h;
  for (long a = -h; a <= h; ++a) {
    for (long b = -bmax; b <= bmax; ++b) {
      if (perimeter_only && std::abs(a) != h && std::abs(b) != h) continue;
      out.push_back(k.elem(a, b));
    }
  }
  return out;
}

long height_of(const AlgInt& x) {
  Int h = abs(x.a());
  if (abs(x.b()) > h) h = abs(x.b());
  return to_i64(h);
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < n; i = next++) fn(i, w);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<Pair> tm_search_shell(const QuadField& k, const BinaryCubic& f, const SupportSet& support, long h,
                                  unsigned workers) {
  if (h < 1) throw Error(Errc::invalid_argument, "height must be at least 1");
  const std::vector<AlgInt> full = box(k, h, false);
  const std::vector<AlgInt> rim = box(k, h, true);
  workers = std::max(1u, workers);
  std::vector<std::vector<Pair>> found(workers);
  parallel_for(full.size(), workers, [&](std::size_t i, unsigned w) {
    const AlgInt& x = full[i];
    const std::vector<AlgInt>& ys = height_of(x) == h ? full : rim;
    for (const AlgInt& y : ys) {
      const AlgInt v = evaluate(f, x, y);
      if (v.is_zero() || !support.supports(v)) continue;
      found[w].push_back(unit_orbit_representative(k, x, y));
    }
  });
  std::vector<Pair> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TMSolution make_tm_solution(const QuadField& k, const BinaryCubic& f, const ExceptionalSet& s, const Pair& pair) {
  TMSolution sol{pair.first, pair.second, evaluate(f, pair.first, pair.second), {}};
  for (const PrimeIdeal& prime : prime_divisors(k, sol.value)) {
    if (s.contains(prime)) sol.support.push_back(prime);
  }
  return sol;
}

void sort_solutions(std::vector<TMSolution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const TMSolution& u, const TMSolution& v) {
    const Int hu = pair_height(u.x, u.y);
    const Int hv = pair_height(v.x, v.y);
    if (hu != hv) return hu < hv;
    return std::tie(u.x, u.y) < std::tie(v.x, v.y);
  });
}

std::vector<TMSolution> tm_search(const QuadField& k, const BinaryCubic& f, const ExceptionalSet& s, long height,
                                  const TMSearchOptions& options) {
  if (height < 1) throw Error(Errc::invalid_argument, "height must be at least 1");
  const SupportSet support(k, s.finite_primes);
  std::set<Pair> reps;
  for (long h = std::max(1L, options.first_height); h <= height; ++h) {
    for (Pair& p : tm_search_shell(k, f, support, h, options.workers)) reps.insert(std::move(p));
    if (options.progress) options.progress(h, reps.size());
    if (options.limit != 0 && reps.size() >= options.limit) break;
  }
  std::vector<TMSolution> out;
  out.reserve(reps.size());
  for (const Pair& p : reps) out.push_back(make_tm_solution(k, f, s, p));
  sort_solutions(out);
  return out;
}

AuditReport audit_solution(const QuadField& k, const BinaryCubic& f, const AlgInt& x0, const AlgInt& y0,
                           const AlgInt& z0, long l, const PrimeIdeal& q, const ExceptionalSet& s) {
  if (l < 5 || !is_prime(Int(l))) throw Error(Errc::invalid_argument, "l must be a prime >= 5");
  if (x0.is_zero() && y0.is_zero()) throw Error(Errc::invalid_argument, "(x0, y0) = (0, 0)");
  const AlgInt disc = discriminant(f);
  if (disc.is_zero()) throw Error(Errc::invalid_argument, "form has zero discriminant");
  const std::vector<PrimeIdeal> hyp = theorem_hypothesis(k, f);
  if (std::find(hyp.begin(), hyp.end(), q) == hyp.end()) {
    throw Error(Errc::invalid_argument, "q does not satisfy v_q(disc F) = 1 and q not dividing 2 a0");
  }

  AuditReport r;
  const AlgInt value = evaluate(f, x0, y0);
  r.equation_holds = value == pow(z0, static_cast<unsigned long>(l));

  std::vector<AlgInt> gens;
  for (const AlgInt* g : {&x0, &y0, &z0}) {
    if (!g->is_zero()) gens.push_back(*g);
  }
  r.gcd_support_ok = is_supported_on(k, ideal_from_generators(k, gens), s.finite_primes);
  r.q_not_dividing_z = !z0.is_zero() && valuation(k, z0, q) == 0;

  if (!value.is_zero()) {
    const CurveInvariants inv = frey_invariants(k, f, x0, y0);
    r.j_valuation = valuation(k, *inv.j, q);
    const AlgInt h = evaluate(hessian(f), x0, y0);
    if (!h.is_zero()) r.h_valuation = static_cast<long>(valuation(k, h, q));
  }
  r.j_valuation_ok = r.j_valuation == -1L;

  if (!value.is_zero()) {
    const WeierstrassCurve e = frey_curve(k, f, x0, y0);
    const AlgInt& base = (r.equation_holds && !z0.is_zero()) ? z0 : value;
    for (const PrimeIdeal& prime : prime_divisors(k, base)) {
      if (s.contains(prime)) continue;
      const bool x_in = x0.is_zero() || valuation(k, x0, prime) > 0;
      const bool y_in = y0.is_zero() || valuation(k, y0, prime) > 0;
      if (x_in && y_in) continue;
      const ReductionType t = reduction_type(k, e, prime);
      if (t != ReductionType::good && t != ReductionType::multiplicative) r.non_semistable_primes.push_back(prime);
    }
    r.semistable_outside = r.non_semistable_primes.empty();
  }

  r.finite_flat_ok = true;
  const AlgInt delta = AlgInt(16) * disc * value * value;
  for (const auto& [prime, e] : factor_rational_prime(k, Int(l))) {
    FiniteFlatEntry entry{prime, std::nullopt, false};
    if (!delta.is_zero()) {
      entry.v_delta = static_cast<long>(valuation(k, delta, prime));
      entry.pass = *entry.v_delta % l == 0;
    }
    r.finite_flat_ok = r.finite_flat_ok && entry.pass;
    r.finite_flat.push_back(entry);
  }
  r.fake_curve_excluded = l > 24;

  const std::pair<bool, const char*> flags[] = {
      {r.equation_holds, "equation_holds"},         {r.gcd_support_ok, "gcd_support_ok"},
      {r.q_not_dividing_z, "q_not_dividing_z"},     {r.j_valuation_ok, "j_valuation"},
      {r.semistable_outside, "semistable_outside"}, {r.finite_flat_ok, "finite_flat_congruences"},
      {r.fake_curve_excluded, "fake_curve_excluded"}};
  for (const auto& [ok, name] : flags) {
    if (!ok) r.violations.emplace_back(name);
  }
  return r;
}

std::optional<AlgInt> principal_generator(const QuadField& k, const IdealHNF& ideal) {
  if (k.is_rationals()) return AlgInt(ideal.n00);
  if (!k.is_imaginary()) throw Error(Errc::unsupported_field, "principal generators need an imaginary field");
  // Lagrange reduction of the ideal lattice under the norm form; the ideal
  // is principal iff its shortest vector has norm N(I).
  auto [e1, e2] = ideal_basis(k, ideal);
  Int n1 = k.norm(e1);
  Int n2 = k.norm(e2);
  if (n2 < n1) {
    std::swap(e1, e2);
    std::swap(n1, n2);
  }
  for (;;) {
    const Int b = k.trace(e1 * k.conj(e2));
    Int mu;
    mpz_fdiv_q(mu.get_mpz_t(), Int(b + n1).get_mpz_t(), Int(2 * n1).get_mpz_t());
    if (mu != 0) {
      e2 -= AlgInt(mu) * e1;
      n2 = k.norm(e2);
    }
    if (n2 >= n1) break;
    std::swap(e1, e2);
    std::swap(n1, n2);
  }
  if (n1 != ideal.norm()) return std::nullopt;
  AlgInt best = e1;
  for (const AlgInt& u : k.units()) best = std::max(best, u * e1);
  return best;
}

NormalizedPair normalize_pair(const QuadField& k, const BinaryCubic& f, const KFraction& x1, const KFraction& y1,
                              const IdealClassGroup& group, const ExceptionalSet& s) {
  if (x1.num.is_zero() && y1.num.is_zero()) throw Error(Errc::invalid_argument, "(x1, y1) = (0, 0)");
  if (x1.den <= 0 || y1.den <= 0) throw Error(Errc::invalid_argument, "denominators must be positive");
  Int common = lcm(x1.den, y1.den);
  const AlgInt x = x1.num * AlgInt(Int(common / x1.den));
  const AlgInt y = y1.num * AlgInt(Int(common / y1.den));

  std::vector<AlgInt> gens;
  if (!x.is_zero()) gens.push_back(x);
  if (!y.is_zero()) gens.push_back(y);
  const IdealHNF g = ideal_from_generators(k, gens);

  NormalizedPair out;
  IdealHNF target = unit_ideal();
  if (!k.is_rationals()) {
    out.gcd_class = ideal_class_of(k, g, group);
    if (out.gcd_class != group.identity()) {
      auto it = std::find_if(s.hk_members.begin(), s.hk_members.end(),
                             [&](const HkMember& m) { return m.class_index == out.gcd_class; });
      if (it == s.hk_members.end()) throw Error(Errc::not_found, "no H_K member for the class of gcd(x, y)");
      target = it->prime.hnf;
    }
  }
  const IdealHNF joined = ideal_mul(k, g, ideal_conj(k, target));
  const std::optional<AlgInt> beta = principal_generator(k, joined);
  if (!beta) throw Error(Errc::integrality_violation, "gcd times conj(m) is not principal");
  const AlgInt scale(target.norm());
  const auto x2 = k.divide(scale * x, *beta);
  const auto y2 = k.divide(scale * y, *beta);
  if (!x2 || !y2) throw Error(Errc::integrality_violation, "scaled pair is not integral");
  out.x = *x2;
  out.y = *y2;
  std::vector<AlgInt> new_gens;
  if (!out.x.is_zero()) new_gens.push_back(out.x);
  if (!out.y.is_zero()) new_gens.push_back(out.y);
  out.gcd = ideal_from_generators(k, new_gens);
  if (out.gcd != target) throw Error(Errc::integrality_violation, "normalized gcd differs from the target ideal");

  if (!discriminant(f).is_zero() && !evaluate(f, x, y).is_zero()) {
    if (frey_invariants(k, f, x, y).j != frey_invariants(k, f, out.x, out.y).j) {
      throw Error(Errc::integrality_violation, "normalization changed the j-invariant");
    }
  }
  return out;
}

unsigned conductor_exponent_bound(const QuadField& k, const PrimeIdeal& prime) {
  return 2 + 3 * valuation(k, AlgInt(3), prime) + 6 * valuation(k, AlgInt(2), prime);
}

std::vector<IdealHNF> serre_level_candidates(const QuadField& k, const ExceptionalSet& s, std::uint64_t cap) {
  std::vector<unsigned> bounds;
  Int count = 1;
  for (const PrimeIdeal& prime : s.finite_primes) {
    bounds.push_back(conductor_exponent_bound(k, prime));
    count *= bounds.back() + 1;
  }
  if (count > Int(std::to_string(cap))) {
    throw Error(Errc::set_too_large, to_string(count) + " candidate levels exceed the cap of " + std::to_string(cap));
  }
  std::vector<IdealHNF> out{unit_ideal()};
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    std::vector<IdealHNF> next;
    for (const IdealHNF& base : out) {
      IdealHNF cur = base;
      next.push_back(cur);
      for (unsigned e = 1; e <= bounds[i]; ++e) {
        cur = ideal_mul(k, cur, s.finite_primes[i].hnf);
        next.push_back(cur);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const IdealHNF& u, const IdealHNF& v) {
    const Int nu = u.norm();
    const Int nv = v.norm();
    if (nu != nv) return nu < nv;
    return u < v;
  });
  return out;
}

std::optional<DistinguishingResult> distinguishing_prime_in_range(const QuadField& k, const WeierstrassCurve& e1,
                                                                  const WeierstrassCurve& e2, const Int& p,
                                                                  const std::vector<PrimeIdeal>& avoid,
                                                                  std::uint64_t lo, std::uint64_t hi,
                                                                  unsigned workers) {
  if (p < 2) throw Error(Errc::invalid_argument, "p must be at least 2");
  if (hi > kPointCountCap) throw Error(Errc::cap_exceeded, "norm bound exceeds the point counting cap");
  const AlgInt d1 = invariants_standard(k, e1).delta;
  const AlgInt d2 = invariants_standard(k, e2).delta;
  if (d1.is_zero() || d2.is_zero()) throw Error(Errc::singular, "curve is singular");

  std::vector<PrimeIdeal> primes;
  for (PrimeIdeal& prime : primes_up_to_norm(k, hi)) {
    if (prime.norm() <= lo) continue;
    if (std::find(avoid.begin(), avoid.end(), prime) != avoid.end()) continue;
    if (valuation(k, d1, prime) > 0 || valuation(k, d2, prime) > 0) continue;
    primes.push_back(std::move(prime));
  }

  const std::size_t chunk = 16 * std::max(1u, workers);
  for (std::size_t start = 0; start < primes.size(); start += chunk) {
    const std::size_t n = std::min(chunk, primes.size() - start);
    std::vector<std::optional<DistinguishingResult>> hits(n);
    parallel_for(n, workers, [&](std::size_t i, unsigned) {
      const PrimeIdeal& prime = primes[start + i];
      Int t1 = trace_a(k, e1, prime);
      Int t2 = trace_a(k, e2, prime);
      if (mod(t1 - t2, p) != 0) hits[i] = DistinguishingResult{prime, t1, t2};
    });
    for (auto& h : hits) {
      if (h) return h;
    }
  }
  return std::nullopt;
}

DistinguishingResult distinguishing_prime(const QuadField& k, const WeierstrassCurve& e1, const WeierstrassCurve& e2,
                                          const Int& p, const std::vector<PrimeIdeal>& avoid,
                                          std::uint64_t norm_bound, unsigned workers) {
  auto hit = distinguishing_prime_in_range(k, e1, e2, p, avoid, 0, norm_bound, workers);
  if (!hit) throw Error(Errc::not_found, "no distinguishing prime of norm <= " + std::to_string(norm_bound));
  return *hit;
}

}  // namespace sfrey
