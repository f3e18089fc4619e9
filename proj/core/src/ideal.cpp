#include "sfrey/ideal.hpp"

#include <algorithm>

#include "sfrey/errors.hpp"

namespace sfrey {

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

struct Xgcd {
  Int g, s, t;
};

Xgcd xgcd(const Int& a, const Int& b) {
  Xgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Incremental 2x2 Hermite reduction of the Z-span of coordinate vectors.
class LatticeBuilder {
 public:
  void add(const Int& va, const Int& vb) {
    if (vb == 0) {
      a_ = gcd(a_, va);
      return;
    }
    if (b_ == 0) {
      a_ = gcd(a_, c_);
      c_ = va;
      b_ = vb;
      return;
    }
    const Xgcd e = xgcd(b_, vb);
    const Int zero_b_a = (vb / e.g) * c_ - (b_ / e.g) * va;
    a_ = gcd(a_, zero_b_a);
    c_ = e.s * c_ + e.t * va;
    b_ = e.g;
  }

  IdealHNF finish() const {
    if (a_ == 0 || b_ == 0) throw Error(Errc::invalid_argument, "lattice is not of full rank");
    IdealHNF r;
    r.n00 = abs(a_);
    r.n11 = abs(b_);
    r.n01 = mod(b_ < 0 ? Int(-c_) : c_, r.n00);
    return r;
  }

 private:
  Int a_ = 0;
  Int c_ = 0;
  Int b_ = 0;
};

}  // namespace

std::strong_ordering operator<=>(const IdealHNF& x, const IdealHNF& y) {
  for (auto [u, v] : {std::pair{&x.n00, &y.n00}, std::pair{&x.n01, &y.n01}, std::pair{&x.n11, &y.n11}}) {
    if (*u != *v) return *u < *v ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IdealHNF unit_ideal() { return {}; }

IdealHNF ideal_from_generators(const QuadField& k, std::span<const AlgInt> gens) {
  if (k.is_rationals()) {
    Int g = 0;
    for (const AlgInt& x : gens) g = gcd(g, x.a());
    if (g == 0) throw Error(Errc::invalid_argument, "zero ideal");
    return {g, 0, 1};
  }
  LatticeBuilder lb;
  bool nonzero = false;
  const AlgInt w = k.omega();
  for (const AlgInt& x : gens) {
    if (x.is_zero()) continue;
    nonzero = true;
    const AlgInt xw = x * w;
    lb.add(x.a(), x.b());
    lb.add(xw.a(), xw.b());
  }
  if (!nonzero) throw Error(Errc::invalid_argument, "zero ideal");
  return lb.finish();
}

IdealHNF principal_ideal(const QuadField& k, const AlgInt& x) {
  return ideal_from_generators(k, std::span<const AlgInt>(&x, 1));
}

IdealHNF make_ideal(const QuadField& k, const Int& n00, const Int& n01, const Int& n11) {
  if (n00 <= 0 || n11 <= 0 || n01 < 0 || n01 >= n00) {
    throw Error(Errc::invalid_argument, "not a Hermite normal form");
  }
  if (k.is_rationals() && (n11 != 1 || n01 != 0)) throw Error(Errc::invalid_argument, "ideal of Z must be [n, 0, 1]");
  IdealHNF h{n00, n01, n11};
  const std::array<AlgInt, 2> basis = ideal_basis(k, h);
  if (!k.is_rationals()) {
    // closed under multiplication by omega
    for (const AlgInt& e : basis) {
      if (!ideal_contains(h, e * k.omega())) throw Error(Errc::invalid_argument, "lattice is not an ideal");
    }
  }
  return h;
}

std::array<AlgInt, 2> ideal_basis(const QuadField& k, const IdealHNF& ideal) {
  if (k.is_rationals()) return {k.elem(ideal.n00), k.elem(0)};
  return {k.elem(ideal.n00), k.elem(ideal.n01, ideal.n11)};
}

bool ideal_contains(const IdealHNF& ideal, const AlgInt& x) {
  if (mpz_divisible_p(x.b().get_mpz_t(), ideal.n11.get_mpz_t()) == 0) return false;
  const Int k = x.b() / ideal.n11;
  const Int rest = x.a() - k * ideal.n01;
  return mpz_divisible_p(rest.get_mpz_t(), ideal.n00.get_mpz_t()) != 0;
}

IdealHNF ideal_mul(const QuadField& k, const IdealHNF& x, const IdealHNF& y) {
  if (k.is_rationals()) return {x.n00 * y.n00, 0, 1};
  const auto bx = ideal_basis(k, x);
  const auto by = ideal_basis(k, y);
  LatticeBuilder lb;
  for (const AlgInt& u : bx) {
    for (const AlgInt& v : by) {
      const AlgInt p = u * v;
      lb.add(p.a(), p.b());
    }
  }
  return lb.finish();
}

IdealHNF ideal_pow(const QuadField& k, const IdealHNF& x, unsigned e) {
  IdealHNF r = unit_ideal();
  for (unsigned i = 0; i < e; ++i) r = ideal_mul(k, r, x);
  return r;
}

IdealHNF ideal_add(const QuadField& k, const IdealHNF& x, const IdealHNF& y) {
  const auto bx = ideal_basis(k, x);
  const auto by = ideal_basis(k, y);
  const std::array<AlgInt, 4> gens{bx[0], bx[1], by[0], by[1]};
  return ideal_from_generators(k, gens);
}

IdealHNF ideal_conj(const QuadField& k, const IdealHNF& x) {
  if (k.is_rationals()) return x;
  const auto b = ideal_basis(k, x);
  const std::array<AlgInt, 2> gens{k.conj(b[0]), k.conj(b[1])};
  return ideal_from_generators(k, gens);
}

std::strong_ordering operator<=>(const PrimeIdeal& x, const PrimeIdeal& y) {
  const Int nx = x.norm();
  const Int ny = y.norm();
  if (nx != ny) return nx < ny ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.p != y.p) return x.p < y.p ? std::strong_ordering::less : std::strong_ordering::greater;
  return x.hnf <=> y.hnf;
}

namespace {

// Roots of X^2 - tX - n modulo p, ascending and deduplicated.
std::vector<Int> omega_roots_mod(const QuadField& k, const Int& p) {
  const Int t = k.omega_trace();
  const Int n = from_i64(k.omega_norm_term());
  std::vector<Int> roots;
  if (p == 2) {
    for (int r = 0; r < 2; ++r) {
      if (mod(Int(r * r) - t * r - n, p) == 0) roots.emplace_back(r);
    }
    return roots;
  }
  const Int disc = t * t + 4 * n;
  const std::optional<Int> s = sqrt_mod(disc, p);
  if (!s) return roots;
  Int inv2;
  mpz_invert(inv2.get_mpz_t(), Int(2).get_mpz_t(), p.get_mpz_t());
  roots.push_back(mod((t + *s) * inv2, p));
  roots.push_back(mod((t - *s) * inv2, p));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

PrimeIdeal degree_one_prime(const Int& p, const Int& root, int e) {
  PrimeIdeal pr;
  pr.p = p;
  pr.residue_degree = 1;
  pr.ramification = e;
  pr.root = root;
  pr.hnf = {p, mod(-root, p), 1};
  return pr;
}

}  // namespace

std::vector<std::pair<PrimeIdeal, unsigned>> factor_rational_prime(const QuadField& k, const Int& p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, p.get_str() + " is not prime");
  if (k.is_rationals()) {
    PrimeIdeal pr;
    pr.p = p;
    pr.hnf = {p, 0, 1};
    return {{pr, 1U}};
  }
  const std::vector<Int> roots = omega_roots_mod(k, p);
  const bool ramified = mpz_divisible_p(k.disc().get_mpz_t(), p.get_mpz_t()) != 0;
  std::vector<std::pair<PrimeIdeal, unsigned>> out;
  if (ramified) {
    out.emplace_back(degree_one_prime(p, roots.at(0), 2), 2U);
  } else if (roots.empty()) {
    PrimeIdeal pr;
    pr.p = p;
    pr.residue_degree = 2;
    pr.hnf = {p, 0, p};
    out.emplace_back(pr, 1U);
  } else {
    for (const Int& r : roots) out.emplace_back(degree_one_prime(p, r, 1), 1U);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return out;
}

PrimeIdeal prime_from_hnf(const QuadField& k, const IdealHNF& hnf) {
  const Int n = hnf.norm();
  Int p = n;
  if (!is_prime(p)) {
    Int root;
    if (!is_square(n, &root) || !is_prime(root)) {
      throw Error(Errc::invalid_argument, "norm " + n.get_str() + " is not a prime power of degree <= 2");
    }
    p = root;
  }
  for (auto& [pr, e] : factor_rational_prime(k, p)) {
    if (pr.hnf == hnf) return pr;
  }
  throw Error(Errc::invalid_argument, "ideal is not prime");
}

std::vector<PrimeIdeal> primes_up_to_norm(const QuadField& k, std::uint64_t bound) {
  std::vector<PrimeIdeal> out;
  for (std::uint64_t p : primes_up_to(bound)) {
    for (auto& [pr, e] : factor_rational_prime(k, Int(static_cast<unsigned long>(p)))) {
      if (pr.norm() <= Int(static_cast<unsigned long>(bound))) out.push_back(pr);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime) {
  if (x.is_zero()) throw Error(Errc::invalid_argument, "valuation of zero");
  const Int& p = prime.p;
  if (k.is_rationals()) return valuation(x.a(), p);
  Int a = x.a();
  Int b = x.b();
  unsigned content = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0 && mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
    ++content;
  }
  if (prime.residue_degree == 2) return content;
  const bool in_prime = mod(a + b * prime.root, p) == 0;
  if (prime.ramified()) return 2 * content + (in_prime ? 1U : 0U);
  if (!in_prime) return content;
  // a primitive element lies in at most one of the two split primes
  return content + valuation(k.norm(k.elem(a, b)), p);
}

unsigned valuation(const QuadField& k, const IdealHNF& ideal, const PrimeIdeal& prime) {
  const auto basis = ideal_basis(k, ideal);
  unsigned v = valuation(k, basis[0], prime);
  if (!basis[1].is_zero()) v = std::min(v, valuation(k, basis[1], prime));
  return v;
}

std::vector<std::pair<PrimeIdeal, unsigned>> factor_ideal(const QuadField& k, const IdealHNF& ideal) {
  std::vector<std::pair<PrimeIdeal, unsigned>> out;
  if (ideal.is_unit()) return out;
  for (const auto& [p, e] : factor_integer(ideal.norm())) {
    for (auto& [pr, ram] : factor_rational_prime(k, p)) {
      const unsigned v = valuation(k, ideal, pr);
      if (v > 0) out.emplace_back(pr, v);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

SupportSet::SupportSet(const QuadField& k, std::span<const PrimeIdeal> primes) : field_(k) {
  for (const PrimeIdeal& s : primes) {
    if (std::any_of(fibres_.begin(), fibres_.end(), [&](const Fibre& f) { return f.p == s.p; })) continue;
    Fibre fibre{s.p, {}};
    for (auto& [pr, e] : factor_rational_prime(k, s.p)) {
      if (std::find(primes.begin(), primes.end(), pr) == primes.end()) fibre.excluded.push_back(pr);
    }
    fibres_.push_back(std::move(fibre));
  }
}

bool SupportSet::supports(const AlgInt& x) const {
  if (x.is_zero()) throw Error(Errc::invalid_argument, "support of zero");
  Int rest = abs(field_.norm(x));
  for (const Fibre& f : fibres_) {
    if (rest == 1) break;
    if (mpz_divisible_p(rest.get_mpz_t(), f.p.get_mpz_t()) == 0) continue;
    for (const PrimeIdeal& pr : f.excluded) {
      if (valuation(field_, x, pr) > 0) return false;
    }
    remove_factor(rest, f.p);
  }
  return rest == 1;
}

bool SupportSet::supports(const IdealHNF& ideal) const {
  Int rest = ideal.norm();
  for (const Fibre& f : fibres_) {
    if (rest == 1) break;
    if (mpz_divisible_p(rest.get_mpz_t(), f.p.get_mpz_t()) == 0) continue;
    for (const PrimeIdeal& pr : f.excluded) {
      if (valuation(field_, ideal, pr) > 0) return false;
    }
    remove_factor(rest, f.p);
  }
  return rest == 1;
}

bool is_supported_on(const QuadField& k, const IdealHNF& ideal, std::span<const PrimeIdeal> primes) {
  return SupportSet(k, primes).supports(ideal);
}

bool is_supported_on(const QuadField& k, const AlgInt& x, std::span<const PrimeIdeal> primes) {
  return SupportSet(k, primes).supports(x);
}

}  // namespace sfrey
