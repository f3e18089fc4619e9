#include "sfrey/residue_field.hpp"

#include "sfrey/errors.hpp"

namespace sfrey {

namespace {

std::uint64_t reduce_u64(const Int& x, std::uint64_t p) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace

ResidueField::ResidueField(const QuadField& k, const PrimeIdeal& prime) : degree_(prime.residue_degree) {
  if (prime.p >= sfrey::pow(Int(2), prime.residue_degree == 1 ? 62 : 31)) {
    throw Error(Errc::cap_exceeded, "residue characteristic too large");
  }
  p_ = static_cast<std::uint64_t>(mpz_get_ui(prime.p.get_mpz_t()));
  if (degree_ == 1) {
    omega_image_ = reduce_u64(prime.root, p_);
  } else {
    tr_ = static_cast<std::uint64_t>(k.omega_trace()) % p_;
    nm_ = reduce_u64(from_i64(k.omega_norm_term()), p_);
  }
}

std::pair<std::uint64_t, std::uint64_t> ResidueField::modulus() const {
  // t^2 - tr t - nm
  return {(p_ - nm_) % p_, (p_ - tr_) % p_};
}

ResidueElem ResidueField::reduce(const AlgInt& x) const {
  const std::uint64_t a = reduce_u64(x.a(), p_);
  const std::uint64_t b = reduce_u64(x.b(), p_);
  if (degree_ == 1) return {addmod(a, mulmod(b, omega_image_)), 0};
  return {a, b};
}

AlgInt ResidueField::lift(const QuadField& k, const ResidueElem& x) const {
  return k.elem(Int(static_cast<unsigned long>(x.u)), Int(static_cast<unsigned long>(x.v)));
}

ResidueElem ResidueField::add(const ResidueElem& x, const ResidueElem& y) const {
  return {addmod(x.u, y.u), addmod(x.v, y.v)};
}

ResidueElem ResidueField::neg(const ResidueElem& x) const {
  return {x.u == 0 ? 0 : p_ - x.u, x.v == 0 ? 0 : p_ - x.v};
}

ResidueElem ResidueField::sub(const ResidueElem& x, const ResidueElem& y) const { return add(x, neg(y)); }

ResidueElem ResidueField::mul(const ResidueElem& x, const ResidueElem& y) const {
  if (degree_ == 1) return {mulmod(x.u, y.u), 0};
  const std::uint64_t vv = mulmod(x.v, y.v);
  const std::uint64_t u = addmod(mulmod(x.u, y.u), mulmod(nm_, vv));
  const std::uint64_t v = addmod(addmod(mulmod(x.u, y.v), mulmod(x.v, y.u)), mulmod(tr_, vv));
  return {u, v};
}

ResidueElem ResidueField::pow(ResidueElem x, std::uint64_t e) const {
  ResidueElem r = one();
  while (e > 0) {
    if ((e & 1U) != 0) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

ResidueElem ResidueField::inv(const ResidueElem& x) const {
  if (is_zero(x)) throw Error(Errc::invalid_argument, "inverse of zero in residue field");
  return pow(x, size() - 2);
}

ResidueElem residue_reduce(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime) {
  return ResidueField(k, prime).reduce(x);
}

}  // namespace sfrey
