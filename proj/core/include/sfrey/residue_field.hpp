#pragma once

#include <cstdint>

#include "sfrey/ideal.hpp"

namespace sfrey {

/// u + v*t in F_p or F_p[t]/(t^2 - tr*t - nm); v == 0 in degree 1.
struct ResidueElem {
  std::uint64_t u = 0;
  std::uint64_t v = 0;

  friend bool operator==(const ResidueElem&, const ResidueElem&) = default;
};

/// The residue field O_K / P. The class of omega is t in degree 2 and the
/// stored root of the minimal polynomial in degree 1.
class ResidueField {
 public:
  /// Characteristic must be below 2^62.
  ResidueField(const QuadField& k, const PrimeIdeal& prime);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t size() const { return degree_ == 1 ? p_ : p_ * p_; }
  /// Modulus t^2 + c1*t + c0 as (c0, c1), meaningful in degree 2.
  std::pair<std::uint64_t, std::uint64_t> modulus() const;

  ResidueElem zero() const { return {}; }
  ResidueElem one() const { return {1, 0}; }
  ResidueElem from_u64(std::uint64_t x) const { return {x % p_, 0}; }
  ResidueElem reduce(const AlgInt& x) const;
  /// The representative u + v*omega in O_K.
  AlgInt lift(const QuadField& k, const ResidueElem& x) const;

  ResidueElem add(const ResidueElem& x, const ResidueElem& y) const;
  ResidueElem sub(const ResidueElem& x, const ResidueElem& y) const;
  ResidueElem neg(const ResidueElem& x) const;
  ResidueElem mul(const ResidueElem& x, const ResidueElem& y) const;
  ResidueElem pow(ResidueElem x, std::uint64_t e) const;
  ResidueElem inv(const ResidueElem& x) const;
  bool is_zero(const ResidueElem& x) const { return x.u == 0 && x.v == 0; }

  /// Dense index in [0, size()) for table-driven enumeration.
  std::uint64_t index(const ResidueElem& x) const { return x.u + x.v * p_; }
  ResidueElem element(std::uint64_t index) const { return {index % p_, degree_ == 1 ? 0 : index / p_}; }

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t addmod(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t p_;
  int degree_;
  std::uint64_t omega_image_ = 0;
  std::uint64_t tr_ = 0;
  std::uint64_t nm_ = 0;
};

ResidueElem residue_reduce(const QuadField& k, const AlgInt& x, const PrimeIdeal& prime);

}  // namespace sfrey
