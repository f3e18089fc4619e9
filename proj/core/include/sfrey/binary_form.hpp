#pragma once

#include <vector>

#include "sfrey/quad_field.hpp"

namespace sfrey {

/// Homogeneous form sum_i c[i] x^(n-i) y^i over O_K.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<AlgInt> coeffs);
  static BinaryForm zero(unsigned degree) { return BinaryForm(std::vector<AlgInt>(degree + 1)); }

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<AlgInt>& coeffs() const { return coeffs_; }
  const AlgInt& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  AlgInt evaluate(const AlgInt& x, const AlgInt& y) const;

  BinaryForm d_dx() const;
  BinaryForm d_dy() const;

  BinaryForm& operator*=(const AlgInt& s);
  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const AlgInt& s, BinaryForm f) { return f *= s; }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<AlgInt> coeffs_;
};

}  // namespace sfrey
