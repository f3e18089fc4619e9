#include "sfrey/binary_form.hpp"

#include <algorithm>

#include "sfrey/errors.hpp"

namespace sfrey {

BinaryForm::BinaryForm(std::vector<AlgInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::invalid_argument, "binary form needs at least one coefficient");
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const AlgInt& c) { return c.is_zero(); });
}

AlgInt BinaryForm::evaluate(const AlgInt& x, const AlgInt& y) const {
  const unsigned n = degree();
  std::vector<AlgInt> xp(n + 1, AlgInt(1));
  std::vector<AlgInt> yp(n + 1, AlgInt(1));
  for (unsigned i = 1; i <= n; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  AlgInt acc;
  for (unsigned i = 0; i <= n; ++i) {
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * xp[n - i] * yp[i];
  }
  return acc;
}

BinaryForm BinaryForm::d_dx() const {
  const unsigned n = degree();
  if (n == 0) return zero(0);
  std::vector<AlgInt> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = AlgInt(static_cast<long>(n - i)) * coeffs_[i];
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::d_dy() const {
  const unsigned n = degree();
  if (n == 0) return zero(0);
  std::vector<AlgInt> out(n);
  for (unsigned i = 1; i <= n; ++i) out[i - 1] = AlgInt(static_cast<long>(i)) * coeffs_[i];
  return BinaryForm(std::move(out));
}

BinaryForm& BinaryForm::operator*=(const AlgInt& s) {
  for (AlgInt& c : coeffs_) c *= s;
  return *this;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw Error(Errc::invalid_argument, "adding forms of different degree");
  std::vector<AlgInt> out = f.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.coeffs_[i];
  return BinaryForm(std::move(out));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw Error(Errc::invalid_argument, "subtracting forms of different degree");
  std::vector<AlgInt> out = f.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= g.coeffs_[i];
  return BinaryForm(std::move(out));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  std::vector<AlgInt> out(f.degree() + g.degree() + 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return BinaryForm(std::move(out));
}

}  // namespace sfrey
