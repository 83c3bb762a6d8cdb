#pragma once

#include <string>

#include "idalg/linalg/rational.hpp"

namespace idalg {

/// Element re + im*i of the Gaussian rationals Q(i).
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  GaussScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussScalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussScalar inverse() const;

  /// Square root with non-negative real part (imaginary part non-negative
  /// when the real part is zero), if one exists in Q(i).
  std::optional<GaussScalar> sqrt() const;

  /// "p/q" when real; "a+bi" style otherwise (for diagnostics only; the JSON
  /// layer has its own encoding).
  std::string str() const;

  GaussScalar operator-() const { return {-re_, -im_}; }

  GaussScalar& operator+=(const GaussScalar& rhs);
  GaussScalar& operator-=(const GaussScalar& rhs);
  GaussScalar& operator*=(const GaussScalar& rhs);
  GaussScalar& operator/=(const GaussScalar& rhs);

  friend GaussScalar operator+(const GaussScalar& a, const GaussScalar& b);
  friend GaussScalar operator-(const GaussScalar& a, const GaussScalar& b);
  friend GaussScalar operator*(const GaussScalar& a, const GaussScalar& b);
  friend GaussScalar operator/(const GaussScalar& a, const GaussScalar& b);

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) = default;

 private:
  Rational re_;
  Rational im_;
};

using Scalar = GaussScalar;

}  // namespace idalg
