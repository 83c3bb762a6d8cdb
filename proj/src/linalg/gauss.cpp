#include "idalg/linalg/gauss.hpp"

#include "idalg/error.hpp"

namespace idalg {

GaussScalar GaussScalar::inverse() const {
  if (is_zero()) throw Error(Errc::SingularParameter, "inverse of zero");
  if (is_real()) return GaussScalar(re_.inverse());
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::optional<GaussScalar> GaussScalar::sqrt() const {
  if (is_real()) {
    if (re_.sign() >= 0) {
      if (auto r = re_.sqrt()) return GaussScalar(*r);
      return std::nullopt;
    }
    if (auto r = (-re_).sqrt()) return GaussScalar(Rational(0), *r);
    return std::nullopt;
  }
  // (x + iy)^2 = re + i*im  =>  x^2 = (|z| + re)/2, y^2 = (|z| - re)/2.
  auto modulus = norm().sqrt();
  if (!modulus) return std::nullopt;
  auto x = ((*modulus + re_) / Rational(2)).sqrt();
  auto y = ((*modulus - re_) / Rational(2)).sqrt();
  if (!x || !y) return std::nullopt;
  // 2xy = im fixes the relative sign; choose x >= 0.
  Rational yy = im_.sign() < 0 ? -*y : *y;
  GaussScalar root(*x, yy);
  if (x->is_zero() && yy.sign() < 0) root = -root;
  if (root * root != *this) return std::nullopt;
  return root;
}

std::string GaussScalar::str() const {
  if (is_real()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  std::string im = im_.str();
  if (im.front() != '-') im = "+" + im;
  return re_.str() + im + "i";
}

GaussScalar operator+(const GaussScalar& a, const GaussScalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussScalar(a.re_ + b.re_);
  return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussScalar operator-(const GaussScalar& a, const GaussScalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussScalar(a.re_ - b.re_);
  return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussScalar operator*(const GaussScalar& a, const GaussScalar& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return GaussScalar(a.re_ * b.re_);
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussScalar operator/(const GaussScalar& a, const GaussScalar& b) {
  if (b.is_real()) {
    if (b.re_.is_zero()) throw Error(Errc::SingularParameter, "division by zero");
    Rational inv = b.re_.inverse();
    if (a.is_real()) return GaussScalar(a.re_ * inv);
    return {a.re_ * inv, a.im_ * inv};
  }
  return a * b.inverse();
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& rhs) { return *this = *this + rhs; }
GaussScalar& GaussScalar::operator-=(const GaussScalar& rhs) { return *this = *this - rhs; }
GaussScalar& GaussScalar::operator*=(const GaussScalar& rhs) { return *this = *this * rhs; }
GaussScalar& GaussScalar::operator/=(const GaussScalar& rhs) { return *this = *this / rhs; }

}  // namespace idalg
