#include "idalg/linalg/rational.hpp"

#include <cctype>
#include <numeric>

#include "idalg/error.hpp"

namespace idalg {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Parse: return "ParseError";
    case Errc::UnknownName: return "UnknownName";
    case Errc::SingularParameter: return "SingularParameter";
    case Errc::NotInG: return "NotInG";
    case Errc::NotContainingG: return "NotContainingG";
    case Errc::NotLieClosed: return "NotLieClosed";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::Unclassifiable: return "Unclassifiable";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::HypothesisViolation: return "HypothesisViolation";
  }
  return "Error";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kLimit = Rational::kSmallLimit;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 m = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
  if (!z.fits_slong_p()) return false;
  long v = z.get_si();
  return v <= Rational::kSmallLimit && v >= -Rational::kSmallLimit;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value > kSmallLimit || value < -kSmallLimit) {
    assign_mpq(mpq_class(mpz_class(static_cast<long>(value))));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::SingularParameter, "zero denominator");
  assign_mpq(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::SingularParameter, "zero denominator");
  assign_mpq(mpq_class(num, den));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  if (fits_small(q.get_num()) && fits_small(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

// Builds a canonical rational from a 128-bit fraction with den > 0.
Rational Rational::from_i128(i128 num, i128 den) {
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g != 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num <= kLimit && num >= -kLimit && den <= kLimit) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  return Rational(mpz_from_i128(num), mpz_from_i128(den));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  text = trim(text);
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = trim(text.substr(0, slash));
    den_part = trim(text.substr(slash + 1));
  }
  if (!valid_int(num_part) || !valid_int(den_part) || den_part.front() == '-' ||
      den_part.front() == '+') {
    throw Error(Errc::Parse, "malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num_part);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class num(num_str, 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::SingularParameter, "inverse of zero");
  if (big_) return Rational(mpq_class(1) / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class num = numerator();
  mpz_class den = denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (s <= kLimit && s >= -kLimit) return Rational(static_cast<std::int64_t>(s));
      return Rational(mpz_from_i128(s), mpz_class(1));
    }
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(num, den);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!b.big_) {
    Rational nb;
    nb.num_ = -b.num_;
    nb.den_ = b.den_;
    return a + nb;
  }
  return Rational(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (p <= kLimit && p >= -kLimit) return Rational(static_cast<std::int64_t>(p));
      return Rational(mpz_from_i128(p), mpz_class(1));
    }
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (num <= kLimit && num >= -kLimit && den <= kLimit) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    return Rational(mpz_from_i128(num), mpz_from_i128(den));
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(Errc::SingularParameter, "division by zero");
  return a * b.inverse();
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Canonical forms differ in representation only when one side is big,
  // which implies it does not fit the small range.
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace idalg
