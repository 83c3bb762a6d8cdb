#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace idalg {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Values whose numerator and denominator fit in 62 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon as
/// an operation produces a small result.  Both representations compare and
/// print identically, so callers never observe which one is in use.
class Rational {
 public:
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);
  Rational(const mpz_class& num, const mpz_class& den);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "p/q", with optional leading sign.  Throws on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return !big_; }
  int sign() const;

  // Valid only when is_small().
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const;

  /// Exact square root when this is the square of a rational.
  std::optional<Rational> sqrt() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_mpq(mpq_class q);
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace idalg
