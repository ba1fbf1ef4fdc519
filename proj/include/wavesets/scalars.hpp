#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wavesets {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for precondition violations on exact scalar operations.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Multiplies by 2^k for any integer k, exactly.
Rational mul_pow2(const Rational& q, long k);

/// Exact scalar coeff * pi. Every coordinate in the library is one of these.
class PiRational {
 public:
  PiRational() = default;
  PiRational(long num) : coeff_(num) {}  // NOLINT(google-explicit-constructor)
  PiRational(long num, long den);
  explicit PiRational(Rational coeff);

  const Rational& coeff() const { return coeff_; }

  PiRational operator-() const;
  PiRational& operator+=(const PiRational& o);
  PiRational& operator-=(const PiRational& o);
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator*(const PiRational& a, const Rational& r);
  friend PiRational operator*(const Rational& r, const PiRational& a) { return a * r; }
  friend PiRational operator/(const PiRational& a, const Rational& r);
  /// Ratio of two pi-multiples is a plain rational.
  friend Rational operator/(const PiRational& a, const PiRational& b);

  /// 2^k * this.
  PiRational scaled(long k) const;

  int sign() const { return sgn(coeff_); }
  bool is_zero() const { return sign() == 0; }

  friend bool operator==(const PiRational& a, const PiRational& b) { return cmp(a.coeff_, b.coeff_) == 0; }
  friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b) {
    const int c = cmp(a.coeff_, b.coeff_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Textual form `p/qpi`, `-2pi`, `pi`, `0`.
  std::string str() const;
  static PiRational parse(std::string_view text);

  double approx() const;  // value / pi as double, for rendering only

 private:
  Rational coeff_{0};
};

PiRational abs(const PiRational& x);
PiRational min(const PiRational& a, const PiRational& b);
PiRational max(const PiRational& a, const PiRational& b);

/// Integer extended with -inf and +inf.
class ExponentFloor {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr ExponentFloor() = default;
  constexpr explicit ExponentFloor(long v) : kind_(Kind::kFinite), value_(v) {}
  static constexpr ExponentFloor neg_inf() { return ExponentFloor(Kind::kNegInf); }
  static constexpr ExponentFloor pos_inf() { return ExponentFloor(Kind::kPosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  long value() const;

  ExponentFloor operator+(long d) const;
  /// True iff exponent j lies at or above the floor.
  bool admits(long j) const;

  friend bool operator==(const ExponentFloor&, const ExponentFloor&) = default;
  friend std::strong_ordering operator<=>(const ExponentFloor& a, const ExponentFloor& b);

  std::string str() const;  // "-inf", "+inf" or the integer
  static ExponentFloor parse(std::string_view text);

 private:
  constexpr explicit ExponentFloor(Kind k) : kind_(k) {}
  Kind kind_ = Kind::kFinite;
  long value_ = 0;
};

/// Least k with 2^k * n an integer (the negated 2-adic valuation). n != 0.
ExponentFloor two_adic_floor(const Rational& n);
inline ExponentFloor two_adic_floor(long n) { return two_adic_floor(Rational(n)); }

/// Unique j with 2^j <= q < 2^(j+1), by exact comparison. q > 0.
long dyadic_bracket(const Rational& q);

/// Unique j with 2^j < q <= 2^(j+1). q > 0.
long dyadic_bracket_upper(const Rational& q);

/// floor / ceil of a rational as a long (throws on overflow).
long floor_to_long(const Rational& q);
long ceil_to_long(const Rational& q);

long to_long(const Integer& z);

}  // namespace wavesets
