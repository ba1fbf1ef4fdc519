#include "wavesets/scalars.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace wavesets {

Rational mul_pow2(const Rational& q, long k) {
  Rational out;
  if (k >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(out.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return out;
}

PiRational::PiRational(long num, long den) {
  if (den == 0) throw DomainError("PiRational: zero denominator");
  coeff_ = Rational(num, den);
  coeff_.canonicalize();
}

PiRational::PiRational(Rational coeff) : coeff_(std::move(coeff)) { coeff_.canonicalize(); }

PiRational PiRational::operator-() const { return PiRational(Rational(-coeff_)); }

PiRational& PiRational::operator+=(const PiRational& o) {
  coeff_ += o.coeff_;
  return *this;
}

PiRational& PiRational::operator-=(const PiRational& o) {
  coeff_ -= o.coeff_;
  return *this;
}

PiRational operator*(const PiRational& a, const Rational& r) { return PiRational(Rational(a.coeff_ * r)); }

PiRational operator/(const PiRational& a, const Rational& r) {
  if (sgn(r) == 0) throw DomainError("PiRational: division by zero");
  return PiRational(Rational(a.coeff_ / r));
}

Rational operator/(const PiRational& a, const PiRational& b) {
  if (b.is_zero()) throw DomainError("PiRational: division by zero");
  return Rational(a.coeff_ / b.coeff_);
}

PiRational PiRational::scaled(long k) const { return PiRational(mul_pow2(coeff_, k)); }

std::string PiRational::str() const {
  if (is_zero()) return "0";
  if (coeff_ == 1) return "pi";
  if (coeff_ == -1) return "-pi";
  return coeff_.get_str() + "pi";
}

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw DomainError("malformed pi-rational literal '" + std::string(text) + "'");
}

}  // namespace

PiRational PiRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "0" || s == "-0" || s == "+0") return PiRational();
  if (s.size() < 2 || s.substr(s.size() - 2) != "pi") bad_literal(text);
  std::string num = s.substr(0, s.size() - 2);
  if (num.empty() || num == "+") return PiRational(1);
  if (num == "-") return PiRational(-1);
  std::size_t i = (num[0] == '-' || num[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < num.size(); ++i) {
    const char c = num[i];
    if (c == '/') {
      if (slash || !digit_before) bad_literal(text);
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? digit_after : digit_before) = true;
    } else {
      bad_literal(text);
    }
  }
  if (!digit_before || (slash && !digit_after)) bad_literal(text);
  if (num[0] == '+') num.erase(0, 1);
  Rational q;
  if (q.set_str(num, 10) != 0) bad_literal(text);
  if (sgn(q.get_den()) == 0) bad_literal(text);
  return PiRational(q);
}

double PiRational::approx() const { return coeff_.get_d(); }

PiRational abs(const PiRational& x) { return x.sign() < 0 ? -x : x; }
PiRational min(const PiRational& a, const PiRational& b) { return b < a ? b : a; }
PiRational max(const PiRational& a, const PiRational& b) { return a < b ? b : a; }

long ExponentFloor::value() const {
  if (!is_finite()) throw DomainError("ExponentFloor: infinite floor has no value");
  return value_;
}

ExponentFloor ExponentFloor::operator+(long d) const {
  return is_finite() ? ExponentFloor(value_ + d) : *this;
}

bool ExponentFloor::admits(long j) const {
  switch (kind_) {
    case Kind::kNegInf:
      return true;
    case Kind::kPosInf:
      return false;
    case Kind::kFinite:
      break;
  }
  return j >= value_;
}

std::strong_ordering operator<=>(const ExponentFloor& a, const ExponentFloor& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.is_finite()) return a.value_ <=> b.value_;
  return std::strong_ordering::equal;
}

std::string ExponentFloor::str() const {
  switch (kind_) {
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  return std::to_string(value_);
}

ExponentFloor ExponentFloor::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  try {
    std::size_t used = 0;
    const long v = std::stol(std::string(text), &used);
    if (used != text.size()) throw DomainError("bad floor");
    return ExponentFloor(v);
  } catch (const std::exception&) {
    throw DomainError("malformed exponent floor '" + std::string(text) + "'");
  }
}

ExponentFloor two_adic_floor(const Rational& n) {
  if (sgn(n) == 0) throw DomainError("two_adic_floor: argument must be nonzero");
  // v2(p/q) = v2(p) - v2(q); floor is -v2.
  const long vp = static_cast<long>(mpz_scan1(n.get_num_mpz_t(), 0));
  const long vq = static_cast<long>(mpz_scan1(n.get_den_mpz_t(), 0));
  return ExponentFloor(vq - vp);
}

long dyadic_bracket(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("dyadic_bracket: argument must be positive");
  // Estimate from bit lengths, then correct by exact comparison.
  const long nb = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  long j = nb - db;
  while (cmp(mul_pow2(Rational(1), j), q) > 0) --j;
  while (cmp(mul_pow2(Rational(1), j + 1), q) <= 0) ++j;
  return j;
}

long dyadic_bracket_upper(const Rational& q) {
  const long j = dyadic_bracket(q);
  return cmp(mul_pow2(Rational(1), j), q) == 0 ? j - 1 : j;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer out of machine range: " + z.get_str());
  return z.get_si();
}

long floor_to_long(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_long(out);
}

long ceil_to_long(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_long(out);
}

}  // namespace wavesets
