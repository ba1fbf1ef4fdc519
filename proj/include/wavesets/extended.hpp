#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wavesets/boxes.hpp"
#include "wavesets/intervals.hpp"

namespace wavesets {

template <std::size_t D>
std::array<PiRational, D> operator+(const std::array<PiRational, D>& a, const std::array<PiRational, D>& b) {
  std::array<PiRational, D> out;
  for (std::size_t i = 0; i < D; ++i) out[i] = a[i] + b[i];
  return out;
}

template <std::size_t D>
std::array<PiRational, D> operator-(const std::array<PiRational, D>& a, const std::array<PiRational, D>& b) {
  std::array<PiRational, D> out;
  for (std::size_t i = 0; i < D; ++i) out[i] = a[i] - b[i];
  return out;
}

template <std::size_t D>
std::array<PiRational, D> scaled(const std::array<PiRational, D>& a, long k) {
  std::array<PiRational, D> out;
  for (std::size_t i = 0; i < D; ++i) out[i] = a[i].scaled(k);
  return out;
}

template <std::size_t D>
std::array<PiRational, D> times(const std::array<PiRational, D>& a, const Rational& r) {
  std::array<PiRational, D> out;
  for (std::size_t i = 0; i < D; ++i) out[i] = a[i] * r;
  return out;
}

/// Sup-norm distance.
template <std::size_t D>
PiRational sup_distance(const std::array<PiRational, D>& a, const std::array<PiRational, D>& b) {
  PiRational d;
  for (std::size_t i = 0; i < D; ++i) d = max(d, abs(a[i] - b[i]));
  return d;
}

template <std::size_t D>
std::array<PiRational, D> uniform_point(const PiRational& v) {
  std::array<PiRational, D> out;
  out.fill(v);
  return out;
}

/// S(x) = 2^lambda_exp * (x + shift), lambda_exp < 0.
template <int D>
struct AffineContraction {
  long lambda_exp = -1;
  Point<D> shift{};

  AffineContraction() = default;
  AffineContraction(long lambda, Point<D> c) : lambda_exp(lambda), shift(std::move(c)) {
    if (lambda >= 0) throw DomainError("AffineContraction requires a negative exponent");
  }
  /// The contraction with ratio 2^lambda fixing p.
  static AffineContraction about(long lambda, const Point<D>& p) {
    return AffineContraction(lambda, times(p, Rational(mul_pow2(Rational(1), -lambda) - 1)));
  }

  Point<D> fixed_point() const {
    const Rational r = mul_pow2(Rational(1), lambda_exp);
    return times(shift, Rational(r / (1 - r)));
  }
  Point<D> apply(const Point<D>& x) const { return scaled(x + shift, lambda_exp); }
  friend bool operator==(const AffineContraction&, const AffineContraction&) = default;
};

/// One accumulation point of an extended set. Inside the neighbourhood
/// N = center + [-2^level pi, 2^level pi)^D the set is the disjoint union of
/// S^i(base), i >= 0, where S contracts by 2^lambda about center and base lies
/// in the annulus N minus S(N).
template <class R>
struct Germ {
  static constexpr int D = R::kDim;
  Point<D> center{};
  long lambda = -1;
  long level = 0;
  R base;

  AffineContraction<D> map() const { return AffineContraction<D>::about(lambda, center); }
  Rational measure() const;
  friend bool operator==(const Germ&, const Germ&) = default;
};

/// Union of S^i(base) over i >= start.
template <class R>
struct SelfSimilarTail {
  AffineContraction<R::kDim> map;
  R base;
  long start = 0;
  Rational measure() const;
};

template <class R>
struct Truncation {
  R set;
  Rational defect;  // coefficient of pi^D
};

/// Finite region plus finitely many self-similar germs, in canonical form:
/// equal sets (modulo null sets) have identical representations.
template <class R>
class ExtendedSet {
 public:
  static constexpr int D = R::kDim;
  using point_type = Point<D>;
  using germ_type = Germ<R>;

  ExtendedSet() = default;
  ExtendedSet(R finite) : finite_(std::move(finite)) {}  // NOLINT(google-explicit-constructor)
  /// Validates the germ layout and canonicalizes.
  static ExtendedSet from_parts(R finite, std::vector<germ_type> germs);

  const R& finite() const { return finite_; }
  const std::vector<germ_type>& germs() const { return germs_; }
  bool is_finite() const { return germs_.empty(); }
  bool empty() const { return finite_.empty() && germs_.empty(); }
  std::vector<SelfSimilarTail<R>> tails() const;

  /// Exact measure, coefficient of pi^D.
  Rational measure() const;

  template <class S>
  friend ExtendedSet<S> combine(const ExtendedSet<S>& a, const ExtendedSet<S>& b, SetOp op);
  friend ExtendedSet operator|(const ExtendedSet& a, const ExtendedSet& b) { return combine(a, b, SetOp::kUnion); }
  friend ExtendedSet operator&(const ExtendedSet& a, const ExtendedSet& b) { return combine(a, b, SetOp::kIntersect); }
  friend ExtendedSet operator-(const ExtendedSet& a, const ExtendedSet& b) { return combine(a, b, SetOp::kDifference); }
  friend ExtendedSet operator^(const ExtendedSet& a, const ExtendedSet& b) { return combine(a, b, SetOp::kSymDiff); }
  bool subset_of(const ExtendedSet& other) const { return (*this - other).empty(); }
  bool disjoint_from(const ExtendedSet& other) const { return (*this & other).empty(); }

  /// 2^k x + t.
  ExtendedSet affine(long k, const point_type& t) const;
  ExtendedSet dilated(long k) const { return affine(k, point_type{}); }
  ExtendedSet translated(const point_type& t) const { return affine(0, t); }
  ExtendedSet reflected(const std::array<bool, D>& flip) const;

  bool contains(const point_type& p) const;
  std::optional<std::pair<point_type, point_type>> bounds() const;
  /// Same set with the first `depth` terms of every germ moved to the finite part.
  /// The result is not canonical; it is intended for inspection.
  std::pair<R, std::vector<germ_type>> expanded(long depth) const;
  /// Finite approximant whose symmetric difference from *this has measure defect <= eps.
  Truncation<R> truncate(const Rational& eps) const;

  friend bool operator==(const ExtendedSet&, const ExtendedSet&) = default;

 private:
  void canonicalize();
  R finite_;
  std::vector<germ_type> germs_;
};

template <class R>
ExtendedSet<R> combine(const ExtendedSet<R>& a, const ExtendedSet<R>& b, SetOp op);

/// Union of S^i(base), i >= start. The images must be pairwise disjoint and
/// the closure of base must avoid the fixed point.
template <class R>
ExtendedSet<R> make_tail(const AffineContraction<R::kDim>& S, const R& base, long start = 0);

/// S^i(X) for the contraction by 2^lambda about p; negative i expands.
template <class R>
R contract(const R& x, const Point<R::kDim>& p, long lambda, long i);

/// center + [-2^level pi, 2^level pi)^D.
template <class R>
R neighbourhood(const Point<R::kDim>& center, long level);

/// Orthant of the neighbourhood selected by mask: bit i clear = below center on axis i.
template <class R>
R orthant(const Point<R::kDim>& center, long level, unsigned mask);

using ExtSet = ExtendedSet<IntervalSet>;
using ExtBoxSet = ExtendedSet<BoxSet>;
using Germ1 = Germ<IntervalSet>;
using Germ2 = Germ<BoxSet>;

extern template class ExtendedSet<IntervalSet>;
extern template class ExtendedSet<BoxSet>;

}  // namespace wavesets
