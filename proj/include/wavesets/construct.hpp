#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavesets/congruence.hpp"

namespace wavesets {

/// Lemma 5 input: 2^k1 F inside E + 2 n1 pi, E + 2 n2 pi inside 2^k2 F, (E + 2 n2 pi) meet 2^k1 F null.
template <class R>
struct Lemma5ConfigT {
  ExtendedSet<R> E;
  ExtendedSet<R> F;
  LatticeIndex<R::kDim> n1{};
  LatticeIndex<R::kDim> n2{};
  long k1 = 0;
  long k2 = 0;
};

template <class R>
struct Lemma5ValidationT {
  bool ok = false;
  bool positive_measure = false;
  bool exponents_ordered = false;     // k1 < k2
  ExtendedSet<R> outside_translate;   // 2^k1 F minus (E + 2 n1 pi)
  ExtendedSet<R> outside_dilate;      // (E + 2 n2 pi) minus 2^k2 F
  ExtendedSet<R> overlap;             // (E + 2 n2 pi) meet 2^k1 F
  std::optional<AffineContraction<R::kDim>> contraction;
  std::string message() const;
};

enum class Lemma5Mode { kTelescoped, kTail, kTruncated };

std::string to_string(Lemma5Mode m);

template <class R>
struct Lemma5ResultT {
  ExtendedSet<R> G;
  Lemma5Mode mode = Lemma5Mode::kTelescoped;
  Rational defect{0};  // measure dropped by truncation, in units of pi^D
  AffineContraction<R::kDim> contraction;
  ExtendedSet<R> G0;   // 2^k1 F minus 2^(k1-k2) (E + 2 n2 pi)
  ExtendedSet<R> orbit;  // union of S^i(G0), i >= 0
  TranslationWitnessT<R> to_E;
  DilationWitnessT<R> to_F;
};

template <class R>
Lemma5ValidationT<R> validate(const Lemma5ConfigT<R>& c);

/// Throws DomainError on an invalid config. With eps, tails are truncated and the defect reported.
template <class R>
Lemma5ResultT<R> lemma5(const Lemma5ConfigT<R>& c, const std::optional<Rational>& eps = std::nullopt);

inline PiRational fixed_point(const AffineContraction<1>& s) { return s.fixed_point()[0]; }
inline Point<2> fixed_point(const AffineContraction<2>& s) { return s.fixed_point(); }

using Lemma5Config = Lemma5ConfigT<IntervalSet>;
using Lemma5Validation = Lemma5ValidationT<IntervalSet>;
using Lemma5Result = Lemma5ResultT<IntervalSet>;
using Lemma5Config2 = Lemma5ConfigT<BoxSet>;
using Lemma5Result2 = Lemma5ResultT<BoxSet>;

// Randomized wavelet sets.

/// Swap A and 2^-k (A + 2 n pi) inside a wavelet set for their translates by 2 n pi and -2^-k 2 n pi.
struct CycleMove {
  Interval a;
  long n;
  long k;
};

/// Replace the part of a wavelet set over the classes of [-d1, d2) by the Lemma 5 output.
struct Lemma5Move {
  PiRational d1;
  PiRational d2;
  long k1;
  long k2;
  long n2;
};

struct ReflectMove {};

struct FuzzMove {
  enum class Kind { kCycle, kLemma5, kReflect } kind;
  CycleMove cycle{Interval(PiRational(0), PiRational(1)), 0, 0};
  Lemma5Move lemma{};
  std::string str() const;
};

struct FuzzParams {
  int cycle_moves = 3;    // upper bound; the count is drawn uniformly
  int lemma5_moves = 1;   // upper bound
  int grid = 3;           // cells of width pi / 2^grid
  int attempts = 40;      // per move
  bool reflect = true;
};

/// Deterministic per seed. Throws DomainError when every attempt for a requested move fails.
std::vector<FuzzMove> random_plan(std::uint64_t seed, const FuzzParams& p = {});
/// Moves that no longer apply are skipped; the result is always a wavelet set.
ExtSet apply_plan(const std::vector<FuzzMove>& plan, const ExtSet& base);
ExtSet random_wavelet_set(std::uint64_t seed, const FuzzParams& p = {});

/// Apply one move to a wavelet set; nullopt when it does not apply.
std::optional<ExtSet> apply_move(const FuzzMove& m, const ExtSet& w);

/// The part of a wavelet set whose 2 pi classes lie in [-d1, d2), and the class set.
ExtSet class_piece(const ExtSet& w, const ExtSet& classes);
/// Dilation-domain reduction of a set without a cone at the origin.
ExtSet dilation_reduction(const ExtSet& s);
/// Translation-domain reduction.
ExtSet translation_reduction(const ExtSet& s);

}  // namespace wavesets
