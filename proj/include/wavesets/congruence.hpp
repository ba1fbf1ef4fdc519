#pragma once

#include <array>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "wavesets/extended.hpp"

namespace wavesets {

/// Lattice index: a plain integer on the line, an integer pair in the plane.
template <int D>
using LatticeIndex = std::conditional_t<D == 1, long, std::array<long, 2>>;

/// 2*pi*n as a point.
template <int D>
Point<D> lattice_point(const LatticeIndex<D>& n) {
  if constexpr (D == 1) {
    return Point<1>{PiRational(2 * n)};
  } else {
    return Point<2>{PiRational(2 * n[0]), PiRational(2 * n[1])};
  }
}

template <int D>
bool is_zero_index(const LatticeIndex<D>& n) {
  if constexpr (D == 1) {
    return n == 0;
  } else {
    return n[0] == 0 && n[1] == 0;
  }
}

template <class R>
struct TranslationPiece {
  ExtendedSet<R> part;  // part + 2 n pi lies in the target
  LatticeIndex<R::kDim> n;
};

template <class R>
struct DilationPiece {
  ExtendedSet<R> part;  // 2^k part lies in the target
  long k;
};

template <class R>
struct JointCell {
  ExtendedSet<R> part;
  LatticeIndex<R::kDim> n;
  long k;
};

template <class R>
using TranslationWitnessT = std::vector<TranslationPiece<R>>;
template <class R>
using DilationWitnessT = std::vector<DilationPiece<R>>;
template <class R>
using JointWitnessT = std::vector<JointCell<R>>;

/// Points of the fundamental domain covered exactly `multiplicity` times.
template <class R>
struct MultiplicityBand {
  ExtendedSet<R> set;
  long multiplicity;
};

template <class R>
struct GeneratorReportT {
  bool ok = false;
  ExtendedSet<R> overlap;  // covered more than once (inside the fundamental domain)
  ExtendedSet<R> gap;      // not covered
  bool divergent = false;  // the set contains a cone at the origin
};

template <class R>
struct WaveletReportT {
  bool ok = false;
  GeneratorReportT<R> translation;
  GeneratorReportT<R> dilation;
  Rational measure;
};

/// [0, 2pi) on the line, [-pi, pi)^2 in the plane.
template <class R>
ExtendedSet<R> translation_domain();
/// [-2pi, 2pi)^D minus [-pi, pi)^D.
template <class R>
ExtendedSet<R> dilation_domain();

template <class R>
std::vector<MultiplicityBand<R>> translation_profile(const ExtendedSet<R>& s);
template <class R>
std::vector<MultiplicityBand<R>> dilation_profile(const ExtendedSet<R>& s);
template <class R>
GeneratorReportT<R> is_translation_generator(const ExtendedSet<R>& s);
template <class R>
GeneratorReportT<R> is_dilation_generator(const ExtendedSet<R>& s);
template <class R>
WaveletReportT<R> is_wavelet_set(const ExtendedSet<R>& s);

/// Least and greatest j with s meeting 2^j times the dilation domain.
/// nullopt for the empty set; throws if s contains a cone at the origin.
template <class R>
std::optional<std::pair<long, long>> dyadic_span(const ExtendedSet<R>& s);

/// (j, 2^-j (s restricted to 2^j times the dilation domain)) for every nonempty block, j descending.
/// Throws if s contains a cone at the origin.
template <class R>
std::vector<std::pair<long, ExtendedSet<R>>> dyadic_blocks(const ExtendedSet<R>& s);

/// (j, b) with s = 2^j b and b in the dilation domain of the line. s != 0.
std::pair<long, PiRational> dyadic_reduce(const PiRational& s);

template <class R>
TranslationWitnessT<R> translation_witness(const ExtendedSet<R>& e, const ExtendedSet<R>& f);
template <class R>
DilationWitnessT<R> dilation_witness(const ExtendedSet<R>& e, const ExtendedSet<R>& f);
template <class R>
JointWitnessT<R> joint_witness(const ExtendedSet<R>& e, const ExtendedSet<R>& f);

/// Exact check that the pieces partition e and their translates (dilates) partition f.
template <class R>
bool verifies_translation(const TranslationWitnessT<R>& w, const ExtendedSet<R>& e, const ExtendedSet<R>& f);
template <class R>
bool verifies_dilation(const DilationWitnessT<R>& w, const ExtendedSet<R>& e, const ExtendedSet<R>& f);

using TranslationWitness = TranslationWitnessT<IntervalSet>;
using DilationWitness = DilationWitnessT<IntervalSet>;
using JointWitness = JointWitnessT<IntervalSet>;
using GeneratorReport = GeneratorReportT<IntervalSet>;
using WaveletReport = WaveletReportT<IntervalSet>;
using GeneratorReport2 = GeneratorReportT<BoxSet>;
using WaveletReport2 = WaveletReportT<BoxSet>;

inline WaveletReport2 is_wavelet_set_2d(const ExtBoxSet& s) { return is_wavelet_set(s); }

}  // namespace wavesets
