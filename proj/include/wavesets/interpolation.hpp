#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavesets/congruence.hpp"

namespace wavesets {

/// Raised when a refinement exceeds its configured piece cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On 2^j part the map is s -> s + 2^j shift.
struct MapPiece {
  ExtSet part;  // subset of the dilation domain
  PiRational shift;
};

/// A dilation-equivariant piecewise translation of the line, fixing 0.
/// Pieces are disjoint, sorted by shift, with distinct shifts; points outside every piece are undefined.
class DyadicMap {
 public:
  DyadicMap() = default;
  static DyadicMap from_pieces(std::vector<MapPiece> pieces);
  static DyadicMap identity();

  const std::vector<MapPiece>& pieces() const { return pieces_; }
  ExtSet support() const;  // union of the parts

  std::optional<PiRational> evaluate(const PiRational& s) const;
  /// Exact image of a bounded set; points outside the support are dropped.
  ExtSet image(const ExtSet& s) const;
  /// Identity almost everywhere: the support is the whole dilation domain and every shift is 0.
  bool is_identity() const;

  friend bool operator==(const DyadicMap& a, const DyadicMap& b) { return a.pieces_ == b.pieces_; }

 private:
  std::vector<MapPiece> pieces_;
};

inline bool operator==(const MapPiece& a, const MapPiece& b) { return a.shift == b.shift && a.part == b.part; }

constexpr std::size_t kDefaultPieceCap = 4096;

/// second after first.
DyadicMap compose(const DyadicMap& second, const DyadicMap& first, std::size_t piece_cap = kDefaultPieceCap);

class InterpolationMap {
 public:
  const ExtSet& source() const { return source_; }
  const ExtSet& target() const { return target_; }
  const TranslationWitness& pieces() const { return pieces_; }
  const DyadicMap& map() const { return map_; }

  std::optional<PiRational> evaluate(const PiRational& s) const { return map_.evaluate(s); }
  ExtSet image(const ExtSet& s) const { return map_.image(s); }

 private:
  friend InterpolationMap build(const ExtSet& e, const ExtSet& f);
  ExtSet source_;
  ExtSet target_;
  TranslationWitness pieces_;
  DyadicMap map_;
};

/// sigma_E^F; throws DomainError unless both sets are wavelet sets.
InterpolationMap build(const ExtSet& e, const ExtSet& f);

inline std::optional<PiRational> evaluate(const InterpolationMap& m, const PiRational& s) { return m.evaluate(s); }
inline ExtSet image(const InterpolationMap& m, const ExtSet& s) { return m.image(s); }
inline DyadicMap compose(const InterpolationMap& second, const InterpolationMap& first,
                         std::size_t piece_cap = kDefaultPieceCap) {
  return compose(second.map(), first.map(), piece_cap);
}

bool is_interpolation_pair(const ExtSet& e, const ExtSet& f);
/// sigma(E u F) inside E u F.
bool theorem1_check(const ExtSet& e, const ExtSet& f);

struct Quadruple {
  long n;
  long k;
  long m;
  long l;
  ExtSet cell;  // E_{n,k} meet (2^l E_{m,l} - 2 n pi)
};

/// Every nonempty cell with n, k, m, l nonzero; throws unless both are wavelet sets.
std::vector<Quadruple> nonzero_quadruples(const ExtSet& e, const ExtSet& f);

struct Theorem3PairReport {
  bool ok = false;
  bool k_equals_minus_l = false;  // meaningful when ok
  std::vector<Quadruple> cells;   // every nonempty cell with nonzero indices
  std::vector<Quadruple> violations;
};

Theorem3PairReport theorem3_pair_report(const ExtSet& e, const ExtSet& f);
inline bool theorem3_pair_criterion(const ExtSet& e, const ExtSet& f) { return theorem3_pair_report(e, f).ok; }

enum class FamilyVerdict { kTrue, kFalse, kIndeterminate };

std::string to_string(FamilyVerdict v);

struct FamilyReport {
  FamilyVerdict verdict = FamilyVerdict::kIndeterminate;
  std::size_t distinct_maps = 0;  // among the given sets
  std::size_t closure_size = 0;   // generated maps found (at most the bound)
};

constexpr std::size_t kDefaultFamilyBound = 64;

/// Base is the first set.
FamilyReport interpolation_family_report(const std::vector<ExtSet>& sets, std::size_t bound = kDefaultFamilyBound,
                                         std::size_t piece_cap = kDefaultPieceCap);
inline FamilyVerdict is_interpolation_family(const std::vector<ExtSet>& sets, std::size_t bound = kDefaultFamilyBound) {
  return interpolation_family_report(sets, bound).verdict;
}

}  // namespace wavesets
