#include "wavesets/plane.hpp"

namespace wavesets {

namespace {

PiRational P(long num, long den = 1) { return PiRational(num, den); }

PlaneConstruction assemble(Lemma5Config2 c, std::size_t copies, const std::vector<std::array<bool, 2>>& flips,
                           ExtBox fixed) {
  PlaneConstruction out;
  out.result = lemma5(c);
  out.config = std::move(c);
  out.fixed = std::move(fixed);
  out.set = out.fixed;
  for (std::size_t i = 0; i < copies; ++i) {
    out.pieces.push_back(out.result.G.reflected(flips[i]));
    out.set = out.set | out.pieces.back();
  }
  return out;
}

std::vector<std::array<bool, 2>> quadrants() {
  const auto& q = quadrant_flips();
  return {q.begin(), q.end()};
}

}  // namespace

ExtBox rect(const PiRational& x0, const PiRational& x1, const PiRational& y0, const PiRational& y1) {
  return ExtBox(BoxSet::rect(x0, x1, y0, y1));
}

ExtBox translation_square() { return rect(P(-1), P(1), P(-1), P(1)); }

ExtBox dilation_annulus() { return rect(P(-2), P(2), P(-2), P(2)) - translation_square(); }

const std::array<std::array<bool, 2>, 4>& quadrant_flips() {
  static const std::array<std::array<bool, 2>, 4> f = {{{false, false}, {true, false}, {true, true}, {false, true}}};
  return f;
}

PlaneConstruction four_corners_construction() {
  const ExtBox e = rect(P(0), P(1), P(0), P(1));
  const ExtBox f = e - rect(P(0), P(1, 2), P(0), P(1, 2));
  return assemble({e, f, {0, 0}, {1, 1}, 0, 2}, 4, quadrants(), {});
}

PlaneConstruction wedding_cake_construction() {
  const ExtBox e = rect(P(0), P(1), P(-1), P(1));
  const ExtBox f = e - rect(P(0), P(1, 2), P(-1, 2), P(1, 2));
  return assemble({e, f, {0, 0}, {1, 0}, 0, 2}, 2, {{false, false}, {true, false}}, {});
}

SwTiles sw_tiles() {
  SwTiles t;
  const ExtBox e1 = rect(P(-1, 2), P(0), P(-1, 2), P(0)) | rect(P(-1), P(-3, 4), P(-1), P(-3, 4));
  const ExtBox f1 = rect(P(3, 2), P(2), P(3, 2), P(2));
  for (std::size_t i = 0; i < 4; ++i) {
    t.E[i] = e1.reflected(quadrant_flips()[i]);
    t.F[i] = f1.reflected(quadrant_flips()[i]);
  }
  const PiRational h(1, 2);
  const PiRational q(3, 4);
  t.B = translation_square() - rect(-h, h, -h, h) - rect(q, P(1), q, P(1)) - rect(P(-1), -q, q, P(1)) -
        rect(q, P(1), P(-1), -q) - rect(P(-1), -q, P(-1), -q);
  return t;
}

PlaneConstruction sw_construction() {
  const SwTiles t = sw_tiles();
  return assemble({t.E[0], t.F[0], {1, 1}, {2, 2}, 0, 1}, 4, quadrants(), t.B);
}

ExtBox pine_staircase(long g) {
  const long n = 1L << g;
  const PiRational h = P(1).scaled(-g);
  std::vector<Box> boxes;
  for (long i = -n; i < n; ++i) {
    const long j0 = i >= 0 ? i : i + 1;
    if (j0 < n) boxes.push_back({Interval(h * Rational(i), h * Rational(i + 1)), Interval(h * Rational(j0), P(1))});
  }
  return ExtBox(BoxSet(boxes));
}

PlaneConstruction pine_tree_construction(long g) {
  if (g < 1 || g > 12) throw DomainError("pine_tree: cell width must be pi / 2^g with 1 <= g <= 12");
  const ExtBox e = pine_staircase(g);
  // For the exact triangle, E meet [-pi/2, pi/2)^2 is the half-size triangle.
  const ExtBox f = e - rect(P(-1, 2), P(1, 2), P(-1, 2), P(1, 2));
  return assemble({e, f, {0, 0}, {-1, 1}, 0, 2}, 2, {{false, false}, {true, true}}, {});
}

PlaneConstruction pine_tree_construction(const PiRational& r) {
  const Rational& q = r.coeff();
  if (sgn(q) <= 0 || q.get_num() != 1) throw DomainError("pine_tree: resolution must be pi / 2^g");
  const mpz_class& d = q.get_den();
  const long g = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 1;
  if (d != mpz_class(1) << static_cast<unsigned long>(g < 0 ? 0 : g)) throw DomainError("pine_tree: resolution must be pi / 2^g");
  return pine_tree_construction(g);
}

ExtBox four_corners() { return four_corners_construction().set; }
ExtBox wedding_cake() { return wedding_cake_construction().set; }
ExtBox sw_set() { return sw_construction().set; }
ExtBox pine_tree(const PiRational& r) { return pine_tree_construction(r).set; }

}  // namespace wavesets
