#include "wavesets/render.hpp"

#include <sstream>

namespace wavesets {

namespace {

constexpr int kMargin = 40;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Affine map from pi-coefficients to pixels.
struct Axis {
  Rational lo;
  Rational scale;  // pixels per unit of pi
  long offset;

  Rational px(const Rational& v) const { return offset + (v - lo) * scale; }
  std::string str(const Rational& v) const { return decimal6(px(v)); }
};

Axis fit(const Rational& lo, const Rational& hi, long pixels, long offset) {
  Rational span = hi - lo;
  if (sgn(span) <= 0) span = 1;
  return {lo, Rational(pixels) / span, offset};
}

std::string header(int w, int h) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  return os.str();
}

// Finite pieces plus accumulation points, with tails expanded below one pixel of measure.
template <class R>
std::pair<R, std::vector<Point<R::kDim>>> drawable(const ExtendedSet<R>& s, const Rational& pixel) {
  std::vector<Point<R::kDim>> marks;
  for (const auto& g : s.germs()) marks.push_back(g.center);
  Rational eps = pixel;
  for (int i = 1; i < R::kDim; ++i) eps *= pixel;
  return {s.truncate(eps).set, marks};
}

}  // namespace

std::string decimal6(const Rational& q) {
  if (sgn(q) == 0) return "0";
  const bool neg = sgn(q) < 0;
  Rational a = neg ? Rational(-q) : q;
  // Find e with 10^e <= a < 10^(e+1).
  long e = 0;
  Rational p = 1;
  while (p * 10 <= a) {
    p *= 10;
    ++e;
  }
  while (p > a) {
    p /= 10;
    --e;
  }
  // digits = round(a * 10^(5-e)).
  Rational scaled = a / p * 100000;
  mpz_class digits = scaled.get_num() / scaled.get_den();
  const Rational frac = scaled - Rational(digits);
  if (frac >= Rational(1, 2)) ++digits;
  if (digits == 1000000) {
    digits = 100000;
    ++e;
  }
  std::string d = digits.get_str();  // six digits, value d * 10^(e-5)
  std::string out;
  const long point = e + 1;  // digits before the decimal point
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
  } else if (point >= 6) {
    out = d + std::string(static_cast<std::size_t>(point - 6), '0');
  } else {
    out = d.substr(0, static_cast<std::size_t>(point)) + "." + d.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

std::string render_1d(const std::vector<std::pair<std::string, ExtSet>>& rows, const InterpolationMap* arrows,
                      const Canvas1D& canvas) {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (const auto& [label, s] : rows) {
    if (const auto b = s.bounds()) {
      if (!lo || b->first[0].coeff() < *lo) lo = b->first[0].coeff();
      if (!hi || b->second[0].coeff() > *hi) hi = b->second[0].coeff();
    }
  }
  const Rational xlo = lo ? *lo : Rational(-2);
  const Rational xhi = hi ? *hi : Rational(2);
  const long label_w = 120;
  const Axis ax = fit(xlo, xhi, canvas.width - label_w - 2 * kMargin, label_w + kMargin);
  const long n = static_cast<long>(std::max<std::size_t>(rows.size(), 1));
  const long row_h = (canvas.height - 2 * kMargin) / n;
  const Rational pixel = 1 / ax.scale;
  std::ostringstream os;
  os << header(canvas.width, canvas.height);
  std::vector<long> baseline;
  for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
    const long y = kMargin + r * row_h + row_h / 2;
    baseline.push_back(y);
    const auto& [label, s] = rows[static_cast<std::size_t>(r)];
    const char* color = kPalette[r % 6];
    os << "<g class=\"row\">\n";
    os << "<text x=\"" << kMargin << "\" y=\"" << y + 4 << "\" font-family=\"sans-serif\" font-size=\"14\">" << esc(label)
       << "</text>\n";
    os << "<line x1=\"" << label_w + kMargin << "\" y1=\"" << y << "\" x2=\"" << canvas.width - kMargin << "\" y2=\"" << y
       << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    if (sgn(xlo) <= 0 && sgn(xhi) >= 0) {
      os << "<line x1=\"" << ax.str(0) << "\" y1=\"" << y - 8 << "\" x2=\"" << ax.str(0) << "\" y2=\"" << y + 8
         << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    }
    const auto [fin, marks] = drawable(s, pixel);
    for (const auto& iv : fin.parts()) {
      os << "<rect x=\"" << ax.str(iv.lo.coeff()) << "\" y=\"" << y - 6 << "\" width=\""
         << decimal6((iv.hi.coeff() - iv.lo.coeff()) * ax.scale) << "\" height=\"12\" fill=\"" << color << "\"/>\n";
    }
    for (const auto& m : marks) {
      os << "<circle cx=\"" << ax.str(m[0].coeff()) << "\" cy=\"" << y << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
    }
    os << "</g>\n";
  }
  if (arrows != nullptr && baseline.size() >= 2) {
    os << "<g class=\"arrows\" stroke=\"#444\" stroke-width=\"1\" fill=\"none\">\n";
    for (const auto& piece : arrows->pieces()) {
      const auto b = piece.part.bounds();
      if (!b) continue;
      const Rational from = (b->first[0].coeff() + b->second[0].coeff()) / 2;
      const Rational to = from + 2 * piece.n;
      os << "<path class=\"bundle\" d=\"M " << ax.str(from) << " " << baseline[0] + 8 << " L " << ax.str(to) << " "
         << baseline[1] - 8 << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<text x=\"" << label_w + kMargin << "\" y=\"" << canvas.height - 10
     << "\" font-family=\"sans-serif\" font-size=\"12\">" << decimal6(xlo) << "π</text>\n";
  os << "<text x=\"" << canvas.width - kMargin << "\" y=\"" << canvas.height - 10
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << decimal6(xhi) << "π</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_2d(const ExtBox& s, const Canvas2D& canvas) {
  Rational lo = -1;
  Rational hi = 1;
  if (const auto b = s.bounds()) {
    for (int i = 0; i < 2; ++i) {
      lo = std::min(lo, b->first[i].coeff());
      hi = std::max(hi, b->second[i].coeff());
    }
  }
  const long side = std::min(canvas.width, canvas.height) - 2 * kMargin;
  const Axis ax = fit(lo, hi, side, kMargin);
  // y grows downwards in SVG.
  auto ypx = [&](const Rational& v) { return decimal6(Rational(2 * kMargin + side) - ax.px(v)); };
  std::ostringstream os;
  os << header(canvas.width, canvas.height);
  os << "<g class=\"axes\" stroke=\"#888\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << ax.str(lo) << "\" y1=\"" << ypx(0) << "\" x2=\"" << ax.str(hi) << "\" y2=\"" << ypx(0) << "\"/>\n";
  os << "<line x1=\"" << ax.str(0) << "\" y1=\"" << ypx(lo) << "\" x2=\"" << ax.str(0) << "\" y2=\"" << ypx(hi) << "\"/>\n";
  os << "<rect x=\"" << ax.str(-1) << "\" y=\"" << ypx(1) << "\" width=\"" << decimal6(2 * ax.scale) << "\" height=\""
     << decimal6(2 * ax.scale) << "\" fill=\"none\" stroke-dasharray=\"4 3\"/>\n";
  os << "</g>\n";
  const auto [fin, marks] = drawable(s, 1 / ax.scale);
  os << "<g class=\"set\" fill=\"" << kPalette[0] << "\" stroke=\"none\">\n";
  for (const auto& [a, b] : fin.boxes()) {
    os << "<rect x=\"" << ax.str(a[0].coeff()) << "\" y=\"" << ypx(b[1].coeff()) << "\" width=\""
       << decimal6((b[0].coeff() - a[0].coeff()) * ax.scale) << "\" height=\""
       << decimal6((b[1].coeff() - a[1].coeff()) * ax.scale) << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto& m : marks) {
    os << "<circle cx=\"" << ax.str(m[0].coeff()) << "\" cy=\"" << ypx(m[1].coeff())
       << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wavesets
