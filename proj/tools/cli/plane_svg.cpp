#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "cicrit/chern_plane.hpp"
#include "cicrit/ci_classifier.hpp"
#include "cicrit/errors.hpp"
#include "cli/commands.hpp"

namespace cicrit::cli {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 200.0;  // legend column
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;
constexpr int kCurveSamples = 240;
constexpr std::int64_t kMaxCells = 40000;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* region_color(Region r) {
  switch (r) {
    case Region::EmptyBelowExclusion:
      return "#f2f2f2";
    case Region::CometRegion:
      return "#fde0c5";
    case Region::CheckerRegion:
      return "#f4a582";
    case Region::HorizLines_e_m_neg:
      return "#92c5de";
    case Region::Grid_nLow_eNeg:
      return "#4393c3";
    case Region::VertLines_nLow:
      return "#d1e5f0";
    case Region::UnknownRegion:
      return "#bababa";
  }
  return "#ffffff";
}

class Frame {
 public:
  Frame(double d_max, double n_max) : d_max_(d_max), n_max_(n_max) {}
  double x(double d) const { return kLeft + d / d_max_ * (kWidth - kLeft - kRight); }
  double y(double n) const { return kHeight - kBottom - n / n_max_ * (kHeight - kTop - kBottom); }
  double d_max() const { return d_max_; }
  double n_max() const { return n_max_; }

 private:
  double d_max_;
  double n_max_;
};

template <typename F>
void polyline(std::ostringstream& svg, const Frame& f, F curve, const char* id, const char* stroke,
              const char* dash = nullptr) {
  svg << "<polyline id=\"" << id << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"";
  if (dash != nullptr) {
    svg << " stroke-dasharray=\"" << dash << "\"";
  }
  svg << " points=\"";
  bool first = true;
  for (int i = 0; i <= kCurveSamples; ++i) {
    const double d = f.d_max() * i / kCurveSamples;
    const double n = curve(d);
    if (!std::isfinite(n) || n < 0.0 || n > f.n_max()) {
      continue;
    }
    svg << (first ? "" : " ") << fmt(f.x(d)) << ',' << fmt(f.y(n));
    first = false;
  }
  svg << "\"/>\n";
}

void vertical(std::ostringstream& svg, const Frame& f, double d, const char* id, const char* stroke,
              const std::string& label, const char* dash = nullptr) {
  if (d < 0.0 || d > f.d_max()) {
    return;
  }
  svg << "<line id=\"" << id << "\" x1=\"" << fmt(f.x(d)) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\"" << fmt(f.x(d))
      << "\" y2=\"" << fmt(f.y(f.n_max())) << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"";
  if (dash != nullptr) {
    svg << " stroke-dasharray=\"" << dash << "\"";
  }
  svg << "/>\n";
  svg << "<text x=\"" << fmt(f.x(d) + 3) << "\" y=\"" << fmt(f.y(f.n_max()) + 12) << "\" font-size=\"10\">" << label
      << "</text>\n";
}

}  // namespace

std::string render_plane_svg(const VarietyDescriptor& desc, std::optional<std::int64_t> d_max_opt) {
  const VarietyInvariants inv = invariants(desc);
  if (!inv.sp) {
    throw DataUnavailable("plot: sp is not tabulated for " + desc.name());
  }
  if (inv.m < 1 || inv.p_pos.value < 3) {
    throw DataUnavailable("plot: needs m >= 1 and p >= 3, got m = " + std::to_string(inv.m) +
                          ", p = " + std::to_string(inv.p_pos.value));
  }
  const std::int64_t m = inv.m;
  const unsigned p = inv.p_pos.value;
  const Rational plain = degree_lower_bound(inv, false);
  const Rational sharp = degree_lower_bound(inv, true);
  const Rational exclusion = std::max(plain, sharp);

  const std::int64_t d_max = d_max_opt.value_or(std::max<std::int64_t>(10, 2 * m * m));
  const std::int64_t n_max =
      std::max<std::int64_t>(4 * m, static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(double(d_max))))) + 2;
  const Frame frame(static_cast<double>(d_max), static_cast<double>(n_max));
  const double cos_t = std::cos(std::numbers::pi / (p - 1));

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight) << "\">\n"
      << "<title>(d, n)-plane for " << desc.name() << ": m = " << m << ", p = " << p << ", sp = " << inv.sp->value
      << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight) << "\" fill=\"#ffffff\"/>\n";

  // Region shading on the integer lattice, subsampled for large ranges.
  const std::int64_t cells = d_max * n_max;
  const std::int64_t stride =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::sqrt(double(cells) / kMaxCells))));
  const double cell_w = frame.x(static_cast<double>(stride)) - frame.x(0);
  const double cell_h = frame.y(0) - frame.y(static_cast<double>(stride));
  svg << "<g id=\"regions\" stroke=\"none\">\n";
  for (std::int64_t n = 1; n <= n_max; n += stride) {
    for (std::int64_t d = 1; d <= d_max; d += stride) {
      const Region r = plane_region(inv, exclusion, d, n);
      svg << "<rect x=\"" << fmt(frame.x(double(d) - 0.5 * stride)) << "\" y=\""
          << fmt(frame.y(double(n) + 0.5 * stride)) << "\" width=\"" << fmt(cell_w) << "\" height=\""
          << fmt(cell_h) << "\" fill=\"" << region_color(r) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  // Axes.
  svg << "<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt(frame.x(0)) << "\" y1=\"" << fmt(frame.y(0)) << "\" x2=\"" << fmt(frame.x(frame.d_max()))
      << "\" y2=\"" << fmt(frame.y(0)) << "\"/>\n"
      << "<line x1=\"" << fmt(frame.x(0)) << "\" y1=\"" << fmt(frame.y(0)) << "\" x2=\"" << fmt(frame.x(0))
      << "\" y2=\"" << fmt(frame.y(frame.n_max())) << "\"/>\n"
      << "</g>\n"
      << "<text x=\"" << fmt(frame.x(frame.d_max()) - 10) << "\" y=\"" << fmt(frame.y(0) + 30)
      << "\" font-size=\"12\">d</text>\n"
      << "<text x=\"" << fmt(frame.x(0) - 40) << "\" y=\"" << fmt(frame.y(frame.n_max()) + 10)
      << "\" font-size=\"12\">n</text>\n"
      << "<text x=\"" << fmt(frame.x(0)) << "\" y=\"" << fmt(frame.y(0) + 15) << "\" font-size=\"10\">0</text>\n"
      << "<text x=\"" << fmt(frame.x(frame.d_max()) - 20) << "\" y=\"" << fmt(frame.y(0) + 15)
      << "\" font-size=\"10\">" << d_max << "</text>\n"
      << "<text x=\"" << fmt(frame.x(0) - 25) << "\" y=\"" << fmt(frame.y(frame.n_max()) + 4)
      << "\" font-size=\"10\">" << n_max << "</text>\n";

  // Curves and lines.
  polyline(svg, frame, [](double d) { return 2.0 * std::sqrt(d); }, "delta-zero", "#000000");
  polyline(svg, frame, [cos_t](double d) { return 2.0 * cos_t * std::sqrt(d); }, "angle-bound", "#b2182b");
  polyline(svg, frame, [m](double d) { return d / double(m) + double(m); }, "e-m-zero", "#2166ac");
  vertical(svg, frame, double(m * m), "d-m-squared", "#000000", "d = m^2");
  vertical(svg, frame, plain.to_double(), "thmDgt-bound", "#762a83", "d = " + plain.decimal(6));
  vertical(svg, frame, sharp.to_double(), "thmDgt-sharp", "#762a83", "d = " + sharp.decimal(6) + " (sharp)", "6,4");

  // Tangency point of n = d/m + m with n = 2 sqrt(d).
  if (m * m <= d_max && 2 * m <= n_max) {
    svg << "<circle id=\"tangency\" cx=\"" << fmt(frame.x(double(m * m))) << "\" cy=\"" << fmt(frame.y(double(2 * m)))
        << "\" r=\"4\" fill=\"#000000\"/>\n"
        << "<text x=\"" << fmt(frame.x(double(m * m)) + 6) << "\" y=\"" << fmt(frame.y(double(2 * m)) - 6)
        << "\" font-size=\"10\">(" << m * m << ", " << 2 * m << ")</text>\n";
  }

  // Legend.
  const double lx = kWidth - kRight + 15;
  double ly = kTop + 10;
  svg << "<g id=\"legend\" font-size=\"10\">\n";
  for (const Region r : {Region::EmptyBelowExclusion, Region::CometRegion, Region::CheckerRegion,
                         Region::HorizLines_e_m_neg, Region::Grid_nLow_eNeg, Region::VertLines_nLow,
                         Region::UnknownRegion}) {
    svg << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly - 8) << "\" width=\"10\" height=\"10\" fill=\""
        << region_color(r) << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n"
        << "<text x=\"" << fmt(lx + 14) << "\" y=\"" << fmt(ly) << "\">" << to_string(r) << "</text>\n";
    ly += 16;
  }
  ly += 8;
  const std::pair<const char*, const char*> curves[] = {{"#000000", "n = 2 sqrt(d), Delta = 0"},
                                                         {"#b2182b", "n = 2 cos(pi/(p-1)) sqrt(d)"},
                                                         {"#2166ac", "n = d/m + m, e(m) = 0"},
                                                         {"#762a83", "degree lower bounds"}};
  for (const auto& [color, text] : curves) {
    svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << fmt(lx + 10) << "\" y2=\""
        << fmt(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fmt(lx + 14) << "\" y=\"" << fmt(ly) << "\">" << text << "</text>\n";
    ly += 16;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace cicrit::cli
