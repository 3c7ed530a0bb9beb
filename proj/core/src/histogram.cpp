#include "noderank/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "noderank/error.hpp"
#include "noderank/format.hpp"

namespace noderank {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Histogram make_histogram(std::span<const double> values, std::size_t bins) {
  if (bins == 0) fail(ErrorCode::InvalidArgument, "histogram needs at least one bin");
  Histogram h;
  if (values.empty()) {
    h.edges = {0.0, 0.0};
    h.counts = {0};
    return h;
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (lo == hi) {
    h.edges = {lo, hi};
    h.counts = {values.size()};
    return h;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  h.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = lo + width * static_cast<double>(b);
  h.edges[bins] = hi;
  h.counts.assign(bins, 0);
  for (double v : values) {
    auto b = static_cast<std::size_t>(std::floor((v - lo) / width));
    ++h.counts[std::min(b, bins - 1)];
  }
  return h;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_start,bin_end,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << format_real(h.edges[b]) << ',' << format_real(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
  }
}

void write_histogram_svg(std::ostream& out, const Histogram& h, const std::string& title, bool log_y) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto scale = [log_y](std::size_t c) {
    return log_y ? std::log10(1.0 + static_cast<double>(c)) : static_cast<double>(c);
  };
  std::size_t peak = 0;
  for (auto c : h.counts) peak = std::max(peak, c);
  const double top = peak == 0 ? 1.0 : scale(peak);
  const double bar_w = plot_w / static_cast<double>(std::max<std::size_t>(1, h.counts.size()));

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape_xml(title) << "</text>\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    const double bh = plot_h * scale(h.counts[b]) / top;
    out << "<rect x=\"" << fixed(kLeft + bar_w * static_cast<double>(b)) << "\" y=\""
        << fixed(kTop + plot_h - bh) << "\" width=\"" << fixed(bar_w) << "\" height=\"" << fixed(bh)
        << "\" fill=\"steelblue\" stroke=\"white\" data-count=\"" << h.counts[b] << "\"/>\n";
  }
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  const auto text = [&](double x, double y, const char* anchor, const std::string& s) {
    out << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(s) << "</text>\n";
  };
  text(kLeft, kTop + plot_h + 18, "start", format_real(h.edges.front()));
  text(kLeft + plot_w, kTop + plot_h + 18, "end", format_real(h.edges.back()));
  text(kLeft - 6, kTop + 4, "end", std::to_string(peak));
  text(kLeft - 6, kTop + plot_h, "end", "0");
  if (log_y) text(kLeft + plot_w, kTop - 6, "end", "log scale");
  out << "</svg>\n";
}

}  // namespace noderank
