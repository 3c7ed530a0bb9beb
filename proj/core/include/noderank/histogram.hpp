#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace noderank {

struct Histogram {
  /// bins + 1 ascending edges; the last bin is closed on the right.
  std::vector<double> edges;
  std::vector<std::size_t> counts;
};

/// Equal-width bins over [min, max]. A constant input yields a single
/// zero-width bin holding every value. Throws InvalidArgument for bins == 0.
Histogram make_histogram(std::span<const double> values, std::size_t bins);

/// CSV with columns bin_start,bin_end,count.
void write_histogram_csv(std::ostream& out, const Histogram& h);

/// Plain SVG bar chart (rects and axis lines only). With log_y the bar
/// heights follow log10(1 + count).
void write_histogram_svg(std::ostream& out, const Histogram& h, const std::string& title,
                         bool log_y = false);

}  // namespace noderank
