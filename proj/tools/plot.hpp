#pragma once

#include <cstdint>
#include <vector>

namespace qkcli {

// Minimal rasterizers for the figure exports. White background (255),
// black marks (0). Deterministic: pure integer/float arithmetic, no
// timestamps or external state.

// Dots of radius 1 at the data points, axes spanning the data ranges.
std::vector<std::uint8_t> scatter_plot(const std::vector<double>& xs,
                                       const std::vector<double>& ys, int width,
                                       int height);

// One bar per value, drawn from the zero baseline; the baseline itself is
// a mid-gray horizontal rule.
std::vector<std::uint8_t> bar_chart(const std::vector<double>& values,
                                    int width, int height);

}  // namespace qkcli
