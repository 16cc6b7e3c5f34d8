#include "plot.hpp"

#include <algorithm>
#include <cmath>

namespace qkcli {

namespace {

constexpr int kMargin = 10;

struct Axis {
  double lo, span;
  int pixels;
  int at(double v) const {
    double t = span > 0 ? (v - lo) / span : 0.5;
    return kMargin + static_cast<int>(std::lround(t * (pixels - 1 - 2 * kMargin)));
  }
};

Axis make_axis(double lo, double hi, int pixels) {
  if (!(hi > lo)) return {lo - 0.5, 0.0, pixels};
  return {lo, hi - lo, pixels};
}

void stamp(std::vector<std::uint8_t>& buf, int w, int h, int x, int y,
           int radius, std::uint8_t shade) {
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx) {
      int px = x + dx, py = y + dy;
      if (px >= 0 && px < w && py >= 0 && py < h)
        buf[static_cast<std::size_t>(py) * w + px] = shade;
    }
}

}  // namespace

std::vector<std::uint8_t> scatter_plot(const std::vector<double>& xs,
                                       const std::vector<double>& ys, int width,
                                       int height) {
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(width) * height, 255);
  if (xs.empty() || xs.size() != ys.size()) return buf;

  auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  Axis ax = make_axis(*xmin, *xmax, width);
  Axis ay = make_axis(*ymin, *ymax, height);

  for (std::size_t i = 0; i < xs.size(); ++i)
    stamp(buf, width, height, ax.at(xs[i]), height - 1 - ay.at(ys[i]), 1, 0);
  return buf;
}

std::vector<std::uint8_t> bar_chart(const std::vector<double>& values,
                                    int width, int height) {
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(width) * height, 255);
  if (values.empty()) return buf;

  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  Axis ay = make_axis(std::min(0.0, *mn), std::max(0.0, *mx), height);

  int base = height - 1 - ay.at(0.0);
  for (int x = kMargin; x < width - kMargin; ++x)
    buf[static_cast<std::size_t>(base) * width + x] = 128;

  const int n = static_cast<int>(values.size());
  const double slot = static_cast<double>(width - 2 * kMargin) / n;
  for (int i = 0; i < n; ++i) {
    int x0 = kMargin + static_cast<int>(std::lround(i * slot));
    int x1 = kMargin + static_cast<int>(std::lround((i + 1) * slot)) - 1;
    x1 = std::max(x0, std::min(x1, width - 1 - kMargin));
    int yv = height - 1 - ay.at(values[i]);
    int ytop = std::min(base, yv), ybot = std::max(base, yv);
    for (int y = ytop; y <= ybot; ++y)
      for (int x = x0; x <= x1; ++x)
        buf[static_cast<std::size_t>(y) * width + x] = 0;
  }
  return buf;
}

}  // namespace qkcli
