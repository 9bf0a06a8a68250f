#include <cmath>

#include "cubedist/distortion.hpp"
#include "cubedist/error.hpp"

namespace cubedist {

namespace {

// Least-squares slope of y against x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double den = n * sxx - sx * sx;
  return den == 0 ? 0 : (n * sxy - sx * sy) / den;
}

}  // namespace

GrowthClass classify_growth(const std::vector<DistortionSample>& samples, int max_height) {
  if (samples.size() < 5) throw Error(ErrorKind::InsufficientData, "need at least 5 samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].n <= samples[i - 1].n) throw Error(ErrorKind::InvalidParam, "samples must have increasing n");
  if (samples.front().n <= 0) throw Error(ErrorKind::InvalidParam, "samples need n >= 1");

  const std::size_t total = samples.size();
  const std::size_t half = (total + 1) / 2;
  std::vector<double> lx;
  for (const auto& s : samples) lx.push_back(std::log(static_cast<double>(s.n)));

  std::optional<GrowthClass> fallback;
  for (int k = 0; k <= max_height; ++k) {
    std::vector<double> ly;
    bool usable = true;
    for (const auto& s : samples) {
      double y = s.subgroup_len.iterated_log(k);
      if (!std::isfinite(y) || y <= 0) {
        usable = false;
        break;
      }
      ly.push_back(std::log(y));
    }
    if (!usable) continue;
    std::vector<double> x1(lx.begin(), lx.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<double> y1(ly.begin(), ly.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<double> x2(lx.end() - static_cast<std::ptrdiff_t>(half), lx.end());
    std::vector<double> y2(ly.end() - static_cast<std::ptrdiff_t>(half), ly.end());
    double s1 = slope(x1, y1), s2 = slope(x2, y2);
    GrowthClass g{k, s2};
    if (!fallback) fallback = g;
    // Polynomial residue: the log-log slope does not keep climbing.
    if (s2 <= 0.05 || (s1 > 0 && s2 / s1 <= 1.5)) return g;
  }
  if (!fallback) throw Error(ErrorKind::InsufficientData, "no log level gives finite positive values");
  return *fallback;
}

}  // namespace cubedist
