#include "skl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

namespace skl::stats {

double binomial_sigma(uint64_t n, double p) { return std::sqrt(static_cast<double>(n) * p * (1.0 - p)); }

bool within_k_sigma(uint64_t observed, uint64_t n, double p, double k) {
  const double mean = static_cast<double>(n) * p;
  const double sigma = binomial_sigma(n, p);
  return std::abs(static_cast<double>(observed) - mean) <= k * sigma;
}

RateBand rate_band(uint64_t observed, uint64_t n, double p, double k) {
  RateBand b;
  b.rate = static_cast<double>(observed) / static_cast<double>(n);
  b.expected = p;
  const double half = k * binomial_sigma(n, p) / static_cast<double>(n);
  b.low = p - half;
  b.high = p + half;
  b.ok = b.rate >= b.low && b.rate <= b.high;
  return b;
}

double tv_distance(const std::vector<uint64_t>& counts, const std::vector<double>& probs) {
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    const double emp = i < counts.size() ? static_cast<double>(counts[i]) / static_cast<double>(total) : 0.0;
    acc += std::abs(emp - probs[i]);
  }
  return acc / 2.0;
}

double chi_square_two_sample_p(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  // Merge sparse bins left-to-right until each pooled bin has >= 10 entries.
  std::vector<double> xa, xb;
  double ca = 0, cb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ca += static_cast<double>(a[i]);
    cb += static_cast<double>(b[i]);
    if (ca + cb >= 10.0) {
      xa.push_back(ca);
      xb.push_back(cb);
      ca = cb = 0;
    }
  }
  if (ca + cb > 0) {
    if (xa.empty()) {
      xa.push_back(ca);
      xb.push_back(cb);
    } else {
      xa.back() += ca;
      xb.back() += cb;
    }
  }
  if (xa.size() < 2) return 1.0;

  const double na = std::accumulate(xa.begin(), xa.end(), 0.0);
  const double nb = std::accumulate(xb.begin(), xb.end(), 0.0);
  if (na == 0 || nb == 0) return 1.0;

  double stat = 0.0;
  for (size_t i = 0; i < xa.size(); ++i) {
    const double pooled = (xa[i] + xb[i]) / (na + nb);
    const double ea = na * pooled;
    const double eb = nb * pooled;
    stat += (xa[i] - ea) * (xa[i] - ea) / ea;
    stat += (xb[i] - eb) * (xb[i] - eb) / eb;
  }
  const double dof = static_cast<double>(xa.size() - 1);
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

std::vector<uint64_t> histogram(const std::vector<double>& samples, double lo, double hi, size_t bins) {
  std::vector<uint64_t> h(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double s : samples) {
    auto idx = static_cast<int64_t>(std::floor((s - lo) / width));
    idx = std::clamp<int64_t>(idx, 0, static_cast<int64_t>(bins) - 1);
    h[static_cast<size_t>(idx)]++;
  }
  return h;
}

}  // namespace skl::stats
