// Statistical helpers used by tests and experiment reports: binomial
// confidence bands, total-variation distance against exact distributions,
// and a two-sample chi-square homogeneity test.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skl::stats {

// Standard deviation of a Binomial(n, p) count.
double binomial_sigma(uint64_t n, double p);

// |observed/n - p| <= k * sigma(p)/n ?  (rate-scale check)
bool within_k_sigma(uint64_t observed, uint64_t n, double p, double k = 3.0);

// Two-sided band edges for reports.
struct RateBand {
  double rate;
  double expected;
  double low;
  double high;
  bool ok;
};
RateBand rate_band(uint64_t observed, uint64_t n, double p, double k = 3.0);

// Total variation distance between an empirical count vector and an exact
// probability vector over the same outcome indexing. counts need not be
// normalized; probs should sum to ~1.
double tv_distance(const std::vector<uint64_t>& counts, const std::vector<double>& probs);

// Pearson chi-square homogeneity test for two histograms over identical bins.
// Bins with too few pooled entries are merged into their neighbor so the
// asymptotics are valid. Returns the p-value (1.0 if both are empty).
double chi_square_two_sample_p(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

// Equal-width histogram helper.
std::vector<uint64_t> histogram(const std::vector<double>& samples, double lo, double hi, size_t bins);

}  // namespace skl::stats
