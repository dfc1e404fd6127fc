#pragma once

// Minimal statistics helpers for the experiment harness and tests:
// Pearson chi-square against given expected counts, p-value from the
// chi-square survival function.

#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "psat/error.hpp"

namespace psat {

struct ChiSquare {
  double stat = 0.0;
  int64_t df = 0;
  double p = 1.0;
};

inline double chi_square_pvalue(double stat, int64_t df) {
  if (df <= 0) fail(errc::invalid_argument, "chi_square_pvalue: df <= 0");
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(df));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

inline ChiSquare chi_square_uniform(const std::vector<uint64_t> &observed) {
  if (observed.size() < 2) fail(errc::invalid_argument, "chi_square_uniform: < 2 cells");
  uint64_t total = 0;
  for (uint64_t o : observed) total += o;
  if (total == 0) fail(errc::invalid_argument, "chi_square_uniform: empty sample");
  const double expected = static_cast<double>(total) / observed.size();
  ChiSquare r;
  for (uint64_t o : observed) {
    const double d = static_cast<double>(o) - expected;
    r.stat += d * d / expected;
  }
  r.df = static_cast<int64_t>(observed.size()) - 1;
  r.p = chi_square_pvalue(r.stat, r.df);
  return r;
}

}  // namespace psat
