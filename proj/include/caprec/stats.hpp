#pragma once

#include <cstddef>
#include <span>

namespace caprec {

double mean(std::span<const double> xs);

// Unbiased sample standard deviation (n-1 denominator). Requires n >= 2.
double sample_sd(std::span<const double> xs);

// Standard normal quantile, accurate to near machine precision (rational
// approximation refined by one Halley step against erfc). p in (0, 1).
double normal_quantile(double p);

double normal_cdf(double x);

// Ordinary least squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

// Type-7 empirical quantile (linear interpolation) of already-sorted values.
double quantile_sorted(std::span<const double> sorted, double p);

} // namespace caprec
