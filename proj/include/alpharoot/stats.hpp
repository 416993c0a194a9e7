#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace alpharoot {

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;     // standard error of the mean
    double sd = 0.0;     // sample standard deviation
};

MeanSe mean_se(const std::vector<double>& xs);

// ordinary least squares y = intercept + slope * x
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Spearman rank correlation (average ranks on ties)
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

// interpolated quantile, q in [0, 1]
double quantile(std::vector<double> xs, double q);

}  // namespace alpharoot
