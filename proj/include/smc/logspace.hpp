#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace smc {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kLog2Pi = 1.8378770664093454835606594728112;

// log(exp(a) + exp(b)) without leaving log space.
inline double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

inline double log_sum_exp(std::span<const double> values) {
    double m = kNegInf;
    for (double v : values) m = std::max(m, v);
    if (m == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double v : values) acc += std::exp(v - m);
    return m + std::log(acc);
}

// log N(x; mean, var), variance parameterization.
inline double log_normal_pdf(double x, double mean, double var) {
    const double d = x - mean;
    return -0.5 * (kLog2Pi + std::log(var) + d * d / var);
}

} // namespace smc
