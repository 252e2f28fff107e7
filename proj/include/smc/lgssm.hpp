#pragma once

#include <vector>

#include "smc/model.hpp"

namespace smc {

// One-dimensional linear Gaussian state-space model:
//   x_0 ~ N(initial_mean, initial_var)
//   x_n = a x_{n-1} + e_n,   e_n ~ N(0, sigma2_x)
//   y_n = c x_n     + v_n,   v_n ~ N(0, sigma2_y)
struct LgssmParams {
    double initial_mean = 0.0;
    double initial_var = 1.0;
    double a = 1.0;
    double sigma2_x = 1.0;
    double c = 1.0;
    double sigma2_y = 1.0;

    void validate() const; // throws ParameterError
};

class LgssmModel final : public StateSpaceModel {
public:
    explicit LgssmModel(LgssmParams params);

    double sample_initial(SplitMix64& rng) const override;
    double sample_transition(const TrajectoryView& prefix, SplitMix64& rng) const override;
    double log_g(const TrajectoryView& prefix, double y) const override;
    StateDescriptor state_descriptor() const override;
    std::string name() const override { return "lgssm"; }

    const LgssmParams& params() const { return params_; }

private:
    LgssmParams params_;
};

struct KalmanResult {
    std::vector<double> mean;     // filtering mean per step
    std::vector<double> variance; // filtering variance per step, > 0
    double log_z = 0.0;           // log p(y_{0:N})
};

KalmanResult kalman_filter(const LgssmParams& params, const Dataset& data);

} // namespace smc
