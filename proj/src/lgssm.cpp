#include "smc/lgssm.hpp"

#include <cmath>

#include "smc/errors.hpp"
#include "smc/logspace.hpp"

namespace smc {

void LgssmParams::validate() const {
    if (!(initial_var > 0.0))
        throw ParameterError("lgssm: initial variance must be > 0");
    if (!(sigma2_x > 0.0))
        throw ParameterError("lgssm: transition noise variance must be > 0");
    if (!(sigma2_y > 0.0))
        throw ParameterError("lgssm: observation noise variance must be > 0");
}

LgssmModel::LgssmModel(LgssmParams params) : params_(params) {
    params_.validate();
}

double LgssmModel::sample_initial(SplitMix64& rng) const {
    return params_.initial_mean + std::sqrt(params_.initial_var) * normal01(rng);
}

double LgssmModel::sample_transition(const TrajectoryView& prefix, SplitMix64& rng) const {
    return params_.a * prefix.back() + std::sqrt(params_.sigma2_x) * normal01(rng);
}

double LgssmModel::log_g(const TrajectoryView& prefix, double y) const {
    return log_normal_pdf(y, params_.c * prefix.back(), params_.sigma2_y);
}

double LgssmModel::sample_observation(const TrajectoryView& prefix, SplitMix64& rng) const {
    return params_.c * prefix.back() + std::sqrt(params_.sigma2_y) * normal01(rng);
}

StateDescriptor LgssmModel::state_descriptor() const {
    return {StateDescriptor::Kind::Continuous, 0, 1};
}

KalmanResult kalman_filter(const LgssmParams& params, const Dataset& data) {
    params.validate();
    const int n_obs = static_cast<int>(data.observations.size());
    if (n_obs == 0)
        throw ParameterError("kalman_filter: empty observation sequence");
    for (double y : data.observations)
        if (!std::isfinite(y))
            throw ParameterError("kalman_filter: observations must be finite");

    KalmanResult out;
    out.mean.reserve(n_obs);
    out.variance.reserve(n_obs);

    double m = params.initial_mean;
    double p = params.initial_var;
    double log_z = 0.0;
    for (int n = 0; n < n_obs; ++n) {
        if (n > 0) {
            m = params.a * m;
            p = params.a * params.a * p + params.sigma2_x;
        }
        const double y = data.observations[n];
        // predictive density of y_n, then the conjugate update
        const double s = params.c * params.c * p + params.sigma2_y;
        log_z += log_normal_pdf(y, params.c * m, s);
        const double gain = p * params.c / s;
        m += gain * (y - params.c * m);
        p *= 1.0 - gain * params.c;
        out.mean.push_back(m);
        out.variance.push_back(p);
    }
    out.log_z = log_z;
    return out;
}

} // namespace smc
