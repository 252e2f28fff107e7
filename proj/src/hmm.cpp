#include "smc/hmm.hpp"

#include <cmath>
#include <numeric>

#include "smc/errors.hpp"
#include "smc/logspace.hpp"

namespace smc {

namespace {

int categorical(const std::vector<double>& probs, SplitMix64& rng) {
    const double u = uniform01(rng);
    double acc = 0.0;
    const int n = static_cast<int>(probs.size());
    for (int i = 0; i < n; ++i) {
        acc += probs[i];
        if (u < acc) return i;
    }
    return n - 1; // u landed in the rounding slack past the last boundary
}

} // namespace

void HmmParams::validate() const {
    if (states < 1)
        throw ParameterError("hmm: state count must be >= 1");
    const auto s = static_cast<std::size_t>(states);
    if (!initial.empty() && initial.size() != s)
        throw ParameterError("hmm: initial distribution size mismatch");
    if (transition.size() != s)
        throw ParameterError("hmm: transition matrix must have one row per state");
    for (const auto& row : transition) {
        if (row.size() != s)
            throw ParameterError("hmm: transition row size mismatch");
        double sum = 0.0;
        for (double p : row) {
            if (!(p >= 0.0))
                throw ParameterError("hmm: transition probabilities must be nonnegative");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw ParameterError("hmm: transition row does not sum to 1");
    }
    if (!initial.empty()) {
        double sum = std::accumulate(initial.begin(), initial.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-12)
            throw ParameterError("hmm: initial distribution does not sum to 1");
    }
    if (emission_mean.size() != s || emission_sd.size() != s)
        throw ParameterError("hmm: emission parameter size mismatch");
    for (double sd : emission_sd)
        if (!(sd > 0.0))
            throw ParameterError("hmm: emission standard deviations must be > 0");
}

HmmModel::HmmModel(HmmParams params) : params_(std::move(params)) {
    params_.validate();
    if (params_.initial.empty())
        params_.initial.assign(params_.states, 1.0 / params_.states);
}

int HmmModel::state_of(double x) const {
    return static_cast<int>(std::lround(x));
}

double HmmModel::sample_initial(SplitMix64& rng) const {
    return static_cast<double>(categorical(params_.initial, rng));
}

double HmmModel::sample_transition(const TrajectoryView& prefix, SplitMix64& rng) const {
    const int s = state_of(prefix.back());
    return static_cast<double>(categorical(params_.transition[s], rng));
}

double HmmModel::log_g(const TrajectoryView& prefix, double y) const {
    const int s = state_of(prefix.back());
    const double sd = params_.emission_sd[s];
    return log_normal_pdf(y, params_.emission_mean[s], sd * sd);
}

double HmmModel::sample_observation(const TrajectoryView& prefix, SplitMix64& rng) const {
    const int s = state_of(prefix.back());
    return params_.emission_mean[s] + params_.emission_sd[s] * normal01(rng);
}

StateDescriptor HmmModel::state_descriptor() const {
    return {StateDescriptor::Kind::Discrete, params_.states, 1};
}

HmmForwardResult hmm_forward(const HmmParams& params, const Dataset& data) {
    params.validate();
    const int s = params.states;
    const int n_obs = static_cast<int>(data.observations.size());
    if (n_obs == 0)
        throw ParameterError("hmm_forward: empty observation sequence");
    for (double y : data.observations)
        if (!std::isfinite(y))
            throw ParameterError("hmm_forward: observations must be finite");

    std::vector<double> initial = params.initial;
    if (initial.empty()) initial.assign(s, 1.0 / s);

    HmmForwardResult out;
    out.marginals.assign(n_obs, std::vector<double>(s, 0.0));

    // alpha carries the normalized filtering distribution; the normalizers
    // accumulate into log Z.
    std::vector<double> alpha(s), next(s);
    double log_z = 0.0;
    for (int n = 0; n < n_obs; ++n) {
        const double y = data.observations[n];
        if (n == 0) {
            for (int i = 0; i < s; ++i)
                next[i] = initial[i];
        } else {
            for (int j = 0; j < s; ++j) {
                double acc = 0.0;
                for (int i = 0; i < s; ++i)
                    acc += alpha[i] * params.transition[i][j];
                next[j] = acc;
            }
        }
        double norm = 0.0;
        for (int j = 0; j < s; ++j) {
            const double sd = params.emission_sd[j];
            next[j] *= std::exp(log_normal_pdf(y, params.emission_mean[j], sd * sd));
            norm += next[j];
        }
        if (!(norm > 0.0))
            throw DegeneracyError("hmm_forward: total likelihood underflowed at step " + std::to_string(n));
        for (int j = 0; j < s; ++j)
            next[j] /= norm;
        log_z += std::log(norm);
        out.marginals[n] = next;
        alpha.swap(next);
    }
    out.log_z = log_z;
    return out;
}

} // namespace smc
