#pragma once

#include <vector>

#include "smc/model.hpp"

namespace smc {

// Discrete hidden Markov model with per-state Gaussian emissions.
struct HmmParams {
    int states = 10;
    std::vector<double> initial;                  // size S; defaults to uniform
    std::vector<std::vector<double>> transition;  // S x S, rows sum to 1 within 1e-12
    std::vector<double> emission_mean;            // size S
    std::vector<double> emission_sd;              // size S, strictly positive

    void validate() const; // throws ParameterError
};

class HmmModel final : public StateSpaceModel {
public:
    explicit HmmModel(HmmParams params);

    double sample_initial(SplitMix64& rng) const override;
    double sample_transition(const TrajectoryView& prefix, SplitMix64& rng) const override;
    double log_g(const TrajectoryView& prefix, double y) const override;
    StateDescriptor state_descriptor() const override;
    std::string name() const override { return "hmm"; }

    const HmmParams& params() const { return params_; }

private:
    int state_of(double x) const;

    HmmParams params_;
};

struct HmmForwardResult {
    std::vector<std::vector<double>> marginals; // (N+1) x S filtering distributions
    double log_z = 0.0;                         // log p(y_{0:N})
};

// Exact filtering by the forward algorithm, normalized at every step.
// Throws DegeneracyError if the total likelihood underflows at some step.
HmmForwardResult hmm_forward(const HmmParams& params, const Dataset& data);

} // namespace smc
