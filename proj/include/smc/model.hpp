#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smc/path.hpp"
#include "smc/rng.hpp"

namespace smc {

struct StateDescriptor {
    enum class Kind { Discrete, Continuous };
    Kind kind = Kind::Continuous;
    int cardinality = 0; // Discrete: number of states
    int dimension = 1;   // Continuous: state dimension

    // Width of the per-stage summary used for posterior-marginal estimates:
    // indicator vector over states for discrete models, the raw coordinate
    // for continuous ones.
    int projection_dim() const {
        return kind == Kind::Discrete ? cardinality : dimension;
    }
};

// Generative state-space model interface:
//   X_0 ~ mu,  X_n | X_{0:n-1} ~ f,  Y_n | X_{0:n} ~ g.
// The transition sampler doubles as the proposal, so importance weights
// reduce to the observation density g evaluated pointwise.
//
// Implementations must be immutable after construction; all sampling state
// lives in the caller-supplied stream.
class StateSpaceModel {
public:
    virtual ~StateSpaceModel() = default;

    virtual double sample_initial(SplitMix64& rng) const = 0;

    // prefix is x_{0:n}; returns x_{n+1}. May depend on the whole prefix.
    virtual double sample_transition(const TrajectoryView& prefix, SplitMix64& rng) const = 0;

    // log g(y | x_{0:n}) with prefix.back() == x_n. Finite or -inf, never NaN.
    virtual double log_g(const TrajectoryView& prefix, double y) const = 0;

    // y ~ g(. | x_{0:n}); used only for synthetic data generation.
    virtual double sample_observation(const TrajectoryView& prefix, SplitMix64& rng) const = 0;

    virtual StateDescriptor state_descriptor() const = 0;
    virtual std::string name() const = 0;
};

struct Dataset {
    std::vector<double> observations; // y_0 .. y_N
    std::vector<double> latent;       // generating trajectory, empty if unknown
    std::uint64_t seed = 0;

    int last_stage() const { return static_cast<int>(observations.size()) - 1; }

    // First `steps` observations; handy for studying stage-count dynamics
    // without paying for a full run.
    Dataset truncated(std::size_t steps) const;
};

// Forward-samples `steps` observations (and the latent trajectory) from the
// model. Bit-reproducible for a given seed.
Dataset simulate(const StateSpaceModel& model, int steps, std::uint64_t seed);

} // namespace smc
