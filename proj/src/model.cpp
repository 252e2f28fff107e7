#include "smc/model.hpp"

#include "smc/errors.hpp"

namespace smc {

Dataset Dataset::truncated(std::size_t steps) const {
    if (steps == 0 || steps > observations.size())
        throw ParameterError("Dataset::truncated: steps out of range");
    Dataset out;
    out.observations.assign(observations.begin(), observations.begin() + steps);
    if (!latent.empty())
        out.latent.assign(latent.begin(), latent.begin() + steps);
    out.seed = seed;
    return out;
}

Dataset simulate(const StateSpaceModel& model, int steps, std::uint64_t seed) {
    if (steps < 1)
        throw ParameterError("simulate: steps must be >= 1");

    Dataset data;
    data.seed = seed;
    data.latent.reserve(steps);
    data.observations.reserve(steps);

    for (int n = 0; n < steps; ++n) {
        SplitMix64 rng = derive_stream(seed, StreamKind::Simulate, static_cast<std::uint64_t>(n));
        double x;
        if (n == 0) {
            x = model.sample_initial(rng);
        } else {
            TrajectoryView prefix(data.latent.data(), data.latent.size());
            x = model.sample_transition(prefix, rng);
        }
        data.latent.push_back(x);

        TrajectoryView prefix(data.latent.data(), data.latent.size());
        data.observations.push_back(model.sample_observation(prefix, rng));
    }
    return data;
}

} // namespace smc
