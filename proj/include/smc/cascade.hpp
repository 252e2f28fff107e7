#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "smc/logspace.hpp"
#include "smc/path.hpp"
#include "smc/rng.hpp"

namespace smc {

// Offspring count and outgoing weight for one particle at one observation.
// log_weight is meaningful only when offspring >= 1.
struct BranchDecision {
    std::uint32_t offspring = 0;
    double log_weight = kNegInf;
};

// One live trajectory hypothesis. log_out is the incoming weight V assigned
// by the parent's branching decision; log_weight is V * g(y_n | x_{0:n})
// after processing observation n. multiplicity counts the virtual particles
// this task stands for after queue-full collapses.
struct Particle {
    PathPtr path;
    int stage = -1;
    double log_weight = 0.0;
    double log_out = 0.0;
    double log_g_last = 0.0;
    std::uint64_t multiplicity = 1;
    std::uint64_t lineage = 0;
};

// Arrival-order statistics for a single observation. Everything a particle
// needs in order to branch locally lives here; it never sees other particle
// states, only these summaries.
struct StageStats {
    std::uint64_t arrivals = 0;       // k: particles that reached this observation
    std::uint64_t mult_sum = 0;       // S_k: arrivals counted with multiplicity
    std::uint64_t children = 0;       // children issued so far (raw count)
    std::uint64_t target_k0 = 0;      // initial-particle target seen at the latest arrival
    double log_avg_weight = kNegInf;  // multiplicity-weighted running mean of weights
    double log_weight_sum = kNegInf;  // accumulated log sum of C * W over arrivals

    // Fold one arriving weight into the running average:
    //   avg <- (S_prev * avg + C * W) / (S_prev + C)
    // computed in log space. The first arrival sets the average outright.
    void absorb(double log_w, std::uint64_t multiplicity);

    // R = W / avg on the linear scale; requires the arriving particle's own
    // weight to be absorbed already, so the first arrival always sees R = 1.
    // Zero-weight arrivals get R = 0. Throws DegeneracyError when the average
    // itself is zero for a positive-weight query, and RunawayError past the
    // sanity cap.
    double ratio(double log_w) const;
};

// Offspring counts above this are treated as a model misconfiguration.
inline constexpr double kMaxBranchRatio = 2147483648.0; // 2^31

// The local branching rule. Randomized below average, deterministic above:
//   R < 1:  0 children w.p. 1-R, else 1 child with weight avg
//   R >= 1: floor(R) children with weight W/floor(R) if enough children have
//           already been issued (children_so_far > min(k0, k-1)), else
//           ceil(R) children with weight W/ceil(R)
// Either way E[M * V] = W given the inputs.
BranchDecision branch(double ratio, double log_w, double log_avg,
                      std::uint64_t children_so_far, std::uint64_t arrival_index,
                      std::uint64_t k0, SplitMix64& rng);

// Final-stage weight with the multiplicity folded back in: C * V * w.
double finalize_weight(std::uint64_t multiplicity, double log_out, double log_g_n);

struct CompletedParticle {
    std::uint64_t lineage = 0;
    std::uint64_t multiplicity = 1;
    double log_weight = kNegInf; // finalize_weight() at the last observation
    PathPtr path;
};

// Result of a drained run: per-stage statistics snapshots plus the completed
// weighted trajectories.
struct CascadeRun {
    std::uint64_t initial_count = 0;     // K_0: initial particles launched
    std::vector<StageStats> stages;      // one snapshot per observation
    std::vector<std::uint64_t> died;     // per stage, multiplicity-expanded
    std::vector<CompletedParticle> completed;
    std::uint64_t max_live = 0;          // peak simultaneous tasks observed
    bool drained = false;

    // K_n: arrivals at observation n counted with multiplicity.
    std::uint64_t stage_count(int n) const;

    // log of (1/K_0) sum_k W_n^k over the multiplicity-expanded population.
    // Requires the run to be drained through stage n.
    double log_marginal_likelihood(int n) const;
    double marginal_likelihood(int n) const;

    // log of the predictive term: stage-n weight sum over stage-(n-1) weight
    // sum, with the n = 0 case normalized by K_0. The terms telescope back to
    // the marginal likelihood.
    double log_predictive(int n) const;

    // Self-normalized posterior expectation of phi over completed
    // trajectories. Throws DegeneracyError when all final weights vanish.
    double posterior_expectation(const std::function<double(std::span<const double>)>& phi) const;
};

// Algebraic identities every drained run must satisfy, checked to `tol` on
// the log scale: the weight-sum route to the marginal likelihood against
// (K_n / K_0) * avg, and the telescoped predictive product against the
// direct estimate. Throws LifecycleError on violation.
void check_estimator_identities(const CascadeRun& run, double tol = 1e-9);

} // namespace smc
