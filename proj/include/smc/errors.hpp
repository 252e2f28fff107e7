#pragma once

#include <stdexcept>
#include <string>

namespace smc {

// Invalid model/algorithm parameters (non-stochastic rows, non-positive
// variances, malformed weight vectors, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical degeneracy: every weight in a population underflowed to zero,
// or a normalizing sum vanished.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was invoked at the wrong point of a run's lifecycle
// (e.g. querying estimators on a stage that has not drained).
class LifecycleError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A branching ratio blew past the sanity cap; almost always a sign of a
// misconfigured model rather than a legitimate weight.
class RunawayError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace smc
