#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "l1pt/instance.hpp"

// Trial runner estimating the empirical decay rates log(P_err)/n and
// log(P_cor)/n. Trials are independent jobs over a work queue; per-trial
// seeds are derived from (seed, trial index), so the counts are identical
// under any thread count or scheduling.
namespace l1pt::mc {

enum class Method { LpCompare, NullSpace };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Wilson 95% score interval for a binomial proportion.
Interval wilson(std::uint64_t count, std::uint64_t total, double z = 1.959963984540054);

struct RateEstimate {
    instance::InstanceDims dims;
    Model model = Model::Binary;
    double mu = 1.0;
    Method method = Method::LpCompare;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t solver_errors = 0;  // aborted trials, counted on neither side

    std::uint64_t valid() const { return trials - solver_errors; }
    std::uint64_t successes() const { return valid() - failures; }

    // log(count/valid)/n; absent (censored) when the count is zero.
    std::optional<double> i_err;
    std::optional<double> i_cor;
    Interval i_err_ci;  // Wilson CI mapped through log(p)/n
    Interval i_cor_ci;
    double censor_bound = 0.0;  // one-sided bound log(1/valid)/n for zero cells
};

struct RunConfig {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    Method method = Method::LpCompare;
    int threads = 1;
    instance::InteriorFill fill;
    double success_tol = 1e-6;  // LpCompare comparison tolerance
    double cone_tol = 1e-9;     // NullSpace optimum threshold
};

RateEstimate run_trials(const instance::InstanceDims& dims, Model model, double mu,
                        const RunConfig& cfg);

// One trial's failure decision, exposed for cross-oracle comparisons.
bool trial_fails(const instance::ProblemInstance& inst, Method method, double success_tol,
                 double cone_tol);

}  // namespace l1pt::mc
