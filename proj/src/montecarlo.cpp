#include "l1pt/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "l1pt/recovery.hpp"
#include "l1pt/rng.hpp"

namespace l1pt::mc {

Interval wilson(std::uint64_t count, std::uint64_t total, double z) {
    if (total == 0) return {0.0, 1.0};
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(count) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    const double lo = count == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = count == total ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

bool trial_fails(const instance::ProblemInstance& inst, Method method, double success_tol,
                 double cone_tol) {
    if (method == Method::LpCompare) {
        const auto r = recovery::solve_box_l1(inst);
        return !recovery::matches_planted(inst, r.x, success_tol);
    }
    return recovery::null_space_failure(inst, cone_tol).failure;
}

RateEstimate run_trials(const instance::InstanceDims& dims, Model model, double mu,
                        const RunConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("run_trials: trials must be >= 1");

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> failures{0};
    std::atomic<std::uint64_t> errors{0};

    auto worker = [&] {
        for (;;) {
            const std::uint64_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= cfg.trials) return;
            const std::uint64_t sub_seed = rng::derive_seed(cfg.seed, t);
            try {
                const auto inst = instance::gen_instance(dims, model, mu, sub_seed, cfg.fill);
                if (trial_fails(inst, cfg.method, cfg.success_tol, cfg.cone_tol))
                    failures.fetch_add(1, std::memory_order_relaxed);
            } catch (const std::exception&) {
                errors.fetch_add(1, std::memory_order_relaxed);
            }
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const std::uint64_t want = cfg.threads > 0 ? static_cast<std::uint64_t>(cfg.threads)
                                               : (hw ? hw : 1);
    const std::uint64_t nthreads = std::max<std::uint64_t>(1, std::min(want, cfg.trials));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RateEstimate est;
    est.dims = dims;
    est.model = model;
    est.mu = model == Model::Box ? mu : 1.0;
    est.method = cfg.method;
    est.trials = cfg.trials;
    est.failures = failures.load();
    est.solver_errors = errors.load();

    const double n = static_cast<double>(dims.n);
    const std::uint64_t valid = est.valid();
    if (valid == 0) throw std::runtime_error("run_trials: every trial aborted");
    est.censor_bound = std::log(1.0 / static_cast<double>(valid)) / n;

    auto to_rate = [&](std::uint64_t count) {
        return std::log(static_cast<double>(count) / static_cast<double>(valid)) / n;
    };
    auto to_rate_ci = [&](std::uint64_t count) {
        const Interval p = wilson(count, valid);
        // log is increasing, so the proportion interval maps monotonically.
        const double lo = p.lo > 0.0 ? std::log(p.lo) / n : -std::numeric_limits<double>::infinity();
        const double hi = p.hi > 0.0 ? std::log(p.hi) / n : -std::numeric_limits<double>::infinity();
        return Interval{lo, hi};
    };

    if (est.failures > 0) {
        est.i_err = to_rate(est.failures);
        est.i_err_ci = to_rate_ci(est.failures);
    }
    if (est.successes() > 0) {
        est.i_cor = to_rate(est.successes());
        est.i_cor_ci = to_rate_ci(est.successes());
    }
    return est;
}

}  // namespace l1pt::mc
