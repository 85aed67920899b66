#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "codescout/glrt_stats.hpp"

namespace codescout {

// Wald SPRT over the stream of per-word distances. All logs are natural logs.
//
// Each observed distance j adds log(s_j / r_j) to the running log-likelihood ratio, where
// r = q0 and s = q1. The test accepts H1 at log(beta/alpha) and H0 at
// log((1-beta)/(1-alpha)). If r_j = 0 < s_j the increment is +inf (forces H1); if
// s_j = 0 < r_j it is -inf (forces H0); if both vanish, distance j is unreachable and
// observing it is an error.
struct SprtPlan {
    std::vector<double> log_increments;
    std::vector<bool> reachable;
    double alpha = 0.0;
    double beta = 0.0;
    double log_A = 0.0;
    double log_B = 0.0;
    double delta0 = 0.0;  // E[increment | H0] = -KL(q0 || q1)
    double delta1 = 0.0;  // E[increment | H1] = +KL(q1 || q0)
    double expected_m0 = 0.0;
    double expected_m1 = 0.0;
};

enum class Verdict { pending, accept_h0, accept_h1, undecided };

const char* to_string(Verdict v) noexcept;

struct SprtState {
    double log_lambda = 0.0;
    std::size_t m = 0;
    Verdict verdict = Verdict::pending;
};

// Requires 0 < alpha < beta < 1 and q0 != q1 (nonzero drift).
SprtPlan sprt_plan(const WordPmf& q0, const WordPmf& q1, double alpha, double beta);

// Consumes one word distance. Throws if the state has already terminated or the
// distance is out of range / unreachable.
SprtState sprt_step(const SprtPlan& plan, const SprtState& state, std::size_t distance);

struct ExpectedSampleSizes {
    double under_h0;
    double under_h1;
};
ExpectedSampleSizes expected_sample_sizes(const SprtPlan& plan);

inline constexpr std::size_t kDefaultSprtStepCap = 1'000'000;

// Pulls distances from `next_distance` until a verdict or the cap; a trial that reaches
// the cap ends as Verdict::undecided.
SprtState run_sprt(const SprtPlan& plan, const std::function<std::size_t()>& next_distance,
                   std::size_t max_steps = kDefaultSprtStepCap);

}  // namespace codescout
