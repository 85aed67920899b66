#include "codescout/sequential.hpp"

#include <cmath>
#include <limits>

#include "codescout/error.hpp"

namespace codescout {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pending: return "pending";
        case Verdict::accept_h0: return "accept_H0";
        case Verdict::accept_h1: return "accept_H1";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

namespace {

// x - log(1+x) >= 0 with x = (b-a)/a, for a, b > 0.
double excess_log(double a, double b) {
    const double x = (b - a) / a;
    if (std::abs(x) < 1e-4) return x * x * (0.5 - x * (1.0 / 3.0 - x * 0.25));
    return x - std::log(b / a);
}

}  // namespace

SprtPlan sprt_plan(const WordPmf& q0, const WordPmf& q1, double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < beta && beta < 1.0))
        throw InvalidArgument("sprt_plan: need 0 < alpha < beta < 1");
    if (q0.probs.size() != q1.probs.size()) throw InvalidArgument("sprt_plan: pmf lengths differ");

    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t len = q0.probs.size();
    SprtPlan plan;
    plan.alpha = alpha;
    plan.beta = beta;
    plan.log_increments.assign(len, 0.0);
    plan.reachable.assign(len, true);

    // KL(a||b) = sum_{a>0} a excess_log(a, b) + sum_{a=0} b, using sum(b-a) = 0. Every term is
    // nonnegative, so the drifts keep their sign when q0 and q1 differ only in far digits.
    std::vector<double> kl01, kl10;
    bool h0_forced = false, h1_forced = false;
    for (std::size_t j = 0; j < len; ++j) {
        const double r = q0.probs[j];
        const double s = q1.probs[j];
        if (r == 0.0 && s == 0.0) {
            plan.reachable[j] = false;
        } else if (r == 0.0) {
            plan.log_increments[j] = inf;
            h1_forced = true;
            kl01.push_back(s);
        } else if (s == 0.0) {
            plan.log_increments[j] = -inf;
            h0_forced = true;
            kl10.push_back(r);
        } else {
            plan.log_increments[j] = std::log(s / r);
            kl01.push_back(r * excess_log(r, s));
            kl10.push_back(s * excess_log(s, r));
        }
    }
    plan.delta0 = h0_forced ? -inf : -compensated_sum(kl01);
    plan.delta1 = h1_forced ? inf : compensated_sum(kl10);
    if (plan.delta0 == 0.0 || plan.delta1 == 0.0)
        throw InvalidArgument("sprt_plan: H0 and H1 word pmfs coincide (zero drift)");

    plan.log_A = std::log(beta / alpha);
    plan.log_B = std::log((1.0 - beta) / (1.0 - alpha));
    plan.expected_m0 = ((1.0 - alpha) * plan.log_B + alpha * plan.log_A) / plan.delta0;
    plan.expected_m1 = ((1.0 - beta) * plan.log_B + beta * plan.log_A) / plan.delta1;
    return plan;
}

SprtState sprt_step(const SprtPlan& plan, const SprtState& state, std::size_t distance) {
    if (state.verdict != Verdict::pending) throw InvalidArgument("sprt_step: test already terminated");
    if (distance >= plan.log_increments.size())
        throw InvalidArgument("sprt_step: distance " + std::to_string(distance) + " out of range");
    if (!plan.reachable[distance])
        throw InvalidArgument("sprt_step: distance " + std::to_string(distance) +
                              " has zero probability under both hypotheses");
    SprtState next = state;
    next.log_lambda += plan.log_increments[distance];
    ++next.m;
    if (next.log_lambda >= plan.log_A)
        next.verdict = Verdict::accept_h1;
    else if (next.log_lambda <= plan.log_B)
        next.verdict = Verdict::accept_h0;
    return next;
}

ExpectedSampleSizes expected_sample_sizes(const SprtPlan& plan) { return {plan.expected_m0, plan.expected_m1}; }

SprtState run_sprt(const SprtPlan& plan, const std::function<std::size_t()>& next_distance, std::size_t max_steps) {
    SprtState state;
    while (state.verdict == Verdict::pending) {
        if (state.m >= max_steps) {
            state.verdict = Verdict::undecided;
            break;
        }
        state = sprt_step(plan, state, next_distance());
    }
    return state;
}

}  // namespace codescout
