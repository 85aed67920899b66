#include "codescout/glrt_stats.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "codescout/error.hpp"
#include "codescout/inv_norm.hpp"

namespace codescout {

const char* to_string(Hypothesis h) noexcept { return h == Hypothesis::h0 ? "H0" : "H1"; }

double compensated_sum(const std::vector<double>& values) {
    for (double v : values)
        if (!std::isfinite(v)) return std::accumulate(values.begin(), values.end(), 0.0);
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            carry += (sum - t) + v;
        else
            carry += (v - t) + sum;
        sum = t;
    }
    return sum + carry;
}

WordPmf make_word_pmf(Hypothesis hypothesis, std::vector<double> probs, std::optional<double> crossover) {
    if (probs.empty()) throw InvalidArgument("word pmf: empty probability vector");
    for (double q : probs)
        if (!(q >= 0.0)) throw InvariantViolation("word pmf: negative or NaN probability");
    const double total = compensated_sum(probs);
    if (std::abs(total - 1.0) > 1e-9) throw InvariantViolation("word pmf: probabilities sum to " + std::to_string(total));

    std::vector<double> first(probs.size()), second(probs.size());
    for (std::size_t j = 0; j < probs.size(); ++j) {
        first[j] = static_cast<double>(j) * probs[j];
        second[j] = static_cast<double>(j * j) * probs[j];
    }
    WordPmf pmf;
    pmf.hypothesis = hypothesis;
    pmf.mean = compensated_sum(first);
    pmf.variance = std::max(0.0, compensated_sum(second) - pmf.mean * pmf.mean);
    pmf.probs = std::move(probs);
    pmf.crossover = crossover;
    return pmf;
}

double BlockPmf::mean() const {
    std::vector<double> terms(probs.size());
    for (std::size_t j = 0; j < probs.size(); ++j) terms[j] = static_cast<double>(j) * probs[j];
    return compensated_sum(terms);
}

double BlockPmf::total() const { return compensated_sum(probs); }

WordPmf word_pmf_null(const CosetWeightProfile& profile) {
    validate_profile(profile);
    const int r = static_cast<int>(profile.n - profile.k);
    std::vector<double> probs(profile.n + 1);
    for (std::size_t j = 0; j <= profile.n; ++j) probs[j] = std::ldexp(static_cast<double>(profile.beta[j]), -r);
    return make_word_pmf(Hypothesis::h0, std::move(probs));
}

namespace {

// Natural log of a positive big integer from its bit length and leading 63 bits.
double log_count(const BigInt& value) {
    const auto top_bit = boost::multiprecision::msb(value);
    const std::size_t shift = top_bit > 62 ? top_bit - 62 : 0;
    const auto leading = static_cast<BigInt>(value >> shift).convert_to<std::uint64_t>();
    return std::log(static_cast<double>(leading)) + static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace

WordPmf word_pmf_alt(const CosetWeightProfile& profile, double p) {
    if (!(p >= 0.0 && p < 0.5)) throw InvalidArgument("word_pmf_alt: crossover p must lie in [0, 0.5)");
    validate_profile(profile);
    const std::size_t n = profile.n;
    std::vector<double> probs(n + 1, 0.0);
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    for (std::size_t l = 0; l <= n; ++l) {
        if (profile.beta[l] == 0) continue;
        std::vector<double> terms;
        for (std::size_t i = 0; i <= n; ++i) {
            const auto& count = profile.rows[l][i];
            if (count == 0) continue;
            if (p == 0.0) {
                if (i == 0) terms.push_back(count.convert_to<double>());
                continue;
            }
            terms.push_back(std::exp(log_count(count) + static_cast<double>(i) * log_p +
                                     static_cast<double>(n - i) * log_q));
        }
        probs[l] = compensated_sum(terms);
    }
    return make_word_pmf(Hypothesis::h1, std::move(probs), p);
}

namespace {

std::size_t support_end(const std::vector<double>& probs) {
    std::size_t end = probs.size();
    while (end > 0 && probs[end - 1] == 0.0) --end;
    return end;
}

}  // namespace

BlockPmf extend_block(const BlockPmf& block, const WordPmf& word) {
    const std::size_t n = word.n();
    BlockPmf out;
    out.blocks = block.blocks + 1;
    out.probs.assign(out.blocks * n + 1, 0.0);
    const std::size_t word_end = support_end(word.probs);
    const std::size_t block_end = support_end(block.probs);
    for (std::size_t a = 0; a < block_end; ++a) {
        const double pa = block.probs[a];
        if (pa == 0.0) continue;
        for (std::size_t b = 0; b < word_end; ++b) out.probs[a + b] += pa * word.probs[b];
    }
    return out;
}

BlockPmf block_pmf(const WordPmf& word, std::size_t blocks) {
    if (blocks < 1) throw InvalidArgument("block_pmf: number of blocks must be >= 1");
    BlockPmf acc{0, {1.0}};
    for (std::size_t m = 0; m < blocks; ++m) acc = extend_block(acc, word);
    return acc;
}

NpRule np_rule(const BlockPmf& q0, const BlockPmf& q1, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("np_rule: alpha must lie in (0,1)");
    if (q0.probs.size() != q1.probs.size() || q0.probs.empty())
        throw InvalidArgument("np_rule: Q0 and Q1 must have the same (nonzero) length");

    const std::size_t last = q0.probs.size() - 1;
    // below = sum_{j<i} Q0(j); advance while the next prefix still fits under alpha.
    std::size_t tau = 0;
    double below = 0.0;
    while (tau < last && below + q0.probs[tau] <= alpha) {
        below += q0.probs[tau];
        ++tau;
    }

    NpRule rule;
    rule.tau_opt = tau;
    rule.alpha_target = alpha;
    if (below < alpha && q0.probs[tau] > 0.0) {
        rule.eta = std::min(1.0, (alpha - below) / q0.probs[tau]);
    } else {
        rule.eta = 0.0;
        if (below < alpha)
            rule.diagnostic = "Q0(tau_opt) = 0: false-alarm rate " + std::to_string(below) +
                              " falls short of alpha";
    }
    rule.alpha_achieved = false_alarm_probability(rule, q0);
    rule.predicted_pd = detection_probability(rule, q1);
    if (rule.diagnostic.empty() && std::abs(q0.total() - 1.0) > 1e-8)
        rule.diagnostic = "Q0 mass is " + std::to_string(q0.total()) + " (tail underflow)";
    return rule;
}

namespace {

double randomized_mass(const NpRule& rule, const BlockPmf& q) {
    if (rule.tau_opt >= q.probs.size()) return compensated_sum(q.probs);
    std::vector<double> head(q.probs.begin(), q.probs.begin() + static_cast<std::ptrdiff_t>(rule.tau_opt));
    return compensated_sum(head) + rule.eta * q.probs[rule.tau_opt];
}

}  // namespace

double detection_probability(const NpRule& rule, const BlockPmf& q1) { return randomized_mass(rule, q1); }

double false_alarm_probability(const NpRule& rule, const BlockPmf& q0) { return randomized_mass(rule, q0); }

double required_codewords(const WordPmf& q0, const WordPmf& q1, double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("required_codewords: alpha must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("required_codewords: beta must lie in (0,1)");
    const double separation = q1.mean - q0.mean;
    if (separation == 0.0)
        throw InvalidArgument("required_codewords: H0 and H1 word pmfs have equal means");
    const double numerator =
        std::sqrt(q0.variance) * inv_norm_cdf(alpha) - std::sqrt(q1.variance) * inv_norm_cdf(beta);
    const double ratio = numerator / separation;
    return ratio * ratio;
}

std::vector<RocPoint> roc_breakpoints(const BlockPmf& q0, const BlockPmf& q1) {
    if (q0.probs.size() != q1.probs.size()) throw InvalidArgument("roc_breakpoints: length mismatch");
    std::vector<RocPoint> out;
    out.reserve(q0.probs.size() + 1);
    double a = 0.0, d = 0.0;
    out.push_back({0.0, 0.0});
    for (std::size_t i = 0; i < q0.probs.size(); ++i) {
        a += q0.probs[i];
        d += q1.probs[i];
        out.push_back({a, d});
    }
    return out;
}

}  // namespace codescout
