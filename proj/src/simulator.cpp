#include "codescout/simulator.hpp"

#include <cmath>

#include "codescout/error.hpp"

namespace codescout {

ChannelModel::ChannelModel(double p) : p_(p) {
    if (!(p >= 0.0 && p < 0.5)) throw InvalidArgument("ChannelModel: crossover p must lie in [0, 0.5)");
}

namespace {

std::uint64_t low_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

BitWord draw_word(const LinearCode& code, double p, Hypothesis hypothesis, SplitMix64& rng) {
    BitWord word(code.n());
    if (hypothesis == Hypothesis::h0) {
        auto limbs = word.limbs();
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            const std::size_t bits = std::min<std::size_t>(64, code.n() - 64 * i);
            limbs[i] = rng() & low_mask(bits);
        }
        return word;
    }
    BitWord message(code.k());
    for (std::size_t i = 0; i < code.k(); ++i)
        if (rng() & 1U) message.set(i, true);
    word = code.encode(message);
    if (p > 0.0)
        for (std::size_t j = 0; j < code.n(); ++j)
            if (uniform01(rng) < p) word.flip(j);
    return word;
}

}  // namespace

std::vector<BitWord> generate_block(const LinearCode& code, std::size_t blocks, const ChannelModel& channel,
                                    Hypothesis hypothesis, SplitMix64& rng) {
    std::vector<BitWord> out;
    out.reserve(blocks);
    for (std::size_t m = 0; m < blocks; ++m) out.push_back(draw_word(code, channel.p(), hypothesis, rng));
    return out;
}

std::size_t glrt_statistic(const SyndromeTable& table, std::span<const BitWord> words) {
    std::size_t total = 0;
    for (const auto& w : words) total += table.distance(w);
    return total;
}

DistanceSource::DistanceSource(const LinearCode& code, const SyndromeTable& table, const ChannelModel& channel,
                               Hypothesis hypothesis, SplitMix64 rng)
    : code_(code), table_(table), p_(channel.p()), hypothesis_(hypothesis), rng_(rng) {
    if (table.n() != code.n() || table.redundancy() != code.redundancy())
        throw InvalidArgument("DistanceSource: syndrome table does not belong to this code");
}

std::size_t DistanceSource::next() {
    if (!code_.fits_word()) return table_.distance(draw_word(code_, p_, hypothesis_, rng_));

    const std::size_t n = code_.n();
    if (hypothesis_ == Hypothesis::h0) return table_.distance_packed(rng_() & low_mask(n));

    const auto g = code_.packed_generator();
    std::uint64_t message = rng_() & low_mask(code_.k());
    std::uint64_t word = 0;
    for (std::size_t i = 0; message != 0; ++i, message >>= 1)
        if (message & 1U) word ^= g[i];
    if (p_ > 0.0)
        for (std::size_t j = 0; j < n; ++j)
            if (uniform01(rng_) < p_) word ^= std::uint64_t{1} << j;
    return table_.distance_packed(word);
}

namespace {

TrialReport finish(TrialReport r, std::uint64_t decided_samples) {
    r.empirical_rate = static_cast<double>(r.decide_h1) / static_cast<double>(r.trials);
    r.std_error = std::sqrt(r.empirical_rate * (1.0 - r.empirical_rate) / static_cast<double>(r.trials));
    const auto decided = r.decide_h0 + r.decide_h1;
    r.mean_samples = decided == 0 ? 0.0 : static_cast<double>(decided_samples) / static_cast<double>(decided);
    return r;
}

}  // namespace

TrialReport simulate_np(const LinearCode& code, const SyndromeTable& table, const NpRule& rule, std::size_t blocks,
                        const ChannelModel& channel, std::uint64_t trials, std::uint64_t seed,
                        Hypothesis hypothesis, Execution mode) {
    if (trials < 1) throw InvalidArgument("simulate_np: need at least one trial");
    if (blocks < 1) throw InvalidArgument("simulate_np: need at least one word per block");

    auto one_trial = [&](std::uint64_t t) -> bool {
        DistanceSource source(code, table, channel, hypothesis, SplitMix64::stream(seed, t));
        std::size_t total = 0;
        for (std::size_t m = 0; m < blocks; ++m) total += source.next();
        if (total < rule.tau_opt) return true;
        if (total > rule.tau_opt) return false;
        return uniform01(source.rng()) < rule.eta;
    };

    std::uint64_t h1 = 0;
    const auto count = static_cast<std::int64_t>(trials);
    if (mode == Execution::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : h1)
        for (std::int64_t t = 0; t < count; ++t) h1 += one_trial(static_cast<std::uint64_t>(t)) ? 1 : 0;
    } else {
        for (std::int64_t t = 0; t < count; ++t) h1 += one_trial(static_cast<std::uint64_t>(t)) ? 1 : 0;
    }

    TrialReport r;
    r.trials = trials;
    r.decide_h1 = h1;
    r.decide_h0 = trials - h1;
    r.seed = seed;
    r = finish(r, 0);
    r.mean_samples = static_cast<double>(blocks);
    return r;
}

TrialReport simulate_sprt(const LinearCode& code, const SyndromeTable& table, const SprtPlan& plan,
                          const ChannelModel& channel, std::uint64_t trials, std::uint64_t seed,
                          Hypothesis hypothesis, Execution mode, std::size_t max_steps) {
    if (trials < 1) throw InvalidArgument("simulate_sprt: need at least one trial");

    auto one_trial = [&](std::uint64_t t) {
        DistanceSource source(code, table, channel, hypothesis, SplitMix64::stream(seed, t));
        return run_sprt(plan, [&] { return source.next(); }, max_steps);
    };

    std::uint64_t h1 = 0, h0 = 0, undecided = 0, samples = 0;
    const auto count = static_cast<std::int64_t>(trials);
    auto tally = [&](const SprtState& s, std::uint64_t& a1, std::uint64_t& a0, std::uint64_t& au,
                     std::uint64_t& am) {
        switch (s.verdict) {
            case Verdict::accept_h1: ++a1; am += s.m; break;
            case Verdict::accept_h0: ++a0; am += s.m; break;
            default: ++au; break;
        }
    };
    if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : h1, h0, undecided, samples)
        for (std::int64_t t = 0; t < count; ++t)
            tally(one_trial(static_cast<std::uint64_t>(t)), h1, h0, undecided, samples);
    } else {
        for (std::int64_t t = 0; t < count; ++t)
            tally(one_trial(static_cast<std::uint64_t>(t)), h1, h0, undecided, samples);
    }

    TrialReport r;
    r.trials = trials;
    r.decide_h1 = h1;
    r.decide_h0 = h0;
    r.undecided = undecided;
    r.seed = seed;
    return finish(r, samples);
}

TrialReport run_np_trials(const LinearCode& code, const CosetWeightProfile& profile, std::size_t blocks, double p,
                          double alpha, std::uint64_t trials, std::uint64_t seed, Hypothesis hypothesis,
                          Execution mode) {
    const ChannelModel channel(p);
    const auto q0 = block_pmf(word_pmf_null(profile), blocks);
    const auto q1 = block_pmf(word_pmf_alt(profile, p), blocks);
    const auto rule = np_rule(q0, q1, alpha);
    const auto table = build_syndrome_table(code);
    return simulate_np(code, table, rule, blocks, channel, trials, seed, hypothesis, mode);
}

TrialReport run_sprt_trials(const LinearCode& code, const CosetWeightProfile& profile, double p, double alpha,
                            double beta, std::uint64_t trials, std::uint64_t seed, Hypothesis hypothesis,
                            Execution mode, std::size_t max_steps) {
    const ChannelModel channel(p);
    const auto plan = sprt_plan(word_pmf_null(profile), word_pmf_alt(profile, p), alpha, beta);
    const auto table = build_syndrome_table(code);
    return simulate_sprt(code, table, plan, channel, trials, seed, hypothesis, mode, max_steps);
}

std::vector<std::uint64_t> distance_histogram(const LinearCode& code, const SyndromeTable& table,
                                              const ChannelModel& channel, Hypothesis hypothesis,
                                              std::uint64_t words, std::uint64_t seed) {
    std::vector<std::uint64_t> hist(code.n() + 1, 0);
    DistanceSource source(code, table, channel, hypothesis, SplitMix64::stream(seed, 0));
    for (std::uint64_t i = 0; i < words; ++i) ++hist[source.next()];
    return hist;
}

}  // namespace codescout
