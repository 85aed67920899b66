#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codescout/coset_profile.hpp"
#include "codescout/glrt_stats.hpp"
#include "codescout/linear_code.hpp"
#include "codescout/rng.hpp"
#include "codescout/sequential.hpp"
#include "codescout/syndrome_table.hpp"

namespace codescout {

// Binary symmetric channel, 0 <= p < 1/2.
class ChannelModel {
public:
    explicit ChannelModel(double p);
    double p() const noexcept { return p_; }

private:
    double p_;
};

// H0: M uniform n-bit words. H1: M codewords of uniform messages, each bit flipped
// independently with probability p.
std::vector<BitWord> generate_block(const LinearCode& code, std::size_t blocks, const ChannelModel& channel,
                                    Hypothesis hypothesis, SplitMix64& rng);

// Total distance from the words to their nearest codewords (sum of coset leader weights).
std::size_t glrt_statistic(const SyndromeTable& table, std::span<const BitWord> words);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t decide_h1 = 0;
    std::uint64_t decide_h0 = 0;
    std::uint64_t undecided = 0;      // sequential runs that hit the step cap
    double empirical_rate = 0.0;      // decide_h1 / trials
    double std_error = 0.0;           // sqrt(rate (1 - rate) / trials)
    double mean_samples = 0.0;        // sequential: mean words consumed by decided trials
    std::uint64_t seed = 0;

    friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

// Draws per-word distances for one trial without materialising decoded codewords.
class DistanceSource {
public:
    DistanceSource(const LinearCode& code, const SyndromeTable& table, const ChannelModel& channel,
                   Hypothesis hypothesis, SplitMix64 rng);

    std::size_t next();
    SplitMix64& rng() noexcept { return rng_; }

private:
    const LinearCode& code_;
    const SyndromeTable& table_;
    double p_;
    Hypothesis hypothesis_;
    SplitMix64 rng_;
};

// Monte Carlo of the randomised NP rule on blocks of M words. Trial t uses
// SplitMix64::stream(seed, t), so serial and parallel runs agree exactly.
TrialReport simulate_np(const LinearCode& code, const SyndromeTable& table, const NpRule& rule, std::size_t blocks,
                        const ChannelModel& channel, std::uint64_t trials, std::uint64_t seed,
                        Hypothesis hypothesis, Execution mode = Execution::parallel);

TrialReport simulate_sprt(const LinearCode& code, const SyndromeTable& table, const SprtPlan& plan,
                          const ChannelModel& channel, std::uint64_t trials, std::uint64_t seed,
                          Hypothesis hypothesis, Execution mode = Execution::parallel,
                          std::size_t max_steps = kDefaultSprtStepCap);

// Convenience wrappers: derive pmfs and the rule / plan from the profile first.
TrialReport run_np_trials(const LinearCode& code, const CosetWeightProfile& profile, std::size_t blocks, double p,
                          double alpha, std::uint64_t trials, std::uint64_t seed, Hypothesis hypothesis,
                          Execution mode = Execution::parallel);

TrialReport run_sprt_trials(const LinearCode& code, const CosetWeightProfile& profile, double p, double alpha,
                            double beta, std::uint64_t trials, std::uint64_t seed, Hypothesis hypothesis,
                            Execution mode = Execution::parallel, std::size_t max_steps = kDefaultSprtStepCap);

// Histogram (length n+1) of single-word distances over `words` draws.
std::vector<std::uint64_t> distance_histogram(const LinearCode& code, const SyndromeTable& table,
                                              const ChannelModel& channel, Hypothesis hypothesis,
                                              std::uint64_t words, std::uint64_t seed);

}  // namespace codescout
