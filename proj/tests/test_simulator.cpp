#include <doctest.h>

#include <cmath>
#include <random>

#include "codescout/code_catalog.hpp"
#include "codescout/error.hpp"
#include "codescout/simulator.hpp"
#include "check_near.hpp"
#include "oracles.hpp"

using namespace codescout;

namespace {

void expect_histogram_matches(const std::vector<std::uint64_t>& hist, const std::vector<double>& probs,
                              std::uint64_t draws) {
    for (std::size_t j = 0; j < probs.size(); ++j) {
        const double sigma = std::sqrt(draws * probs[j] * (1.0 - probs[j]));
        const double expected = draws * probs[j];
        if (probs[j] == 0.0)
            CHECK_MESSAGE(hist[j] == 0u, "j=" << j);
        else
            CHECK_MESSAGE(std::abs(static_cast<double>(hist[j]) - expected) <= 4.0 * sigma + 1.0, "j=" << j);
    }
}

}  // namespace

TEST_CASE("Channel.RangeChecked") {
    CHECK_NOTHROW(ChannelModel(0.0));
    CHECK_THROWS_AS(ChannelModel(0.5), InvalidArgument);
    CHECK_THROWS_AS(ChannelModel(-0.1), InvalidArgument);
}

TEST_CASE("GenerateBlock.ErrorFreeChannelGivesCodewords") {
    const auto code = parse_code_spec("bch:15,7");
    auto rng = SplitMix64::stream(1, 0);
    const auto words = generate_block(code, 200, ChannelModel(0.0), Hypothesis::h1, rng);
    REQUIRE_EQ(words.size(), 200u);
    for (const auto& w : words) CHECK_EQ(code.syndrome(w), 0u);
}

TEST_CASE("GenerateBlock.LongCodeUsesMultiLimbWords") {
    const auto code = build_reed_muller(5, 7);
    auto rng = SplitMix64::stream(2, 0);
    const auto words = generate_block(code, 50, ChannelModel(0.0), Hypothesis::h1, rng);
    for (const auto& w : words) {
        CHECK_EQ(w.size(), 128u);
        CHECK_EQ(code.syndrome(w), 0u);
    }
    auto rng0 = SplitMix64::stream(2, 1);
    std::size_t nonzero = 0;
    for (const auto& w : generate_block(code, 50, ChannelModel(0.0), Hypothesis::h0, rng0))
        nonzero += code.syndrome(w) != 0;
    CHECK_GT(nonzero, 45u);
}

TEST_CASE("GlrtStatistic.Basics") {
    const auto code = build_hamming(3);
    const auto table = build_syndrome_table(code);
    auto rng = SplitMix64::stream(3, 0);
    auto words = generate_block(code, 6, ChannelModel(0.0), Hypothesis::h1, rng);
    CHECK_EQ(glrt_statistic(table, words), 0u);
    words[2].flip(5);
    CHECK_EQ(glrt_statistic(table, words), 1u);
}

TEST_CASE("GlrtStatistic.MatchesExhaustiveMlDistance") {
    for (const auto& code : {build_hamming(3), build_repetition(5), build_reed_muller(1, 3)}) {
        const auto table = build_syndrome_table(code);
        const auto cw = oracle::codewords(code);
        auto rng = SplitMix64::stream(4, 0);
        for (int t = 0; t < 50; ++t) {
            const auto words = generate_block(code, 7, ChannelModel(0.0), Hypothesis::h0, rng);
            std::size_t expected = 0;
            for (const auto& w : words) expected += oracle::nearest_distance(cw, w.low_bits());
            CHECK_MESSAGE(glrt_statistic(table, words) == expected, code.label());
        }
    }
}

TEST_CASE("DistanceSource.PackedPathAgreesWithTable") {
    const auto code = parse_code_spec("bch:15,7");
    const auto table = build_syndrome_table(code);
    for (auto hyp : {Hypothesis::h0, Hypothesis::h1}) {
        DistanceSource a(code, table, ChannelModel(0.1), hyp, SplitMix64::stream(9, 0));
        DistanceSource b(code, table, ChannelModel(0.1), hyp, SplitMix64::stream(9, 0));
        for (int i = 0; i < 1000; ++i) CHECK_EQ(a.next(), b.next());
    }
    const auto other = build_syndrome_table(build_hamming(4));
    CHECK_THROWS_AS(DistanceSource(code, other, ChannelModel(0.1), Hypothesis::h0, SplitMix64(0)), InvalidArgument);
}

TEST_CASE("DistanceHistogram.NullMatchesWordPmf") {
    const auto code = build_hamming(3);
    const auto table = build_syndrome_table(code);
    const std::uint64_t draws = 100000;
    const auto hist = distance_histogram(code, table, ChannelModel(0.1), Hypothesis::h0, draws, 21);
    expect_histogram_matches(hist, word_pmf_null(profile_direct(code)).probs, draws);
}

TEST_CASE("DistanceHistogram.AltMatchesWordPmf") {
    for (const auto& code : {build_hamming(3), parse_code_spec("bch:15,7")}) {
        const auto table = build_syndrome_table(code);
        const std::uint64_t draws = 100000;
        const auto hist = distance_histogram(code, table, ChannelModel(0.1), Hypothesis::h1, draws, 22);
        expect_histogram_matches(hist, word_pmf_alt(profile_direct(code), 0.1).probs, draws);
    }
}

TEST_CASE("DistanceHistogram.LongCodeFallbackPath") {
    // n = 66 does not fit a packed word, so distances go through full BitWord syndromes.
    std::mt19937_64 rng(40);
    GF2Matrix g(56, 66);
    for (std::size_t r = 0; r < 56; ++r) {
        g.set(r, r, true);
        for (std::size_t c = 56; c < 66; ++c) g.set(r, c, rng() & 1U);
    }
    const auto code = LinearCode::from_generator(g, "random(66,56)");
    const auto table = build_syndrome_table(code);
    const auto profile = profile_dual_transform(code);
    const std::uint64_t draws = 100000;
    const auto h0 = distance_histogram(code, table, ChannelModel(0.1), Hypothesis::h0, draws, 41);
    expect_histogram_matches(h0, word_pmf_null(profile).probs, draws);
    const auto h1 = distance_histogram(code, table, ChannelModel(0.01), Hypothesis::h1, draws, 42);
    expect_histogram_matches(h1, word_pmf_alt(profile, 0.01).probs, draws);
    const auto clean = distance_histogram(code, table, ChannelModel(0.0), Hypothesis::h1, 1000, 43);
    CHECK_EQ(clean[0], 1000u);
}

TEST_CASE("NpTrials.FalseAlarmRateIsAlpha") {
    const auto code = build_hamming(3);
    const auto profile = profile_direct(code);
    const std::uint64_t trials = 100000;
    const auto r = run_np_trials(code, profile, 10, 0.1, 0.05, trials, 5, Hypothesis::h0);
    CHECK_EQ(r.trials, trials);
    CHECK_EQ(r.decide_h0 + r.decide_h1, trials);
    CHECK_EQ(r.empirical_rate, doctest::Approx(static_cast<double>(r.decide_h1) / trials));
    CHECK_EQ(r.std_error, doctest::Approx(std::sqrt(r.empirical_rate * (1 - r.empirical_rate) / trials)));
    CHECK_LE(std::abs(r.empirical_rate - 0.05), 4.0 * std::sqrt(0.05 * 0.95 / trials));
}

TEST_CASE("NpTrials.DetectionRateMatchesPrediction") {
    const auto code = build_hamming(4);
    const auto profile = profile_direct(code);
    const std::uint64_t trials = 100000;
    for (double p : {0.05, 0.07}) {
        const auto q0 = block_pmf(word_pmf_null(profile), 5);
        const auto q1 = block_pmf(word_pmf_alt(profile, p), 5);
        const double pd = np_rule(q0, q1, 0.05).predicted_pd;
        const auto r = run_np_trials(code, profile, 5, p, 0.05, trials, 6, Hypothesis::h1);
        CHECK_MESSAGE(std::abs(r.empirical_rate - pd) <= 4.0 * std::sqrt(pd * (1 - pd) / trials), "p=" << p);
    }
}

TEST_CASE("NpTrials.ErrorFreeChannelDecidesWithProbabilityEta") {
    const auto code = build_hamming(3);
    const auto profile = profile_direct(code);
    const std::uint64_t trials = 100000;
    const auto r = run_np_trials(code, profile, 1, 0.0, 0.05, trials, 7, Hypothesis::h1);
    const double eta = 0.4;
    CHECK_LE(std::abs(r.empirical_rate - eta), 4.0 * std::sqrt(eta * (1 - eta) / trials));
}

TEST_CASE("NpTrials.SerialAndParallelAgree") {
    const auto code = parse_code_spec("bch:15,7");
    const auto profile = profile_direct(code);
    for (auto hyp : {Hypothesis::h0, Hypothesis::h1}) {
        const auto a = run_np_trials(code, profile, 8, 0.1, 0.05, 5000, 11, hyp, Execution::serial);
        const auto b = run_np_trials(code, profile, 8, 0.1, 0.05, 5000, 11, hyp, Execution::parallel);
        const auto c = run_np_trials(code, profile, 8, 0.1, 0.05, 5000, 11, hyp, Execution::parallel);
        CHECK_EQ(a, b);
        CHECK_EQ(b, c);
        CHECK_EQ(a.seed, 11u);
    }
    const auto d = run_np_trials(code, profile, 8, 0.1, 0.05, 5000, 12, Hypothesis::h1);
    CHECK_NE(d.decide_h1, run_np_trials(code, profile, 8, 0.1, 0.05, 5000, 11, Hypothesis::h1).decide_h1);
}

TEST_CASE("NpTrials.RejectsEmptyRuns") {
    const auto code = build_hamming(3);
    const auto profile = profile_direct(code);
    CHECK_THROWS_AS(run_np_trials(code, profile, 5, 0.1, 0.05, 0, 1, Hypothesis::h0), InvalidArgument);
}

TEST_CASE("SprtTrials.ErrorRatesWithinWaldTolerance") {
    const auto code = build_hamming(4);
    const auto profile = profile_direct(code);
    const std::uint64_t trials = 20000;
    for (double beta : {0.5787, 0.9973}) {
        const auto h0 = run_sprt_trials(code, profile, 0.05, 0.05, beta, trials, 31, Hypothesis::h0);
        const auto h1 = run_sprt_trials(code, profile, 0.05, 0.05, beta, trials, 32, Hypothesis::h1);
        CHECK_EQ(h0.undecided, 0u);
        CHECK_EQ(h1.undecided, 0u);
        CHECK_MESSAGE(h0.empirical_rate <= 1.15 * 0.05, "beta=" << beta);
        CHECK_MESSAGE(h1.empirical_rate >= 0.98 * beta, "beta=" << beta);
        CHECK_GT(h0.mean_samples, 0.0);
        CHECK_GT(h1.mean_samples, 0.0);
    }
}

TEST_CASE("SprtTrials.StepCapProducesUndecided") {
    const auto code = build_hamming(4);
    const auto profile = profile_direct(code);
    const auto r = run_sprt_trials(code, profile, 0.05, 0.05, 0.9973, 200, 3, Hypothesis::h0, Execution::parallel, 1);
    CHECK_EQ(r.decide_h0 + r.decide_h1 + r.undecided, 200u);
    CHECK_GT(r.undecided, 0u);
}

TEST_CASE("SprtTrials.Deterministic") {
    const auto code = parse_code_spec("bch:15,7");
    const auto profile = profile_direct(code);
    const auto a = run_sprt_trials(code, profile, 0.1, 0.05, 0.95, 3000, 8, Hypothesis::h1, Execution::serial);
    const auto b = run_sprt_trials(code, profile, 0.1, 0.05, 0.95, 3000, 8, Hypothesis::h1, Execution::parallel);
    CHECK_EQ(a, b);
}
