// Acceptance suite: one PASS/FAIL line per criterion.
//
//   codescout_acceptance                 run every criterion
//   codescout_acceptance --criterion N   run criterion N only
//
// Set CODESCOUT_RM64_PROFILE to a coset weight profile JSON for RM(64,22) to include
// that code's rows in criterion 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "codescout/code_catalog.hpp"
#include "codescout/coset_profile.hpp"
#include "codescout/error.hpp"
#include "codescout/glrt_stats.hpp"
#include "codescout/inv_norm.hpp"
#include "codescout/sequential.hpp"
#include "codescout/simulator.hpp"
#include "oracles.hpp"

using namespace codescout;

namespace {

// Tolerances.
constexpr double kSampleSizeRelTol = 0.01;
constexpr double kDetectionAbsTol = 1e-3;
constexpr double kSequentialRelTol = 0.01;
constexpr double kSecondsLimitTable = 1.0;
constexpr double kRocAbsTol = 1e-9;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kPmfAbsTol = 1e-12;
constexpr double kKlAbsTol = 1e-12;
constexpr double kNormalisationTol = 1e-12;
constexpr double kInvNormTol = 1e-8;
constexpr double kSigmaBand = 4.0;
constexpr double kFalseAlarmFactor = 1.15;
constexpr double kDetectionFactor = 0.98;
constexpr double kMeanSamplesRelTol = 0.10;
constexpr std::uint64_t kMonteCarloTrials = 100000;

constexpr double kAlpha = 0.05;
constexpr double kTableBeta = 0.997;

class Report {
public:
    explicit Report(int id) : id_(id) {}

    void check(bool ok, const std::string& what) {
        std::printf("    [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
        all_ok_ &= ok;
    }
    void note(const std::string& what) { std::printf("    note: %s\n", what.c_str()); }
    bool ok() const { return all_ok_; }

    bool finish(const std::string& title) const {
        std::printf("criterion %d: %s  %s\n", id_, all_ok_ ? "PASS" : "FAIL", title.c_str());
        std::fflush(stdout);
        return all_ok_;
    }

private:
    int id_;
    bool all_ok_ = true;
};

std::string fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double rel_error(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

// ---------------------------------------------------------------------------------------
// 1. Required codeword counts.

bool criterion_sample_size() {
    Report report(1);
    struct Row {
        std::string spec;
        bool direct;
        double p;
        double published;
        bool extended;
    };
    const std::vector<Row> rows{
        {"hamming:5", true, 0.05, 61.50, false},      {"hamming:5", true, 0.07, 183.01, false},
        {"hamming:6", false, 0.05, 560.31, false},    {"bch:15,7", true, 0.1, 10.39, false},
        {"bch:15,7", true, 0.15, 29.12, false},       {"rm:2,5", true, 0.1, 9.25, false},
        {"rm:2,5", true, 0.15, 40.07, false},         {"hamming:6", false, 0.07, 6.19e3, true},
        {"hamming:7", false, 0.05, 1.19e5, true},     {"hamming:7", false, 0.07, 3.70e7, true},
        {"bch:31,16", true, 0.1, 10.67, true},        {"bch:31,16", true, 0.15, 46.52, true},
    };
    std::map<std::string, CosetWeightProfile> profiles;
    for (const auto& row : rows) {
        if (!profiles.contains(row.spec)) {
            const auto code = parse_code_spec(row.spec);
            const auto start = std::chrono::steady_clock::now();
            auto profile = row.direct ? profile_direct(code) : profile_dual_transform(code);
            validate_profile(profile);
            report.note(fmt("%s profile by %s enumeration in %.2f s", code.label().c_str(),
                            row.direct ? "direct 2^n" : "dual transform", seconds_since(start)));
            profiles.emplace(row.spec, std::move(profile));
        }
        const auto& profile = profiles.at(row.spec);
        const double m = required_codewords(word_pmf_null(profile), word_pmf_alt(profile, row.p), kAlpha, kTableBeta);
        report.check(rel_error(m, row.published) <= kSampleSizeRelTol,
                     fmt("%-10s p=%-5g M=%-14.6g published %-9g rel.err %.2e%s", row.spec.c_str(), row.p, m,
                         row.published, rel_error(m, row.published), row.extended ? "  (extended)" : ""));
    }

    const auto rm = parse_code_spec("rm:2,5");
    report.check(profiles.at("rm:2,5") == profile_dual_transform(rm),
                 "RM(32,16) direct 2^32 profile equals the dual transform profile");

    if (const char* path = std::getenv("CODESCOUT_RM64_PROFILE"); path != nullptr && *path != '\0') {
        const auto profile = import_profile(std::filesystem::path(path));
        for (const auto& [p, published] : std::vector<std::pair<double, double>>{{0.1, 49.55}, {0.15, 1.35e3}}) {
            const double m = required_codewords(word_pmf_null(profile), word_pmf_alt(profile, p), kAlpha, kTableBeta);
            report.check(rel_error(m, published) <= kSampleSizeRelTol,
                         fmt("RM(64,22)  p=%-5g M=%-14.6g published %-9g (imported profile)", p, m, published));
        }
    } else {
        report.note("RM(64,22) rows skipped: set CODESCOUT_RM64_PROFILE to an imported profile");
    }
    return report.finish("required codeword counts within 1% of the tabulated values");
}

// ---------------------------------------------------------------------------------------
// 2. Hamming(15,11): NP detection probabilities and sequential expectations.

struct DetectionTable {
    std::vector<double> pd;
    std::vector<double> e_h0;
    std::vector<double> e_h1;
};

const std::vector<std::size_t> kTableBlocks{5, 8, 10, 14, 17, 20, 35, 37};
const std::vector<double> kTableBetas{0.5787, 0.6953, 0.7738, 0.8980, 0.9218, 0.9561, 0.9962, 0.9973};
const std::vector<double> kTableSequential{3.0665, 4.2347, 5.1228, 6.7518, 7.1081, 7.6650, 8.4460, 8.4718};

DetectionTable detection_table(const CosetWeightProfile& profile, double p) {
    DetectionTable t;
    const auto w0 = word_pmf_null(profile);
    const auto w1 = word_pmf_alt(profile, p);
    for (std::size_t i = 0; i < kTableBlocks.size(); ++i) {
        t.pd.push_back(np_rule(block_pmf(w0, kTableBlocks[i]), block_pmf(w1, kTableBlocks[i]), kAlpha).predicted_pd);
        const auto e = expected_sample_sizes(sprt_plan(w0, w1, kAlpha, kTableBetas[i]));
        t.e_h0.push_back(e.under_h0);
        t.e_h1.push_back(e.under_h1);
    }
    return t;
}

bool column_matches(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (rel_error(values[i], kTableSequential[i]) > kSequentialRelTol) return false;
    return true;
}

bool criterion_detection_table() {
    Report report(2);
    const auto start = std::chrono::steady_clock::now();
    const auto profile = profile_direct(build_hamming(4));
    constexpr double p = 0.05;
    const auto t = detection_table(profile, p);
    const double elapsed = seconds_since(start);

    for (std::size_t i = 0; i < kTableBlocks.size(); ++i)
        report.check(std::abs(t.pd[i] - kTableBetas[i]) <= kDetectionAbsTol,
                     fmt("p=%.2f M=%-3zu P_D=%.6f expected %.4f  |E{Ms|H0}|=%.5f E{Ms|H1}=%.5f expected %.4f", p,
                         kTableBlocks[i], t.pd[i], kTableBetas[i], t.e_h0[i], t.e_h1[i], kTableSequential[i]));
    const bool h0_col = column_matches(t.e_h0);
    const bool h1_col = column_matches(t.e_h1);
    report.check(h0_col || h1_col, fmt("sequential column matched by %s", h1_col   ? "E{M_s|H1}"
                                                                           : h0_col ? "E{M_s|H0}"
                                                                                    : "neither expectation"));
    report.check(elapsed < kSecondsLimitTable, fmt("runtime %.3f s (limit %.1f s)", elapsed, kSecondsLimitTable));

    // The same computation at p = 0.07 for comparison.
    const auto alt = detection_table(profile, 0.07);
    bool alt_pd = true;
    for (std::size_t i = 0; i < kTableBlocks.size(); ++i)
        alt_pd &= std::abs(alt.pd[i] - kTableBetas[i]) <= kDetectionAbsTol;
    report.note(fmt("at p=0.07 the P_D values %s within 1e-3 and E{M_s|H1} %s within 1%%", alt_pd ? "all match" : "do not all match",
                    column_matches(alt.e_h1) ? "matches" : "does NOT match"));
    return report.finish("Hamming(15,11) detection probabilities and sequential expectations at p=0.05");
}

// ---------------------------------------------------------------------------------------
// 3. Shape properties of P_D(M) and the ROC for Hamming(7,4).

bool criterion_shapes() {
    Report report(3);
    const auto profile = profile_direct(build_hamming(3));
    const auto w0 = word_pmf_null(profile);

    for (double p : {0.05, 0.1, 0.15}) {
        const auto w1 = word_pmf_alt(profile, p);
        auto q0 = block_pmf(w0, 1);
        auto q1 = block_pmf(w1, 1);
        double previous = 0.0;
        bool monotone = true;
        for (std::size_t m = 1; m <= 100; ++m) {
            if (m > 1) {
                q0 = extend_block(q0, w0);
                q1 = extend_block(q1, w1);
            }
            const double pd = np_rule(q0, q1, kAlpha).predicted_pd;
            monotone &= pd >= previous - kMonotoneSlack;
            previous = pd;
        }
        report.check(monotone, fmt("p=%.2f: P_D nondecreasing over M=1..100 (P_D(100)=%.6f)", p, previous));
    }

    const auto w1 = word_pmf_alt(profile, 0.1);
    bool vertices_ok = true, slopes_ok = true, chords_ok = true;
    for (std::size_t m : {1u, 2u, 5u, 10u}) {
        const auto q0 = block_pmf(w0, m);
        const auto q1 = block_pmf(w1, m);
        const auto roc = roc_breakpoints(q0, q1);
        long double c0 = 0.0L, c1 = 0.0L;
        for (std::size_t i = 0; i < roc.size(); ++i) {
            vertices_ok &= std::abs(roc[i].alpha - static_cast<double>(c0)) <= kRocAbsTol &&
                           std::abs(roc[i].pd - static_cast<double>(c1)) <= kRocAbsTol;
            if (i < q0.probs.size()) {
                c0 += q0.probs[i];
                c1 += q1.probs[i];
            }
        }
        for (std::size_t i = 0; i < q0.probs.size(); ++i) {
            if (q0.probs[i] <= 0.0) continue;
            const double slope = q1.probs[i] / q0.probs[i];
            const double chord = (roc[i + 1].pd - roc[i].pd) / (roc[i + 1].alpha - roc[i].alpha);
            slopes_ok &= std::abs(chord - slope) <= kRocAbsTol * std::max(1.0, slope);
            for (double frac : {0.25, 0.5, 0.75}) {
                const double alpha = roc[i].alpha + frac * q0.probs[i];
                if (alpha <= 0.0 || alpha >= 1.0) continue;
                const double expected = roc[i].pd + slope * (alpha - roc[i].alpha);
                chords_ok &= std::abs(np_rule(q0, q1, alpha).predicted_pd - expected) <= kRocAbsTol;
            }
        }
    }
    report.check(vertices_ok, "p=0.10: ROC vertices sit at the cumulative Q0/Q1 sums (M=1,2,5,10)");
    report.check(slopes_ok, "p=0.10: segment slopes equal Q1(i)/Q0(i)");
    report.check(chords_ok, "p=0.10: randomised rule traces the straight segments between vertices");

    std::vector<double> previous;
    bool dominates = true;
    for (std::size_t m : {1u, 2u, 5u, 10u, 20u, 50u}) {
        const auto q0 = block_pmf(w0, m);
        const auto q1 = block_pmf(w1, m);
        std::vector<double> curve;
        for (int i = 1; i < 100; ++i) curve.push_back(np_rule(q0, q1, i / 100.0).predicted_pd);
        if (!previous.empty())
            for (std::size_t i = 0; i < curve.size(); ++i) dominates &= curve[i] >= previous[i] - kMonotoneSlack;
        previous = std::move(curve);
    }
    report.check(dominates, "p=0.10: ROC for larger M dominates smaller M on the alpha grid 0.01..0.99");
    return report.finish("Hamming(7,4) P_D and ROC shape properties");
}

// ---------------------------------------------------------------------------------------
// 4. Direct enumeration against the dual transform.

bool criterion_oracle_equivalence() {
    Report report(4);
    for (const auto& code :
         {build_hamming(3), build_hamming(4), parse_code_spec("bch:15,7"), build_repetition(3)}) {
        const auto direct = profile_direct(code, Execution::serial);
        const bool same = direct == profile_direct(code, Execution::parallel) &&
                          direct == profile_dual_transform(code, Execution::parallel) &&
                          direct == profile_dual_transform(code, Execution::serial);
        report.check(same, code.label() + ": direct == dual transform (serial and parallel, exact integers)");
    }
    return report.finish("profile_direct equals profile_dual_transform");
}

// ---------------------------------------------------------------------------------------
// 5. Word pmfs against full enumeration.

std::vector<LinearCode> small_builtin_codes() {
    std::vector<LinearCode> codes{build_hamming(2), build_hamming(3), build_hamming(4), parse_code_spec("bch:15,7"),
                                  build_reed_muller(1, 3), build_reed_muller(0, 3)};
    for (int n = 3; n <= 15; n += 3) codes.push_back(build_repetition(n));
    return codes;
}

bool criterion_pmf_oracle() {
    Report report(5);
    for (const auto& code : small_builtin_codes()) {
        const auto ml = oracle::all_ml_distances(code);
        const auto profile = profile_direct(code);
        double worst = 0.0;
        const auto q0 = word_pmf_null(profile);
        const auto o0 = oracle::q0(code, ml);
        for (std::size_t j = 0; j <= code.n(); ++j) worst = std::max(worst, std::abs(q0.probs[j] - o0[j]));
        for (double p : {0.05, 0.1}) {
            const auto q1 = word_pmf_alt(profile, p);
            const auto o1 = oracle::q1(code, ml, p);
            for (std::size_t j = 0; j <= code.n(); ++j) worst = std::max(worst, std::abs(q1.probs[j] - o1[j]));
        }
        report.check(worst <= kPmfAbsTol, fmt("%-16s max |q - brute force| = %.2e over q0, q1(0.05), q1(0.1)",
                                              code.label().c_str(), worst));
    }
    return report.finish("q0 and q1 match full 2^n enumeration within 1e-12");
}

// ---------------------------------------------------------------------------------------
// 6. Monte Carlo calibration.

bool criterion_monte_carlo() {
    Report report(6);
    const auto code = build_hamming(4);
    const auto profile = profile_direct(code);
    const auto table = build_syndrome_table(code);
    constexpr double p = 0.05;
    constexpr std::size_t blocks = 5;
    const double trials = static_cast<double>(kMonteCarloTrials);

    const auto w0 = word_pmf_null(profile);
    const auto w1 = word_pmf_alt(profile, p);
    const auto rule = np_rule(block_pmf(w0, blocks), block_pmf(w1, blocks), kAlpha);

    const auto h0 = simulate_np(code, table, rule, blocks, ChannelModel(p), kMonteCarloTrials, 101, Hypothesis::h0);
    const double s0 = std::sqrt(kAlpha * (1 - kAlpha) / trials);
    report.check(std::abs(h0.empirical_rate - kAlpha) <= kSigmaBand * s0,
                 fmt("NP M=5 H0: P_F=%.5f target %.5f (%.2f sigma)", h0.empirical_rate, kAlpha,
                     (h0.empirical_rate - kAlpha) / s0));

    const auto h1 = simulate_np(code, table, rule, blocks, ChannelModel(p), kMonteCarloTrials, 102, Hypothesis::h1);
    const double pd = rule.predicted_pd;
    const double s1 = std::sqrt(pd * (1 - pd) / trials);
    report.check(std::abs(h1.empirical_rate - pd) <= kSigmaBand * s1,
                 fmt("NP M=5 H1: P_D=%.5f analytic %.5f (%.2f sigma)", h1.empirical_rate, pd,
                     (h1.empirical_rate - pd) / s1));

    for (std::size_t i = 0; i < kTableBetas.size(); ++i) {
        const double beta = kTableBetas[i];
        const auto plan = sprt_plan(w0, w1, kAlpha, beta);
        const auto r0 = simulate_sprt(code, table, plan, ChannelModel(p), kMonteCarloTrials, 200 + i, Hypothesis::h0);
        const auto r1 = simulate_sprt(code, table, plan, ChannelModel(p), kMonteCarloTrials, 300 + i, Hypothesis::h1);
        report.check(r0.empirical_rate <= kFalseAlarmFactor * kAlpha && r0.undecided == 0,
                     fmt("SPRT beta=%.4f H0: accept-H1 rate %.5f (bound %.5f)", beta, r0.empirical_rate,
                         kFalseAlarmFactor * kAlpha));
        report.check(r1.empirical_rate >= kDetectionFactor * beta && r1.undecided == 0,
                     fmt("SPRT beta=%.4f H1: accept-H1 rate %.5f (bound %.5f)", beta, r1.empirical_rate,
                         kDetectionFactor * beta));
        report.check(rel_error(r0.mean_samples, plan.expected_m0) <= kMeanSamplesRelTol,
                     fmt("SPRT beta=%.4f H0: mean samples %.4f predicted %.4f (rel.err %.3f)", beta, r0.mean_samples,
                         plan.expected_m0, rel_error(r0.mean_samples, plan.expected_m0)));
        report.check(rel_error(r1.mean_samples, plan.expected_m1) <= kMeanSamplesRelTol,
                     fmt("SPRT beta=%.4f H1: mean samples %.4f predicted %.4f (rel.err %.3f)", beta, r1.mean_samples,
                         plan.expected_m1, rel_error(r1.mean_samples, plan.expected_m1)));
    }
    return report.finish("Monte Carlo calibration of NP and SPRT detectors, 1e5 trials");
}

// ---------------------------------------------------------------------------------------
// 7. Invariant suites.

struct Builtin {
    std::string name;
    std::function<LinearCode()> make;
};

std::vector<Builtin> builtin_codes() {
    std::vector<Builtin> out;
    for (int m = 2; m <= 7; ++m) out.push_back({fmt("hamming:%d", m), [m] { return build_hamming(m); }});
    for (int m = 1; m <= 7; ++m)
        for (int r = 0; r < m; ++r)
            out.push_back({fmt("rm:%d,%d", r, m), [r, m] { return build_reed_muller(r, m); }});
    for (int n = 2; n <= 9; ++n) out.push_back({fmt("repetition:%d", n), [n] { return build_repetition(n); }});
    out.push_back({"bch:15,7", [] { return parse_code_spec("bch:15,7"); }});
    out.push_back({"bch:31,16", [] { return parse_code_spec("bch:31,16"); }});
    return out;
}

bool criterion_invariants() {
    Report report(7);
    std::size_t checked = 0;
    for (const auto& entry : builtin_codes()) {
        std::optional<LinearCode> code;
        try {
            code = entry.make();
        } catch (const LimitExceeded& e) {
            report.note(entry.name + " skipped: " + e.what());
            continue;
        }
        CosetWeightProfile profile;
        try {
            profile = code->n() <= 20 ? profile_direct(*code) : profile_dual_transform(*code);
        } catch (const LimitExceeded& dual_refusal) {
            try {
                profile = profile_direct(*code);
            } catch (const LimitExceeded&) {
                report.note(code->label() + " skipped, both realisations refuse: " + dual_refusal.what());
                continue;
            }
        }
        ++checked;
        std::string problems;
        try {
            if (code->k() <= 30)
                validate_profile(profile, *code);
            else
                validate_profile(profile);
        } catch (const InvariantViolation& e) {
            problems += std::string(" mass identities: ") + e.what() + ";";
        }

        const auto q0 = word_pmf_null(profile);
        double worst_norm = std::abs(compensated_sum(q0.probs) - 1.0);
        double worst_kl = 0.0;
        bool signs = true;
        int identical = 0;
        for (double p : {0.01, 0.05, 0.1, 0.2, 0.3}) {
            const auto q1 = word_pmf_alt(profile, p);
            worst_norm = std::max(worst_norm, std::abs(compensated_sum(q1.probs) - 1.0));
            worst_norm = std::max(worst_norm, std::abs(block_pmf(q1, 10).total() - 1.0));
            if (q1.probs == q0.probs) {
                // Indistinguishable in double precision: the plan must refuse with zero drift.
                bool refused = false;
                try {
                    sprt_plan(q0, q1, kAlpha, 0.9);
                } catch (const InvalidArgument&) {
                    refused = true;
                }
                signs &= refused;
                ++identical;
                continue;
            }
            const auto plan = sprt_plan(q0, q1, kAlpha, 0.9);
            signs &= plan.delta0 < 0.0 && plan.delta1 > 0.0;
            worst_kl = std::max(worst_kl, std::abs(-plan.delta0 - oracle::kl_divergence(q0.probs, q1.probs)));
            worst_kl = std::max(worst_kl, std::abs(plan.delta1 - oracle::kl_divergence(q1.probs, q0.probs)));
        }
        worst_norm = std::max(worst_norm, std::abs(block_pmf(q0, 10).total() - 1.0));
        if (worst_norm > kNormalisationTol) problems += fmt(" normalisation off by %.2e;", worst_norm);
        if (!signs) problems += " KL sign;";
        if (worst_kl > kKlAbsTol) problems += fmt(" KL mismatch %.2e;", worst_kl);
        report.check(problems.empty(), fmt("%-18s profile, pmf normalisation (%.1e), KL signs and values (%.1e)%s%s",
                                           code->label().c_str(), worst_norm, worst_kl,
                                           identical > 0 ? "; q1 == q0 in double at some p, zero drift refused" : "",
                                           problems.c_str()));
    }
    report.check(checked >= 20, fmt("%zu built-in codes checked", checked));

    double worst = 0.0;
    for (int e = -6; e <= -1; ++e)
        for (double mant : {1.0, 2.5, 5.0}) {
            const double u = mant * std::pow(10.0, e);
            if (u >= 0.5) continue;
            worst = std::max(worst, std::abs(norm_cdf(inv_norm_cdf(u)) - u));
            worst = std::max(worst, std::abs(norm_cdf(inv_norm_cdf(1.0 - u)) - (1.0 - u)));
        }
    for (int i = 1; i < 100; ++i) worst = std::max(worst, std::abs(norm_cdf(inv_norm_cdf(i / 100.0)) - i / 100.0));
    report.check(worst <= kInvNormTol, fmt("inv_norm_cdf round trip over 1e-6..1-1e-6: max error %.2e", worst));
    return report.finish("invariant suites across built-in codes");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codescout acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-7)")->check(CLI::Range(1, 7));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<bool()>> criteria{criterion_sample_size,     criterion_detection_table,
                                                      criterion_shapes,          criterion_oracle_equivalence,
                                                      criterion_pmf_oracle,      criterion_monte_carlo,
                                                      criterion_invariants};
    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        try {
            all_ok &= criteria[i]();
        } catch (const std::exception& e) {
            std::printf("criterion %zu: FAIL  aborted: %s\n", i + 1, e.what());
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}
