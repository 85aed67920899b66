// codescout: decide whether a bit stream carries noisy codewords of a known linear code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "codescout/code_catalog.hpp"
#include "codescout/code_config.hpp"
#include "codescout/coset_profile.hpp"
#include "codescout/error.hpp"
#include "codescout/glrt_stats.hpp"
#include "codescout/profile_kernels.hpp"
#include "codescout/sequential.hpp"
#include "codescout/simulator.hpp"
#include "codescout/syndrome_table.hpp"

namespace cs = codescout;
using nlohmann::json;

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kRefused = 3, kInvariant = 4 };

struct RunConfig {
    std::string code_spec;
    std::string code_file;
    std::string profile_path;
    std::string profile_method = "auto";
    double p = -1.0;
    std::vector<double> p_list;
    double alpha = 0.05;
    double beta = 0.997;
    std::size_t blocks = 0;
    std::vector<std::size_t> block_list;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    std::string format;
    std::string out;
    std::string input;
    std::string generate;
    std::string kind = "pd-vs-m";
    std::size_t max_steps = cs::kDefaultSprtStepCap;
    std::size_t alpha_points = 0;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

cs::LinearCode resolve_code(const RunConfig& cfg) {
    if (cfg.code_spec.empty() == cfg.code_file.empty())
        throw cs::InvalidArgument("give exactly one of --code or --code-file");
    return cfg.code_spec.empty() ? cs::load_code_config(cfg.code_file) : cs::parse_code_spec(cfg.code_spec);
}

struct ResolvedProfile {
    cs::CosetWeightProfile profile;
    std::string method;
    double seconds = 0.0;
};

ResolvedProfile resolve_profile(const RunConfig& cfg, const cs::LinearCode& code) {
    const auto start = std::chrono::steady_clock::now();
    ResolvedProfile out;
    if (!cfg.profile_path.empty()) {
        out.profile = cs::import_profile(std::filesystem::path(cfg.profile_path));
        if (out.profile.n != code.n() || out.profile.k != code.k())
            throw cs::InvalidArgument("imported profile is for (" + std::to_string(out.profile.n) + "," +
                                      std::to_string(out.profile.k) + "), code is " + code.label());
        out.method = "import";
    } else {
        std::string method = cfg.profile_method;
        if (method == "auto")
            method = code.n() <= 24 || code.redundancy() > cs::kernels::kMaxDualRedundancy ? "direct" : "dual";
        if (method == "direct")
            out.profile = cs::profile_direct(code);
        else if (method == "dual")
            out.profile = cs::profile_dual_transform(code);
        else
            throw cs::InvalidArgument("--profile-method must be direct, dual or auto");
        out.method = method;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void require_p(const RunConfig& cfg) {
    if (cfg.p < 0.0) throw cs::InvalidArgument("--p is required");
}

// Writes `text` to --out or stdout.
void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw cs::InvalidArgument("cannot write " + cfg.out);
    f << text;
}

std::string csv_from_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

std::string render_single(const RunConfig& cfg, const json& obj) {
    if (cfg.format == "csv") {
        std::vector<std::string> header, row;
        for (const auto& [key, value] : obj.items()) {
            if (value.is_structured()) continue;
            header.push_back(key);
            row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
        return csv_from_rows(header, {row});
    }
    return obj.dump(2) + "\n";
}

std::string render_table(const RunConfig& cfg, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    return csv_from_rows(header, rows);
}

// Bit stream: packed bytes, most significant bit first; coordinate j of word m is bit m*n+j.
std::vector<cs::BitWord> read_stream(const std::string& path, std::size_t n, std::size_t blocks) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cs::InvalidArgument("cannot open stream " + path);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t available = bytes.size() * 8 / n;
    if (blocks == 0) blocks = available;
    if (blocks == 0 || blocks > available)
        throw cs::InvalidArgument("stream " + path + " holds " + std::to_string(available) + " words of length " +
                                  std::to_string(n) + ", need " + std::to_string(blocks));
    std::vector<cs::BitWord> words;
    words.reserve(blocks);
    for (std::size_t m = 0; m < blocks; ++m) {
        cs::BitWord w(n);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t bit = m * n + j;
            if ((bytes[bit / 8] >> (7 - bit % 8)) & 1U) w.set(j, true);
        }
        words.push_back(std::move(w));
    }
    return words;
}

cs::Hypothesis parse_hypothesis(const std::string& text) {
    if (text == "h0") return cs::Hypothesis::h0;
    if (text == "h1") return cs::Hypothesis::h1;
    throw cs::InvalidArgument("--generate must be h0 or h1");
}

std::vector<cs::BitWord> obtain_words(const RunConfig& cfg, const cs::LinearCode& code, std::size_t blocks,
                                      cs::SplitMix64& rng) {
    if (cfg.input.empty() == cfg.generate.empty())
        throw cs::InvalidArgument("give exactly one of --input or --generate");
    if (!cfg.input.empty()) return read_stream(cfg.input, code.n(), blocks);
    if (blocks == 0) throw cs::InvalidArgument("--M is required with --generate");
    const auto hyp = parse_hypothesis(cfg.generate);
    return cs::generate_block(code, blocks, cs::ChannelModel(hyp == cs::Hypothesis::h1 ? cfg.p : 0.0), hyp, rng);
}

json beta_json(const cs::CosetWeightProfile& p) {
    json arr = json::array();
    for (auto b : p.beta) arr.push_back(b);
    return arr;
}

int cmd_profile(const RunConfig& cfg) {
    const auto code = resolve_code(cfg);
    const auto resolved = resolve_profile(cfg, code);
    const auto& profile = resolved.profile;
    if (!cfg.out.empty()) cs::export_profile(profile, std::filesystem::path(cfg.out));

    json summary;
    summary["label"] = code.label();
    summary["n"] = code.n();
    summary["k"] = code.k();
    summary["method"] = resolved.method;
    summary["beta"] = beta_json(profile);
    json a = json::array();
    for (const auto& c : profile.weight_distribution()) a.push_back(c.str());
    summary["weight_distribution"] = a;
    summary["covering_radius"] = profile.covering_radius();
    summary["seconds"] = resolved.seconds;
    if (!cfg.out.empty()) summary["profile_file"] = cfg.out;
    std::cout << summary.dump(2) << "\n";
    return kOk;
}

int cmd_sample_size(RunConfig cfg) {
    require_p(cfg);
    const auto code = resolve_code(cfg);
    const auto profile = resolve_profile(cfg, code).profile;
    const auto q0 = cs::word_pmf_null(profile);
    const auto q1 = cs::word_pmf_alt(profile, cfg.p);
    const double m = cs::required_codewords(q0, q1, cfg.alpha, cfg.beta);
    json out;
    out["code"] = code.label();
    out["p"] = cfg.p;
    out["alpha"] = cfg.alpha;
    out["beta"] = cfg.beta;
    out["M"] = m;
    out["M_ceil"] = static_cast<std::uint64_t>(std::ceil(m));
    out["mu0"] = q0.mean;
    out["sigma0"] = std::sqrt(q0.variance);
    out["mu1"] = q1.mean;
    out["sigma1"] = std::sqrt(q1.variance);
    if (cfg.format.empty()) cfg.format = "json";
    emit(cfg, render_single(cfg, out));
    return kOk;
}

int cmd_detect_np(RunConfig cfg) {
    require_p(cfg);
    const auto code = resolve_code(cfg);
    const auto profile = resolve_profile(cfg, code).profile;
    const auto table = cs::build_syndrome_table(code);
    auto rng = cs::SplitMix64::stream(cfg.seed, 0);
    const auto words = obtain_words(cfg, code, cfg.blocks, rng);
    const std::size_t blocks = words.size();

    const auto q0 = cs::block_pmf(cs::word_pmf_null(profile), blocks);
    const auto q1 = cs::block_pmf(cs::word_pmf_alt(profile, cfg.p), blocks);
    const auto rule = cs::np_rule(q0, q1, cfg.alpha);
    const auto statistic = cs::glrt_statistic(table, words);

    bool h1 = statistic < rule.tau_opt;
    bool randomized = false;
    if (statistic == rule.tau_opt) {
        randomized = true;
        h1 = cs::uniform01(rng) < rule.eta;
    }
    json out;
    out["code"] = code.label();
    out["M"] = blocks;
    out["statistic"] = statistic;
    out["tau_opt"] = rule.tau_opt;
    out["eta"] = rule.eta;
    out["alpha"] = cfg.alpha;
    out["alpha_achieved"] = rule.alpha_achieved;
    out["predicted_pd"] = rule.predicted_pd;
    out["decision"] = h1 ? "H1" : "H0";
    out["randomized"] = randomized;
    if (!rule.diagnostic.empty()) {
        out["diagnostic"] = rule.diagnostic;
        std::cerr << "warning: " << rule.diagnostic << "\n";
    }
    if (cfg.format.empty()) cfg.format = "json";
    emit(cfg, render_single(cfg, out));
    return kOk;
}

int cmd_detect_seq(RunConfig cfg) {
    require_p(cfg);
    const auto code = resolve_code(cfg);
    const auto profile = resolve_profile(cfg, code).profile;
    const auto table = cs::build_syndrome_table(code);
    const auto plan = cs::sprt_plan(cs::word_pmf_null(profile), cs::word_pmf_alt(profile, cfg.p), cfg.alpha, cfg.beta);

    cs::SprtState state;
    if (!cfg.input.empty() && cfg.generate.empty()) {
        const auto words = read_stream(cfg.input, code.n(), cfg.blocks);
        for (const auto& w : words) {
            state = cs::sprt_step(plan, state, table.distance(w));
            if (state.verdict != cs::Verdict::pending) break;
        }
    } else if (!cfg.generate.empty() && cfg.input.empty()) {
        const auto hyp = parse_hypothesis(cfg.generate);
        cs::DistanceSource source(code, table, cs::ChannelModel(hyp == cs::Hypothesis::h1 ? cfg.p : 0.0), hyp,
                                  cs::SplitMix64::stream(cfg.seed, 0));
        state = cs::run_sprt(plan, [&] { return source.next(); }, cfg.max_steps);
    } else {
        throw cs::InvalidArgument("give exactly one of --input or --generate");
    }

    json out;
    out["code"] = code.label();
    out["verdict"] = cs::to_string(state.verdict);
    out["words_consumed"] = state.m;
    out["log_lambda"] = state.log_lambda;
    out["log_A"] = plan.log_A;
    out["log_B"] = plan.log_B;
    out["expected_m0"] = plan.expected_m0;
    out["expected_m1"] = plan.expected_m1;
    if (cfg.format.empty()) cfg.format = "json";
    emit(cfg, render_single(cfg, out));
    return kOk;
}

int cmd_curves(RunConfig cfg) {
    const auto code = resolve_code(cfg);
    const auto profile = resolve_profile(cfg, code).profile;
    const auto q0_word = cs::word_pmf_null(profile);
    std::optional<cs::SyndromeTable> table;
    if (cfg.trials > 0) table = cs::build_syndrome_table(code);

    std::vector<double> ps = cfg.p_list;
    if (ps.empty() && cfg.p >= 0.0) ps.push_back(cfg.p);
    if (ps.empty()) throw cs::InvalidArgument("--p is required");

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    const bool mc = cfg.trials > 0;

    if (cfg.kind == "pd-vs-m") {
        if (cfg.blocks == 0) throw cs::InvalidArgument("--M (largest block count) is required");
        header = {"p", "M", "tau_opt", "eta", "pd"};
        if (mc) header.insert(header.end(), {"pd_mc", "pd_mc_se"});
        for (double p : ps) {
            const auto q1_word = cs::word_pmf_alt(profile, p);
            cs::BlockPmf q0{0, {1.0}}, q1{0, {1.0}};
            for (std::size_t m = 1; m <= cfg.blocks; ++m) {
                q0 = cs::extend_block(q0, q0_word);
                q1 = cs::extend_block(q1, q1_word);
                const auto rule = cs::np_rule(q0, q1, cfg.alpha);
                std::vector<std::string> row{fmt(p), std::to_string(m), std::to_string(rule.tau_opt), fmt(rule.eta),
                                             fmt(rule.predicted_pd)};
                if (mc) {
                    const auto r = cs::simulate_np(code, *table, rule, m, cs::ChannelModel(p), cfg.trials,
                                                   cfg.seed + m, cs::Hypothesis::h1);
                    row.push_back(fmt(r.empirical_rate));
                    row.push_back(fmt(r.std_error));
                }
                rows.push_back(std::move(row));
            }
        }
    } else if (cfg.kind == "roc") {
        auto blocks = cfg.block_list;
        if (blocks.empty() && cfg.blocks > 0) blocks.push_back(cfg.blocks);
        if (blocks.empty()) throw cs::InvalidArgument("--M is required for ROC curves");
        header = {"p", "M", "kind", "alpha", "pd"};
        if (mc) header.insert(header.end(), {"pf_mc", "pd_mc", "pd_mc_se"});
        for (double p : ps) {
            const auto q1_word = cs::word_pmf_alt(profile, p);
            for (auto m : blocks) {
                const auto q0 = cs::block_pmf(q0_word, m);
                const auto q1 = cs::block_pmf(q1_word, m);
                for (const auto& pt : cs::roc_breakpoints(q0, q1)) {
                    std::vector<std::string> row{fmt(p), std::to_string(m), "vertex", fmt(pt.alpha), fmt(pt.pd)};
                    if (mc) row.insert(row.end(), {"", "", ""});
                    rows.push_back(std::move(row));
                    if (pt.alpha >= 1.0 - 1e-15) break;
                }
                for (std::size_t i = 1; i <= cfg.alpha_points; ++i) {
                    const double a = static_cast<double>(i) / static_cast<double>(cfg.alpha_points + 1);
                    const auto rule = cs::np_rule(q0, q1, a);
                    std::vector<std::string> row{fmt(p), std::to_string(m), "grid", fmt(a), fmt(rule.predicted_pd)};
                    if (mc) {
                        const cs::ChannelModel ch(p);
                        const auto f = cs::simulate_np(code, *table, rule, m, ch, cfg.trials, cfg.seed + 2 * i,
                                                       cs::Hypothesis::h0);
                        const auto d = cs::simulate_np(code, *table, rule, m, ch, cfg.trials, cfg.seed + 2 * i + 1,
                                                       cs::Hypothesis::h1);
                        row.insert(row.end(), {fmt(f.empirical_rate), fmt(d.empirical_rate), fmt(d.std_error)});
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    } else {
        throw cs::InvalidArgument("--kind must be pd-vs-m or roc");
    }
    emit(cfg, render_table(cfg, header, rows));
    return kOk;
}

int cmd_table2(RunConfig cfg) {
    require_p(cfg);
    const auto code = resolve_code(cfg);
    const auto profile = resolve_profile(cfg, code).profile;
    const auto q0_word = cs::word_pmf_null(profile);
    const auto q1_word = cs::word_pmf_alt(profile, cfg.p);
    auto blocks = cfg.block_list;
    if (blocks.empty()) blocks = {5, 8, 10, 14, 17, 20, 35, 37};

    // P_D for every M up to the largest requested, built incrementally.
    const std::size_t max_m = *std::max_element(blocks.begin(), blocks.end());
    std::vector<double> pd(max_m + 1, 0.0);
    cs::BlockPmf q0{0, {1.0}}, q1{0, {1.0}};
    for (std::size_t m = 1; m <= max_m; ++m) {
        q0 = cs::extend_block(q0, q0_word);
        q1 = cs::extend_block(q1, q1_word);
        pd[m] = cs::np_rule(q0, q1, cfg.alpha).predicted_pd;
    }

    const std::vector<std::string> header{"M", "beta", "M_np_scan", "M_formula", "E_Ms_H0", "E_Ms_H1"};
    std::vector<std::vector<std::string>> rows;
    for (auto m : blocks) {
        if (m == 0) throw cs::InvalidArgument("--M values must be >= 1");
        const double beta = pd[m];
        std::size_t scan = 1;
        while (scan < max_m && pd[scan] < beta) ++scan;
        std::vector<std::string> row{std::to_string(m), fmt(beta), std::to_string(scan)};
        if (beta > cfg.alpha && beta < 1.0) {
            const auto plan = cs::sprt_plan(q0_word, q1_word, cfg.alpha, beta);
            row.push_back(fmt(cs::required_codewords(q0_word, q1_word, cfg.alpha, beta)));
            row.push_back(fmt(plan.expected_m0));
            row.push_back(fmt(plan.expected_m1));
        } else {
            row.insert(row.end(), {"", "", ""});
        }
        rows.push_back(std::move(row));
    }
    emit(cfg, render_table(cfg, header, rows));
    return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--code", cfg.code_spec, "hamming:M | rm:R,M | bch:N,K | repetition:N | generator:N:HEX,...");
    cmd->add_option("--code-file", cfg.code_file, "JSON code configuration");
    cmd->add_option("--profile", cfg.profile_path, "import a coset weight profile (JSON)");
    cmd->add_option("--profile-method,--method", cfg.profile_method, "direct | dual | auto")
        ->check(CLI::IsMember({"direct", "dual", "auto"}));
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codescout: GLRT detection of noisy linear-code streams"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* profile = app.add_subcommand("profile", "compute (or import) and export the coset weight profile");
    add_common(profile, cfg);

    auto* detect_np = app.add_subcommand("detect-np", "Neyman-Pearson decision on a block of M words");
    add_common(detect_np, cfg);
    auto* detect_seq = app.add_subcommand("detect-seq", "sequential probability ratio test on a word stream");
    add_common(detect_seq, cfg);
    for (auto* cmd : {detect_np, detect_seq}) {
        cmd->add_option("--p", cfg.p, "BSC crossover probability under H1");
        cmd->add_option("--alpha", cfg.alpha, "false-alarm probability");
        cmd->add_option("--M", cfg.blocks, "number of words");
        cmd->add_option("--input", cfg.input, "raw bit stream (packed bytes, MSB first)");
        cmd->add_option("--generate", cfg.generate, "simulate the stream: h0 | h1");
    }
    detect_seq->add_option("--beta", cfg.beta, "detection probability target");
    detect_seq->add_option("--max-steps", cfg.max_steps, "words consumed before giving up");

    auto* sample = app.add_subcommand("sample-size", "approximate number of codewords for (alpha, beta)");
    add_common(sample, cfg);
    sample->add_option("--p", cfg.p, "BSC crossover probability");
    sample->add_option("--alpha", cfg.alpha, "false-alarm probability");
    sample->add_option("--beta", cfg.beta, "detection probability");

    auto* curves = app.add_subcommand("curves", "P_D vs M, or ROC at fixed M, as CSV");
    add_common(curves, cfg);
    curves->add_option("--kind", cfg.kind, "pd-vs-m | roc")->check(CLI::IsMember({"pd-vs-m", "roc"}));
    curves->add_option("--p", cfg.p_list, "crossover probabilities (repeatable)");
    curves->add_option("--alpha", cfg.alpha, "false-alarm probability (pd-vs-m)");
    curves->add_option("--M", cfg.block_list, "block counts: max M for pd-vs-m, list for roc");
    curves->add_option("--alpha-points", cfg.alpha_points, "ROC: evenly spaced alpha grid points");
    curves->add_option("--trials", cfg.trials, "Monte Carlo trials per point (0 = none)");

    auto* table2 = app.add_subcommand("table2", "Neyman-Pearson block counts against sequential expectations");
    add_common(table2, cfg);
    table2->add_option("--p", cfg.p, "BSC crossover probability");
    table2->add_option("--alpha", cfg.alpha, "false-alarm probability");
    table2->add_option("--M", cfg.block_list, "block counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        if (curves->parsed() && cfg.kind == "pd-vs-m" && !cfg.block_list.empty()) cfg.blocks = cfg.block_list.back();
        if (profile->parsed()) return cmd_profile(cfg);
        if (detect_np->parsed()) return cmd_detect_np(cfg);
        if (detect_seq->parsed()) return cmd_detect_seq(cfg);
        if (sample->parsed()) return cmd_sample_size(cfg);
        if (curves->parsed()) return cmd_curves(cfg);
        if (table2->parsed()) return cmd_table2(cfg);
    } catch (const cs::LimitExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const cs::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const cs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
