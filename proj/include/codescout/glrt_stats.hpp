#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "codescout/coset_profile.hpp"

namespace codescout {

enum class Hypothesis { h0, h1 };

const char* to_string(Hypothesis h) noexcept;

// Pmf of the per-word distance d_H(Y_i, nearest codeword), indexed 0..n.
struct WordPmf {
    Hypothesis hypothesis = Hypothesis::h0;
    std::vector<double> probs;
    double mean = 0.0;
    double variance = 0.0;
    std::optional<double> crossover;  // set for H1

    std::size_t n() const noexcept { return probs.empty() ? 0 : probs.size() - 1; }
};

// Builds a WordPmf from raw probabilities; checks normalisation to 1e-9.
WordPmf make_word_pmf(Hypothesis hypothesis, std::vector<double> probs,
                      std::optional<double> crossover = std::nullopt);

// Pmf of the block statistic: sum of `blocks` i.i.d. word distances, indexed 0..blocks*n.
struct BlockPmf {
    std::size_t blocks = 0;
    std::vector<double> probs;

    double mean() const;
    double total() const;
};

// q0(j) = beta_j / 2^(n-k).
WordPmf word_pmf_null(const CosetWeightProfile& profile);

// q1(l) = sum_i rows[l][i] p^i (1-p)^(n-i); 0 <= p < 1/2.
WordPmf word_pmf_alt(const CosetWeightProfile& profile, double p);

// M-fold convolution of the word pmf.
BlockPmf block_pmf(const WordPmf& word, std::size_t blocks);

// One more convolution: the pmf for blocks+1 words.
BlockPmf extend_block(const BlockPmf& block, const WordPmf& word);

// Randomised Neyman-Pearson test on the block distance D:
//   D < tau -> H1;  D == tau -> H1 with probability eta;  D > tau -> H0.
struct NpRule {
    std::size_t tau_opt = 0;
    double eta = 0.0;
    double alpha_target = 0.0;
    double alpha_achieved = 0.0;
    double predicted_pd = 0.0;
    std::string diagnostic;  // non-empty when the target could not be met exactly
};

// tau_opt is the largest i in [0, Mn] with sum_{j<i} Q0(j) <= alpha; eta fills the gap to
// alpha when Q0(tau_opt) > 0 and is 0 otherwise.
NpRule np_rule(const BlockPmf& q0, const BlockPmf& q1, double alpha);

// sum_{j<tau} Q(j) + eta Q(tau): P_D when Q = Q1, P_F when Q = Q0.
double detection_probability(const NpRule& rule, const BlockPmf& q1);
double false_alarm_probability(const NpRule& rule, const BlockPmf& q0);

// Gaussian approximation of the block count needed for (alpha, beta):
//   M = ((sigma0 Phi^-1(alpha) - sigma1 Phi^-1(beta)) / (mu1 - mu0))^2, unrounded.
double required_codewords(const WordPmf& q0, const WordPmf& q1, double alpha, double beta);

// Vertices of the ROC: (sum_{j<i} Q0(j), sum_{j<i} Q1(j)) for i = 0..Mn+1.
struct RocPoint {
    double alpha;
    double pd;
};
std::vector<RocPoint> roc_breakpoints(const BlockPmf& q0, const BlockPmf& q1);

// Sum with Neumaier compensation.
double compensated_sum(const std::vector<double>& values);

}  // namespace codescout
