#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "codescout/linear_code.hpp"

namespace codescout {

using BigInt = boost::multiprecision::cpp_int;

// Coset weight distribution aggregated by coset-leader weight.
//
//   beta[l]    number of cosets whose leader has weight l
//   rows[l][i] number of weight-i words lying in a coset with leader weight l
//
// rows[0] is the weight distribution of the code itself. Only these aggregates are
// kept; per-coset rows are never needed downstream.
struct CosetWeightProfile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint64_t> beta;
    std::vector<std::vector<BigInt>> rows;

    CosetWeightProfile() = default;
    CosetWeightProfile(std::size_t n, std::size_t k);

    const std::vector<BigInt>& weight_distribution() const { return rows.at(0); }
    // Largest leader weight with a nonzero count.
    std::size_t covering_radius() const;

    friend bool operator==(const CosetWeightProfile&, const CosetWeightProfile&) = default;
};

// Throws InvariantViolation naming the first broken identity:
//   sum beta = 2^(n-k); beta[0] = 1; sum of all rows = 2^n; rows[l][i] = 0 for i < l;
//   rows[l][l] >= beta[l]; sum_i rows[l][i] = beta[l] * 2^k.
void validate_profile(const CosetWeightProfile& profile);
// Additionally checks rows[0] against the code's own weight distribution (k <= 30).
void validate_profile(const CosetWeightProfile& profile, const LinearCode& code);

enum class Execution { parallel, serial };

// Exhaustive scan of all 2^n words (n <= 32).
CosetWeightProfile profile_direct(const LinearCode& code, Execution mode = Execution::parallel);

// Per-coset weight enumerators from the dual code (n-k <= 26):
//   W_{e+C}(x,y) = 2^-(n-k) sum_{u in C^perp} (-1)^<e,u> (x+y)^(n-w(u)) (x-y)^w(u)
CosetWeightProfile profile_dual_transform(const LinearCode& code, Execution mode = Execution::parallel);

// JSON form: { "n", "k", "beta": [int], "rows": { "<l>": ["<decimal>", ...] } }.
// Rows are written for every l with beta[l] > 0; absent rows are read as zero.
nlohmann::json profile_to_json(const CosetWeightProfile& profile);
CosetWeightProfile profile_from_json(const nlohmann::json& doc);

void export_profile(const CosetWeightProfile& profile, std::ostream& out);
void export_profile(const CosetWeightProfile& profile, const std::filesystem::path& path);
CosetWeightProfile import_profile(std::istream& in);
CosetWeightProfile import_profile(const std::filesystem::path& path);

}  // namespace codescout
