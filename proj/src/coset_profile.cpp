#include "codescout/coset_profile.hpp"

#include <fstream>
#include <map>

#include "codescout/error.hpp"
#include "codescout/profile_kernels.hpp"

namespace codescout {

CosetWeightProfile::CosetWeightProfile(std::size_t n_, std::size_t k_)
    : n(n_), k(k_), beta(n_ + 1, 0), rows(n_ + 1, std::vector<BigInt>(n_ + 1, 0)) {}

std::size_t CosetWeightProfile::covering_radius() const {
    std::size_t radius = 0;
    for (std::size_t l = 0; l < beta.size(); ++l)
        if (beta[l] != 0) radius = l;
    return radius;
}

void validate_profile(const CosetWeightProfile& p) {
    auto fail = [](const std::string& what) { throw InvariantViolation("coset profile: " + what); };
    if (p.k < 1 || p.k >= p.n) fail("need 1 <= k < n");
    if (p.n - p.k > kMaxRedundancy) fail("n-k too large");
    if (p.beta.size() != p.n + 1) fail("beta must have n+1 entries");
    if (p.rows.size() != p.n + 1) fail("rows must have n+1 entries");
    for (const auto& row : p.rows)
        if (row.size() != p.n + 1) fail("every row must have n+1 entries");

    const BigInt cosets = BigInt(1) << (p.n - p.k);
    const BigInt coset_size = BigInt(1) << p.k;
    BigInt beta_sum = 0;
    BigInt mass = 0;
    for (std::size_t l = 0; l <= p.n; ++l) {
        beta_sum += p.beta[l];
        BigInt row_sum = 0;
        for (std::size_t i = 0; i <= p.n; ++i) {
            const auto& c = p.rows[l][i];
            if (c < 0) fail("negative count in row " + std::to_string(l));
            if (i < l && c != 0)
                fail("row " + std::to_string(l) + " has a word of weight " + std::to_string(i) +
                     " lighter than its leader");
            row_sum += c;
        }
        if (p.rows[l][l] < p.beta[l])
            fail("row " + std::to_string(l) + " has fewer weight-" + std::to_string(l) + " words than cosets");
        if (row_sum != coset_size * p.beta[l])
            fail("row " + std::to_string(l) + " mass " + row_sum.str() + " != beta * 2^k");
        mass += row_sum;
    }
    if (beta_sum != cosets) fail("sum of beta is " + beta_sum.str() + ", expected 2^(n-k) = " + cosets.str());
    if (p.beta[0] != 1) fail("beta[0] must be 1 (the code itself)");
    if (mass != (BigInt(1) << p.n)) fail("total mass differs from 2^n");
}

void validate_profile(const CosetWeightProfile& p, const LinearCode& code) {
    validate_profile(p);
    if (p.n != code.n() || p.k != code.k()) throw InvariantViolation("coset profile: (n,k) differ from code");
    const auto a = code.weight_distribution();
    for (std::size_t i = 0; i <= p.n; ++i)
        if (p.rows[0][i] != a[i])
            throw InvariantViolation("coset profile: row 0 differs from code weight distribution at weight " +
                                     std::to_string(i));
}

CosetWeightProfile profile_direct(const LinearCode& code, Execution mode) {
    const auto counts = mode == Execution::parallel ? kernels::coset_weight_counts_parallel(code)
                                                    : kernels::coset_weight_counts_serial(code);
    const std::size_t n = code.n();
    CosetWeightProfile out(n, code.k());
    std::vector<std::vector<std::uint64_t>> rows(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t s = 0; s < code.coset_count(); ++s) {
        std::size_t leader = 0;
        while (leader <= n && counts.at(s, leader) == 0) ++leader;
        if (leader > n) throw InvariantViolation("profile_direct: empty coset");
        ++out.beta[leader];
        for (std::size_t w = 0; w <= n; ++w) rows[leader][w] += counts.at(s, w);
    }
    for (std::size_t l = 0; l <= n; ++l)
        for (std::size_t w = 0; w <= n; ++w) out.rows[l][w] = rows[l][w];
    validate_profile(out);
    return out;
}

namespace {

// Coefficient of y^i in (1+y)^(n-d) (1-y)^d for i = 0..n.
std::vector<BigInt> krawtchouk_row(std::size_t n, std::size_t d) {
    std::vector<BigInt> poly(n + 1, 0);
    poly[0] = 1;
    std::size_t degree = 0;
    auto multiply = [&](int sign) {
        for (std::size_t i = degree + 1; i > 0; --i) poly[i] += sign * poly[i - 1];
        ++degree;
    };
    for (std::size_t j = 0; j < n - d; ++j) multiply(+1);
    for (std::size_t j = 0; j < d; ++j) multiply(-1);
    return poly;
}

}  // namespace

CosetWeightProfile profile_dual_transform(const LinearCode& code, Execution mode) {
    const auto sig = mode == Execution::parallel ? kernels::dual_signatures_parallel(code)
                                                 : kernels::dual_signatures_serial(code);
    const std::size_t n = code.n();
    const std::size_t r = code.redundancy();
    const std::size_t width = sig.weights.size();

    // Cosets with the same signed dual-weight sums share an enumerator.
    std::map<std::vector<std::int32_t>, std::uint64_t> classes;
    for (std::uint64_t s = 0; s < code.coset_count(); ++s) {
        std::vector<std::int32_t> key(sig.sums.begin() + static_cast<std::ptrdiff_t>(s * width),
                                      sig.sums.begin() + static_cast<std::ptrdiff_t>((s + 1) * width));
        ++classes[std::move(key)];
    }

    std::vector<std::vector<BigInt>> kraw;
    kraw.reserve(width);
    for (auto d : sig.weights) kraw.push_back(krawtchouk_row(n, d));

    const BigInt modulus = BigInt(1) << r;
    CosetWeightProfile out(n, code.k());
    for (const auto& [key, multiplicity] : classes) {
        std::vector<BigInt> enumerator(n + 1, 0);
        for (std::size_t i = 0; i <= n; ++i) {
            BigInt acc = 0;
            for (std::size_t c = 0; c < width; ++c)
                if (key[c] != 0) acc += kraw[c][i] * key[c];
            if (acc < 0) throw InvariantViolation("profile_dual_transform: negative coefficient");
            if ((acc & (modulus - 1)) != 0)
                throw InvariantViolation("profile_dual_transform: coefficient not divisible by 2^(n-k)");
            enumerator[i] = acc >> r;
        }
        std::size_t leader = 0;
        while (leader <= n && enumerator[leader] == 0) ++leader;
        if (leader > n) throw InvariantViolation("profile_dual_transform: empty coset enumerator");
        out.beta[leader] += multiplicity;
        for (std::size_t i = 0; i <= n; ++i) out.rows[leader][i] += enumerator[i] * multiplicity;
    }
    validate_profile(out);
    return out;
}

nlohmann::json profile_to_json(const CosetWeightProfile& p) {
    nlohmann::json doc;
    doc["n"] = p.n;
    doc["k"] = p.k;
    doc["beta"] = p.beta;
    nlohmann::json rows = nlohmann::json::object();
    for (std::size_t l = 0; l <= p.n; ++l) {
        if (p.beta[l] == 0) continue;
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : p.rows[l]) row.push_back(c.str());
        rows[std::to_string(l)] = std::move(row);
    }
    doc["rows"] = std::move(rows);
    return doc;
}

CosetWeightProfile profile_from_json(const nlohmann::json& doc) {
    CosetWeightProfile p;
    try {
        const auto n = doc.at("n").get<std::size_t>();
        const auto k = doc.at("k").get<std::size_t>();
        if (n == 0 || n > 4096) throw ParseError("profile: implausible n");
        p = CosetWeightProfile(n, k);
        const auto& beta = doc.at("beta");
        if (!beta.is_array() || beta.size() > n + 1) throw ParseError("profile: beta must be an array of <= n+1 ints");
        for (std::size_t l = 0; l < beta.size(); ++l) p.beta[l] = beta[l].get<std::uint64_t>();
        for (const auto& [key, row] : doc.at("rows").items()) {
            std::size_t l = 0;
            try {
                l = std::stoul(key);
            } catch (const std::exception&) {
                throw ParseError("profile: row key '" + key + "' is not an integer");
            }
            if (l > n) throw ParseError("profile: row key " + key + " exceeds n");
            if (!row.is_array() || row.size() != n + 1)
                throw ParseError("profile: row " + key + " must have n+1 entries");
            for (std::size_t i = 0; i <= n; ++i) {
                const auto text = row[i].get<std::string>();
                if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("profile: count '" + text + "' is not a decimal integer");
                p.rows[l][i] = BigInt(text);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("profile: ") + e.what());
    }
    validate_profile(p);
    return p;
}

void export_profile(const CosetWeightProfile& profile, std::ostream& out) {
    out << profile_to_json(profile).dump(2) << '\n';
}

void export_profile(const CosetWeightProfile& profile, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write profile to " + path.string());
    export_profile(profile, out);
}

CosetWeightProfile import_profile(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("profile: ") + e.what());
    }
    return profile_from_json(doc);
}

CosetWeightProfile import_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open profile " + path.string());
    return import_profile(in);
}

}  // namespace codescout
