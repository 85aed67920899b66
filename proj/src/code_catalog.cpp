#include "codescout/code_catalog.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <vector>

#include "codescout/code_config.hpp"
#include "codescout/error.hpp"

namespace codescout {

LinearCode build_hamming(int m) {
    if (m < 2 || m > 16) throw InvalidArgument("build_hamming: m must be in [2,16]");
    const std::size_t n = (std::size_t{1} << m) - 1;
    GF2Matrix h(static_cast<std::size_t>(m), n);
    for (std::size_t j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            if (((j + 1) >> i) & 1U) h.set(static_cast<std::size_t>(i), j, true);
    return LinearCode::from_parity_check(h, "Hamming(" + std::to_string(n) + "," +
                                                std::to_string(n - static_cast<std::size_t>(m)) + ")");
}

LinearCode build_reed_muller(int r, int m) {
    if (m < 1 || m > 7 || r < 0 || r > m)
        throw InvalidArgument("build_reed_muller: need 0 <= r <= m <= 7, m >= 1");
    if (r == m) throw InvalidArgument("build_reed_muller: r = m gives the full space (k = n)");
    const std::size_t n = std::size_t{1} << m;
    std::vector<BitWord> rows;
    for (unsigned mono = 0; mono < (1U << m); ++mono) {
        if (std::popcount(mono) > r) continue;
        BitWord row(n);
        for (std::size_t x = 0; x < n; ++x)
            if ((x & mono) == mono) row.set(x, true);
        rows.push_back(std::move(row));
    }
    const std::size_t k = rows.size();
    return LinearCode::from_generator(GF2Matrix(std::move(rows)),
                                      "RM(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

LinearCode build_repetition(int n) {
    if (n < 2) throw InvalidArgument("build_repetition: n must be >= 2");
    GF2Matrix g(1, static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) g.set(0, static_cast<std::size_t>(j), true);
    return LinearCode::from_generator(g, "Repetition(" + std::to_string(n) + ",1)");
}

LinearCode from_generator_polynomial(int n, std::string_view coefficients, std::string label) {
    if (coefficients.empty()) throw InvalidArgument("generator polynomial is empty");
    for (char ch : coefficients)
        if (ch != '0' && ch != '1') throw ParseError("generator polynomial must be a 0/1 string");
    if (coefficients.front() != '1' || coefficients.back() != '1')
        throw InvalidArgument("generator polynomial must have nonzero leading and constant terms");
    const int degree = static_cast<int>(coefficients.size()) - 1;
    if (n <= degree || degree < 1) throw InvalidArgument("generator polynomial degree must be in [1, n)");
    const int k = n - degree;
    GF2Matrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int shift = 0; shift < k; ++shift)
        for (int d = 0; d <= degree; ++d)
            if (coefficients[static_cast<std::size_t>(degree - d)] == '1')
                g.set(static_cast<std::size_t>(shift), static_cast<std::size_t>(shift + d), true);
    return LinearCode::from_generator(g, std::move(label));
}

std::filesystem::path shipped_code_dir() {
    if (const char* env = std::getenv("CODESCOUT_DATA_DIR")) return std::filesystem::path(env) / "codes";
    return std::filesystem::path(CODESCOUT_DATA_DIR) / "codes";
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InvalidArgument("bad code spec '" + std::string(spec) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

LinearCode parse_code_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw InvalidArgument("code spec must look like FAMILY:PARAMS (got '" + std::string(spec) + "')");
    const auto family = spec.substr(0, colon);
    const auto params = spec.substr(colon + 1);

    if (family == "generator") {
        const auto sep = params.find(':');
        if (sep == std::string_view::npos) throw InvalidArgument("generator spec must be generator:N:HEX,...");
        const auto n = parse_ints(params.substr(0, sep), spec);
        if (n.size() != 1 || n[0] < 2) throw InvalidArgument("generator spec: bad n");
        std::vector<BitWord> rows;
        auto rest = params.substr(sep + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            rows.push_back(parse_hex_row(rest.substr(0, comma), static_cast<std::size_t>(n[0])));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return LinearCode::from_generator(GF2Matrix(std::move(rows)), std::string(spec));
    }

    const auto args = parse_ints(params, spec);
    if (family == "hamming" && args.size() == 1) return build_hamming(args[0]);
    if ((family == "rm" || family == "reed_muller") && args.size() == 2)
        return build_reed_muller(args[0], args[1]);
    if (family == "repetition" && args.size() == 1) return build_repetition(args[0]);
    if (family == "bch" && args.size() == 2) {
        const auto path = shipped_code_dir() /
                          ("bch_" + std::to_string(args[0]) + "_" + std::to_string(args[1]) + ".json");
        if (!std::filesystem::exists(path))
            throw InvalidArgument("no shipped configuration for BCH(" + std::to_string(args[0]) + "," +
                                  std::to_string(args[1]) + ") at " + path.string());
        return load_code_config(path);
    }
    throw InvalidArgument("unknown code spec '" + std::string(spec) + "'");
}

}  // namespace codescout
