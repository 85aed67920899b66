#include "codescout/code_config.hpp"

#include <fstream>

#include "codescout/code_catalog.hpp"
#include "codescout/error.hpp"

namespace codescout {

BitWord parse_hex_row(std::string_view hex, std::size_t n) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw ParseError("empty hex row");
    BitWord row(n);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const char ch = *it;
        int nibble;
        if (ch >= '0' && ch <= '9')
            nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            nibble = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            nibble = ch - 'A' + 10;
        else
            throw ParseError("invalid hex digit in generator row '" + std::string(hex) + "'");
        for (int b = 0; b < 4; ++b) {
            if (!((nibble >> b) & 1)) continue;
            if (bit + b >= n) throw ParseError("hex row '" + std::string(hex) + "' has bits beyond n");
            row.set(bit + b, true);
        }
    }
    return row;
}

LinearCode code_from_json(const nlohmann::json& doc) {
    try {
        const auto family = doc.at("family").get<std::string>();
        const auto label = doc.value("label", std::string{});
        auto relabel = [&](LinearCode code) {
            if (label.empty()) return code;
            return LinearCode(code.generator(), code.parity_check(), label);
        };

        auto check_distance = [&](LinearCode code) {
            if (doc.contains("min_distance")) {
                const auto expected = doc.at("min_distance").get<std::size_t>();
                const auto actual = code.minimum_distance();
                if (actual != expected)
                    throw InvariantViolation("code '" + code.label() + "': minimum distance is " +
                                             std::to_string(actual) + ", configuration claims " +
                                             std::to_string(expected));
            }
            return code;
        };

        if (family == "hamming") return check_distance(relabel(build_hamming(doc.at("m").get<int>())));
        if (family == "reed_muller")
            return check_distance(relabel(build_reed_muller(doc.at("r").get<int>(), doc.at("m").get<int>())));
        if (family == "generator") {
            const auto n = doc.at("n").get<int>();
            if (n < 2) throw InvalidArgument("code config: n must be >= 2");
            if (doc.contains("generator_polynomial"))
                return check_distance(from_generator_polynomial(
                    n, doc.at("generator_polynomial").get<std::string>(), label.empty() ? "generator" : label));
            std::vector<BitWord> rows;
            for (const auto& r : doc.at("rows")) rows.push_back(parse_hex_row(r.get<std::string>(), n));
            return check_distance(
                LinearCode::from_generator(GF2Matrix(std::move(rows)), label.empty() ? "generator" : label));
        }
        throw InvalidArgument("code config: unknown family '" + family + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("code config: ") + e.what());
    }
}

LinearCode load_code_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open code config " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("code config " + path.string() + ": " + e.what());
    }
    return code_from_json(doc);
}

}  // namespace codescout
