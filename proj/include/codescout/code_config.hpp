#pragma once

#include <filesystem>

#include "json.hpp"
#include "codescout/linear_code.hpp"

namespace codescout {

// Code configuration document:
//   { "label": text,
//     "family": "hamming" | "reed_muller" | "generator",
//     "m": int, "r": int,                       (hamming / reed_muller)
//     "n": int,                                  (generator)
//     "rows": ["<hex>", ...]                     (generator: bit j of the value = coordinate j)
//     "generator_polynomial": "<bits>",          (generator: highest degree first)
//     "min_distance": int }                      (optional; checked by exhaustive search)
LinearCode code_from_json(const nlohmann::json& doc);
LinearCode load_code_config(const std::filesystem::path& path);

// Parses a hex string into a length-n word (least significant bit = coordinate 0).
BitWord parse_hex_row(std::string_view hex, std::size_t n);

}  // namespace codescout
