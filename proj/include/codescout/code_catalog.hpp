#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "codescout/linear_code.hpp"

namespace codescout {

// (2^m-1, 2^m-1-m) Hamming code. Column j of H is the integer j+1 (bit i in row i),
// and G is the systematic nullspace basis of that H. 2 <= m <= 16.
LinearCode build_hamming(int m);

// RM(r,m): generator rows are evaluation vectors of the monomials of degree <= r
// over the 2^m points of F_2^m (point x is coordinate x). 0 <= r <= m <= 7.
LinearCode build_reed_muller(int r, int m);

// (n,1) repetition code.
LinearCode build_repetition(int n);

// Cyclic code of length n generated by g(x). `coefficients` lists g from the highest
// degree down to x^0, e.g. "111010001" is x^8+x^7+x^6+x^4+1. Rows are x^i g(x).
LinearCode from_generator_polynomial(int n, std::string_view coefficients, std::string label);

// Directory holding the shipped code configurations (data/codes).
std::filesystem::path shipped_code_dir();

// "hamming:M", "rm:R,M", "repetition:N", "bch:N,K" (shipped config), "generator:N:HEXROW,..."
LinearCode parse_code_spec(std::string_view spec);

}  // namespace codescout
