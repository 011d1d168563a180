#pragma once

#include <string_view>

#include "weylcyc/chain.hpp"

namespace weylcyc {

// Polynomial grammar: variables p1..pN, q1..qN or y1..y2N; integer and a/b
// literals; + - * ^ and parentheses; whitespace ignored.
//   "p1^2*q1 - 3/2*q2"
WeylPoly parse_poly(std::string_view text, int n);

// r×r literal "{{a, b}, {c, d}}"; a bare polynomial f is read as f ⊗ 𝟙.
MatrixElement parse_matrix(std::string_view text, int n, int r);

// Chain grammar: terms "coeff * [a0; a1; ...]" joined by + / -; the
// coefficient (and its '*') may be omitted.
Chain<WeylPoly> parse_chain(std::string_view text, int n);
Chain<MatrixElement> parse_matrix_chain(std::string_view text, int n, int r);

}  // namespace weylcyc
