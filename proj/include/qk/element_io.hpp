// element_io.hpp — the element text grammar and JSON serialization.
//
//   element := ['-'] term (('+'|'-') term)*
//   term    := factors separated by optional '*', exactly one of them an
//              index literal O[i,j]; the others are q1/q2 powers and an
//              integer-Laurent coefficient in z1..z{n-1} built from
//              + - * ^ and parentheses
//
// Canonical printing normalizes indices to bar form with explicit q powers
// and sorts terms by (degree, bar) lexicographically; parse(print(e)) = e.

#pragma once

#include <string>

#include "qk/combinatorics.hpp"
#include "qk/qkring.hpp"

namespace qk {

QkElement parse_element(const std::string& text, int n); // throws parse_error

// Index literal "[i,j]" or "O[i,j]".
TildeIndex parse_index(const std::string& text, int n); // throws parse_error

std::string print_element(const QkElement& e);

// {"n": .., "terms": [{"i", "j", "bar", "degree", "coeff": [{"exp", "c"}]}]}
// with terms and coefficient monomials in canonical order and integers
// rendered as decimal strings.
std::string element_json(const QkElement& e);

} // namespace qk
