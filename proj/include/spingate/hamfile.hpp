#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spingate/pauli.hpp"

namespace spingate {

// .ham text format, one construct per line:
//
//   # comment                      anywhere, to end of line
//   spins A B C                    optional header, must precede all terms
//   sqrt(2)*pi/4 zA yB             coefficient expression, then factors
//
// A factor is a lowercase axis letter (x, y, z) immediately followed by a
// site name. Without a header the system defaults to spins A B C.
// Coefficient expressions: + - * / with the usual precedence, parentheses,
// 'pi', and sqrt(...). LF and CRLF both accepted.

struct TermLocation {
    std::size_t line;
    std::size_t column;
};

struct HamFileDocument {
    SpinSystem system;
    std::vector<PauliTerm> terms;
    std::vector<TermLocation> term_locations;  // parallel to terms; writer output ignores it

    Hamiltonian to_hamiltonian() const { return Hamiltonian{system, terms}; }
};

// Evaluates a complete coefficient expression. Throws parse_error with
// 1-based position on syntax errors and on division by zero.
double parse_expression(std::string_view text);

HamFileDocument parse_file(std::string_view text);

// Canonical rendering: header line plus one term per line, coefficients as
// shortest round-trip decimals. parse_file(write_file(d)) is semantically d.
std::string write_file(const HamFileDocument& doc);

}  // namespace spingate
