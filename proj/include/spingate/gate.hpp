#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spingate/linalg.hpp"

namespace spingate {

// Basis convention: states are listed |11..1>, |11..0>, ..., |00..0>, so
// index(all ones) = 0 and index(all zeros) = 2^n - 1. Bit k of a tuple is
// the spin at site k, 1 meaning "up".
std::size_t index_of(const std::vector<int>& bits);
std::vector<int> bits_of(std::size_t index, std::size_t site_count);

// Boolean function wired onto a spin system: which sites carry the inputs
// and which single site receives the output.
class GateSpec {
public:
    // truth_table[key] with key = input bits packed big-endian (first listed
    // input site is the most significant bit).
    GateSpec(std::vector<int> truth_table, std::vector<std::size_t> input_sites,
             std::size_t output_site);

    const std::vector<std::size_t>& input_sites() const noexcept { return input_sites_; }
    std::size_t output_site() const noexcept { return output_site_; }
    std::size_t input_count() const noexcept { return input_sites_.size(); }
    std::size_t min_site_count() const;

    int output_bit(const std::vector<int>& input_bits) const;

private:
    std::vector<int> table_;
    std::vector<std::size_t> input_sites_;
    std::size_t output_site_;
};

// XOR into C: inputs at sites {0, 1}, output at site 2.
GateSpec xor_gate_spec();

// Unitary whose every column holds a single unit-modulus entry: basis state j
// maps to basis state image[j] with the given phase.
struct SignedPermutation {
    std::vector<std::size_t> image;
    std::vector<cplx> phase;
};

struct VerificationReport {
    bool passed = false;
    double tolerance = 0.0;
    std::vector<double> column_leakage;
    double max_leakage = 0.0;
    std::optional<SignedPermutation> induced_map;
};

// Probability mass each evolved basis column places outside the subspace
// where the output spin carries f(inputs). Phases and residual input-spin
// states do not enter: leakage depends on |u(i,j)|^2 only.
VerificationReport verify_gate(const ComplexMatrix& u, const GateSpec& spec, double tolerance);

// Extracts the classical state map if u is a signed permutation at the given
// tolerance; nullopt otherwise.
std::optional<SignedPermutation> induced_map(const ComplexMatrix& u, double tolerance);

// The exact 8x8 signed-permutation unitary generated by xor_hamiltonian()
// at duration 1; entries in {0, +1, -1}.
ComplexMatrix canonical_xor_unitary();

}  // namespace spingate
