#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spingate/linalg.hpp"

namespace spingate {

enum class PauliLabel { I, X, Y, Z };

char pauli_char(PauliLabel label);  // 'I', 'X', 'Y', 'Z'

// The 2x2 matrix in the single-spin basis (|1> = up first, |0> = down second).
ComplexMatrix single_pauli(PauliLabel label);

// Named collection of spin-1/2 sites. State space dimension is 2^n.
class SpinSystem {
public:
    // Default names "A", "B", "C", ... (site_count <= 26).
    explicit SpinSystem(std::size_t site_count);
    explicit SpinSystem(std::vector<std::string> site_names);

    std::size_t site_count() const noexcept { return names_.size(); }
    std::size_t dimension() const noexcept { return std::size_t{1} << names_.size(); }
    const std::string& site_name(std::size_t site) const;
    std::optional<std::size_t> site_index(std::string_view name) const;

    bool operator==(const SpinSystem&) const = default;

private:
    std::vector<std::string> names_;
};

// One factor of a Pauli string: a non-identity Pauli on a single site.
struct PauliFactor {
    std::size_t site;
    PauliLabel label;

    bool operator==(const PauliFactor&) const = default;
};

// coefficient * product of single-site Paulis on distinct sites.
// Coefficients are real (units of hbar/dt with hbar = dt = 1), so every
// term matrix is Hermitian.
class PauliTerm {
public:
    PauliTerm(double coefficient, std::vector<PauliFactor> factors);

    double coefficient() const noexcept { return coefficient_; }
    const std::vector<PauliFactor>& factors() const noexcept { return factors_; }
    std::size_t order() const noexcept { return factors_.size(); }
    std::size_t max_site() const;

    bool operator==(const PauliTerm&) const = default;

private:
    double coefficient_;
    std::vector<PauliFactor> factors_;  // sorted by site, unique, non-identity
};

struct Hamiltonian {
    SpinSystem system;
    std::vector<PauliTerm> terms;
};

std::size_t max_interaction_order(const Hamiltonian& h);

// True if some term acts on both sites at once (a direct edge in the
// interaction graph).
bool has_direct_coupling(const Hamiltonian& h, std::size_t site_a, std::size_t site_b);

// coefficient * Kronecker product over all sites in order (site 0 leftmost),
// identity at sites the term does not touch.
ComplexMatrix embed_term(const PauliTerm& term, const SpinSystem& system);

// Sum of embedded terms; the zero matrix for an empty term list.
ComplexMatrix assemble(const Hamiltonian& h);

// The three-spin XOR Hamiltonian: (pi sqrt(2)/4) Z_A Y_B + (pi sqrt(2)/4) Z_B Y_C
// - (pi/4) Y_B X_C, with hbar = dt = 1 folded into the coefficients.
Hamiltonian xor_hamiltonian();

}  // namespace spingate
