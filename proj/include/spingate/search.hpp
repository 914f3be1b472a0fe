#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "spingate/gate.hpp"
#include "spingate/pauli.hpp"

namespace spingate {

// A Pauli component combination on an unordered site pair, e.g. (Z, Y).
struct ComponentPair {
    PauliLabel first;
    PauliLabel second;

    bool operator==(const ComponentPair&) const = default;
};

// All 9 non-identity combinations in row-major (X,Y,Z) x (X,Y,Z) order.
std::vector<ComponentPair> all_pair_components();

// Which two-spin (and optionally single-spin) terms a candidate Hamiltonian
// may contain. Each allowed term is one search coordinate; the canonical
// order is pairs as listed, components as listed within a pair, then
// single-site terms (site-major, axes x, y, z).
class InteractionTemplate {
public:
    InteractionTemplate(SpinSystem system, std::vector<std::pair<std::size_t, std::size_t>> pairs,
                        bool include_single_site = false, double duration = 1.0);

    void set_pair_components(std::size_t pair_index, std::vector<ComponentPair> components);

    const SpinSystem& system() const noexcept { return system_; }
    double duration() const noexcept { return duration_; }
    void set_duration(double duration) { duration_ = duration; }

    std::size_t parameter_count() const noexcept { return slots_.size(); }
    // The Pauli-string shape behind parameter slot k.
    const std::vector<PauliFactor>& slot_factors(std::size_t k) const { return slots_.at(k); }

private:
    void rebuild_slots();

    SpinSystem system_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::vector<ComponentPair>> pair_components_;
    bool include_single_site_;
    double duration_;
    std::vector<std::vector<PauliFactor>> slots_;
};

// Coefficients in the template's canonical slot order; zero-coefficient
// slots are omitted from the realized term list.
Hamiltonian realize(const InteractionTemplate& tmpl, const std::vector<double>& params);

// Total leakage of the evolution unitary against the gate spec. Zero exactly
// on gate realizations, smooth in the coefficients.
double objective(const InteractionTemplate& tmpl, const std::vector<double>& params,
                 const GateSpec& spec);

struct SearchConfig {
    std::size_t restarts = 1;
    std::uint64_t rng_seed = 0;
    double init_scale = 2.0;    // starts drawn uniform in [-scale, scale]
    double success_tol = 1e-6;
    std::size_t max_iterations = 2000;  // per Nelder-Mead run
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    // Converged when the simplex value spread drops below spread_tol and the
    // coordinate spread below sqrt(spread_tol).
    double spread_tol = 1e-12;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    std::size_t iterations;
};

// Derivative-free simplex minimization. Deterministic given x0 and config.
// Throws search_error if the objective returns a non-finite value.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const SearchConfig& config);

struct SearchResult {
    std::vector<double> best_parameters;
    double best_objective = 0.0;
    std::size_t restart_index = 0;
    std::size_t iterations_used = 0;
    bool succeeded = false;
};

// Seeded random-restart minimization of the gate objective over the template.
// Restarts draw their starting points from one rng stream in restart order;
// the winner is the first restart reaching success_tol, otherwise the best
// (objective, restart_index) pair. Fully reproducible from rng_seed.
SearchResult search(const InteractionTemplate& tmpl, const GateSpec& spec,
                    const SearchConfig& config);

// Maps every term's factor sites through the permutation; coefficients
// unchanged. site_permutation[old_site] = new_site.
Hamiltonian relabel(const Hamiltonian& h, const std::vector<std::size_t>& site_permutation);

}  // namespace spingate
