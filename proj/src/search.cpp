#include "spingate/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "spingate/errors.hpp"
#include "spingate/linalg.hpp"

namespace spingate {

std::vector<ComponentPair> all_pair_components() {
    static const PauliLabel axes[3] = {PauliLabel::X, PauliLabel::Y, PauliLabel::Z};
    std::vector<ComponentPair> out;
    out.reserve(9);
    for (PauliLabel a : axes)
        for (PauliLabel b : axes) out.push_back({a, b});
    return out;
}

InteractionTemplate::InteractionTemplate(SpinSystem system,
                                         std::vector<std::pair<std::size_t, std::size_t>> pairs,
                                         bool include_single_site, double duration)
    : system_(std::move(system)),
      pairs_(std::move(pairs)),
      include_single_site_(include_single_site),
      duration_(duration) {
    if (!std::isfinite(duration_))
        throw std::invalid_argument("InteractionTemplate: duration must be finite");
    const std::size_t n = system_.site_count();
    for (auto& [a, b] : pairs_) {
        if (a >= n || b >= n)
            throw std::invalid_argument("InteractionTemplate: pair site out of range");
        if (a == b) throw std::invalid_argument("InteractionTemplate: pair must join two sites");
        if (a > b) std::swap(a, b);
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        for (std::size_t j = i + 1; j < pairs_.size(); ++j)
            if (pairs_[i] == pairs_[j])
                throw std::invalid_argument("InteractionTemplate: duplicate pair");
    pair_components_.assign(pairs_.size(), all_pair_components());
    rebuild_slots();
}

void InteractionTemplate::set_pair_components(std::size_t pair_index,
                                              std::vector<ComponentPair> components) {
    if (pair_index >= pairs_.size())
        throw std::out_of_range("InteractionTemplate: pair index out of range");
    if (components.empty())
        throw std::invalid_argument("InteractionTemplate: component list must be nonempty");
    for (const ComponentPair& c : components) {
        if (c.first == PauliLabel::I || c.second == PauliLabel::I)
            throw std::invalid_argument("InteractionTemplate: identity components not allowed");
    }
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (components[i] == components[j])
                throw std::invalid_argument("InteractionTemplate: duplicate component");
    pair_components_[pair_index] = std::move(components);
    rebuild_slots();
}

void InteractionTemplate::rebuild_slots() {
    slots_.clear();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        const auto [a, b] = pairs_[p];
        for (const ComponentPair& c : pair_components_[p])
            slots_.push_back({{a, c.first}, {b, c.second}});
    }
    if (include_single_site_) {
        static const PauliLabel axes[3] = {PauliLabel::X, PauliLabel::Y, PauliLabel::Z};
        for (std::size_t s = 0; s < system_.site_count(); ++s)
            for (PauliLabel axis : axes) slots_.push_back({{s, axis}});
    }
}

Hamiltonian realize(const InteractionTemplate& tmpl, const std::vector<double>& params) {
    if (params.size() != tmpl.parameter_count())
        throw std::invalid_argument("realize: expected " + std::to_string(tmpl.parameter_count()) +
                                    " coefficients, got " + std::to_string(params.size()));
    std::vector<PauliTerm> terms;
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (params[k] == 0.0) continue;
        terms.emplace_back(params[k], tmpl.slot_factors(k));
    }
    return Hamiltonian{tmpl.system(), std::move(terms)};
}

double objective(const InteractionTemplate& tmpl, const std::vector<double>& params,
                 const GateSpec& spec) {
    const Hamiltonian h = realize(tmpl, params);
    const ComplexMatrix u = unitary_exponential(assemble(h), tmpl.duration());
    const VerificationReport report = verify_gate(u, spec, 1e-10);
    double total = 0.0;
    for (double leak : report.column_leakage) total += leak;
    return total;
}

namespace {

double checked(const std::function<double(const std::vector<double>&)>& f,
               const std::vector<double>& x) {
    const double value = f(x);
    if (!std::isfinite(value)) throw search_error("objective returned a non-finite value");
    return value;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const SearchConfig& config) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw std::invalid_argument("nelder_mead: empty start vector");

    // Initial simplex: x0 plus one vertex per coordinate (fminsearch-style steps).
    std::vector<std::vector<double>> vertex(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i)
        vertex[i + 1][i] += (x0[i] != 0.0) ? 0.05 * x0[i] : 0.00025;

    std::vector<double> value(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) value[i] = checked(f, vertex[i]);

    std::vector<std::size_t> order(dim + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto sort_vertices = [&] {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    };
    sort_vertices();

    // Value spread alone stalls when vertices straddle a minimum at equal
    // heights, so convergence also requires a tight simplex.
    const double coord_tol = std::sqrt(config.spread_tol);
    auto simplex_diameter = [&] {
        double diameter = 0.0;
        const std::vector<double>& anchor = vertex[order.front()];
        for (std::size_t i = 0; i <= dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                diameter = std::max(diameter, std::abs(vertex[order[i]][k] - anchor[k]));
        return diameter;
    };

    std::size_t iter = 0;
    for (; iter < config.max_iterations; ++iter) {
        const std::size_t best = order.front(), worst = order.back();
        if (value[worst] - value[best] < config.spread_tol && simplex_diameter() < coord_tol)
            break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (order[i] == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += vertex[order[i]][k];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k)
                x[k] = centroid[k] + t * (centroid[k] - vertex[worst][k]);
            return x;
        };

        const std::vector<double> reflected = blend(config.reflection);
        const double fr = checked(f, reflected);

        if (fr < value[order[0]]) {
            const std::vector<double> expanded = blend(config.reflection * config.expansion);
            const double fe = checked(f, expanded);
            if (fe < fr) {
                vertex[worst] = expanded;
                value[worst] = fe;
            } else {
                vertex[worst] = reflected;
                value[worst] = fr;
            }
        } else if (fr < value[order[dim - 1]]) {
            vertex[worst] = reflected;
            value[worst] = fr;
        } else {
            const bool outside = fr < value[worst];
            const std::vector<double> contracted =
                blend(outside ? config.reflection * config.contraction : -config.contraction);
            const double fc = checked(f, contracted);
            if ((outside && fc <= fr) || (!outside && fc < value[worst])) {
                vertex[worst] = contracted;
                value[worst] = fc;
            } else {
                const std::vector<double>& anchor = vertex[order[0]];
                for (std::size_t i = 0; i <= dim; ++i) {
                    if (order[i] == order[0]) continue;
                    std::vector<double>& x = vertex[order[i]];
                    for (std::size_t k = 0; k < dim; ++k)
                        x[k] = anchor[k] + config.shrink * (x[k] - anchor[k]);
                    value[order[i]] = checked(f, x);
                }
            }
        }
        sort_vertices();
    }

    return NelderMeadResult{vertex[order.front()], value[order.front()], iter};
}

namespace {

// One restart: Nelder-Mead re-descended from its own best point within the
// per-restart iteration budget. A fresh simplex recovers from collapse; the
// loop stops on success, budget exhaustion, or a round without improvement.
NelderMeadResult descend(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& x0, const SearchConfig& config) {
    SearchConfig round_config = config;
    NelderMeadResult best = nelder_mead(f, x0, config);
    while (best.iterations < config.max_iterations && best.value > config.success_tol) {
        round_config.max_iterations = config.max_iterations - best.iterations;
        NelderMeadResult next = nelder_mead(f, best.x, round_config);
        next.iterations += best.iterations;
        if (next.value >= best.value) break;
        best = std::move(next);
    }
    return best;
}

}  // namespace

SearchResult search(const InteractionTemplate& tmpl, const GateSpec& spec,
                    const SearchConfig& config) {
    if (config.restarts == 0) throw std::invalid_argument("search: restarts must be positive");

    auto f = [&](const std::vector<double>& params) { return objective(tmpl, params, spec); };

    const std::size_t dim = tmpl.parameter_count();
    std::mt19937_64 rng(config.rng_seed);
    // Portable uniform draw in [-scale, scale): top 53 bits of the engine
    // output, so results do not depend on the standard library's
    // distribution implementation.
    auto draw = [&rng, &config] {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return config.init_scale * (2.0 * u - 1.0);
    };

    SearchResult result;
    bool have_result = false;
    for (std::size_t r = 0; r < config.restarts; ++r) {
        std::vector<double> x0(dim);
        for (double& c : x0) c = draw();

        double best_value;
        std::vector<double> best_x;
        std::size_t iterations = 0;
        if (dim == 0) {
            best_value = checked(f, x0);
            best_x = x0;
        } else {
            NelderMeadResult nm = descend(f, x0, config);
            best_value = nm.value;
            best_x = std::move(nm.x);
            iterations = nm.iterations;
        }

        if (!have_result || best_value < result.best_objective) {
            result.best_parameters = std::move(best_x);
            result.best_objective = best_value;
            result.restart_index = r;
            result.iterations_used = iterations;
            have_result = true;
        }
        if (result.best_objective <= config.success_tol) break;
    }
    result.succeeded = result.best_objective <= config.success_tol;
    return result;
}

Hamiltonian relabel(const Hamiltonian& h, const std::vector<std::size_t>& site_permutation) {
    const std::size_t n = h.system.site_count();
    if (site_permutation.size() != n)
        throw std::invalid_argument("relabel: permutation length must equal site count");
    std::vector<bool> seen(n, false);
    for (std::size_t target : site_permutation) {
        if (target >= n || seen[target])
            throw std::invalid_argument("relabel: not a permutation of 0..n-1");
        seen[target] = true;
    }
    std::vector<PauliTerm> terms;
    terms.reserve(h.terms.size());
    for (const PauliTerm& term : h.terms) {
        std::vector<PauliFactor> factors = term.factors();
        for (PauliFactor& f : factors) f.site = site_permutation[f.site];
        terms.emplace_back(term.coefficient(), std::move(factors));
    }
    return Hamiltonian{h.system, std::move(terms)};
}

}  // namespace spingate
