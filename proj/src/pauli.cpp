#include "spingate/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spingate {

char pauli_char(PauliLabel label) {
    switch (label) {
        case PauliLabel::I: return 'I';
        case PauliLabel::X: return 'X';
        case PauliLabel::Y: return 'Y';
        case PauliLabel::Z: return 'Z';
    }
    throw std::invalid_argument("pauli_char: bad label");
}

ComplexMatrix single_pauli(PauliLabel label) {
    ComplexMatrix m(2);
    switch (label) {
        case PauliLabel::I:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case PauliLabel::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliLabel::Y:
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case PauliLabel::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

SpinSystem::SpinSystem(std::size_t site_count) {
    if (site_count == 0) throw std::invalid_argument("SpinSystem: site_count must be positive");
    if (site_count > 26)
        throw std::invalid_argument("SpinSystem: default names cover at most 26 sites");
    names_.reserve(site_count);
    for (std::size_t i = 0; i < site_count; ++i)
        names_.emplace_back(1, static_cast<char>('A' + i));
}

SpinSystem::SpinSystem(std::vector<std::string> site_names) : names_(std::move(site_names)) {
    if (names_.empty()) throw std::invalid_argument("SpinSystem: need at least one site");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("SpinSystem: empty site name");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("SpinSystem: duplicate site name '" + names_[i] + "'");
    }
}

const std::string& SpinSystem::site_name(std::size_t site) const {
    if (site >= names_.size()) throw std::out_of_range("SpinSystem: site index out of range");
    return names_[site];
}

std::optional<std::size_t> SpinSystem::site_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

PauliTerm::PauliTerm(double coefficient, std::vector<PauliFactor> factors)
    : coefficient_(coefficient), factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("PauliTerm: at least one factor required");
    if (!std::isfinite(coefficient_))
        throw std::invalid_argument("PauliTerm: coefficient must be finite");
    for (const PauliFactor& f : factors_)
        if (f.label == PauliLabel::I)
            throw std::invalid_argument("PauliTerm: identity factors are implicit");
    std::sort(factors_.begin(), factors_.end(),
              [](const PauliFactor& a, const PauliFactor& b) { return a.site < b.site; });
    for (std::size_t i = 0; i + 1 < factors_.size(); ++i)
        if (factors_[i].site == factors_[i + 1].site)
            throw std::invalid_argument("PauliTerm: duplicate site " +
                                        std::to_string(factors_[i].site));
}

std::size_t PauliTerm::max_site() const { return factors_.back().site; }

std::size_t max_interaction_order(const Hamiltonian& h) {
    std::size_t order = 0;
    for (const PauliTerm& t : h.terms) order = std::max(order, t.order());
    return order;
}

bool has_direct_coupling(const Hamiltonian& h, std::size_t site_a, std::size_t site_b) {
    for (const PauliTerm& t : h.terms) {
        bool a = false, b = false;
        for (const PauliFactor& f : t.factors()) {
            a = a || f.site == site_a;
            b = b || f.site == site_b;
        }
        if (a && b) return true;
    }
    return false;
}

ComplexMatrix embed_term(const PauliTerm& term, const SpinSystem& system) {
    const std::size_t n = system.site_count();
    if (term.max_site() >= n)
        throw std::out_of_range("embed_term: site " + std::to_string(term.max_site()) +
                                " outside system of " + std::to_string(n) + " spins");

    // Every Pauli has exactly one nonzero entry per row, so each row of the
    // embedded matrix holds a single product value.
    const std::size_t dim = system.dimension();
    ComplexMatrix out(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        std::size_t col = row;
        cplx value = term.coefficient();
        for (const PauliFactor& f : term.factors()) {
            const std::size_t shift = n - 1 - f.site;
            const std::size_t rbit = (row >> shift) & 1u;
            switch (f.label) {
                case PauliLabel::X:
                    col ^= (std::size_t{1} << shift);
                    break;
                case PauliLabel::Y:
                    col ^= (std::size_t{1} << shift);
                    // (0,1) entry is -i, (1,0) entry is +i
                    value *= (rbit == 0 ? cplx(0.0, -1.0) : cplx(0.0, 1.0));
                    break;
                case PauliLabel::Z:
                    if (rbit == 1) value = -value;
                    break;
                case PauliLabel::I:
                    break;
            }
        }
        out(row, col) += value;
    }
    return out;
}

ComplexMatrix assemble(const Hamiltonian& h) {
    const std::size_t dim = h.system.dimension();
    ComplexMatrix sum(dim);
    for (const PauliTerm& term : h.terms) {
        const ComplexMatrix m = embed_term(term, h.system);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) sum(i, j) += m(i, j);
    }
    return sum;
}

Hamiltonian xor_hamiltonian() {
    // Coefficient arithmetic matches the file form "sqrt(2)*pi/4" bit for bit.
    const double root2_pi_over_4 = std::sqrt(2.0) * std::numbers::pi / 4.0;
    const double minus_pi_over_4 = -std::numbers::pi / 4.0;
    SpinSystem abc(3);
    std::vector<PauliTerm> terms;
    terms.emplace_back(root2_pi_over_4,
                       std::vector<PauliFactor>{{0, PauliLabel::Z}, {1, PauliLabel::Y}});
    terms.emplace_back(root2_pi_over_4,
                       std::vector<PauliFactor>{{1, PauliLabel::Z}, {2, PauliLabel::Y}});
    terms.emplace_back(minus_pi_over_4,
                       std::vector<PauliFactor>{{1, PauliLabel::Y}, {2, PauliLabel::X}});
    return Hamiltonian{std::move(abc), std::move(terms)};
}

}  // namespace spingate
