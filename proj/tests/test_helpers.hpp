#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spingate/hamfile.hpp"
#include "spingate/linalg.hpp"
#include "spingate/pauli.hpp"

namespace test_util {

using spingate::ComplexMatrix;
using spingate::cplx;

// Seeded generator with an engine-level mapping to doubles, so expected
// values frozen in tests do not depend on the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)
    double symmetric(double scale = 1.0) { return scale * (2.0 * uniform() - 1.0); }
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

private:
    std::mt19937_64 eng_;
};

inline ComplexMatrix random_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(rng.symmetric(), rng.symmetric());
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
    const ComplexMatrix m = random_matrix(dim, rng);
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

inline spingate::PauliTerm random_term(std::size_t site_count, Rng& rng) {
    const std::size_t max_order = std::min<std::size_t>(3, site_count);
    const std::size_t order = 1 + rng.below(max_order);
    std::vector<std::size_t> sites(site_count);
    for (std::size_t i = 0; i < site_count; ++i) sites[i] = i;
    // partial Fisher-Yates picks distinct sites
    for (std::size_t i = 0; i < order; ++i)
        std::swap(sites[i], sites[i + rng.below(site_count - i)]);
    static const spingate::PauliLabel axes[3] = {spingate::PauliLabel::X, spingate::PauliLabel::Y,
                                                 spingate::PauliLabel::Z};
    std::vector<spingate::PauliFactor> factors;
    for (std::size_t i = 0; i < order; ++i) factors.push_back({sites[i], axes[rng.below(3)]});
    double coefficient = rng.symmetric(3.0);
    if (coefficient == 0.0) coefficient = 1.0;
    return spingate::PauliTerm(coefficient, std::move(factors));
}

inline spingate::HamFileDocument random_document(Rng& rng) {
    const std::size_t site_count = 1 + rng.below(4);
    spingate::SpinSystem system(site_count);
    std::vector<spingate::PauliTerm> terms;
    const std::size_t term_count = rng.below(11);
    for (std::size_t t = 0; t < term_count; ++t) terms.push_back(random_term(site_count, rng));
    return spingate::HamFileDocument{std::move(system), std::move(terms), {}};
}

}  // namespace test_util
