#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "spingate/linalg.hpp"
#include "spingate/pauli.hpp"
#include "test_helpers.hpp"

using namespace spingate;
using test_util::Rng;

TEST_CASE("single spin Pauli matrices, up state first") {
    const ComplexMatrix z = single_pauli(PauliLabel::Z);
    CHECK(z(0, 0) == cplx(1, 0));
    CHECK(z(0, 1) == cplx(0, 0));
    CHECK(z(1, 0) == cplx(0, 0));
    CHECK(z(1, 1) == cplx(-1, 0));

    const ComplexMatrix id = single_pauli(PauliLabel::I);
    CHECK(max_abs_difference(id, ComplexMatrix::identity(2)) == 0.0);

    const ComplexMatrix y = single_pauli(PauliLabel::Y);
    CHECK(y(0, 0) == cplx(0, 0));
    CHECK(y(0, 1) == cplx(0, -1));
    CHECK(y(1, 0) == cplx(0, 1));
    CHECK(y(1, 1) == cplx(0, 0));

    const ComplexMatrix x = single_pauli(PauliLabel::X);
    CHECK(x(0, 1) == cplx(1, 0));
    CHECK(x(1, 0) == cplx(1, 0));
}

TEST_CASE("Pauli algebra") {
    const PauliLabel nontrivial[3] = {PauliLabel::X, PauliLabel::Y, PauliLabel::Z};
    const ComplexMatrix id = ComplexMatrix::identity(2);

    for (PauliLabel k : nontrivial) {
        const ComplexMatrix m = single_pauli(k);
        CHECK(max_abs_difference(multiply(m, m), id) == 0.0);      // squares to identity
        CHECK(m(0, 0) + m(1, 1) == cplx(0, 0));                    // traceless
        CHECK(max_abs_difference(m, adjoint(m)) == 0.0);           // Hermitian
    }

    // X Y = i Z and cyclic
    auto check_product = [&](PauliLabel a, PauliLabel b, PauliLabel c) {
        const ComplexMatrix lhs = multiply(single_pauli(a), single_pauli(b));
        const ComplexMatrix rhs = scale(cplx(0, 1), single_pauli(c));
        CHECK(max_abs_difference(lhs, rhs) == 0.0);
    };
    check_product(PauliLabel::X, PauliLabel::Y, PauliLabel::Z);
    check_product(PauliLabel::Y, PauliLabel::Z, PauliLabel::X);
    check_product(PauliLabel::Z, PauliLabel::X, PauliLabel::Y);
}

TEST_CASE("spin systems") {
    const SpinSystem abc(3);
    CHECK(abc.site_count() == 3);
    CHECK(abc.dimension() == 8);
    CHECK(abc.site_name(0) == "A");
    CHECK(abc.site_name(2) == "C");
    CHECK(abc.site_index("B") == 1);
    CHECK(!abc.site_index("D").has_value());

    CHECK_THROWS_AS(SpinSystem(std::vector<std::string>{"A", "A"}), std::invalid_argument);
    CHECK_THROWS_AS(SpinSystem(std::vector<std::string>{}), std::invalid_argument);
    CHECK_THROWS_AS(SpinSystem(0), std::invalid_argument);
}

TEST_CASE("Pauli term validation") {
    CHECK_THROWS_AS(PauliTerm(1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(PauliTerm(1.0, {{0, PauliLabel::Z}, {0, PauliLabel::Y}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PauliTerm(1.0, {{0, PauliLabel::I}}), std::invalid_argument);

    // factors come out sorted by site
    const PauliTerm t(2.0, {{2, PauliLabel::X}, {0, PauliLabel::Z}});
    CHECK(t.factors()[0].site == 0);
    CHECK(t.factors()[1].site == 2);
    CHECK(t.order() == 2);
}

TEST_CASE("embed_term fixed cases") {
    SUBCASE("Z on site 0 of two spins") {
        const SpinSystem sys(2);
        const ComplexMatrix m = embed_term(PauliTerm(1.0, {{0, PauliLabel::Z}}), sys);
        REQUIRE(m.dim() == 4);
        const double expected[4] = {1, 1, -1, -1};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(m(i, j) == (i == j ? cplx(expected[i], 0) : cplx(0, 0)));
    }

    SUBCASE("Z_A Y_B on three spins matches the Kronecker oracle") {
        const SpinSystem sys(3);
        const ComplexMatrix m =
            embed_term(PauliTerm(1.0, {{0, PauliLabel::Z}, {1, PauliLabel::Y}}), sys);
        const ComplexMatrix oracle =
            kron(single_pauli(PauliLabel::Z),
                 kron(single_pauli(PauliLabel::Y), single_pauli(PauliLabel::I)));
        CHECK(max_abs_difference(m, oracle) == 0.0);
        CHECK(m(0, 2) == cplx(0, -1));
        CHECK(m(2, 0) == cplx(0, 1));
    }

    SUBCASE("scalar coefficient") {
        const SpinSystem sys(1);
        const ComplexMatrix m = embed_term(PauliTerm(2.5, {{0, PauliLabel::X}}), sys);
        CHECK(m(0, 0) == cplx(0, 0));
        CHECK(m(0, 1) == cplx(2.5, 0));
        CHECK(m(1, 0) == cplx(2.5, 0));
        CHECK(m(1, 1) == cplx(0, 0));
    }

    SUBCASE("site out of range") {
        const SpinSystem sys(2);
        CHECK_THROWS_AS(embed_term(PauliTerm(1.0, {{5, PauliLabel::X}}), sys),
                        std::out_of_range);
    }

    SUBCASE("random terms agree with the generic Kronecker chain") {
        Rng rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + rng.below(4);
            const SpinSystem sys(n);
            const PauliTerm term = test_util::random_term(n, rng);

            ComplexMatrix oracle(1);
            oracle(0, 0) = term.coefficient();
            for (std::size_t site = 0; site < n; ++site) {
                PauliLabel label = PauliLabel::I;
                for (const PauliFactor& f : term.factors())
                    if (f.site == site) label = f.label;
                oracle = kron(oracle, single_pauli(label));
            }
            CHECK(max_abs_difference(embed_term(term, sys), oracle) == 0.0);
        }
    }
}

TEST_CASE("assemble") {
    SUBCASE("empty term list gives the zero matrix") {
        const Hamiltonian h{SpinSystem(3), {}};
        const ComplexMatrix m = assemble(h);
        CHECK(m.dim() == 8);
        CHECK(frobenius_norm(m) == 0.0);
    }

    SUBCASE("single term") {
        const Hamiltonian h{SpinSystem(1), {PauliTerm(1.0, {{0, PauliLabel::Z}})}};
        const ComplexMatrix m = assemble(h);
        CHECK(m(0, 0) == cplx(1, 0));
        CHECK(m(1, 1) == cplx(-1, 0));
    }

    SUBCASE("term order does not matter") {
        Rng rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + rng.below(4);
            std::vector<PauliTerm> terms;
            const std::size_t count = 2 + rng.below(6);
            for (std::size_t t = 0; t < count; ++t)
                terms.push_back(test_util::random_term(n, rng));
            std::vector<PauliTerm> reversed(terms.rbegin(), terms.rend());

            const ComplexMatrix a = assemble(Hamiltonian{SpinSystem(n), terms});
            const ComplexMatrix b = assemble(Hamiltonian{SpinSystem(n), reversed});
            CHECK(max_abs_difference(a, b) <= 1e-15);
        }
    }

    SUBCASE("always Hermitian (random Hamiltonians, n <= 4)") {
        Rng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng.below(4);
            std::vector<PauliTerm> terms;
            const std::size_t count = 1 + rng.below(8);
            for (std::size_t t = 0; t < count; ++t)
                terms.push_back(test_util::random_term(n, rng));
            const ComplexMatrix m = assemble(Hamiltonian{SpinSystem(n), terms});
            CHECK(hermiticity_defect(m) <= 1e-14);
        }
    }
}

TEST_CASE("xor_hamiltonian") {
    const Hamiltonian h = xor_hamiltonian();
    REQUIRE(h.terms.size() == 3);
    CHECK(h.system.site_count() == 3);

    SUBCASE("coefficients match the high-precision values") {
        // long double evaluation of pi sqrt(2) / 4 and pi / 4
        const long double pi_l = 3.14159265358979323846264338328L;
        const double c1 = static_cast<double>(std::sqrt(2.0L) * pi_l / 4.0L);
        const double c3 = static_cast<double>(-pi_l / 4.0L);
        CHECK(h.terms[0].coefficient() == doctest::Approx(c1).epsilon(1e-15));
        CHECK(h.terms[1].coefficient() == doctest::Approx(c1).epsilon(1e-15));
        CHECK(h.terms[2].coefficient() == doctest::Approx(c3).epsilon(1e-15));

        // ten-decimal frozen values
        CHECK(std::abs(h.terms[0].coefficient() - 1.1107207345) < 5e-11);
        CHECK(std::abs(h.terms[1].coefficient() - 1.1107207345) < 5e-11);
        CHECK(std::abs(h.terms[2].coefficient() + 0.7853981634) < 5e-11);
    }

    SUBCASE("term structure") {
        // (Z_A Y_B), (Z_B Y_C), (Y_B X_C)
        CHECK(h.terms[0].factors() ==
              std::vector<PauliFactor>{{0, PauliLabel::Z}, {1, PauliLabel::Y}});
        CHECK(h.terms[1].factors() ==
              std::vector<PauliFactor>{{1, PauliLabel::Z}, {2, PauliLabel::Y}});
        CHECK(h.terms[2].factors() ==
              std::vector<PauliFactor>{{1, PauliLabel::Y}, {2, PauliLabel::X}});
    }

    SUBCASE("A and C never interact directly") {
        CHECK(!has_direct_coupling(h, 0, 2));
        CHECK(has_direct_coupling(h, 0, 1));
        CHECK(has_direct_coupling(h, 1, 2));
    }

    SUBCASE("only two-spin interactions") { CHECK(max_interaction_order(h) == 2); }

    SUBCASE("assembled matrix is Hermitian with an exactly zero diagonal") {
        const ComplexMatrix m = assemble(h);
        CHECK(hermiticity_defect(m) <= 1e-14);
        for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(m(i, i)) <= 1e-15);
    }
}
