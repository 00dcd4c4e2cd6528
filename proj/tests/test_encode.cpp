#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcorr/encode.hpp"
#include "test_util.hpp"

using namespace qcorr;

TEST_CASE("gen_pauli identity") {
    CHECK(gen_pauli({2, 0, 0}).max_abs_diff(CMatrix::identity(2)) == 0.0);
}

TEST_CASE("gen_pauli XZ at d = 2") {
    const CMatrix xz = gen_pauli({2, 1, 1});
    const CMatrix expected(2, {0.0, -1.0, 1.0, 0.0});
    CHECK(xz.max_abs_diff(expected) < 1e-12);
    // XZ = -iY.
    const CMatrix minus_i_y = pauli_y() * cplx{0.0, -1.0};
    CHECK(xz.max_abs_diff(minus_i_y) < 1e-12);
}

TEST_CASE("gen_pauli cyclic shift at d = 3 has order 3") {
    const CMatrix u = gen_pauli({3, 1, 0});
    CHECK((u * u * u).max_abs_diff(CMatrix::identity(3)) < 1e-12);
    CHECK((u.adjoint() * u).max_abs_diff(CMatrix::identity(3)) < 1e-12);
}

TEST_CASE("gen_pauli clock operator at d = 3 is unitary with unit-modulus phases") {
    const CMatrix z = gen_pauli({3, 0, 1});
    CHECK((z.adjoint() * z).max_abs_diff(CMatrix::identity(3)) < 1e-12);
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(std::abs(z(j, j)) - 1.0) < 1e-12);
    CHECK((z * z * z).max_abs_diff(CMatrix::identity(3)) < 1e-12);
}

TEST_CASE("gen_pauli rejects bad indices") {
    CHECK_THROWS_AS(gen_pauli({1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gen_pauli({2, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gen_pauli({2, 0, 2}), std::invalid_argument);
}

TEST_CASE("pauli_ensemble carries four unitary entries of weight 1/4") {
    const EncodingEnsemble e = pauli_ensemble();
    REQUIRE(e.entries().size() == 4);
    for (const auto& [p, u] : e.entries()) {
        CHECK(p == 0.25);
        CHECK((u.adjoint() * u).max_abs_diff(CMatrix::identity(2)) < 1e-12);
    }
}

TEST_CASE("ensemble validation rejects bad probabilities and non-unitaries") {
    CHECK_THROWS_AS(EncodingEnsemble({{0.5, CMatrix::identity(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(EncodingEnsemble({{1.0, CMatrix(2, {1.0, 0.0, 0.0, 0.5})}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(EncodingEnsemble({{-0.5, CMatrix::identity(2)},
                                      {1.5, CMatrix::identity(2)}}),
                    std::invalid_argument);
}

TEST_CASE("encoding rejects ensembles outside the two-qubit pipeline") {
    const EncodingEnsemble qutrit({{1.0, gen_pauli({3, 1, 0})}});
    CHECK_THROWS_AS(apply_encoding(werner(0.4), qutrit), std::invalid_argument);
    CHECK_THROWS_AS(advantage(werner(0.4), qutrit, Scheme::projective_optimize()),
                    std::invalid_argument);
}

TEST_CASE("maximal encoding of a Schmidt state is I/2 (x) diag(lambda)") {
    const DensityMatrix enc = apply_encoding(pure_schmidt({0.3}), pauli_ensemble());
    CMatrix expected(4);
    expected(0, 0) = 0.15;
    expected(1, 1) = 0.35;
    expected(2, 2) = 0.15;
    expected(3, 3) = 0.35;
    CHECK(enc.mat().max_abs_diff(expected) < 1e-12);
}

TEST_CASE("maximal encoding of a Bell-diagonal state is maximally mixed") {
    const DensityMatrix enc =
        apply_encoding(bell_diagonal({0.15, 0.03, 0.7}), pauli_ensemble());
    CHECK(enc.mat().max_abs_diff(CMatrix::identity(4) * cplx{0.25, 0.0}) < 1e-12);
}

TEST_CASE("identity-only ensembles leave the state unchanged") {
    const EncodingEnsemble id({{1.0, CMatrix::identity(2)}});
    const DensityMatrix rho = werner(0.63);
    CHECK(apply_encoding(rho, id).mat().max_abs_diff(rho.mat()) < 1e-14);
}

TEST_CASE("maximal encoding leaves the maximally mixed state fixed") {
    const DensityMatrix mixed{CMatrix::identity(4) * cplx{0.25, 0.0}};
    CHECK(apply_encoding(mixed, pauli_ensemble())
              .mat()
              .max_abs_diff(CMatrix::identity(4) * cplx{0.25, 0.0}) < 1e-14);
}

TEST_CASE("maximal encoding erases the a-side marginal of every input") {
    test::Rng rng(22u);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = bell_diagonal(test::random_physical_triple(rng));
        const DensityMatrix enc = apply_encoding(rho, pauli_ensemble());
        CHECK(partial_trace(enc, Subsystem::a)
                  .mat()
                  .max_abs_diff(CMatrix::identity(2) * cplx{0.5, 0.0}) < 1e-12);
    }
    const DensityMatrix enc = apply_encoding(pure_schmidt({0.17}), pauli_ensemble());
    CHECK(partial_trace(enc, Subsystem::a)
              .mat()
              .max_abs_diff(CMatrix::identity(2) * cplx{0.5, 0.0}) < 1e-12);
}

TEST_CASE("no correlation survives the maximal encoding") {
    test::Rng rng(23u);
    const auto check_uncorrelated = [](const DensityMatrix& rho) {
        const DensityMatrix enc = apply_encoding(rho, pauli_ensemble());
        CHECK(std::abs(mutual_info(enc)) < 1e-9);
        const CorrelationReport rep = discord(enc, Scheme::projective_optimize(), Subsystem::b);
        CHECK(std::abs(rep.classical_corr) < 1e-9);
        CHECK(std::abs(rep.discord) < 1e-9);
    };
    check_uncorrelated(pure_schmidt({0.3}));
    check_uncorrelated(bell_diagonal(test::random_physical_triple(rng)));
    check_uncorrelated(werner(0.8));
}

TEST_CASE("maximally entangled state: Iq = 2, Ic = 1, delta I = 1") {
    const AdvantageReport rep =
        advantage(pure_schmidt({0.5}), pauli_ensemble(), Scheme::projective_optimize());
    CHECK(std::abs(rep.iq - 2.0) < 1e-9);
    CHECK(std::abs(rep.ic - 1.0) < 1e-9);
    CHECK(std::abs(rep.ic_b - 1.0) < 1e-9);
    CHECK(std::abs(rep.delta_i - 1.0) < 1e-9);
    CHECK(std::abs(rep.delta_discord - 1.0) < 1e-9);
}

TEST_CASE("pure states: advantage equals the discord consumed, J~ = 0") {
    for (double lam : {0.2, 0.6, 0.9}) {
        const AdvantageReport rep =
            advantage(pure_schmidt({lam}), pauli_ensemble(), Scheme::projective_optimize());
        const double h2 = binary_entropy(lam);
        CHECK(std::abs(rep.delta_i - h2) < 1e-8);
        CHECK(std::abs(rep.delta_discord - h2) < 1e-8);
        CHECK(std::abs(rep.j_tilde) < 1e-9);
        CHECK(std::abs(rep.delta_tilde) < 1e-9);
    }
}

TEST_CASE("product states yield no advantage") {
    const CMatrix ra(2, {0.6, 0.0, 0.0, 0.4});
    const CMatrix rb(2, {0.7, 0.1, 0.1, 0.3});
    const DensityMatrix rho{kron(ra, rb)};
    const AdvantageReport rep = advantage(rho, pauli_ensemble(), Scheme::projective_optimize());
    CHECK(rep.delta_i < 1e-9);
    CHECK(rep.delta_i > -1e-9);
}

TEST_CASE("iq never falls below i0") {
    test::Rng rng(24u);
    for (int trial = 0; trial < 5; ++trial) {
        const AdvantageReport rep =
            advantage(bell_diagonal(test::random_physical_triple(rng)), pauli_ensemble(),
                      Scheme::projective_optimize());
        CHECK(rep.iq >= rep.i0 - 1e-9);
    }
}

TEST_CASE("advantage_delta_i agrees with the full report") {
    const DensityMatrix rho = bell_diagonal({0.15, 0.03, 0.7});
    for (const Scheme& scheme :
         {Scheme::projective_optimize(), Scheme::weak_at(WeakStrength(0.8), {0.4, 1.0})}) {
        const AdvantageReport rep = advantage(rho, pauli_ensemble(), scheme);
        CHECK(advantage_delta_i(rho, pauli_ensemble(), scheme) ==
              doctest::Approx(rep.delta_i).epsilon(1e-12));
    }
}

TEST_CASE("sandwich holds with both margins near zero under maximal encoding") {
    const AdvantageReport rep =
        advantage(pure_schmidt({0.5}), pauli_ensemble(), Scheme::projective_optimize());
    const SandwichCheck chk = sandwich_check(rep);
    CHECK(chk.pass);
    CHECK(std::abs(chk.upper_margin) < 1e-8);
    CHECK(std::abs(chk.lower_margin - rep.j_tilde) < 1e-8);
}

TEST_CASE("Bell-diagonal maximal encoding leaves nothing behind") {
    const AdvantageReport rep = advantage(bell_diagonal({0.15, 0.03, 0.7}), pauli_ensemble(),
                                          Scheme::projective_optimize());
    CHECK(std::abs(rep.j_tilde) < 1e-9);
    CHECK(std::abs(rep.delta_tilde) < 1e-9);
    CHECK(sandwich_check(rep).pass);
}

TEST_CASE("identity-only encoding gives zero advantage and zero consumption") {
    const EncodingEnsemble id({{1.0, CMatrix::identity(2)}});
    const AdvantageReport rep =
        advantage(werner(0.4), id, Scheme::projective_optimize());
    CHECK(std::abs(rep.delta_i) < 1e-9);
    CHECK(std::abs(rep.delta_discord) < 1e-9);
    CHECK(sandwich_check(rep).pass);
}

TEST_CASE("sandwich_check reports a diagnostic on violation") {
    AdvantageReport fake;
    fake.delta_i = 1.0;
    fake.delta_discord = 0.5;
    fake.j_tilde = 0.1;
    const SandwichCheck chk = sandwich_check(fake);
    CHECK(!chk.pass);
    CHECK(chk.diagnostic.find("delta_i") != std::string::npos);
    CHECK(chk.diagnostic.find("j_tilde") != std::string::npos);
}
