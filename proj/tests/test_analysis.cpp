#include <cmath>

#include "doctest.h"
#include "ipent/analysis.hpp"
#include "ipent/decomp.hpp"
#include "ipent/errors.hpp"
#include "support.hpp"

using namespace ipent;
using support::boson_diagonal;
using support::fermion_paired;
using support::singlet_state;

TEST_CASE("reduced density of fixed states") {
    DensityOperator rho = reduced_density(singlet_state());
    CHECK(max_abs(rho.matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);

    DensityOperator pure = reduced_density(boson_diagonal({1.0, 0.0}));
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(max_abs(pure.matrix() - expected) < 1e-15);
}

TEST_CASE("fermion reduced density carries half of each pair weight") {
    double a1 = std::sqrt(0.9);
    double a2 = std::sqrt(0.1);
    DensityOperator rho = reduced_density(fermion_paired(4, {a1, a2}));
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = expected(1, 1) = 0.45;
    expected(2, 2) = expected(3, 3) = 0.05;
    CHECK(max_abs(rho.matrix() - expected) < 1e-14);
}

TEST_CASE("fermion reduced spectra are doubly degenerate") {
    for (Eigen::Index d : {4, 5, 6}) {
        TwoParticleState psi = random_state(d, Statistics::Fermion, 30 + d);
        RealVector lambda = hermitian_eigen(reduced_density(psi).matrix()).eigenvalues;
        // Ascending; pair from the top, leftover eigenvalue (odd d) must vanish.
        for (Eigen::Index i = d - 1; i >= 1; i -= 2)
            CHECK(std::abs(lambda(i) - lambda(i - 1)) < 1e-9);
        if (d % 2 == 1) CHECK(std::abs(lambda(0)) < 1e-9);
        CHECK(lambda.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("spectral entropy of fixed states") {
    CHECK(von_neumann_entropy(reduced_density(singlet_state())) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(reduced_density(boson_diagonal({1.0, 0.0}))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(reduced_density(boson_diagonal(
              {support::kSqrt08, support::kSqrt02}))) ==
          doctest::Approx(support::kEntropy8020).epsilon(1e-12));
    CHECK(von_neumann_entropy(reduced_density(fermion_paired(
              4, {support::kInvSqrt2, support::kInvSqrt2}))) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(reduced_density(boson_diagonal(
              {support::kInvSqrt3, support::kInvSqrt3, support::kInvSqrt3}))) ==
          doctest::Approx(support::kLog2Three).epsilon(1e-12));
}

TEST_CASE("entropy stays within [0, log2 d]") {
    for (Eigen::Index d = 2; d <= 6; ++d) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            TwoParticleState psi = random_state(d, Statistics::Boson, 100 * d + seed);
            double s = von_neumann_entropy(reduced_density(psi));
            CHECK(s >= 0.0);
            CHECK(s <= std::log2(static_cast<double>(d)));
        }
    }
}

TEST_CASE("closed-form slater entropy") {
    RealVector one(1);
    one << 1.0;
    CHECK(entropy_from_slater(one) == doctest::Approx(1.0).epsilon(1e-14));

    RealVector two(2);
    two << support::kInvSqrt2, support::kInvSqrt2;
    CHECK(entropy_from_slater(two) == doctest::Approx(2.0).epsilon(1e-12));

    RealVector skew(2);
    skew << std::sqrt(0.9), std::sqrt(0.1);
    CHECK(entropy_from_slater(skew) ==
          doctest::Approx(support::kEntropySlater9010).epsilon(1e-12));
}

TEST_CASE("closed-form schmidt entropy") {
    RealVector one(1);
    one << 1.0;
    CHECK(entropy_from_schmidt(one) == doctest::Approx(0.0).epsilon(1e-14));

    RealVector two(2);
    two << support::kInvSqrt2, support::kInvSqrt2;
    CHECK(entropy_from_schmidt(two) == doctest::Approx(1.0).epsilon(1e-12));

    RealVector three(3);
    three << support::kInvSqrt3, support::kInvSqrt3, support::kInvSqrt3;
    CHECK(entropy_from_schmidt(three) ==
          doctest::Approx(support::kLog2Three).epsilon(1e-12));
}

TEST_CASE("closed forms match the spectral entropy on random states") {
    for (Eigen::Index d = 2; d <= 8; ++d) {
        TwoParticleState fermion = random_state(d, Statistics::Fermion, 200 + d);
        double spectral = von_neumann_entropy(reduced_density(fermion));
        double closed = entropy_from_slater(slater_decompose(fermion).coefficients);
        CHECK(std::abs(spectral - closed) < 1e-9);

        TwoParticleState boson = random_state(d, Statistics::Boson, 300 + d);
        spectral = von_neumann_entropy(reduced_density(boson));
        closed = entropy_from_schmidt(schmidt_decompose(boson).coefficients);
        CHECK(std::abs(spectral - closed) < 1e-9);
    }
}

TEST_CASE("slater entropy exceeds 1 whenever two coefficients survive") {
    for (double second : {0.1, 0.01, 1e-4}) {
        RealVector a(2);
        a << std::sqrt(1.0 - second * second), second;
        CHECK(entropy_from_slater(a) > 1.0);
    }
}

TEST_CASE("coefficient vectors are validated") {
    RealVector negative(2);
    negative << 1.0, -0.1;
    CHECK_THROWS_AS(entropy_from_slater(negative), NotNormalized);

    RealVector unnormalized(2);
    unnormalized << 1.0, 1.0;
    CHECK_THROWS_AS(entropy_from_schmidt(unnormalized), NotNormalized);
}

TEST_CASE("density operator validation") {
    CHECK_THROWS_AS(DensityOperator{ComplexMatrix::Identity(2, 2)}, NotNormalized);

    ComplexMatrix skew(2, 2);
    skew << 0.5, 0.5, -0.5, 0.5;
    CHECK_THROWS_AS(DensityOperator{skew}, NotHermitian);

    CHECK_THROWS_AS(DensityOperator{ComplexMatrix::Zero(2, 3)}, DimensionMismatch);
}
