#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matineq/norms.hpp"
#include "matineq/randgen.hpp"

using namespace matineq;

TEST_CASE("norm examples") {
    CHECK(norm(Matrix::diag({3, 4}), NormKind::hilbert_schmidt()) == doctest::Approx(5.0));
    CHECK(norm(Matrix::diag({3, 1}), NormKind::ky_fan(1)) == doctest::Approx(3.0));
    CHECK(norm(Matrix::diag({3, 1}), NormKind::ky_fan(2)) == doctest::Approx(4.0));
    Matrix n(2, 2);
    n(0, 1) = 2.0;
    CHECK(norm(n, NormKind::op()) == doctest::Approx(2.0));
    CHECK_THROWS_AS(norm(n, NormKind::ky_fan(3)), KOutOfRange);
}

TEST_CASE("hs_norm_sq examples") {
    CHECK(hs_norm_sq(Matrix::identity(3)) == doctest::Approx(3.0));
    Matrix m(2, 2);
    m(0, 0) = cplx{1.0, 1.0};
    CHECK(hs_norm_sq(m) == doctest::Approx(2.0));
    CHECK(hs_norm_sq(Matrix(3, 2)) == 0.0);
}

TEST_CASE("schatten-2 equals entrywise hilbert-schmidt") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        Rng rng(derive_substream(600, s));
        const std::size_t n = 1 + (rng.next_u64() % 6);
        const Matrix a = random_general(n, n, rng);
        const double s2 = norm(a, NormKind::schatten(2.0));
        CHECK(s2 == doctest::Approx(std::sqrt(hs_norm_sq(a))).epsilon(1e-11));
    }
}

TEST_CASE("unitary invariance for every kind in the family") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Rng rng(derive_substream(601, s));
        const std::size_t n = 2 + (rng.next_u64() % 4);
        const Matrix a = random_general(n, n, rng);
        const Matrix u = random_unitary(n, rng);
        const Matrix v = random_unitary(n, rng);
        const Matrix rotated = u * a * v.adjoint();
        for (const auto& kind : norm_test_family(n)) {
            const double n1 = norm(a, kind);
            const double n2 = norm(rotated, kind);
            CHECK(std::abs(n1 - n2) <= 1e-10 * std::max(1.0, n1));
        }
    }
}

TEST_CASE("triangle inequality and homogeneity") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Rng rng(derive_substream(602, s));
        const std::size_t n = 1 + (rng.next_u64() % 5);
        const Matrix a = random_general(n, n, rng);
        const Matrix b = random_general(n, n, rng);
        const double c = rng.uniform(-3.0, 3.0);
        for (const auto& kind : norm_test_family(n)) {
            CHECK(norm(a + b, kind) <= norm(a, kind) + norm(b, kind) + 1e-10);
            CHECK(norm(a * cplx{c, 0.0}, kind) ==
                  doctest::Approx(std::abs(c) * norm(a, kind)).epsilon(1e-10));
            CHECK(norm(a, kind) >= 0.0);
        }
    }
}

TEST_CASE("norm is zero only for the zero matrix") {
    Rng rng(603);
    const Matrix a = random_general(3, 3, rng);
    for (const auto& kind : norm_test_family(3)) {
        CHECK(norm(Matrix(3, 3), kind) == 0.0);
        CHECK(norm(a, kind) > 0.0);
    }
}

TEST_CASE("fan dominance examples") {
    CHECK(fan_dominance_leq(Matrix::identity(2), Matrix::identity(2), 1e-10));
    CHECK(fan_dominance_leq(Matrix::identity(2), Matrix::identity(2) * cplx{2.0, 0.0}, 1e-10));
    // k=1 fails although the trace norms would compare
    CHECK_FALSE(fan_dominance_leq(Matrix::diag({3, 0}), Matrix::diag({2, 2}), 1e-10));
}

TEST_CASE("fan dominance implies dominance for every kind in the family") {
    std::size_t dominated = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        Rng rng(derive_substream(604, s));
        const std::size_t n = 1 + (rng.next_u64() % 5);
        const Matrix a = random_general(n, n, rng);
        const Matrix b = random_general(n, n, rng);
        if (!fan_dominance_leq(a, b, 1e-10)) continue;
        ++dominated;
        for (const auto& kind : norm_test_family(n))
            CHECK(norm(a, kind) <= norm(b, kind) + 1e-8 * std::max(1.0, norm(b, kind)));
    }
    CHECK(dominated > 0);
}

TEST_CASE("norm kind serialization round trip") {
    for (const auto& kind : norm_test_family(4)) {
        auto parsed = NormKind::parse(kind.to_string());
        REQUIRE(parsed.has_value());
        CHECK(parsed->to_string() == kind.to_string());
    }
    CHECK(NormKind::parse("schatten:1.5")->p == doctest::Approx(1.5));
    CHECK(NormKind::parse("kyfan:3")->k == 3);
    CHECK_FALSE(NormKind::parse("bogus").has_value());
    CHECK_FALSE(NormKind::parse("schatten:0.5").has_value());
    CHECK_FALSE(NormKind::parse("kyfan:0").has_value());
}
