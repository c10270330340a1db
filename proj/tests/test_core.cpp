#include "gie/catalog.hpp"
#include "gie/core.hpp"
#include "gie/expr.hpp"
#include "gie/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace gie;

TEST_CASE("make validates ranges") {
    CHECK_THROWS_AS(StdState::make(0.5, 1, 0, 0), InvalidInput);
    CHECK_THROWS_AS(StdState::make(2, 2, 0.5, 1.0), InvalidInput);
    CHECK_THROWS_AS(StdState::make(2, NAN, 0, 0), InvalidInput);
    CHECK_NOTHROW(StdState::make(1, 1, 0, 0));
}

TEST_CASE("physicality and entanglement") {
    CHECK(is_physical({1, 1, 0, 0}));
    CHECK_FALSE(is_physical({1, 1, 0.5, 0.5}));
    CHECK(is_physical({2, 2, std::sqrt(3.0), std::sqrt(3.0)}));
    CHECK(is_entangled({2, 2, std::sqrt(3.0), std::sqrt(3.0)}));
    CHECK_FALSE(is_entangled({2, 2, 0.5, 0.5}));
    CHECK_FALSE(is_entangled({2, 2, 1.0, 0.0}));  // kp = 0: classical correlations only
    CHECK_THROWS_AS(is_entangled({1, 1, 2, 0}), InvalidInput);
    // entanglement agrees with the partially transposed spectrum
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const StdState s = sample_physical(rng);
        const double nm = ref::log_neg(s.a, s.b, s.kx, s.kp);
        if (std::abs(nm) < 1e-9) continue;
        CHECK(is_entangled(s) == (nm > 0));
    }
}

TEST_CASE("symplectic eigenvalues match the reference spectrum") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const StdState s = sample_physical(rng);
        const auto [n1, n2] = symplectic_eigenvalues(s);
        const auto sp = ref::spectrum(s.cm());
        CHECK(n1 == doctest::Approx(sp[1]).epsilon(1e-9));
        CHECK(n2 == doctest::Approx(sp[0]).epsilon(1e-9));
        const VecX gen = symplectic_spectrum(s.cm());
        CHECK(gen(0) == doctest::Approx(sp[0]).epsilon(1e-9));
    }
    CHECK_THROWS_AS(symplectic_eigenvalues({1, 1, 0.5, 0.5}), InvalidInput);
}

TEST_CASE("invariants of the worked class-6 state") {
    const auto& e = catalog_entry("rho6t");
    const auto inv = invariants_of(e.state);
    // M~ = b kx - a kp = (3 - sqrt 97)/(4 sqrt 2)
    CHECK(inv.m_tilde == doctest::Approx((3 - std::sqrt(97.0)) / (4 * std::sqrt(2.0))).epsilon(1e-12));
    const auto [n1, n2] = symplectic_eigenvalues(e.state);
    CHECK(n1 == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
    CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("classification of the catalog") {
    for (const auto& e : catalog()) {
        INFO(e.id);
        CHECK(classify(e.state) == e.class_tag);
    }
    CHECK(classify({1, 1, 0, 0}) == StateClass::Pure);
    CHECK(class_number(StateClass::Glems7) == 7);
}

TEST_CASE("williamson dispatch and residuals") {
    struct Case {
        StdState s;
        WilliamsonCase tag;
    };
    const double r2 = std::sqrt(2.0);
    const Case cases[] = {
        {{2, 2, 1.5, 1.0}, WilliamsonCase::Sym},
        {{3, 2, 2, 4.0 / 3.0}, WilliamsonCase::Case2a},
        {{2 * r2, r2, r2, 1 / r2}, WilliamsonCase::Case2a},
        {{2 * r2, r2, (std::sqrt(97.0) + 1) / 8, (std::sqrt(97.0) - 1) / 8}, WilliamsonCase::Case2b},
        {{2, 3, 2, 4.0 / 3.0}, WilliamsonCase::Case3a},
        {{r2, 2 * r2, (std::sqrt(97.0) + 1) / 8, (std::sqrt(97.0) - 1) / 8}, WilliamsonCase::Case3b},
    };
    for (const auto& c : cases) {
        const auto d = williamson(c.s);
        INFO(to_string(d.tag));
        CHECK(d.tag == c.tag);
        CHECK(symplectic_residual(d.S) < 1e-12);
        CHECK(diagonal_residual(d.S, c.s.cm(), d.nu1, d.nu2) < 1e-12);
        const auto sp = ref::spectrum(c.s.cm());
        CHECK(d.nu1 == doctest::Approx(sp[1]).epsilon(1e-10));
        CHECK(d.nu2 == doctest::Approx(sp[0]).epsilon(1e-10));
    }
    CHECK_THROWS_AS(williamson({2, 2, 1, 0}), InvalidInput);
}

TEST_CASE("sign variants stay symplectic and diagonalising") {
    const auto& s = catalog_entry("rho6t").state;
    const auto d = williamson(s);
    for (const Mat4& v : sign_variants(d.S)) {
        CHECK(symplectic_residual(v) < 1e-12);
        CHECK(diagonal_residual(v, s.cm(), d.nu1, d.nu2) < 1e-12);
    }
    const Mat4 si = symplectic_inverse(d.S);
    CHECK((si * d.S - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("purification is pure and reduces to the state") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const StdState s = sample_physical(rng);
        const auto p = purification(s);
        const MatX full = p.assembled();
        CHECK((full.topLeftCorner(4, 4) - s.cm()).cwiseAbs().maxCoeff() < 1e-9);
        for (double nu : ref::spectrum(full)) CHECK(nu == doctest::Approx(1.0).epsilon(1e-7));
        const auto [n1, n2] = symplectic_eigenvalues(s);
        CHECK(p.rank == (n1 > 1 + tol::rank) + (n2 > 1 + tol::rank));
    }
    // rank 0 and the diagonal special case
    CHECK(purification({2, 2, std::sqrt(3.0), std::sqrt(3.0)}).rank == 0);
    const auto pd = purification({1.5, 3, 0, 0});
    CHECK(pd.rank == 2);
    CHECK((pd.assembled().topLeftCorner(4, 4) - ref::std_cm(1.5, 3, 0, 0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("expression parser") {
    CHECK(parse_expr("2*sqrt(2)") == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(parse_expr("(sqrt(97)+1)/8") == doctest::Approx((std::sqrt(97.0) + 1) / 8));
    CHECK(parse_expr(" -1.5e1 + 4/2 ") == doctest::Approx(-13));
    CHECK(parse_expr("1/sqrt(2)") == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK_THROWS_AS(parse_expr("2*"), InvalidInput);
    CHECK_THROWS_AS(parse_expr("sqrt(-1)"), InvalidInput);
    CHECK_THROWS_AS(parse_expr("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_expr("abc"), InvalidInput);
}
