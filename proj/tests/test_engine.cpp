#include "gie/catalog.hpp"
#include "gie/engine.hpp"
#include "gie/measures.hpp"
#include "gie/oracle.hpp"
#include "gie/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace gie;

TEST_CASE("G quantities") {
    const auto& s = catalog_entry("rho6t").state;
    CHECK(g_tilde_min(s) == doctest::Approx(2.5 - std::pow(6.0, 0.25)).epsilon(1e-12));
    CHECK(homodyne_condition(s));
    CHECK_THROWS_AS(g_quantity(1, 1, 1), InvalidInput);
    // symmetric mixed GLEMS: the generic bound is strictly below the optimised one
    const StdState sg{2, 2, 1.6, 1.0 / (2 - 1.6) - 2};
    REQUIRE(classify(sg) == StateClass::SymGlems);
    const auto v = g_tilde_variants(sg);
    CHECK(g_tilde_min(sg) < v.g_opt_sym_glems);
    CHECK_THROWS_AS(g_tilde_variants(s), InvalidInput);
}

TEST_CASE("q_of and measurement_for_q round trip") {
    const double nu = 2.3;
    CHECK(q_of(SingleModeMeasurement::homodyne_x(std::numbers::pi / 2), nu) == doctest::Approx(1 / nu));
    CHECK(q_of(SingleModeMeasurement::heterodyne(), nu) == doctest::Approx(1 / (1 + nu)));
    for (double q : {0.01, 0.1, 1 / (1 + nu) - 1e-3, 1 / (1 + nu), 0.35, 0.43, 1 / nu - 1e-6}) {
        const auto m = measurement_for_q(q, nu);
        CHECK(q_of(m, nu) == doctest::Approx(q).epsilon(1e-10));
    }
    // Q is the (x, x) element of (Gamma + nu)^-1
    const auto m = SingleModeMeasurement::finite(0.7, 3.0, 0.4);
    const Mat2 inv = (measurement_cm(m) + nu * Mat2::Identity()).inverse();
    CHECK(q_of(m, nu) == doctest::Approx(inv(0, 0)).epsilon(1e-12));
}

TEST_CASE("minimize_k_h against a dense scan over Q") {
    Rng rng(31);
    for (int cls : {1, 3, 4, 5, 6, 7}) {
        for (int i = 0; i < 10; ++i) {
            const StdState s = sample_class(cls, rng);
            const auto d = williamson(s);
            const auto al = alphas(s, d);
            const auto km = minimize_k_h(s, d, al);
            const double q_hi = 1 / d.nu1;
            auto f = [&](double q) {
                const double den = 1 - al.alpha_ab * q;
                return den > 0 ? (1 - al.alpha_a * q) * (1 - al.alpha_b * q) / den : 1e300;
            };
            const auto [qx, kref] = ref::scan_min(f, 0.0, q_hi);
            INFO("class " << cls);
            CHECK(km.k_min == doctest::Approx(kref).epsilon(1e-9));
            if (km.eve) CHECK(q_of(*km.eve, d.nu1) == doctest::Approx(km.q_star).epsilon(1e-9));
        }
    }
}

TEST_CASE("worked class-6 chain") {
    const auto& s = catalog_entry("rho6t").state;
    const auto d = williamson(s);
    const auto c6 = class6_detail(s, d);
    CHECK(c6.z1 == doctest::Approx(2.269).epsilon(1e-3 / 2.269));
    CHECK(c6.h_min1 == doctest::Approx(11.0 / 36).epsilon(1e-12));
    CHECK(c6.h_min2 == doctest::Approx((49 - std::sqrt(97.0)) / 128).epsilon(1e-12));
    CHECK(c6.guards_ok);
    const auto al = alphas(s, d);
    const double r97 = std::sqrt(97.0);
    CHECK(k_h(1 / d.nu1, al) == doctest::Approx((3169 - 79 * r97) / 3072).epsilon(1e-12));
    const auto km = minimize_k_h(s, d, al);
    CHECK(km.k_min == doctest::Approx(9.0 / 800 * (79 - r97)).epsilon(1e-12));
    CHECK(km.q_star == doctest::Approx(0.402).epsilon(1e-3 / 0.402));
    REQUIRE(km.eve);
    CHECK(km.eve->phi == doctest::Approx(std::numbers::pi / 2));
    CHECK(km.eve->tau == doctest::Approx(1.0));
    CHECK(km.eve->t == doctest::Approx(1.613).epsilon(5e-3 / 1.613));
    CHECK(upper_bound_u(s) == doctest::Approx(std::log(1.2)).epsilon(1e-12));
    CHECK(lower_bound_l(s) == doctest::Approx(std::log(1.2)).epsilon(1e-12));
}

TEST_CASE("closed forms on the catalog") {
    for (const auto& e : catalog()) {
        const auto want = e.get("gie");
        if (!want) continue;
        INFO(e.id);
        const auto r = gie::gie(e.state);
        CHECK(r.value == doctest::Approx(*want).epsilon(1e-10));
        CHECK(r.method != Method::OracleBracket);
        CHECK(r.lo == r.hi);
    }
}

TEST_CASE("U equals L on the solved classes") {
    Rng rng(37);
    for (int cls : {1, 3, 4, 5}) {
        for (int i = 0; i < 30; ++i) {
            const StdState s = sample_class(cls, rng);
            CHECK(std::abs(upper_bound_u(s) - lower_bound_l(s)) < 1e-9);
        }
    }
}

TEST_CASE("separable states have zero GIE") {
    for (const StdState& s : {StdState{1, 1, 0, 0}, StdState{2, 3, 1, 0.5}, StdState{3, 3, 1, 1}}) {
        const auto r = gie::gie(s);
        CHECK(r.separable);
        CHECK(r.value == 0.0);
        CHECK_THROWS_AS(upper_bound_u(s), InvalidInput);
    }
}

TEST_CASE("bracket for states without a closed form") {
    const auto r = gie::gie(catalog_entry("generic_2a").state);
    CHECK(r.method == Method::OracleBracket);
    CHECK(r.heuristic);
    CHECK(r.lo <= r.value);
    CHECK(r.value <= r.hi);
    CHECK(r.lo >= 0.0);
    CHECK(r.hi - r.lo < 1e-3);
    CHECK_THROWS_WITH(upper_bound_u(catalog_entry("generic_2a").state), "no closed U; use oracle");
}

TEST_CASE("compact symmetric formula") {
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const StdState s = i % 2 ? sample_class(1, rng) : sample_class(2, rng);
        CHECK(gie_symmetric_compact(s) == doctest::Approx(gie::gie(s).value).epsilon(1e-12));
    }
    CHECK(gie_symmetric_compact({2, 2, 0.5, 0.5}) == 0.0);
    CHECK_THROWS_AS(gie_symmetric_compact({3, 2, 1, 1}), InvalidInput);
}
