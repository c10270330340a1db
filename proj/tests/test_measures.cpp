#include "gie/catalog.hpp"
#include "gie/measures.hpp"
#include "gie/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace gie;

TEST_CASE("log-negativity against the partially transposed spectrum") {
    Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        const StdState s = sample_physical(rng);
        CHECK(log_negativity(s) == doctest::Approx(ref::log_neg(s.a, s.b, s.kx, s.kp)).epsilon(1e-9).scale(1));
    }
    const double a = 2, k = std::sqrt(3.0);
    CHECK(log_negativity({a, a, k, k}) == doctest::Approx(-std::log(a - k)).epsilon(1e-12));
    CHECK(log_negativity({2, 2, 0.5, 0.5}) == 0.0);
}

TEST_CASE("GR2EoF of the worked class-6 state takes the third branch") {
    const auto d = gr2eof_detail(catalog_entry("rho6t").state);
    CHECK(d.branch == 3);
    CHECK(d.alpha3 == doctest::Approx(std::sqrt((14 + 3 * std::sqrt(29.0)) / 5)).epsilon(1e-12));
    CHECK(d.value == doctest::Approx(std::log(1.2)).epsilon(1e-12));
}

TEST_CASE("GR2EoF of pure states is the reduced Renyi-2 entropy") {
    for (double a : {1.0, 1.3, 2.0, 4.5}) {
        const double k = std::sqrt(a * a - 1);
        CHECK(gr2eof_glems({a, a, k, k}) == doctest::Approx(std::log(a)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gr2eof_glems({2, 2, 1, 1}), InvalidInput);
}

TEST_CASE("GR2EoF is continuous across branch edges") {
    for (double a1 : {1.5, 2.0, 3.0}) {
        for (double a2 : {1.2, 2.0, 2.5}) {
            const auto base = gr2eof_from_triple(a1, a2, 1 + std::abs(a1 - a2) + 1e-3);
            const double top = std::sqrt(a1 * a1 + a2 * a2 - 1);
            for (double edge : {base.alpha3, top}) {
                if (!(edge > std::abs(a1 - a2) + 1) || !(edge < a1 + a2 - 1)) continue;
                const double lo = gr2eof_from_triple(a1, a2, edge * (1 - 1e-7)).value;
                const double hi = gr2eof_from_triple(a1, a2, edge * (1 + 1e-7)).value;
                CHECK(std::abs(lo - hi) < 1e-5);
            }
        }
    }
}

TEST_CASE("GR2EoF is finite and non-negative on sampled GLEMS") {
    Rng rng(47);
    for (int cls : {1, 3, 4, 5, 6, 7}) {
        for (int i = 0; i < 20; ++i) {
            const StdState s = sample_class(cls, rng);
            const double g = gr2eof_glems(s);
            CHECK(g >= 0.0);
            CHECK(std::isfinite(g));
        }
    }
}
