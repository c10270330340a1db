#include "gie/catalog.hpp"
#include "gie/conditioning.hpp"
#include "gie/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace gie;

namespace {

SingleModeMeasurement random_meas(Rng& rng) {
    return SingleModeMeasurement::finite(rng.uniform(0, std::numbers::pi), rng.uniform(1, 20),
                                         rng.uniform(0, 4));
}

StdState random_glems(Rng& rng) {
    static const int classes[] = {1, 3, 4, 5, 6, 7};
    for (;;) {
        const int c = classes[static_cast<int>(rng.uniform() * 6)];
        if (auto s = try_sample_class(c, rng)) return *s;
    }
}

}  // namespace

TEST_CASE("measurement validation and CMs") {
    CHECK_THROWS_AS(SingleModeMeasurement::finite(0, 0.5, 0), InvalidInput);
    CHECK_THROWS_AS(SingleModeMeasurement::finite(0, 1, -1), InvalidInput);
    CHECK_THROWS_AS(measurement_cm(SingleModeMeasurement::homodyne_x()), InvalidInput);
    const Mat2 g = measurement_cm(SingleModeMeasurement::finite(0.3, 2.0, 0.7));
    CHECK(g.determinant() == doctest::Approx(4.0));
    CHECK(measurement_cm(SingleModeMeasurement::heterodyne()).isApprox(Mat2::Identity()));
    // phi = pi/2 squeezes x
    const Mat2 h = measurement_cm(SingleModeMeasurement::finite(std::numbers::pi / 2, 1, 1));
    CHECK(h(0, 0) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("inverse_sum handles widely spread spectra") {
    const Mat2 g = (Mat2() << 2.0, 0.3, 0.3, 1.5).finished();
    const Mat2 v = rotation(0.4);
    const Eigen::Vector2d d(std::exp(16.0), std::exp(-16.0));
    const MatX inv = inverse_sum(g, v, d);
    ref::LMat sum = ref::to_l(g) + ref::to_l(v) * ref::to_l(Mat2(d.asDiagonal())) * ref::to_l(v).transpose();
    const ref::LMat want = sum.inverse();
    CHECK((ref::to_l(inv) - want).cwiseAbs().maxCoeff() < 1e-12L);
}

TEST_CASE("conditional CM against an explicit Schur complement") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const StdState s = random_glems(rng);
        const auto p = purification(s);
        REQUIRE(p.rank == 1);
        const auto m = random_meas(rng);
        const Mat4 got = conditional_cm(p, m);
        const ref::LMat want = ref::schur(ref::to_l(p.assembled()), ref::to_l(measurement_cm(m)));
        CHECK((ref::to_l(got) - want).cwiseAbs().maxCoeff() < 1e-9L);
    }
}

TEST_CASE("homodyne limit is the large-squeezing limit") {
    const auto& s = catalog_entry("rho6t").state;
    const auto p = purification(s);
    for (double phi : {0.0, 0.4, std::numbers::pi / 2}) {
        const Mat4 lim = conditional_cm(p, SingleModeMeasurement::homodyne_x(phi));
        const Mat4 fin = conditional_cm(p, SingleModeMeasurement::finite(phi, 1.0, 9.0));
        CHECK((lim - fin).cwiseAbs().maxCoeff() < 1e-6);
    }
    const Mat4 het = conditional_cm(p, SingleModeMeasurement::heterodyne());
    const Mat4 fin = conditional_cm(p, SingleModeMeasurement::finite(0.0, 1.0, 0.0));
    CHECK((het - fin).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("conditioning lowers the CM and the local purities") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const StdState s = random_glems(rng);
        const auto p = purification(s);
        const auto m = random_meas(rng);
        const Mat4 gc = conditional_cm(p, m);
        Eigen::SelfAdjointEigenSolver<Mat4> es(s.cm() - gc);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
        CHECK(s.cm().determinant() >= gc.determinant() - 1e-10);
        const auto cp = std_params_of(gc);
        CHECK(cp.a_t <= s.a + 1e-12);
        CHECK(cp.b_t <= s.b + 1e-12);
        const auto [n1, n2] = symplectic_eigenvalues(s);
        CHECK(std::sqrt(n1 * n2) >= std::sqrt(cp.a_t * cp.b_t - cp.cx_t * cp.cx_t) - 1e-10);
    }
}

TEST_CASE("glems_conditional agrees with the generic route") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const StdState s = random_glems(rng);
        const auto d = williamson(s);
        const auto p = purification(s, d);
        SingleModeMeasurement m = random_meas(rng);
        if (i % 10 == 0) m = SingleModeMeasurement::homodyne_x(rng.uniform(0, 3));
        if (i % 10 == 1) m = SingleModeMeasurement::heterodyne();
        const auto gl = glems_conditional(s, d, m);
        const Mat4 gc = conditional_cm(p, m);
        CHECK((gl.cm - gc).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(gl.a2 == doctest::Approx(gc.topLeftCorner<2, 2>().determinant()).epsilon(1e-10));
        CHECK(gl.b2 == doctest::Approx(gc.bottomRightCorner<2, 2>().determinant()).epsilon(1e-10));
        CHECK(gl.cxcp == doctest::Approx(gc.topRightCorner<2, 2>().determinant()).epsilon(1e-9).scale(1));
    }
}

TEST_CASE("std_params_of: fixed point and local-rotation invariance") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        const StdState s = sample_physical(rng);
        const auto sp = std_params_of(s.cm());
        CHECK(sp.a_t == doctest::Approx(s.a).epsilon(1e-10));
        CHECK(sp.b_t == doctest::Approx(s.b).epsilon(1e-10));
        CHECK(sp.cx_t == doctest::Approx(s.kx).epsilon(1e-8));
        CHECK(-sp.cp_t == doctest::Approx(s.kp).epsilon(1e-8));
        Mat4 o = Mat4::Zero();
        o.topLeftCorner<2, 2>() = rotation(rng.uniform(0, 6));
        o.bottomRightCorner<2, 2>() = rotation(rng.uniform(0, 6));
        const auto sr = std_params_of(o * s.cm() * o.transpose());
        CHECK(std::abs(sr.a_t - sp.a_t) < 1e-10);
        CHECK(std::abs(sr.b_t - sp.b_t) < 1e-10);
        CHECK(std::abs(sr.cx_t - sp.cx_t) < 1e-8);
        CHECK(std::abs(sr.cp_t - sp.cp_t) < 1e-8);
    }
}
