#include "gie/conditioning.hpp"

#include <cmath>

namespace gie {

const char* to_string(Limit l) {
    switch (l) {
        case Limit::Finite: return "finite";
        case Limit::HomodyneX: return "homodyne_x";
        case Limit::Heterodyne: return "heterodyne";
    }
    return "?";
}

SingleModeMeasurement SingleModeMeasurement::finite(double phi, double tau, double t) {
    if (!(tau >= 1.0) || !(t >= 0.0) || !std::isfinite(phi) || !std::isfinite(tau) ||
        !std::isfinite(t))
        throw InvalidInput("measurement: need tau >= 1, t >= 0, finite values");
    return {phi, tau, t, Limit::Finite};
}

SingleModeMeasurement SingleModeMeasurement::heterodyne() { return {0.0, 1.0, 0.0, Limit::Heterodyne}; }

SingleModeMeasurement SingleModeMeasurement::homodyne_x(double phi) {
    return {phi, 1.0, 0.0, Limit::HomodyneX};
}

Mat2 rotation(double phi) {
    Mat2 p;
    p << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return p;
}

Mat2 measurement_cm(const SingleModeMeasurement& m) {
    if (m.limit == Limit::HomodyneX)
        throw InvalidInput("measurement_cm: homodyne limit has no finite CM");
    if (m.limit == Limit::Heterodyne) return Mat2::Identity();
    const double vp = m.tau * std::cosh(2 * m.t);
    const double vm = m.tau * std::sinh(2 * m.t);
    const double c = std::cos(2 * m.phi), s = std::sin(2 * m.phi);
    Mat2 g;
    g << vp + vm * c, vm * s, vm * s, vp - vm * c;
    return g;
}

MatX inverse_sum(const MatX& gamma, const MatX& v, const VecX& d) {
    MatX inner = v.transpose() * gamma * v;
    inner.diagonal() += d;
    const VecX sc = inner.diagonal().cwiseSqrt().cwiseInverse();
    const MatX scaled = sc.asDiagonal() * inner * sc.asDiagonal();
    Eigen::LLT<MatX> llt(scaled);
    if (llt.info() != Eigen::Success) throw NumericFailure("inverse_sum: sum is not positive definite");
    const MatX inv = sc.asDiagonal() * llt.solve(MatX::Identity(d.size(), d.size())) * sc.asDiagonal();
    MatX out = v * inv * v.transpose();
    return 0.5 * (out + out.transpose());
}

namespace {

Mat4 condition_with(const PurificationCM& p, const MatX& m) {
    Mat4 out = p.gamma_ab - p.gamma_abe * m * p.gamma_abe.transpose();
    return 0.5 * (out + out.transpose());
}

}  // namespace

Mat4 conditional_cm(const PurificationCM& p, const MatX& gamma_e_meas) {
    if (p.rank == 0) return p.gamma_ab;
    const int n = 2 * p.rank;
    if (gamma_e_meas.rows() != n || gamma_e_meas.cols() != n)
        throw InvalidInput("conditional_cm: measurement CM has the wrong size");
    Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (gamma_e_meas + gamma_e_meas.transpose()));
    const VecX d = es.eigenvalues().cwiseMax(0.0);
    return condition_with(p, inverse_sum(p.gamma_e, es.eigenvectors(), d));
}

Mat4 conditional_cm(const PurificationCM& p, const SingleModeMeasurement& m) {
    if (p.rank == 0) return p.gamma_ab;
    if (p.rank != 1) throw InvalidInput("conditional_cm: single-mode measurement needs R = 1");
    if (m.limit == Limit::HomodyneX) {
        // (gamma_E + Gamma)^{-1} -> w w^T / (w^T gamma_E w), w the squeezed axis.
        Eigen::Vector2d w(-std::sin(m.phi), std::cos(m.phi));
        const double q = w.dot(p.gamma_e * w);
        const Eigen::Vector4d u = p.gamma_abe * w;
        Mat4 out = p.gamma_ab - u * u.transpose() / q;
        return 0.5 * (out + out.transpose());
    }
    if (m.limit == Limit::Heterodyne)
        return condition_with(p, inverse_sum(p.gamma_e, Mat2::Identity(), Eigen::Vector2d(1, 1)));
    const Eigen::Vector2d d(m.tau * std::exp(2 * m.t), m.tau * std::exp(-2 * m.t));
    return condition_with(p, inverse_sum(p.gamma_e, rotation(m.phi), d));
}

GlemsConditional glems_conditional(const StdState& /*s*/, const SymplecticDecomposition& dec,
                                   const SingleModeMeasurement& m) {
    if (std::abs(dec.nu2 - 1.0) > tol::glems * dec.nu2)
        throw InvalidInput("glems_conditional: state is not a GLEMS");
    const double nu = dec.nu1;
    auto cal = [nu](double v) { return (nu * v + 1.0) / (nu + v); };
    double vx = 1.0, vp = 1.0;
    switch (m.limit) {
        case Limit::Heterodyne: break;
        case Limit::HomodyneX:
            vx = nu;
            vp = 1.0 / nu;
            break;
        case Limit::Finite:
            vx = cal(m.tau * std::exp(2 * m.t));
            vp = cal(m.tau * std::exp(-2 * m.t));
            break;
    }
    const Mat2 P = rotation(m.phi);
    const Mat2 ga = P.transpose() * Eigen::Vector2d(vx, vp).asDiagonal() * P;
    Mat4 blk = Mat4::Identity();
    blk.topLeftCorner<2, 2>() = ga;
    const Mat4 si = symplectic_inverse(dec.S);

    GlemsConditional r;
    r.cm = si * blk * si.transpose();
    r.cm = 0.5 * (r.cm + r.cm.transpose());
    const double x1 = dec.x(1), x2 = dec.x(2), x3 = dec.x(3), x4 = dec.x(4);
    const double x5 = dec.x(5), x6 = dec.x(6), x7 = dec.x(7), x8 = dec.x(8);
    const double vv = vx * vp, g11 = ga(0, 0), g22 = ga(1, 1);
    r.a2 = x1 * x1 * x3 * x3 * vv + x3 * x3 * x5 * x5 * g11 + x1 * x1 * x7 * x7 * g22 +
           x5 * x5 * x7 * x7;
    r.b2 = x2 * x2 * x4 * x4 * vv + x4 * x4 * x6 * x6 * g11 + x2 * x2 * x8 * x8 * g22 +
           x6 * x6 * x8 * x8;
    r.cxcp = x1 * x2 * x3 * x4 * vv + x3 * x4 * x5 * x6 * g11 + x1 * x2 * x7 * x8 * g22 +
             x5 * x6 * x7 * x8;
    return r;
}

CondStdParams std_params_of(const Mat4& cm) {
    const double da = cm.topLeftCorner<2, 2>().determinant();
    const double db = cm.bottomRightCorner<2, 2>().determinant();
    const double dc = cm.topRightCorner<2, 2>().determinant();
    const double dt = cm.determinant();
    if (!(da > 0.0) || !(db > 0.0))
        throw NumericFailure("std_params_of: local blocks are not positive definite");
    CondStdParams p;
    p.a_t = std::sqrt(da);
    p.b_t = std::sqrt(db);
    const double ab = p.a_t * p.b_t;
    const double sigma = (da * db + dc * dc - dt) / ab;  // = cx^2 + cp^2
    double disc = sigma * sigma - 4.0 * dc * dc;
    const double scale = std::max(1.0, sigma * sigma);
    if (disc < -1e-9 * scale) throw NumericFailure("std_params_of: negative discriminant");
    disc = std::max(disc, 0.0);
    const double u = std::max(0.5 * (sigma + std::sqrt(disc)), 0.0);
    const double v = u > 0.0 ? std::min(dc * dc / u, u) : 0.0;
    p.cx_t = std::sqrt(u);
    p.cp_t = (dc < 0.0 ? -1.0 : 1.0) * std::sqrt(v);
    return p;
}

}  // namespace gie
