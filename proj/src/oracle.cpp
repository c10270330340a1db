#include "gie/oracle.hpp"

#include "gie/engine.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace gie {

namespace {

constexpr double kPi = std::numbers::pi;

double log_guard(double x) {
    if (!(x > 0.0)) throw NumericFailure("oracle: non-positive determinant");
    return x;
}

double log_ratio(double num, double den, const char* what) {
    if (!(num > 0.0) || !(den > 0.0))
        throw NumericFailure(std::string(what) + ": non-positive determinant");
    return std::log(num / den);
}

EveFactor factor_of(const MatX& g) {
    Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (g + g.transpose()));
    return {es.eigenvectors(), es.eigenvalues().cwiseMax(0.0)};
}

// -1/2 ln det(I + X^{-1} Off) with X the local blocks of cm + G
double mi_from_inverse(const Mat4& cm, const Mat4& xinv_local) {
    Mat4 off = cm;
    off.topLeftCorner<2, 2>().setZero();
    off.bottomRightCorner<2, 2>().setZero();
    const Mat4 m = Mat4::Identity() + xinv_local * off;
    return -0.5 * std::log(log_guard(m.determinant()));
}

// fixed-size copy of inverse_sum for the hot loop
template <int N>
Eigen::Matrix<double, N, N> inverse_sum_n(const MatX& gamma, const MatX& v, const VecX& d) {
    using M = Eigen::Matrix<double, N, N>;
    using V = Eigen::Matrix<double, N, 1>;
    const M vv = v;
    M inner = vv.transpose() * M(gamma) * vv;
    inner.diagonal() += V(d);
    const V sc = inner.diagonal().cwiseSqrt().cwiseInverse();
    const M scaled = sc.asDiagonal() * inner * sc.asDiagonal();
    Eigen::LLT<M> llt(scaled);
    if (llt.info() != Eigen::Success) throw NumericFailure("inverse_sum: sum is not positive definite");
    const M inv = sc.asDiagonal() * llt.solve(M::Identity()) * sc.asDiagonal();
    return vv * inv * vv.transpose();
}

template <int N>
double k_term(const MatX& ge, const MatX& da, const MatX& db, const MatX& dab, const EveFactor& f) {
    using M = Eigen::Matrix<double, N, N>;
    const M m = inverse_sum_n<N>(ge, f.v, f.d);
    const double ra = (M::Identity() - M(da) * m).determinant();
    const double rb = (M::Identity() - M(db) * m).determinant();
    const double rab = (M::Identity() - M(dab) * m).determinant();
    return 0.5 * log_ratio(ra * rb, rab, "cond_mutual_info");
}

Mat4 conditioned(const PurificationCM& p, const EveFactor& f) {
    const MatX m = inverse_sum(p.gamma_e, f.v, f.d);
    Mat4 out = p.gamma_ab - p.gamma_abe * m * p.gamma_abe.transpose();
    return 0.5 * (out + out.transpose());
}

std::vector<Axis> eve_axes(int rank, const GridSpec& g) {
    const Axis phi{0.0, kPi, g.n_phi, true};
    const Axis tau{1.0, g.tau_max, g.n_tau, false};
    const Axis t{0.0, g.r_max, g.n_t, false};
    if (rank == 1) return {phi, tau, t};
    return {phi, tau, t, phi, tau, t, Axis{0.0, kPi, g.n_phi, true}};
}

double eve_tie(const std::vector<double>& x) {
    return x.size() == 3 ? x[2] : x[2] + x[5];
}

std::vector<Axis> local_axes(const GridSpec& g) {
    const Axis th{0.0, kPi, g.n_theta, true};
    const Axis r{0.0, g.r_max, g.n_r, false};
    return {th, r, th, r};
}

}  // namespace

Mat2 PureLocalMeasurement::axes() const { return rotation(theta); }

Eigen::Vector2d PureLocalMeasurement::diag() const {
    return {std::exp(-2 * r), std::exp(2 * r)};
}

Mat2 PureLocalMeasurement::cm() const {
    return axes() * diag().asDiagonal() * axes().transpose();
}

int eve_param_count(int rank) {
    switch (rank) {
        case 0: return 0;
        case 1: return 3;
        case 2: return 7;
    }
    throw InvalidInput("eve_param_count: rank must be 0, 1 or 2");
}

EveFactor eve_factor(int rank, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != eve_param_count(rank))
        throw InvalidInput("eve_factor: wrong number of parameters");
    if (rank == 0) return {MatX(0, 0), VecX(0)};
    EveFactor f;
    auto one = [](double phi, double tau, double t) {
        (void)SingleModeMeasurement::finite(phi, tau, t);  // validates
        return Eigen::Vector2d(tau * std::exp(2 * t), tau * std::exp(-2 * t));
    };
    if (rank == 1) return {rotation(x[0]), one(x[0], x[1], x[2])};
    Mat4 v = Mat4::Zero();
    v.topLeftCorner<2, 2>() = rotation(x[0]);
    v.bottomRightCorner<2, 2>() = rotation(x[3]);
    const double c = std::cos(x[6]), s = std::sin(x[6]);
    Mat4 b;
    b << c, 0, s, 0, 0, c, 0, s, -s, 0, c, 0, 0, -s, 0, c;
    f.v = b * v;
    f.d.resize(4);
    f.d << one(x[0], x[1], x[2]), one(x[3], x[4], x[5]);
    return f;
}

MatX eve_cm(int rank, const std::vector<double>& x) { return eve_factor(rank, x).cm(); }

double measured_mutual_info(const Mat4& cm, const PureLocalMeasurement& ga,
                            const PureLocalMeasurement& gb) {
    Mat4 xinv = Mat4::Zero();
    xinv.topLeftCorner<2, 2>() = inverse_sum(cm.topLeftCorner<2, 2>(), ga.axes(), ga.diag());
    xinv.bottomRightCorner<2, 2>() =
        inverse_sum(cm.bottomRightCorner<2, 2>(), gb.axes(), gb.diag());
    return mi_from_inverse(cm, xinv);
}

double cond_mutual_info(const PurificationCM& p, const PureLocalMeasurement& ga,
                        const PureLocalMeasurement& gb, const MatX& gamma_e_meas) {
    return measured_mutual_info(conditional_cm(p, gamma_e_meas), ga, gb);
}

double cond_mutual_info(const PurificationCM& p, const PureLocalMeasurement& ga,
                        const PureLocalMeasurement& gb, const SingleModeMeasurement& ge) {
    return measured_mutual_info(conditional_cm(p, ge), ga, gb);
}

FixedLocalCmi::FixedLocalCmi(const PurificationCM& p, const PureLocalMeasurement& ga,
                             const PureLocalMeasurement& gb)
    : rank_(p.rank), ge_(p.gamma_e) {
    iab_ = measured_mutual_info(p.gamma_ab, ga, gb);
    if (rank_ == 0) return;
    const MatX& c = p.gamma_abe;
    const MatX ca = c.topRows(2), cb = c.bottomRows(2);
    const Mat4 g = p.gamma_ab;
    da_ = ca.transpose() * inverse_sum(g.topLeftCorner<2, 2>(), ga.axes(), ga.diag()) * ca;
    db_ = cb.transpose() * inverse_sum(g.bottomRightCorner<2, 2>(), gb.axes(), gb.diag()) * cb;
    Mat4 v = Mat4::Zero();
    v.topLeftCorner<2, 2>() = ga.axes();
    v.bottomRightCorner<2, 2>() = gb.axes();
    Eigen::Vector4d d;
    d << ga.diag(), gb.diag();
    dab_ = c.transpose() * inverse_sum(g, v, d) * c;
}

double FixedLocalCmi::operator()(const EveFactor& f) const {
    if (rank_ == 0) return iab_;
    if (rank_ == 1) return iab_ + k_term<2>(ge_, da_, db_, dab_, f);
    return iab_ + k_term<4>(ge_, da_, db_, dab_, f);
}

double FixedLocalCmi::operator()(const MatX& gm) const {
    if (rank_ == 0) return iab_;
    return (*this)(factor_of(gm));
}

double cond_mutual_info_decomposed(const PurificationCM& p, const PureLocalMeasurement& ga,
                                   const PureLocalMeasurement& gb, const MatX& gamma_e_meas) {
    return FixedLocalCmi(p, ga, gb)(gamma_e_meas);
}

EveSearch inf_over_eve(const PurificationCM& p, const PureLocalMeasurement& ga,
                       const PureLocalMeasurement& gb, const GridSpec& grid) {
    grid.validate();
    const FixedLocalCmi f(p, ga, gb);
    EveSearch out;
    if (p.rank == 0) {
        out.value = f.mutual_info_ab();
        return out;
    }
    const int rank = p.rank;
    auto obj = [&](const std::vector<double>& x) { return f(eve_factor(rank, x)); };
    const GridOutcome g = grid_optimize(eve_axes(rank, grid), obj, Sense::Minimize,
                                        grid.refinement_rounds, eve_tie);
    out.value = g.value;
    out.argmin = g.x;
    out.trajectory = g.trace;
    return out;
}

SupInf sup_inf(const PurificationCM& p, const GridSpec& grid) {
    grid.validate();
    auto unpack = [](const std::vector<double>& x) {
        return std::pair{PureLocalMeasurement{x[0], x[1]}, PureLocalMeasurement{x[2], x[3]}};
    };
    auto obj = [&](const std::vector<double>& x) {
        const auto [ga, gb] = unpack(x);
        return inf_over_eve(p, ga, gb, grid).value;
    };
    auto tie = [](const std::vector<double>& x) { return x[1] + x[3]; };
    const GridOutcome g =
        grid_optimize(local_axes(grid), obj, Sense::Maximize, grid.refinement_rounds, tie);
    SupInf out;
    out.value = g.value;
    std::tie(out.ga, out.gb) = unpack(g.x);
    out.eve = inf_over_eve(p, out.ga, out.gb, grid);
    out.trajectory = g.trace;
    return out;
}

double gcmi_of(const Mat4& cm, const GridSpec& grid, bool* exact) {
    const CondStdParams sp = std_params_of(cm);
    if (g_quantity(sp.a_t, sp.b_t, sp.cx_t) >= 0.0) {
        if (exact) *exact = true;
        return gcmi_homodyne(sp);
    }
    if (exact) *exact = false;
    auto obj = [&](const std::vector<double>& x) {
        return measured_mutual_info(cm, {x[0], x[1]}, {x[2], x[3]});
    };
    const GridOutcome g =
        grid_optimize(local_axes(grid), obj, Sense::Maximize, grid.refinement_rounds);
    // double homodyne is always a candidate
    return std::max(g.value, gcmi_homodyne(sp));
}

EveSearch eve_upper(const PurificationCM& p, const GridSpec& grid) {
    grid.validate();
    EveSearch out;
    if (p.rank == 0) {
        out.value = gcmi_of(p.gamma_ab, grid, &out.exact_inner);
        return out;
    }
    bool all_exact = true;
    auto obj = [&](const std::vector<double>& x) {
        bool ex = true;
        const double v = gcmi_of(conditioned(p, eve_factor(p.rank, x)), grid, &ex);
        all_exact = all_exact && ex;
        return v;
    };
    const GridOutcome g = grid_optimize(eve_axes(p.rank, grid), obj, Sense::Minimize,
                                        grid.refinement_rounds, eve_tie);
    out.value = g.value;
    out.argmin = g.x;
    out.trajectory = g.trace;
    out.exact_inner = all_exact;
    return out;
}

double min_k_h_grid(const StdState& s, const SymplecticDecomposition& dec, const GridSpec& grid) {
    grid.validate();
    const AlphaTriple al = alphas(s, dec);
    const double nu = dec.nu1;
    auto obj = [&](const std::vector<double>& x) {
        const double q = q_of(SingleModeMeasurement::finite(x[0], x[1], x[2]), nu);
        const double den = 1.0 - al.alpha_ab * q;
        if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
        return k_h(q, al);
    };
    const GridOutcome g = grid_optimize(eve_axes(1, grid), obj, Sense::Minimize,
                                        grid.refinement_rounds, eve_tie);
    return g.value;
}

std::string trajectory_csv(const std::vector<GridTrace>& rows) {
    std::string out;
    char buf[64];
    for (const auto& r : rows) {
        out += std::to_string(r.round);
        for (double v : r.x) {
            std::snprintf(buf, sizeof buf, ",%.15g", v);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.15g\n", r.value);
        out += buf;
    }
    return out;
}

}  // namespace gie
