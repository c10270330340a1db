#include "gie/core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gie {

namespace {

double sq(double x) { return x * x; }

bool close_rel(double x, double y, double rel) {
    return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

Mat4 from_rows(const std::array<double, 16>& v) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = v[4 * i + j];
    return m;
}

// Layout of S for a > b (and the Sym case).
Mat4 generic_layout(double x1, double x2, double x3, double x4,
                    double x5, double x6, double x7, double x8) {
    return from_rows({x1, 0, x2, 0,
                      0, x3, 0, x4,
                      x5, 0, x6, 0,
                      0, x7, 0, x8});
}

void require_physical(const StdState& s, const char* what) {
    if (!is_physical(s))
        throw InvalidInput(std::string(what) + ": state is not physical");
}

}  // namespace

StdState StdState::make(double a, double b, double kx, double kp) {
    for (double v : {a, b, kx, kp})
        if (!std::isfinite(v)) throw InvalidInput("state parameters must be finite");
    if (a < 1.0 - tol::physical || b < 1.0 - tol::physical)
        throw InvalidInput("local variances a, b must be >= 1");
    if (kp < 0.0) throw InvalidInput("kp must be >= 0 in standard form");
    if (kx < kp) throw InvalidInput("standard form requires kx >= kp");
    return StdState{a, b, kx, kp};
}

Mat4 StdState::cm() const {
    return from_rows({a, 0, kx, 0,
                      0, a, 0, -kp,
                      kx, 0, b, 0,
                      0, -kp, 0, b});
}

MatX omega(int n_modes) {
    if (n_modes < 1) throw InvalidInput("omega: need at least one mode");
    MatX w = MatX::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        w(2 * k, 2 * k + 1) = 1.0;
        w(2 * k + 1, 2 * k) = -1.0;
    }
    return w;
}

bool is_physical(const StdState& s) {
    const double ab = s.a * s.b;
    const double lhs = (ab - sq(s.kx)) * (ab - sq(s.kp)) + 1.0;
    const double rhs = sq(s.a) + sq(s.b) - 2.0 * s.kx * s.kp;
    const double scale = std::max(1.0, sq(ab));
    if (lhs - rhs < -tol::physical * scale) return false;
    return ab - sq(s.kx) - 1.0 >= -tol::physical * std::max(1.0, ab);
}

bool is_entangled(const StdState& s) {
    require_physical(s, "is_entangled");
    // c_x c_p >= 0 is separable; kp = 0 sits on that boundary.
    if (s.kp <= 0.0) return false;
    const double ab = s.a * s.b;
    const double lhs = (ab - sq(s.kx)) * (ab - sq(s.kp)) + 1.0;
    const double rhs = sq(s.a) + sq(s.b) + 2.0 * s.kx * s.kp;
    return lhs < rhs - tol::physical * std::max(1.0, sq(ab));
}

SymplecticInvariants invariants_of(const StdState& s) {
    const double a = s.a, b = s.b, kx = s.kx, kp = s.kp;
    SymplecticInvariants r;
    r.delta = sq(a) + sq(b) - 2.0 * kx * kp;
    r.m = a * kx - b * kp;
    r.m_tilde = b * kx - a * kp;
    // (a^2-b^2)^2 + 4 M M~ avoids the cancellation in Delta^2 - 4 det.
    r.d = sq(sq(a) - sq(b)) + 4.0 * r.m * r.m_tilde;
    const double rd = std::sqrt(std::max(r.d, 0.0));
    const double mm = r.m * r.m_tilde;
    // L1 L2 = -M M~; take the root without cancellation, derive the other.
    if (a >= b) {
        r.l1 = 0.5 * (sq(b) - sq(a) - rd);
        r.l2 = r.l1 != 0.0 ? -mm / r.l1 : 0.5 * (sq(b) - sq(a) + rd);
    } else {
        r.l2 = 0.5 * (sq(b) - sq(a) + rd);
        r.l1 = r.l2 != 0.0 ? -mm / r.l2 : 0.5 * (sq(b) - sq(a) - rd);
    }
    return r;
}

std::pair<double, double> symplectic_eigenvalues(const StdState& s) {
    require_physical(s, "symplectic_eigenvalues");
    const auto inv = invariants_of(s);
    const double ab = s.a * s.b;
    const double det = (ab - sq(s.kx)) * (ab - sq(s.kp));
    const double n1sq = 0.5 * (inv.delta + std::sqrt(std::max(inv.d, 0.0)));
    const double n1 = std::sqrt(n1sq);
    const double n2 = n1sq > 0.0 ? std::sqrt(std::max(det, 0.0)) / n1 : 0.0;
    return {n1, n2};
}

VecX symplectic_spectrum(const MatX& cm) {
    if (cm.rows() != cm.cols() || cm.rows() % 2 != 0 || cm.rows() == 0)
        throw InvalidInput("symplectic_spectrum: need an even square matrix");
    const int n = static_cast<int>(cm.rows() / 2);
    Eigen::EigenSolver<MatX> es(omega(n) * cm, false);
    std::vector<double> mods;
    for (int i = 0; i < 2 * n; ++i) mods.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mods.begin(), mods.end());
    VecX out(n);
    for (int k = 0; k < n; ++k) out(k) = 0.5 * (mods[2 * k] + mods[2 * k + 1]);
    return out;
}

const char* to_string(StateClass c) {
    switch (c) {
        case StateClass::Pure: return "pure";
        case StateClass::SymGlems: return "sym_glems";
        case StateClass::SymSqTh: return "sym_squeezed_thermal";
        case StateClass::AsymSqThGlems: return "asym_squeezed_thermal_glems";
        case StateClass::Glems4: return "glems4";
        case StateClass::Glems5: return "glems5";
        case StateClass::Glems6: return "glems6";
        case StateClass::Glems7: return "glems7";
        case StateClass::Generic: return "generic";
    }
    return "?";
}

int class_number(StateClass c) {
    switch (c) {
        case StateClass::Pure: return 0;
        case StateClass::SymGlems: return 1;
        case StateClass::SymSqTh: return 2;
        case StateClass::AsymSqThGlems: return 3;
        case StateClass::Glems4: return 4;
        case StateClass::Glems5: return 5;
        case StateClass::Glems6: return 6;
        case StateClass::Glems7: return 7;
        case StateClass::Generic: return -1;
    }
    return -1;
}

bool is_glems(const StdState& s, double glems_tol) {
    const auto [n1, n2] = symplectic_eigenvalues(s);
    (void)n1;
    return std::abs(n2 - 1.0) <= glems_tol * n2;
}

StateClass classify(const StdState& s, double glems_tol) {
    const auto [n1, n2] = symplectic_eigenvalues(s);
    const bool glems = std::abs(n2 - 1.0) <= glems_tol * n2;
    const bool sym = close_rel(s.a, s.b, tol::symmetric);
    const bool equal_k = close_rel(s.kx, s.kp, tol::symmetric);
    const double disc_scale = tol::case_disc * std::max(s.a, s.b) * s.kx;
    if (glems) {
        if (std::abs(n1 - 1.0) <= glems_tol * n1) return StateClass::Pure;
        if (sym) return StateClass::SymGlems;
        if (equal_k) return StateClass::AsymSqThGlems;
        if (s.a > s.b)
            return std::abs(s.b * s.kx - s.a * s.kp) <= disc_scale ? StateClass::Glems4
                                                                   : StateClass::Glems6;
        return std::abs(s.a * s.kx - s.b * s.kp) <= disc_scale ? StateClass::Glems5
                                                               : StateClass::Glems7;
    }
    if (sym && equal_k) return StateClass::SymSqTh;
    return StateClass::Generic;
}

const char* to_string(WilliamsonCase c) {
    switch (c) {
        case WilliamsonCase::Sym: return "sym";
        case WilliamsonCase::Case2a: return "2a";
        case WilliamsonCase::Case2b: return "2b";
        case WilliamsonCase::Case3a: return "3a";
        case WilliamsonCase::Case3b: return "3b";
    }
    return "?";
}

double SymplecticDecomposition::x(int i) const {
    static constexpr int rc[8][2] = {{0, 0}, {0, 2}, {1, 1}, {1, 3},
                                     {2, 0}, {2, 2}, {3, 1}, {3, 3}};
    if (i < 1 || i > 8) throw InvalidInput("x index must be in 1..8");
    return S(rc[i - 1][0], rc[i - 1][1]);
}

SymplecticDecomposition williamson(const StdState& s) {
    if (!(s.kx >= s.kp && s.kp > 0.0))
        throw InvalidInput("williamson: requires kx >= kp > 0");
    require_physical(s, "williamson");
    const double a = s.a, b = s.b, kx = s.kx, kp = s.kp;
    SymplecticDecomposition dec;

    if (close_rel(a, b, tol::symmetric)) {
        const double am = 0.5 * (a + b);
        const double za = std::pow((am + kx) / (am - kp), 0.25);
        const double zb = std::pow((am + kp) / (am - kx), 0.25);
        const double r = 1.0 / std::sqrt(2.0);
        dec.S = r * from_rows({1 / za, 0, 1 / za, 0,
                               0, za, 0, za,
                               -zb, 0, zb, 0,
                               0, -1 / zb, 0, 1 / zb});
        dec.nu1 = std::sqrt((am + kx) * (am - kp));
        dec.nu2 = std::sqrt((am - kx) * (am + kp));
        dec.tag = WilliamsonCase::Sym;
        return dec;
    }

    const auto inv = invariants_of(s);
    const auto [n1, n2] = symplectic_eigenvalues(s);
    const double disc_scale = tol::case_disc * std::max(a, b) * kx;

    if (a > b) {
        if (std::abs(b * kx - a * kp) <= disc_scale) {
            const double v1 = std::sqrt(sq(a) - kx * kp);
            const double v2 = std::sqrt(sq(b) - kx * kp);
            dec.S = from_rows({std::sqrt(v1 / a), 0, 0, 0,
                               0, std::sqrt(a / v1), 0, kx / std::sqrt(a * v1),
                               -kp / std::sqrt(b * v2), 0, std::sqrt(b / v2), 0,
                               0, 0, 0, std::sqrt(v2 / b)});
            dec.nu1 = v1;
            dec.nu2 = v2;
            dec.tag = WilliamsonCase::Case2a;
            return dec;
        }
        // Case 2b with every ratio L/M formed before use; M > 0 here, so the
        // factor M in front of the radicals reduces to +1.
        const double l1 = inv.l1 / inv.m;
        const double l2 = -inv.m_tilde / inv.l1;  // = L2 / M
        const double x4 = std::sqrt(n1 / (a * l1 * l1 + 2 * kp * l1 + b));
        const double x8 = std::sqrt(n2 / (a * l2 * l2 + 2 * kp * l2 + b));
        dec.S = generic_layout(-(a * l1 + kp) / n1 * x4, (kp * l1 + b) / n1 * x4,
                               -l1 * x4, x4,
                               -(a * l2 + kp) / n2 * x8, (kp * l2 + b) / n2 * x8,
                               -l2 * x8, x8);
        dec.nu1 = n1;
        dec.nu2 = n2;
        dec.tag = WilliamsonCase::Case2b;
        return dec;
    }

    if (std::abs(a * kx - b * kp) <= disc_scale) {
        const double v1 = std::sqrt(sq(b) - kx * kp);
        const double v2 = std::sqrt(sq(a) - kx * kp);
        dec.S = from_rows({0, 0, std::sqrt(v1 / b), 0,
                           0, kx / std::sqrt(b * v1), 0, std::sqrt(b / v1),
                           std::sqrt(a / v2), 0, -kp / std::sqrt(a * v2), 0,
                           0, std::sqrt(v2 / a), 0, 0});
        dec.nu1 = v1;
        dec.nu2 = v2;
        dec.tag = WilliamsonCase::Case3a;
        return dec;
    }
    // Case 3b, mirror of 2b; M~ > 0 for a < b.
    const double m2 = inv.l2 / inv.m_tilde;
    const double m1 = -inv.m / inv.l2;  // = L1 / M~
    const double x4 = std::sqrt(n1 / (b * m2 * m2 - 2 * kp * m2 + a));
    const double x8 = std::sqrt(n2 / (b * m1 * m1 - 2 * kp * m1 + a));
    const double x1 = (b * m2 - kp) / n1 * x4, x2 = (a - kp * m2) / n1 * x4;
    const double x3 = m2 * x4;
    const double x5 = (b * m1 - kp) / n2 * x8, x6 = (a - kp * m1) / n2 * x8;
    const double x7 = m1 * x8;
    dec.S = from_rows({x2, 0, x1, 0,
                       0, x4, 0, x3,
                       x6, 0, x5, 0,
                       0, x8, 0, x7});
    dec.nu1 = n1;
    dec.nu2 = n2;
    dec.tag = WilliamsonCase::Case3b;
    return dec;
}

std::array<Mat4, 4> sign_variants(const Mat4& S) {
    std::array<Mat4, 4> out;
    const double sg[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int v = 0; v < 4; ++v) {
        Mat4 d = Mat4::Zero();
        d(0, 0) = d(1, 1) = sg[v][0];
        d(2, 2) = d(3, 3) = sg[v][1];
        out[v] = d * S;
    }
    return out;
}

Mat4 symplectic_inverse(const Mat4& S) {
    const Mat4 w = omega(2);
    return w * S.transpose() * w.transpose();
}

double symplectic_residual(const Mat4& S) {
    const Mat4 w = omega(2);
    return (S * w * S.transpose() - w).cwiseAbs().maxCoeff();
}

double diagonal_residual(const Mat4& S, const Mat4& gamma, double nu1, double nu2) {
    Mat4 d = Mat4::Zero();
    d(0, 0) = d(1, 1) = nu1;
    d(2, 2) = d(3, 3) = nu2;
    return (S * gamma * S.transpose() - d).cwiseAbs().maxCoeff();
}

MatX PurificationCM::assembled() const {
    const int n = 4 + 2 * rank;
    MatX g = MatX::Zero(n, n);
    g.topLeftCorner(4, 4) = gamma_ab;
    if (rank > 0) {
        g.topRightCorner(4, 2 * rank) = gamma_abe;
        g.bottomLeftCorner(2 * rank, 4) = gamma_abe.transpose();
        g.bottomRightCorner(2 * rank, 2 * rank) = gamma_e;
    }
    return g;
}

PurificationCM purification(const StdState& s, const SymplecticDecomposition& dec) {
    require_physical(s, "purification");
    PurificationCM p;
    p.gamma_ab = s.cm();
    const double nus[2] = {dec.nu1, dec.nu2};
    int r = 0;
    for (double v : nus)
        if (v > 1.0 + tol::rank) ++r;
    p.rank = r;
    MatX g0 = MatX::Zero(4, 2 * r);
    p.gamma_e = MatX::Zero(2 * r, 2 * r);
    for (int i = 0; i < r; ++i) {
        const double c = std::sqrt(sq(nus[i]) - 1.0);
        g0(2 * i, 2 * i) = c;
        g0(2 * i + 1, 2 * i + 1) = -c;
        p.gamma_e(2 * i, 2 * i) = nus[i];
        p.gamma_e(2 * i + 1, 2 * i + 1) = nus[i];
    }
    p.gamma_abe = symplectic_inverse(dec.S) * g0;
    return p;
}

PurificationCM purification(const StdState& s) {
    if (s.kp <= 0.0) {
        // kx = kp = 0 is already diagonal up to a mode swap.
        if (s.kx == 0.0) {
            SymplecticDecomposition dec;
            dec.nu1 = std::max(s.a, s.b);
            dec.nu2 = std::min(s.a, s.b);
            if (s.a < s.b) {
                dec.S = Mat4::Zero();
                dec.S.block<2, 2>(0, 2) = Mat2::Identity();
                dec.S.block<2, 2>(2, 0) = Mat2::Identity();
            }
            return purification(s, dec);
        }
        throw InvalidInput("purification: kp = 0 with kx > 0 is outside standard form");
    }
    return purification(s, williamson(s));
}

}  // namespace gie
