#include "gie/measures.hpp"

#include <algorithm>
#include <cmath>

namespace gie {

namespace {

double sq(double x) { return x * x; }

constexpr double kCollar = 1e-12;

double branch_value(int br, double a1, double a2, double a3, Gr2eofDetail& d) {
    switch (br) {
        case 1: return 1.0;
        case 2: {
            const double e = a1 + a2 + a3;
            const double scale = std::pow(e * e, 4);
            if (d.delta < -kCollar * scale)
                throw NumericFailure("gr2eof: delta < 0 outside rounding collar");
            const double s2 = sq(a1) + sq(a2) + sq(a3);
            const double p2 = sq(a1 * a2) + sq(a1 * a3) + sq(a2 * a3);
            const double s4 = std::pow(a1, 4) + std::pow(a2, 4) + std::pow(a3, 4);
            d.zeta = 2 * s2 + 2 * p2 - s4 - std::sqrt(std::max(d.delta, 0.0)) - 1.0;
            return d.zeta / (8 * sq(a3));
        }
        default: return sq((sq(a1) - sq(a2)) / (sq(a3) - 1.0));
    }
}

}  // namespace

double ptranspose_nu_minus(const StdState& s) {
    if (!is_physical(s)) throw InvalidInput("ptranspose_nu_minus: state is not physical");
    const double a = s.a, b = s.b, kx = s.kx, kp = s.kp;
    const double ab = a * b;
    const double det = (ab - sq(kx)) * (ab - sq(kp));
    const double delta = sq(a) + sq(b) + 2 * kx * kp;
    const double d = sq(sq(a) - sq(b)) + 4 * (a * kx + b * kp) * (b * kx + a * kp);
    const double plus2 = 0.5 * (delta + std::sqrt(std::max(d, 0.0)));
    return std::sqrt(std::max(det, 0.0) / plus2);
}

double log_negativity(const StdState& s) {
    return std::max(0.0, -std::log(ptranspose_nu_minus(s)));
}

Gr2eofDetail gr2eof_from_triple(double a1, double a2, double a3) {
    Gr2eofDetail d;
    const double s = sq(a1) + sq(a2);
    const double dd = sq(a1) - sq(a2);
    d.alpha3 = std::sqrt(1 + sq(dd) / (2 * s) + std::abs(dd) / (2 * s) * std::sqrt(sq(dd) + 8 * s));
    d.delta = (sq(a1 - a2 - a3) - 1) * (sq(a1 + a2 - a3) - 1) * (sq(a1 - a2 + a3) - 1) *
              (sq(a1 + a2 + a3) - 1);
    const double top = std::sqrt(s - 1.0);

    int br = 3;
    if (a3 >= top) br = 1;
    else if (a3 > d.alpha3) br = 2;
    d.branch = br;
    double g = branch_value(br, a1, a2, a3, d);

    // Inside a collar around a branch edge both sides must agree.
    auto check = [&](double edge, int lo, int hi) {
        if (std::abs(a3 - edge) <= kCollar * edge) {
            Gr2eofDetail tmp = d;
            const double g1 = branch_value(lo, a1, a2, a3, tmp);
            const double g2 = branch_value(hi, a1, a2, a3, tmp);
            if (std::abs(g1 - g2) > 1e-6)
                throw NumericFailure("gr2eof: branches disagree at their common edge");
        }
    };
    check(top, 1, 2);
    check(d.alpha3, 2, 3);

    if (!(g > 0.0)) throw NumericFailure("gr2eof: g3 is not positive");
    d.value = 0.5 * std::log(g);
    return d;
}

Gr2eofDetail gr2eof_detail(const StdState& s) {
    const auto [n1, n2] = symplectic_eigenvalues(s);
    if (std::abs(n2 - 1.0) > tol::glems * n2)
        throw InvalidInput("gr2eof_glems: state is not a GLEMS");
    if (n1 <= 1.0 + tol::rank) {
        Gr2eofDetail d;
        d.value = std::log(s.a);
        d.branch = 0;
        return d;
    }
    return gr2eof_from_triple(s.a, s.b, n1);
}

double gr2eof_glems(const StdState& s) { return gr2eof_detail(s).value; }

}  // namespace gie
