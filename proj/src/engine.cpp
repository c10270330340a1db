#include "gie/engine.hpp"

#include "gie/measures.hpp"
#include "gie/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace gie {

namespace {

double sq(double x) { return x * x; }

bool symmetric(const StdState& s) {
    return std::abs(s.a - s.b) <= tol::symmetric * std::max(s.a, s.b);
}

void require_glems(const SymplecticDecomposition& dec, const char* what) {
    if (std::abs(dec.nu2 - 1.0) > tol::glems * dec.nu2)
        throw InvalidInput(std::string(what) + ": state is not a GLEMS");
}

double sym_sqth_closed(const StdState& s) {
    const double d = s.a - s.kx;
    return std::log((d * d + 1.0) / (2.0 * d));
}

}  // namespace

double g_quantity(double a, double b, double cx) {
    const double ab = a * b;
    if (!(ab > cx * cx)) throw InvalidInput("g_quantity: need ab > cx^2");
    return std::sqrt(a / b) + std::sqrt(b / a) + 1.0 / std::sqrt(ab) - std::sqrt(ab - cx * cx);
}

double gcmi_homodyne(const CondStdParams& p) {
    const double ab = p.a_t * p.b_t;
    if (!(ab > p.cx_t * p.cx_t)) throw InvalidInput("gcmi_homodyne: need ab > cx^2");
    return 0.5 * std::log(ab / (ab - p.cx_t * p.cx_t));
}

double g_tilde_min(const StdState& s) {
    if (!is_physical(s)) throw InvalidInput("g_tilde_min: state is not physical");
    const double ab = s.a * s.b;
    const double det = (ab - sq(s.kx)) * (ab - sq(s.kp));
    return 2.0 + 1.0 / std::sqrt(ab) - std::pow(std::max(det, 0.0), 0.25);
}

bool homodyne_condition(const StdState& s) { return g_tilde_min(s) >= 0.0; }

GTildeVariants g_tilde_variants(const StdState& s) {
    if (!symmetric(s)) throw InvalidInput("g_tilde_variants: requires a = b");
    const auto [n1, n2] = symplectic_eigenvalues(s);
    (void)n2;
    GTildeVariants v;
    v.g_min_sym = 2.0 + 1.0 / s.a - n1;
    v.g_opt_sym_glems = 2.0 + 1.0 / s.a - std::sqrt(sq(s.a) - sq(s.kx));
    v.cond_sym_sqth = n1 <= 2.0 + 1.0 / s.a;
    if (classify(s) == StateClass::SymGlems && !(g_tilde_min(s) < v.g_opt_sym_glems))
        throw NumericFailure("g_tilde_variants: expected G~min < G~opt for a mixed symmetric GLEMS");
    return v;
}

AlphaTriple alphas(const StdState& s, const SymplecticDecomposition& dec) {
    require_glems(dec, "alphas");
    const double nu = dec.nu1, c = sq(nu) - 1.0;
    const double x3 = dec.x(3), x4 = dec.x(4);
    AlphaTriple al;
    al.alpha_a = c / s.a * sq(x3);
    al.alpha_b = c / s.b * sq(x4);
    al.alpha_ab = c / (s.a * s.b - sq(s.kx)) * (s.a * sq(x4) + s.b * sq(x3) - 2 * s.kx * x3 * x4);
    return al;
}

double k_h(double q, const AlphaTriple& al) {
    const double den = 1.0 - al.alpha_ab * q;
    if (!(den > 0.0)) throw NumericFailure("k_h: pole of K_h inside the domain");
    return (1.0 - al.alpha_a * q) * (1.0 - al.alpha_b * q) / den;
}

double q_of(const SingleModeMeasurement& m, double nu) {
    switch (m.limit) {
        case Limit::HomodyneX: return sq(std::sin(m.phi)) / nu;
        case Limit::Heterodyne: return 1.0 / (1.0 + nu);
        case Limit::Finite: break;
    }
    const double c2 = std::cosh(2 * m.t), s2 = std::sinh(2 * m.t);
    return (m.tau * (c2 - s2 * std::cos(2 * m.phi)) + nu) /
           (sq(m.tau) + 2 * m.tau * nu * c2 + sq(nu));
}

SingleModeMeasurement measurement_for_q(double q, double nu) {
    constexpr double half_pi = std::numbers::pi / 2;
    if (!(q > 0.0)) throw InvalidInput("measurement_for_q: need q > 0");
    if (q >= 1.0 / nu * (1 - 1e-15)) return SingleModeMeasurement::homodyne_x(half_pi);
    const double het = 1.0 / (1.0 + nu);
    if (std::abs(q - het) <= 1e-12 * het) return SingleModeMeasurement::heterodyne();
    if (q < het) return SingleModeMeasurement::finite(half_pi, 1.0 / q - nu, 0.0);
    // phi = pi/2, tau = 1: (q nu - 1) u^2 + (q (1 + nu^2) - nu) u + q nu = 0, u = e^{2t}
    const double A = q * nu - 1.0, B = q * (1 + sq(nu)) - nu, C = q * nu;
    const double disc = std::sqrt(B * B - 4 * A * C);
    const double qq = -0.5 * (B + std::copysign(disc, B));
    const double r1 = qq / A, r2 = C / qq;
    const double u = std::max(r1, r2);
    if (!(u >= 1.0 - 1e-12)) throw NumericFailure("measurement_for_q: no t >= 0 for this q");
    return SingleModeMeasurement::finite(half_pi, 1.0, 0.5 * std::log(std::max(u, 1.0)));
}

KhMinimum minimize_k_h(const StdState& s, const SymplecticDecomposition& dec,
                       const AlphaTriple& al) {
    (void)s;
    require_glems(dec, "minimize_k_h");
    const double nu = dec.nu1;
    KhMinimum best;
    best.k_min = 1.0;  // K_h(0), the no-measurement limit
    best.q_star = 0.0;

    auto offer = [&](double q, double k) {
        if (k < best.k_min - 1e-15) {
            best.k_min = k;
            best.q_star = q;
            best.eve = measurement_for_q(q, nu);
        }
    };

    const double lin_tol = 1e-12 * std::max(1.0, al.alpha_ab);
    if (std::abs(al.alpha_a - al.alpha_ab) <= lin_tol) {
        offer(1.0 / nu, 1.0 - al.alpha_b / nu);
        return best;
    }
    if (std::abs(al.alpha_b - al.alpha_ab) <= lin_tol) {
        offer(1.0 / nu, 1.0 - al.alpha_a / nu);
        return best;
    }

    // interior stationary points first, the 1/nu endpoint last
    if (al.alpha_a > 0 && al.alpha_b > 0 && al.alpha_ab > 0) {
        const double disc = (al.alpha_ab / al.alpha_a - 1.0) * (al.alpha_ab / al.alpha_b - 1.0);
        if (disc >= 0.0) {
            for (double sg : {1.0, -1.0}) {
                const double q = (1.0 + sg * std::sqrt(disc)) / al.alpha_ab;
                if (q > 0.0 && q < 1.0 / nu) offer(q, k_h(q, al));
            }
        }
    }
    offer(1.0 / nu, (nu - al.alpha_a) * (nu - al.alpha_b) / (nu * (nu - al.alpha_ab)));
    return best;
}

double lower_bound_l(const StdState& s, const SymplecticDecomposition& dec) {
    require_glems(dec, "lower_bound_l");
    const auto km = minimize_k_h(s, dec, alphas(s, dec));
    const double ab = s.a * s.b;
    return 0.5 * std::log(ab / (ab - sq(s.kx))) + 0.5 * std::log(km.k_min);
}

double lower_bound_l(const StdState& s) { return lower_bound_l(s, williamson(s)); }

Class6Detail class6_detail(const StdState& s, const SymplecticDecomposition& dec) {
    require_glems(dec, "class6_detail");
    if (!(s.a > s.b)) throw InvalidInput("class6_detail: requires a > b");
    const double nu = dec.nu1;
    const double x1 = dec.x(1), x3 = dec.x(3), x5 = dec.x(5), x7 = dec.x(7);
    const double p4 = x1 * x3 * x5 * x7;
    auto h = [p4](double kappa) { return 1.0 / (1.0 - kappa / (p4 * sq(kappa + 1.0))); };
    const auto inv = invariants_of(s);
    Class6Detail d;
    d.z1 = -x3 * x5 / (x1 * x7);
    d.guard_x = x5 * x7 * sq(nu) + x1 * x3;
    d.h_min1 = -4.0 * inv.m * inv.m_tilde / sq(sq(s.a) - sq(s.b));
    d.h_min2 = h(nu / d.z1);
    d.guards_ok = inv.m_tilde < 0.0 && d.z1 < nu && d.guard_x > 0.0;
    return d;
}

double upper_bound_u(const StdState& s, const SymplecticDecomposition& dec) {
    if (!is_entangled(s)) throw InvalidInput("upper_bound_u: state is separable");
    const StateClass c = classify(s);
    switch (c) {
        case StateClass::Pure: return std::log(s.a);
        case StateClass::SymGlems: return std::log(s.a / std::sqrt(sq(s.a) - sq(s.kp)));
        case StateClass::SymSqTh:
            if (g_tilde_variants(s).cond_sym_sqth) return sym_sqth_closed(s);
            break;
        default: break;
    }
    if (!homodyne_condition(s)) throw InvalidInput("no closed U; use oracle");
    switch (c) {
        case StateClass::AsymSqThGlems:
            return std::log((s.a + s.b) / (std::abs(s.a - s.b) + 2.0));
        case StateClass::Glems4: return std::log(s.a / std::sqrt(sq(s.a) - s.kx * s.kp));
        case StateClass::Glems5: return std::log(s.b / std::sqrt(sq(s.b) - s.kx * s.kp));
        case StateClass::Glems6: {
            const auto d = class6_detail(s, dec);
            if (!d.guards_ok) break;
            const double h = std::min(d.h_min1, d.h_min2);
            return -0.5 * std::log(1.0 - h);
        }
        default: break;
    }
    throw InvalidInput("no closed U; use oracle");
}

double upper_bound_u(const StdState& s) {
    if (classify(s) == StateClass::SymSqTh) return upper_bound_u(s, SymplecticDecomposition{});
    return upper_bound_u(s, williamson(s));
}

const char* to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed_form";
        case Method::GenericGlemsProcedure: return "generic_glems_procedure";
        case Method::OracleBracket: return "oracle_bracket";
    }
    return "?";
}

GieReport gie(const StdState& s, const GieOptions& opt) {
    if (!is_physical(s)) throw InvalidInput("gie: state is not physical");
    GieReport r;
    std::tie(r.nu1, r.nu2) = symplectic_eigenvalues(s);
    r.state_class = classify(s);
    r.g_tilde_min = g_tilde_min(s);
    r.homodyne_cond_ok = r.g_tilde_min >= 0.0;
    r.log_negativity = log_negativity(s);
    const bool glems = is_glems(s);
    if (glems) r.gr2eof = gr2eof_glems(s);

    if (!is_entangled(s)) {
        r.separable = true;
        r.method = Method::ClosedForm;
        return r;  // everything stays 0
    }

    const StateClass c = r.state_class;
    const bool closed =
        c == StateClass::Pure || c == StateClass::SymGlems ||
        (c == StateClass::SymSqTh && g_tilde_variants(s).cond_sym_sqth) ||
        (r.homodyne_cond_ok && (c == StateClass::AsymSqThGlems || c == StateClass::Glems4 ||
                                c == StateClass::Glems5));

    std::optional<SymplecticDecomposition> dec;
    if (glems) dec = williamson(s);

    auto glems_lower = [&]() {
        const auto km = minimize_k_h(s, *dec, alphas(s, *dec));
        r.optimal_eve = km.eve;
        const double ab = s.a * s.b;
        return 0.5 * std::log(ab / (ab - sq(s.kx))) + 0.5 * std::log(km.k_min);
    };

    bool exact = false;
    if (closed) {
        if (glems) {
            r.upper_u = upper_bound_u(s, *dec);
            r.lower_l = glems_lower();
        } else {
            // symmetric squeezed thermal: R = 2, no single-mode K_h path
            r.upper_u = upper_bound_u(s);
            r.lower_l = r.upper_u;
        }
        r.method = Method::ClosedForm;
        exact = true;
    } else if (c == StateClass::Glems6 && r.homodyne_cond_ok && class6_detail(s, *dec).guards_ok) {
        r.upper_u = upper_bound_u(s, *dec);
        r.lower_l = glems_lower();
        r.method = Method::GenericGlemsProcedure;
        exact = true;
    }

    if (exact) {
        if (std::abs(r.upper_u - r.lower_l) > 1e-9)
            throw NumericFailure("gie: U and L disagree for a solved class");
        r.value = r.upper_u;
        r.lo = r.hi = r.value;
        return r;
    }

    // Oracle bracket.
    r.method = Method::OracleBracket;
    const PurificationCM p = purification(s);
    const GridSpec grid = p.rank == 2 ? coarsened_for_rank2(opt.grid) : opt.grid;
    const EveSearch up = eve_upper(p, grid);
    r.hi = up.value;
    if (glems) {
        r.lo = glems_lower();
        r.heuristic = !up.exact_inner;
    } else {
        const PureLocalMeasurement hom{0.0, grid.r_max};
        const EveSearch low = inf_over_eve(p, hom, hom, grid);
        r.lo = low.value;
        if (!up.argmin.empty())
            r.lo = std::min(r.lo, FixedLocalCmi(p, hom, hom)(eve_cm(p.rank, up.argmin)));
        r.heuristic = true;
    }
    if (r.hi < r.lo) {
        r.hi = r.lo;
        r.heuristic = true;
    }
    r.lower_l = r.lo;
    r.upper_u = r.hi;
    r.value = std::max(0.0, 0.5 * (r.lo + r.hi));
    return r;
}

double gie_symmetric_compact(const StdState& s) {
    if (!symmetric(s)) throw InvalidInput("gie_symmetric_compact: requires a = b");
    const double nt = std::sqrt((s.a - s.kx) * (s.a - s.kp));
    const double v = nt < 1.0 ? std::log(0.5 * (nt + 1.0 / nt)) : 0.0;
    const StateClass c = classify(s);
    const bool solved = c == StateClass::Pure || c == StateClass::SymGlems ||
                        (c == StateClass::SymSqTh && g_tilde_variants(s).cond_sym_sqth);
    if (solved && nt < 1.0) {
        const double ref = upper_bound_u(s);
        if (std::abs(ref - v) > 1e-12 * std::max(1.0, std::abs(ref)))
            throw NumericFailure("gie_symmetric_compact: disagrees with the class closed form");
    }
    return v;
}

}  // namespace gie
