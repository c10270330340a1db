#pragma once

#include "gie/conditioning.hpp"
#include "gie/core.hpp"
#include "gie/grid.hpp"

#include <optional>
#include <string>

namespace gie {

/// sqrt(a/b) + sqrt(b/a) + 1/sqrt(ab) - sqrt(ab - cx^2).
double g_quantity(double a, double b, double cx);

/// 1/2 ln(ab / (ab - cx^2)): mutual information of double x-homodyning.
double gcmi_homodyne(const CondStdParams& p);

/// 2 + 1/sqrt(ab) - sqrt(nu1 nu2).
double g_tilde_min(const StdState& s);
/// g_tilde_min(s) >= 0: double homodyne is optimal for every Eve measurement.
bool homodyne_condition(const StdState& s);

struct GTildeVariants {
    double g_min_sym = 0;        // 2 + 1/a - nu1
    double g_opt_sym_glems = 0;  // 2 + 1/a - sqrt(a^2 - kx^2)
    bool cond_sym_sqth = false;  // nu <= 2 + 1/a
};

/// Requires a = b.
GTildeVariants g_tilde_variants(const StdState& s);

struct AlphaTriple {
    double alpha_a = 0;
    double alpha_b = 0;
    double alpha_ab = 0;
};

AlphaTriple alphas(const StdState& s, const SymplecticDecomposition& dec);

/// (1 - aA Q)(1 - aB Q) / (1 - aAB Q).
double k_h(double q, const AlphaTriple& al);

/// Q = <0|(Gamma_E + nu)^{-1}|0> for a single-mode Eve measurement.
double q_of(const SingleModeMeasurement& m, double nu);

/// Measurement with phi = pi/2, tau = 1 (or t = 0 below 1/(1+nu)) realising q.
SingleModeMeasurement measurement_for_q(double q, double nu);

struct KhMinimum {
    double k_min = 1;
    double q_star = 0;
    // empty when the infimum is the no-measurement value K(0) = 1
    std::optional<SingleModeMeasurement> eve;
};

KhMinimum minimize_k_h(const StdState& s, const SymplecticDecomposition& dec,
                       const AlphaTriple& al);

/// 1/2 ln(ab/(ab-kx^2)) + 1/2 ln K_min. GLEMS only.
double lower_bound_l(const StdState& s);
double lower_bound_l(const StdState& s, const SymplecticDecomposition& dec);

struct Class6Detail {
    double z1 = 0;
    double guard_x = 0;  // x5 x7 nu^2 + x1 x3
    double h_min1 = 0;
    double h_min2 = 0;
    bool guards_ok = false;
};

/// z1, the guard expression and both h_min candidates for a > b GLEMS.
Class6Detail class6_detail(const StdState& s, const SymplecticDecomposition& dec);

/// Closed upper bound; throws InvalidInput("no closed U; use oracle") when
/// none is available for the state.
double upper_bound_u(const StdState& s, const SymplecticDecomposition& dec);
double upper_bound_u(const StdState& s);

enum class Method { ClosedForm, GenericGlemsProcedure, OracleBracket };

const char* to_string(Method m);

struct GieReport {
    double value = 0;
    Method method = Method::ClosedForm;
    StateClass state_class = StateClass::Generic;
    bool separable = false;
    double lo = 0;  // bracket; equals value for exact methods
    double hi = 0;
    bool heuristic = false;  // bracket relies on restricted or truncated searches
    double upper_u = 0;
    double lower_l = 0;
    std::optional<SingleModeMeasurement> optimal_eve;
    bool homodyne_cond_ok = false;
    double g_tilde_min = 0;
    double nu1 = 1;
    double nu2 = 1;
    std::optional<double> gr2eof;
    double log_negativity = 0;
};

struct GieOptions {
    GridSpec grid{};  // used only when an oracle bracket is needed
};

GieReport gie(const StdState& s, const GieOptions& opt = {});

/// ln[(nu~ + 1/nu~)/2] with nu~ = sqrt((a-kx)(a-kp)) < 1, else 0. a = b only.
double gie_symmetric_compact(const StdState& s);

}  // namespace gie
