#pragma once

#include "gie/core.hpp"

#include <string>

namespace gie {

enum class Limit { Finite, HomodyneX, Heterodyne };

const char* to_string(Limit l);

/// Single-mode Gaussian measurement with CM
///   P(phi) diag(tau e^{2t}, tau e^{-2t}) P(phi)^T.
/// HomodyneX is the t -> inf limit at the stored phi (phi = pi/2 measures x).
struct SingleModeMeasurement {
    double phi = 0.0;
    double tau = 1.0;
    double t = 0.0;
    Limit limit = Limit::Finite;

    static SingleModeMeasurement finite(double phi, double tau, double t);
    static SingleModeMeasurement heterodyne();
    static SingleModeMeasurement homodyne_x(double phi = 1.5707963267948966);
};

Mat2 rotation(double phi);

/// Finite measurements only (Heterodyne is the identity). HomodyneX throws.
Mat2 measurement_cm(const SingleModeMeasurement& m);

/// (gamma + V diag(d) V^T)^{-1} for orthogonal V. Stays accurate when d
/// spans many orders of magnitude (nearly ideal homodyne), where a plain
/// Cholesky of the assembled sum does not.
MatX inverse_sum(const MatX& gamma, const MatX& v, const VecX& d);

/// gamma_AB - gamma_ABE (gamma_E + Gamma_E)^{-1} gamma_ABE^T.
Mat4 conditional_cm(const PurificationCM& p, const MatX& gamma_e_meas);

/// Single-mode Eve (R <= 1); HomodyneX uses the rank-one projector limit.
Mat4 conditional_cm(const PurificationCM& p, const SingleModeMeasurement& m);

struct GlemsConditional {
    double a2 = 0;    // a~^2
    double b2 = 0;    // b~^2
    double cxcp = 0;  // c~x c~p
    Mat4 cm = Mat4::Identity();
};

GlemsConditional glems_conditional(const StdState& s, const SymplecticDecomposition& dec,
                                   const SingleModeMeasurement& m);

struct CondStdParams {
    double a_t = 1;
    double b_t = 1;
    double cx_t = 0;
    double cp_t = 0;
};

/// Standard-form parameters of an arbitrary two-mode CM via local
/// symplectic invariants.
CondStdParams std_params_of(const Mat4& cm);

}  // namespace gie
