#pragma once

// Two-mode Gaussian states in standard form and the symplectic algebra
// around them. Convention: vacuum CM is the identity (hbar = 2), so a
// state is pure iff all symplectic eigenvalues equal 1.

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace gie {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double physical = 1e-12;   // relative slack for the uncertainty test
inline constexpr double glems = 1e-9;       // |nu2 - 1| <= glems * nu2
inline constexpr double case_disc = 1e-9;   // |b kx - a kp| <= case_disc * max(a,b) * kx
inline constexpr double symmetric = 1e-12;  // |a - b| <= symmetric * max(a,b)
inline constexpr double rank = 1e-9;        // nu > 1 + rank counts towards R
}  // namespace tol

/// Standard-form parameters (a, b, kx, kp) of
///   [[a,0,kx,0],[0,a,0,-kp],[kx,0,b,0],[0,-kp,0,b]].
struct StdState {
    double a = 1.0;
    double b = 1.0;
    double kx = 0.0;
    double kp = 0.0;

    /// Validates ranges (a,b >= 1, kx >= kp >= 0, finite). Physicality is
    /// a separate question, see is_physical().
    static StdState make(double a, double b, double kx, double kp);

    /// kx >= kp > 0. States with kp = 0 are accepted but flagged here.
    bool standard() const { return kx >= kp && kp > 0.0; }
    Mat4 cm() const;
};

/// Direct sum of n copies of J = [[0,1],[-1,0]].
MatX omega(int n_modes);

bool is_physical(const StdState& s);
/// Throws InvalidInput if s is not physical.
bool is_entangled(const StdState& s);

struct SymplecticInvariants {
    double delta = 0;
    double d = 0;
    double m = 0;
    double m_tilde = 0;
    double l1 = 0;
    double l2 = 0;
};

SymplecticInvariants invariants_of(const StdState& s);

/// (nu1, nu2) with nu1 >= nu2. Throws InvalidInput if s is not physical.
std::pair<double, double> symplectic_eigenvalues(const StdState& s);

/// Moduli of the eigenvalues of i*Omega*cm, ascending, one per mode.
VecX symplectic_spectrum(const MatX& cm);

enum class StateClass {
    Pure,
    SymGlems,
    SymSqTh,
    AsymSqThGlems,
    Glems4,
    Glems5,
    Glems6,
    Glems7,
    Generic
};

const char* to_string(StateClass c);
/// Short numeric label used by the scanner: 1..7, 0 for pure, -1 generic.
int class_number(StateClass c);

StateClass classify(const StdState& s, double glems_tol = tol::glems);
bool is_glems(const StdState& s, double glems_tol = tol::glems);

enum class WilliamsonCase { Sym, Case2a, Case2b, Case3a, Case3b };

const char* to_string(WilliamsonCase c);

struct SymplecticDecomposition {
    Mat4 S = Mat4::Identity();
    double nu1 = 1.0;
    double nu2 = 1.0;
    WilliamsonCase tag = WilliamsonCase::Sym;

    // entries of S in the generic GLEMS layout
    double x(int i) const;
};

/// S with S*gamma*S^T = diag(nu1,nu1,nu2,nu2). Requires kx >= kp > 0.
SymplecticDecomposition williamson(const StdState& s);

/// S, [1 + (-1)]S, [(-1) + 1]S, [(-1) + (-1)]S.
std::array<Mat4, 4> sign_variants(const Mat4& S);

/// Omega S^T Omega^T, valid for any symplectic S.
Mat4 symplectic_inverse(const Mat4& S);

double symplectic_residual(const Mat4& S);
double diagonal_residual(const Mat4& S, const Mat4& gamma, double nu1, double nu2);

struct PurificationCM {
    int rank = 0;
    Mat4 gamma_ab = Mat4::Identity();
    MatX gamma_abe;  // 4 x 2R
    MatX gamma_e;    // 2R x 2R

    MatX assembled() const;
};

PurificationCM purification(const StdState& s, const SymplecticDecomposition& dec);
PurificationCM purification(const StdState& s);

}  // namespace gie
