#pragma once

// Brute-force ground truth: Gaussian conditional mutual information
// evaluated directly, optimised by nested grid searches.

#include "gie/conditioning.hpp"
#include "gie/core.hpp"
#include "gie/grid.hpp"

#include <string>
#include <vector>

namespace gie {

/// Pure single-mode measurement P(theta) diag(e^{-2r}, e^{2r}) P(theta)^T.
struct PureLocalMeasurement {
    double theta = 0.0;
    double r = 0.0;

    Mat2 cm() const;
    Mat2 axes() const;             // eigenvectors, columns
    Eigen::Vector2d diag() const;  // matching eigenvalues
};

/// Measurement CM kept as V diag(d) V^T so nearly singular CMs can be
/// inverted accurately.
struct EveFactor {
    MatX v;
    VecX d;

    MatX cm() const { return v * d.asDiagonal() * v.transpose(); }
};

/// Eve's measurement CM from grid parameters.
///  R = 1: (phi, tau, t).
///  R = 2: (phi1, tau1, t1, phi2, tau2, t2, theta_bs), i.e. two single-mode
///         CMs conjugated by a beam splitter of angle theta_bs.
EveFactor eve_factor(int rank, const std::vector<double>& params);
MatX eve_cm(int rank, const std::vector<double>& params);
int eve_param_count(int rank);

/// 1/2 ln(det sA det sB / det sAB) with s = gamma_AB|E + GA + GB.
double cond_mutual_info(const PurificationCM& p, const PureLocalMeasurement& ga,
                        const PureLocalMeasurement& gb, const MatX& gamma_e_meas);
double cond_mutual_info(const PurificationCM& p, const PureLocalMeasurement& ga,
                        const PureLocalMeasurement& gb, const SingleModeMeasurement& ge);

/// Mutual information of the outcomes of local measurements ga, gb on cm.
double measured_mutual_info(const Mat4& cm, const PureLocalMeasurement& ga,
                            const PureLocalMeasurement& gb);

/// I(A;B|E) for fixed local measurements, split as I(A;B) + 1/2 ln K with
/// all Eve-independent pieces precomputed.
class FixedLocalCmi {
public:
    FixedLocalCmi(const PurificationCM& p, const PureLocalMeasurement& ga,
                  const PureLocalMeasurement& gb);

    double mutual_info_ab() const { return iab_; }
    double operator()(const EveFactor& ge) const;
    double operator()(const MatX& gamma_e_meas) const;

private:
    int rank_;
    double iab_;
    MatX da_, db_, dab_, ge_;  // C^T (gamma + G)^{-1} C per subsystem
};

double cond_mutual_info_decomposed(const PurificationCM& p, const PureLocalMeasurement& ga,
                                   const PureLocalMeasurement& gb, const MatX& gamma_e_meas);

struct EveSearch {
    double value = 0;
    std::vector<double> argmin;  // eve_cm parameters; empty for R = 0
    std::vector<GridTrace> trajectory;
    bool exact_inner = true;     // eve_upper only: every inner sup was closed form
};

EveSearch inf_over_eve(const PurificationCM& p, const PureLocalMeasurement& ga,
                       const PureLocalMeasurement& gb, const GridSpec& grid);

struct SupInf {
    double value = 0;
    PureLocalMeasurement ga, gb;
    EveSearch eve;  // inner search at the outer optimum
    std::vector<GridTrace> trajectory;
};

SupInf sup_inf(const PurificationCM& p, const GridSpec& grid);

/// sup over local pure Gaussian measurements of the mutual information of a
/// two-mode CM: closed form when G >= 0, grid search otherwise.
double gcmi_of(const Mat4& cm, const GridSpec& grid, bool* exact = nullptr);

/// inf over Eve (grid) of gcmi_of(gamma_AB|E): an estimate of U from above.
EveSearch eve_upper(const PurificationCM& p, const GridSpec& grid);

/// Direct grid minimisation of K_h over (phi, tau, t).
double min_k_h_grid(const StdState& s, const SymplecticDecomposition& dec, const GridSpec& grid);

/// "round,p0,p1,...,value" rows; fixed 15 significant digits.
std::string trajectory_csv(const std::vector<GridTrace>& rows);

}  // namespace gie
