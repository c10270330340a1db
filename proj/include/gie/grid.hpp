#pragma once

#include <functional>
#include <vector>

namespace gie {

/// Grid densities and caps for the brute-force searches.
struct GridSpec {
    int n_theta = 4;  // local quadrature angle, [0, pi)
    int n_r = 5;      // local squeezing, [0, r_max]
    int n_phi = 4;    // Eve rotation angle(s), [0, pi)
    int n_tau = 5;    // Eve thermal factor, [1, tau_max]
    int n_t = 5;      // Eve squeezing, [0, r_max]
    double r_max = 8.0;
    double tau_max = 20.0;
    int refinement_rounds = 3;

    void validate() const;
};

/// Caps the counts so a seven-axis (two-mode Eve) search stays affordable.
GridSpec coarsened_for_rank2(GridSpec g);

struct Axis {
    double lo = 0;
    double hi = 1;
    int n = 3;
    bool periodic = false;  // [lo, hi) wraps around
};

struct GridTrace {
    int round = 0;
    std::vector<double> x;
    double value = 0;
};

struct GridOutcome {
    std::vector<double> x;
    double value = 0;
    long evaluations = 0;
    std::vector<GridTrace> trace;
};

enum class Sense { Minimize, Maximize };

using Objective = std::function<double(const std::vector<double>&)>;
/// Smaller key wins among (numerically) tied values.
using TieKey = std::function<double(const std::vector<double>&)>;

/// Full tensor grid, then `rounds` passes of a 4x zoom centred on the
/// incumbent (boxes clipped to the axis domain, periodic axes wrapped).
/// Evaluation order is fixed, so results are reproducible.
GridOutcome grid_optimize(const std::vector<Axis>& axes, const Objective& f, Sense sense,
                          int rounds, const TieKey& tie = {});

}  // namespace gie
