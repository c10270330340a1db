#pragma once

#include "gie/core.hpp"

namespace gie {

/// Smaller symplectic eigenvalue of the partially transposed CM (kp -> -kp).
double ptranspose_nu_minus(const StdState& s);

/// max(0, -ln nu~_-), in nats.
double log_negativity(const StdState& s);

struct Gr2eofDetail {
    double value = 0;     // 1/2 ln g3
    int branch = 0;       // 1, 2 or 3; 0 for the pure-state shortcut
    double alpha3 = 0;
    double delta = 0;
    double zeta = 0;
};

/// Gaussian Renyi-2 entanglement of formation of a GLEMS, using the local
/// symplectic eigenvalues (a, b, nu) of its three-mode purification.
Gr2eofDetail gr2eof_detail(const StdState& s);
double gr2eof_glems(const StdState& s);

/// g3 as a function of the three local eigenvalues; exposed for tests.
Gr2eofDetail gr2eof_from_triple(double a1, double a2, double a3);

}  // namespace gie
