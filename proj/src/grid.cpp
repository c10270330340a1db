#include "gie/grid.hpp"

#include "gie/core.hpp"

#include <algorithm>
#include <cmath>

namespace gie {

void GridSpec::validate() const {
    for (int n : {n_theta, n_r, n_phi, n_tau, n_t})
        if (n < 3) throw InvalidInput("grid: every count must be >= 3");
    if (!(r_max > 0.0) || !(tau_max > 1.0)) throw InvalidInput("grid: need r_max > 0, tau_max > 1");
    if (refinement_rounds < 0) throw InvalidInput("grid: refinement_rounds must be >= 0");
}

GridSpec coarsened_for_rank2(GridSpec g) {
    g.n_theta = std::min(g.n_theta, 4);
    g.n_r = std::min(g.n_r, 3);
    g.n_phi = std::min(g.n_phi, 4);
    g.n_tau = std::min(g.n_tau, 3);
    g.n_t = std::min(g.n_t, 3);
    g.refinement_rounds = std::min(g.refinement_rounds, 2);
    return g;
}

namespace {

struct Box {
    double lo, hi;
};

std::vector<double> axis_points(const Axis& ax, const Box& box, bool first) {
    std::vector<double> pts(ax.n);
    if (ax.periodic && first) {
        const double h = (box.hi - box.lo) / ax.n;
        for (int k = 0; k < ax.n; ++k) pts[k] = box.lo + k * h;
        return pts;
    }
    const double h = (box.hi - box.lo) / (ax.n - 1);
    for (int k = 0; k < ax.n; ++k) pts[k] = box.lo + k * h;
    pts.back() = box.hi;
    return pts;
}

double wrap(const Axis& ax, double x) {
    if (!ax.periodic) return x;
    const double p = ax.hi - ax.lo;
    double y = std::fmod(x - ax.lo, p);
    if (y < 0) y += p;
    return ax.lo + y;
}

Box zoom(const Axis& ax, const Box& prev, double centre) {
    const double w = (prev.hi - prev.lo) / 4.0;
    Box b{centre - w / 2, centre + w / 2};
    if (!ax.periodic) {
        if (b.lo < ax.lo) {
            b.hi += ax.lo - b.lo;
            b.lo = ax.lo;
        }
        if (b.hi > ax.hi) {
            b.lo -= b.hi - ax.hi;
            b.hi = ax.hi;
        }
        b.lo = std::max(b.lo, ax.lo);
    }
    return b;
}

}  // namespace

GridOutcome grid_optimize(const std::vector<Axis>& axes, const Objective& f, Sense sense,
                          int rounds, const TieKey& tie) {
    const std::size_t d = axes.size();
    for (const auto& ax : axes) {
        if (ax.n < 2) throw InvalidInput("grid_optimize: each axis needs >= 2 points");
        if (!(ax.hi > ax.lo)) throw InvalidInput("grid_optimize: empty axis");
    }
    GridOutcome out;
    bool have = false;
    double best_key = 0.0;
    const double sgn = sense == Sense::Minimize ? 1.0 : -1.0;

    auto consider = [&](const std::vector<double>& x, double v) {
        ++out.evaluations;
        if (!std::isfinite(v)) return;
        const double key = tie ? tie(x) : 0.0;
        if (!have) {
            out.x = x;
            out.value = v;
            best_key = key;
            have = true;
            return;
        }
        const double eps = 1e-12 * std::max(1.0, std::abs(out.value));
        const double diff = sgn * (v - out.value);
        if (diff < -eps || (std::abs(diff) <= eps && key < best_key - 1e-12)) {
            out.x = x;
            out.value = v;
            best_key = key;
        }
    };

    std::vector<Box> boxes(d);
    for (std::size_t i = 0; i < d; ++i) boxes[i] = {axes[i].lo, axes[i].hi};

    std::vector<double> x(d);
    for (int round = 0; round <= rounds; ++round) {
        if (round > 0)
            for (std::size_t i = 0; i < d; ++i) boxes[i] = zoom(axes[i], boxes[i], out.x[i]);
        std::vector<std::vector<double>> pts(d);
        for (std::size_t i = 0; i < d; ++i) pts[i] = axis_points(axes[i], boxes[i], round == 0);

        std::vector<int> idx(d, 0);
        for (;;) {
            for (std::size_t i = 0; i < d; ++i) x[i] = wrap(axes[i], pts[i][idx[i]]);
            consider(x, f(x));
            std::size_t k = 0;
            while (k < d && ++idx[k] == static_cast<int>(pts[k].size())) idx[k++] = 0;
            if (k == d) break;
        }
        if (!have) throw NumericFailure("grid_optimize: objective never finite");
        out.trace.push_back({round, out.x, out.value});
    }
    return out;
}

}  // namespace gie
