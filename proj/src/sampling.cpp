#include "gie/sampling.hpp"

#include "gie/engine.hpp"

#include <cmath>

namespace gie {

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

namespace {

constexpr double kLo = 1.0, kHi = 5.0;

// kp from nu2 = 1 at fixed (a, b, kx); positive roots no larger than kx
std::optional<double> glems_kp(double a, double b, double kx, Rng& rng) {
    const double m = a * b - kx * kx;
    if (!(m > 1.0)) return std::nullopt;
    const double c0 = a * b * m + 1.0 - a * a - b * b;
    // -m kp^2 + 2 kx kp + c0 = 0
    const double disc = kx * kx + m * c0;
    if (disc < 0.0) return std::nullopt;
    const double r = std::sqrt(disc);
    double roots[2] = {(kx + r) / m, (kx - r) / m};
    double pick[2];
    int n = 0;
    for (double kp : roots)
        if (kp > 0.0 && kp <= kx) pick[n++] = kp;
    if (n == 0) return std::nullopt;
    return pick[n == 2 && rng.uniform() < 0.5 ? 1 : 0];
}

std::optional<StdState> draw(int cls, Rng& rng) {
    const double a = rng.uniform(kLo, kHi);
    switch (cls) {
        case 1: {
            const double kx = rng.uniform(a - 1.0 / a, std::sqrt(a * a - 1.0));
            const double kp = 1.0 / (a - kx) - a;
            return StdState{a, a, kx, kp};
        }
        case 2: {
            const double k = rng.uniform(a - 1.0, std::sqrt(a * a - 1.0));
            return StdState{a, a, k, k};
        }
        case 3: {
            const double b = rng.uniform(kLo, kHi);
            const double k = a > b ? std::sqrt((a + 1) * (b - 1)) : std::sqrt((a - 1) * (b + 1));
            return StdState{a, b, k, k};
        }
        case 4: {
            const double b = rng.uniform(kLo, a);
            const double kx = std::sqrt(a * (b * b - 1) / b);
            return StdState{a, b, kx, b * kx / a};
        }
        case 5: {
            const double b = rng.uniform(a, kHi);
            const double kx = std::sqrt(b * (a * a - 1) / a);
            return StdState{a, b, kx, a * kx / b};
        }
        case 6:
        case 7: {
            const double b = cls == 6 ? rng.uniform(kLo, a) : rng.uniform(a, kHi);
            const double kx = rng.uniform(0.0, std::sqrt(a * b - 1.0));
            const auto kp = glems_kp(a, b, kx, rng);
            if (!kp) return std::nullopt;
            return StdState{a, b, kx, *kp};
        }
    }
    throw InvalidInput("sample: class must be 1..7");
}

}  // namespace

std::optional<StdState> try_sample_class(int cls, Rng& rng) {
    const auto s = draw(cls, rng);
    if (!s || !std::isfinite(s->kx) || !std::isfinite(s->kp)) return std::nullopt;
    if (!(s->kx >= s->kp && s->kp > 0.0)) return std::nullopt;
    if (!is_physical(*s) || !is_entangled(*s)) return std::nullopt;
    const StateClass c = classify(*s);
    if (class_number(c) != cls) return std::nullopt;
    if (cls == 2) {
        if (!g_tilde_variants(*s).cond_sym_sqth) return std::nullopt;
    } else if (!homodyne_condition(*s)) {
        return std::nullopt;
    }
    return s;
}

StdState sample_class(int cls, Rng& rng, int max_tries) {
    for (int i = 0; i < max_tries; ++i)
        if (auto s = try_sample_class(cls, rng)) return *s;
    throw NumericFailure("sample_class: rejection sampling did not converge");
}

StdState sample_physical(Rng& rng) {
    for (;;) {
        const double u = rng.uniform();
        const double a = rng.uniform(kLo, kHi);
        const double b = u < 0.1 ? a : rng.uniform(kLo, kHi);
        const double kmax = std::sqrt(a * b);
        const double kx = rng.uniform(0.0, kmax);
        double kp;
        if (u > 0.8) {
            const auto r = glems_kp(a, b, kx, rng);
            if (!r) continue;
            kp = *r;
        } else {
            kp = rng.uniform(0.0, kx);
        }
        const StdState s{a, b, kx, kp};
        if (kp > 0.0 && is_physical(s)) return s;
    }
}

}  // namespace gie
