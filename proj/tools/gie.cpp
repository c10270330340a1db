// gie: command line front end (analyze, scan, williamson, oracle).

#include "gie/catalog.hpp"
#include "gie/engine.hpp"
#include "gie/io.hpp"
#include "gie/measures.hpp"
#include "gie/oracle.hpp"
#include "gie/sampling.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gie;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

void setup_logging() {
    auto log = spdlog::stderr_color_mt("gie");
    spdlog::set_default_logger(log);
    spdlog::set_pattern("[%l] %v");
    const char* env = std::getenv("GIE_LOG");
    const std::string lvl = env ? env : "error";
    if (lvl == "debug")
        spdlog::set_level(spdlog::level::debug);
    else if (lvl == "info")
        spdlog::set_level(spdlog::level::info);
    else
        spdlog::set_level(spdlog::level::err);
}

struct StateArgs {
    std::string file;
    std::string params;
};

void add_state_args(CLI::App* cmd, StateArgs& a, bool allow_file) {
    auto* p = cmd->add_option("--params", a.params, "a,b,kx,kp (expressions allowed, e.g. sqrt(2))");
    if (allow_file) {
        auto* f = cmd->add_option("--state", a.file, "state JSON file")->check(CLI::ExistingFile);
        p->excludes(f);
    }
}

StdState load_state(const StateArgs& a) {
    if (!a.file.empty()) {
        std::ifstream in(a.file);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw InvalidInput(std::string("state file: ") + e.what());
        }
        return state_from_json(j.contains("state") ? j.at("state") : j);
    }
    if (a.params.empty()) throw InvalidInput("give --params or --state");
    return state_from_params(a.params);
}

void require_physical(const StdState& s) {
    if (!is_physical(s)) throw InvalidInput("state violates the uncertainty relation");
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

GridSpec parse_grid(const std::string& text, GridSpec g) {
    std::stringstream ss(text);
    std::string piece;
    int v[5], n = 0;
    while (std::getline(ss, piece, ',')) {
        if (n == 5) throw InvalidInput("--grid: expected nt,nr,nphi,ntau,ntt");
        try {
            v[n++] = std::stoi(piece);
        } catch (const std::exception&) {
            throw InvalidInput("--grid: not an integer: " + piece);
        }
    }
    if (n != 5) throw InvalidInput("--grid: expected nt,nr,nphi,ntau,ntt");
    g.n_theta = v[0];
    g.n_r = v[1];
    g.n_phi = v[2];
    g.n_tau = v[3];
    g.n_t = v[4];
    return g;
}

// ---- analyze

int run_analyze(const StateArgs& sa, bool json) {
    const StdState s = load_state(sa);
    require_physical(s);
    spdlog::info("analyze a={} b={} kx={} kp={}", s.a, s.b, s.kx, s.kp);
    const GieReport r = gie::gie(s);
    if (json) {
        std::cout << report_to_json(s, r).dump(2) << "\n";
        return 0;
    }
    std::cout << "state        a=" << num(s.a) << " b=" << num(s.b) << " kx=" << num(s.kx)
              << " kp=" << num(s.kp) << "\n"
              << "class        " << to_string(r.state_class) << "\n"
              << "physical     yes\n"
              << "entangled    " << (r.separable ? "no" : "yes") << "\n"
              << "nu1, nu2     " << num(r.nu1) << ", " << num(r.nu2) << "\n"
              << "G~min        " << num(r.g_tilde_min)
              << (r.homodyne_cond_ok ? "  (homodyne optimal)" : "") << "\n"
              << "U, L         " << num(r.upper_u) << ", " << num(r.lower_l) << "\n"
              << "GIE          " << num(r.value) << "  [" << to_string(r.method) << "]";
    if (r.method == Method::OracleBracket)
        std::cout << "  bracket [" << num(r.lo) << ", " << num(r.hi) << "]"
                  << (r.heuristic ? " heuristic" : "");
    std::cout << "\n";
    if (r.optimal_eve)
        std::cout << "Eve optimum  " << to_string(r.optimal_eve->limit) << " phi=" << num(r.optimal_eve->phi)
                  << " tau=" << num(r.optimal_eve->tau) << " t=" << num(r.optimal_eve->t) << "\n";
    std::cout << "GR2EoF       " << (r.gr2eof ? num(*r.gr2eof) : "n/a (not a GLEMS)") << "\n"
              << "E_N          " << num(r.log_negativity) << "\n";
    return 0;
}

// ---- scan

int run_scan(int n, std::uint64_t seed, int cls, const std::string& out) {
    if (n < 1) throw InvalidInput("--n must be >= 1");
    if (cls < 1 || cls > 7) throw InvalidInput("--class must be in 1..7");
    Rng rng(seed);
    std::string csv = scan_csv_header();
    double max_diff = 0.0;
    int compared = 0;
    for (int i = 0; i < n; ++i) {
        const StdState s = sample_class(cls, rng);
        GieReport r;
        try {
            r = gie::gie(s);
        } catch (const NumericFailure& e) {
            spdlog::error("row {}: {}", i, e.what());
            throw;
        }
        const ScanRecord rec = scan_record(i, s, r);
        if (std::isfinite(rec.abs_diff)) {
            max_diff = std::max(max_diff, rec.abs_diff);
            ++compared;
        }
        csv += scan_csv_row(rec);
        spdlog::debug("row {} gie={} method={}", i, r.value, to_string(r.method));
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out);
    f << csv;
    if (!f) throw std::runtime_error("write failed: " + out);
    std::cout << "rows=" << n << " class=" << cls << " seed=" << seed;
    if (compared > 0)
        std::cout << " max|gie-gr2eof|=" << num(max_diff);
    else
        std::cout << " max|gie-gr2eof|=n/a";
    std::cout << "\n";
    return 0;
}

// ---- williamson

void print_matrix(const Mat4& m) {
    for (int i = 0; i < 4; ++i) {
        std::cout << "  ";
        for (int j = 0; j < 4; ++j) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "% .12f ", m(i, j));
            std::cout << buf;
        }
        std::cout << "\n";
    }
}

int run_williamson(const StateArgs& sa) {
    const StdState s = load_state(sa);
    require_physical(s);
    const SymplecticDecomposition d = williamson(s);
    std::cout << "case         " << to_string(d.tag) << "\n"
              << "nu1, nu2     " << num(d.nu1) << ", " << num(d.nu2) << "\n"
              << "S =\n";
    print_matrix(d.S);
    std::cout << "|S Om S^T - Om|_max        " << num(symplectic_residual(d.S)) << "\n"
              << "|S g S^T - diag(nu)|_max   " << num(diagonal_residual(d.S, s.cm(), d.nu1, d.nu2))
              << "\n";
    switch (d.tag) {
        case WilliamsonCase::Sym: {
            const double am = 0.5 * (s.a + s.b);
            std::cout << "z_A, z_B     " << num(std::pow((am + s.kx) / (am - s.kp), 0.25)) << ", "
                      << num(std::pow((am + s.kp) / (am - s.kx), 0.25)) << "\n";
            break;
        }
        case WilliamsonCase::Case2a: std::cout << "q            " << num(s.kx / s.a) << "\n"; break;
        case WilliamsonCase::Case3a: std::cout << "q            " << num(s.kx / s.b) << "\n"; break;
        default: break;
    }
    return 0;
}

// ---- oracle

int run_oracle(const StateArgs& sa, const std::string& grid_text, double rmax, int rounds,
               const std::string& traj, bool json) {
    const StdState s = load_state(sa);
    require_physical(s);
    const PurificationCM p = purification(s);
    GridSpec g = p.rank == 2 ? coarsened_for_rank2(GridSpec{}) : GridSpec{};
    if (!grid_text.empty()) g = parse_grid(grid_text, g);
    if (rounds >= 0) g.refinement_rounds = rounds;
    g.r_max = rmax;
    g.validate();
    if (!(rmax > 2.0)) throw InvalidInput("--rmax must exceed 2 (convergence uses rmax-2)");
    spdlog::info("oracle rank={} grid={},{},{},{},{} rounds={} rmax={}", p.rank, g.n_theta, g.n_r,
                 g.n_phi, g.n_tau, g.n_t, g.refinement_rounds, g.r_max);

    const SupInf hi = sup_inf(p, g);
    GridSpec g2 = g;
    g2.r_max = rmax - 2.0;
    const SupInf lo = sup_inf(p, g2);
    const PureLocalMeasurement hom{0.0, rmax};
    const EveSearch hx = inf_over_eve(p, hom, hom, g);

    if (!traj.empty()) {
        std::ofstream f(traj, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + traj);
        f << "# outer sup over (theta_A, r_A, theta_B, r_B)\n" << trajectory_csv(hi.trajectory);
        f << "# inner inf over Eve at the outer optimum\n" << trajectory_csv(hi.eve.trajectory);
    }
    const double delta = std::abs(hi.value - lo.value);
    if (json) {
        Json j;
        j["schema"] = 1;
        j["state"] = state_to_json(s);
        j["rank"] = p.rank;
        j["sup_inf"] = number(hi.value);
        j["sup_inf_rmax_minus_2"] = number(lo.value);
        j["convergence_delta"] = number(delta);
        j["argmax"] = {{"theta_a", number(hi.ga.theta)}, {"r_a", number(hi.ga.r)},
                       {"theta_b", number(hi.gb.theta)}, {"r_b", number(hi.gb.r)}};
        Json am = Json::array();
        for (double x : hi.eve.argmin) am.push_back(number(x));
        j["eve_argmin"] = am;
        j["inf_homodyne_x"] = number(hx.value);
        Json hm = Json::array();
        for (double x : hx.argmin) hm.push_back(number(x));
        j["inf_homodyne_x_argmin"] = hm;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "rank              " << p.rank << "\n"
              << "sup_inf           " << num(hi.value) << "  (rmax " << num(rmax) << ")\n"
              << "sup_inf           " << num(lo.value) << "  (rmax " << num(rmax - 2) << ")\n"
              << "convergence       " << num(delta) << "\n"
              << "argmax            theta_A=" << num(hi.ga.theta) << " r_A=" << num(hi.ga.r)
              << " theta_B=" << num(hi.gb.theta) << " r_B=" << num(hi.gb.r) << "\n"
              << "Eve argmin       ";
    for (double x : hi.eve.argmin) std::cout << " " << num(x);
    std::cout << "\ninf at x-homodyne " << num(hx.value) << "\nEve argmin (x)   ";
    for (double x : hx.argmin) std::cout << " " << num(x);
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Gaussian intrinsic entanglement of two-mode Gaussian states"};
    app.require_subcommand(1);

    StateArgs an_state;
    bool an_json = false;
    auto* an = app.add_subcommand("analyze", "classify a state and compute GIE and companions");
    add_state_args(an, an_state, true);
    an->add_flag("--json", an_json, "emit the JSON report");

    int sc_n = 100, sc_class = 4;
    std::uint64_t sc_seed = 42;
    std::string sc_out = "scan.csv";
    auto* sc = app.add_subcommand("scan", "seeded batch comparison of GIE and GR2EoF");
    sc->add_option("--n", sc_n, "number of states")->required();
    sc->add_option("--seed", sc_seed, "RNG seed");
    sc->add_option("--class", sc_class, "state class 1..7")->required();
    sc->add_option("--out", sc_out, "CSV output path");

    StateArgs wi_state;
    auto* wi = app.add_subcommand("williamson", "symplectic diagonalisation and residuals");
    add_state_args(wi, wi_state, true);

    StateArgs or_state;
    std::string or_grid, or_traj;
    double or_rmax = 8.0;
    int or_rounds = -1;
    bool or_json = false;
    auto* orc = app.add_subcommand("oracle", "brute-force sup-inf of the conditional mutual information");
    add_state_args(orc, or_state, true);
    orc->add_option("--grid", or_grid, "nt,nr,nphi,ntau,ntt");
    orc->add_option("--rmax", or_rmax, "squeezing cap for local and Eve measurements");
    orc->add_option("--rounds", or_rounds, "refinement rounds");
    orc->add_option("--trajectory", or_traj, "write incumbent trajectories as CSV");
    orc->add_flag("--json", or_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        if (an->parsed()) return run_analyze(an_state, an_json);
        if (sc->parsed()) return run_scan(sc_n, sc_seed, sc_class, sc_out);
        if (wi->parsed()) return run_williamson(wi_state);
        if (orc->parsed()) return run_oracle(or_state, or_grid, or_rmax, or_rounds, or_traj, or_json);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
