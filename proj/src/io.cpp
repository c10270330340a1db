#include "gie/io.hpp"

#include "gie/expr.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace gie {

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

namespace {

double field(const Json& j, const char* key) {
    if (!j.contains(key)) throw InvalidInput(std::string("state: missing field '") + key + "'");
    const Json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_expr(v.get<std::string>());
    throw InvalidInput(std::string("state: field '") + key + "' must be a number or expression");
}

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace

StdState state_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("state: expected a JSON object");
    return StdState::make(field(j, "a"), field(j, "b"), field(j, "kx"), field(j, "kp"));
}

Json state_to_json(const StdState& s) {
    return {{"a", number(s.a)}, {"b", number(s.b)}, {"kx", number(s.kx)}, {"kp", number(s.kp)}};
}

StdState state_from_params(const std::string& text) {
    double v[4];
    std::stringstream ss(text);
    std::string piece;
    int n = 0;
    while (std::getline(ss, piece, ',')) {
        if (n == 4) throw InvalidInput("params: expected exactly four values a,b,kx,kp");
        v[n++] = parse_expr(piece);
    }
    if (n != 4) throw InvalidInput("params: expected exactly four values a,b,kx,kp");
    return StdState::make(v[0], v[1], v[2], v[3]);
}

SingleModeMeasurement measurement_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("measurement: expected a JSON object");
    const std::string lim = j.value("limit", std::string("finite"));
    const double phi = j.value("phi", 0.0);
    if (lim == "heterodyne") return SingleModeMeasurement::heterodyne();
    if (lim == "homodyne_x") return SingleModeMeasurement::homodyne_x(j.value("phi", M_PI / 2));
    if (lim != "finite") throw InvalidInput("measurement: unknown limit '" + lim + "'");
    return SingleModeMeasurement::finite(phi, j.value("tau", 1.0), j.value("t", 0.0));
}

Json measurement_to_json(const SingleModeMeasurement& m) {
    return {{"phi", number(m.phi)},
            {"tau", number(m.tau)},
            {"t", number(m.t)},
            {"limit", to_string(m.limit)}};
}

Json report_to_json(const StdState& s, const GieReport& r) {
    Json j;
    j["schema"] = 1;
    j["state"] = state_to_json(s);
    j["class"] = to_string(r.state_class);
    j["class_number"] = class_number(r.state_class);
    j["physical"] = true;
    j["entangled"] = !r.separable;
    j["nu1"] = number(r.nu1);
    j["nu2"] = number(r.nu2);
    j["g_tilde_min"] = number(r.g_tilde_min);
    j["homodyne_cond_ok"] = r.homodyne_cond_ok;
    j["upper_u"] = number(r.upper_u);
    j["lower_l"] = number(r.lower_l);
    j["gie"] = {{"value", number(r.value)},
                {"method", to_string(r.method)},
                {"lo", number(r.lo)},
                {"hi", number(r.hi)},
                {"heuristic", r.heuristic}};
    j["optimal_eve"] = r.optimal_eve ? measurement_to_json(*r.optimal_eve) : Json(nullptr);
    j["gr2eof"] = r.gr2eof ? number(*r.gr2eof) : Json(nullptr);
    j["log_negativity"] = number(r.log_negativity);
    return j;
}

ScanRecord scan_record(int index, const StdState& s, const GieReport& r) {
    ScanRecord rec;
    rec.index = index;
    rec.state = s;
    rec.state_class = r.state_class;
    rec.homodyne_cond_ok = r.homodyne_cond_ok;
    rec.method = r.method;
    rec.gie = r.value;
    rec.lo = r.lo;
    rec.hi = r.hi;
    rec.log_neg = r.log_negativity;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rec.gr2eof = r.gr2eof ? *r.gr2eof : nan;
    rec.abs_diff = r.gr2eof ? std::abs(r.value - *r.gr2eof) : nan;
    return rec;
}

std::string scan_csv_header() {
    return "index,a,b,kx,kp,class,homodyne_cond_ok,method,gie,lo,hi,gr2eof,log_neg,abs_diff\n";
}

std::string scan_csv_row(const ScanRecord& r) {
    std::string out = std::to_string(r.index);
    for (double v : {r.state.a, r.state.b, r.state.kx, r.state.kp}) out += "," + fmt(v);
    out += "," + std::to_string(class_number(r.state_class));
    out += r.homodyne_cond_ok ? ",1" : ",0";
    out += std::string(",") + to_string(r.method);
    for (double v : {r.gie, r.lo, r.hi, r.gr2eof, r.log_neg, r.abs_diff}) out += "," + fmt(v);
    out += "\n";
    return out;
}

}  // namespace gie
