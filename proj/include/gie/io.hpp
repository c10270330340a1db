#pragma once

#include "gie/conditioning.hpp"
#include "gie/core.hpp"
#include "gie/engine.hpp"

#include <json.hpp>

#include <string>

namespace gie {

using Json = nlohmann::json;

/// Rounds to 15 significant digits so dumps are stable; NaN/inf -> null.
Json number(double x);

/// {"a","b","kx","kp"}; each value a number or an expression string.
StdState state_from_json(const Json& j);
Json state_to_json(const StdState& s);
/// "a,b,kx,kp", each piece an expression.
StdState state_from_params(const std::string& text);

SingleModeMeasurement measurement_from_json(const Json& j);
Json measurement_to_json(const SingleModeMeasurement& m);

/// Full analyze report, "schema": 1.
Json report_to_json(const StdState& s, const GieReport& r);

struct ScanRecord {
    int index = 0;
    StdState state;
    StateClass state_class = StateClass::Generic;
    bool homodyne_cond_ok = false;
    Method method = Method::ClosedForm;
    double gie = 0;
    double lo = 0;
    double hi = 0;
    double gr2eof = 0;  // NaN when not defined
    double log_neg = 0;
    double abs_diff = 0;  // |gie - gr2eof|, NaN when gr2eof is
};

ScanRecord scan_record(int index, const StdState& s, const GieReport& r);
std::string scan_csv_header();
std::string scan_csv_row(const ScanRecord& r);

}  // namespace gie
