#include "gie/catalog.hpp"

#include <cmath>

namespace gie {

std::optional<double> CatalogEntry::get(const std::string& key) const {
    const auto it = expected.find(key);
    if (it == expected.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<CatalogEntry> build() {
    const double r2 = std::sqrt(2.0), r97 = std::sqrt(97.0);
    std::vector<CatalogEntry> c;

    c.push_back({"rho4", StdState::make(2 * r2, r2, r2, 1 / r2), StateClass::Glems4,
                 {{"gie", std::log(2 * std::sqrt(2.0 / 7.0))},
                  {"gr2eof", std::log(2 * std::sqrt(2.0 / 7.0))},
                  {"k_min", 4.0 / 7.0}}});
    c.push_back({"rho5", StdState::make(r2, 2 * r2, r2, 1 / r2), StateClass::Glems5,
                 {{"gie", std::log(2 * std::sqrt(2.0 / 7.0))},
                  {"gr2eof", std::log(2 * std::sqrt(2.0 / 7.0))}}});
    c.push_back({"rho6t", StdState::make(2 * r2, r2, (r97 + 1) / 8, (r97 - 1) / 8),
                 StateClass::Glems6,
                 {{"gie", std::log(1.2)},
                  {"gr2eof", std::log(1.2)},
                  {"g_tilde_min", 2.5 - std::pow(6.0, 0.25)},
                  {"h_min1", 11.0 / 36.0},
                  {"h_min2", (49 - r97) / 128},
                  {"k_min", 9.0 / 800.0 * (79 - r97)},
                  {"k_at_inv_nu", (3169 - 79 * r97) / 3072}}});
    c.push_back({"generic_2a", StdState::make(3, 2, 2, 4.0 / 3.0), StateClass::Generic,
                 {{"q", 2.0 / 3.0}}});
    {
        const double a = std::sqrt(6.0), d = a - 2.0;
        c.push_back({"sqth_sqrt6", StdState::make(a, a, 2, 2), StateClass::SymSqTh,
                     {{"gie", std::log((d * d + 1) / (2 * d))}}});
    }
    {
        const double d = 0.7;
        c.push_back({"sqth_1p2", StdState::make(1.2, 1.2, 0.5, 0.5), StateClass::SymSqTh,
                     {{"gie", std::log((d * d + 1) / (2 * d))}}});
    }
    c.push_back({"tmsv", StdState::make(2, 2, std::sqrt(3.0), std::sqrt(3.0)), StateClass::Pure,
                 {{"gie", std::log(2.0)},
                  {"gr2eof", std::log(2.0)},
                  {"log_neg", -std::log(2 - std::sqrt(3.0))}}});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build();
    return c;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw InvalidInput("catalog: unknown id '" + id + "'");
}

}  // namespace gie
