#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bne/strategies/strategy.hpp"

namespace bne {

// Closed-form local bid function on [0, 1] for one LLG setting.
struct AnalyticStrategy {
    std::string key;   // e.g. "nearest_bid alpha=2 gamma=0"
    std::string note;  // where the formula comes from
    std::function<double(double)> bid;
};

// Equilibrium local bid under the nearest-bid rule with alpha = 2:
// (1 / sqrt(8 (1 - gamma))) * (log(k + v) - log(k - v)), k = sqrt(2 / (1 - gamma)).
double nearest_bid_corrected(double v, double gamma);

// max over `probes` evenly spaced points of [0, 1] of |s(v) - oracle(v)|.
double l_infinity_distance(const InterpolatedStrategy& s, const AnalyticStrategy& oracle, std::size_t probes);

struct ProbeRow {
    double v;
    double strategy;
    double oracle;
};
std::vector<ProbeRow> probe(const InterpolatedStrategy& s, const AnalyticStrategy& oracle, std::size_t probes);

// Registry of analytic strategies keyed by (rule, alpha, gamma).
class OracleRegistry {
public:
    // Holds the built-in nearest-bid alpha = 2 entries only.
    static OracleRegistry builtin();

    // Adds formulas from a file of lines "<rule> <alpha> <gamma> = <expression in v>".
    void load_formula_file(const std::string& path);
    void add(const std::string& rule, double alpha, double gamma, AnalyticStrategy s);

    bool has(const std::string& rule, double alpha, double gamma) const;
    const AnalyticStrategy& get(const std::string& rule, double alpha, double gamma) const;
    std::vector<std::string> keys() const;

private:
    static std::string key(const std::string& rule, double alpha, double gamma);
    std::map<std::string, AnalyticStrategy> entries_;
};

}  // namespace bne
