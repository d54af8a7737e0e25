#include "bne/oracles/analytic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bne/oracles/formula.hpp"

namespace bne {

double nearest_bid_corrected(double v, double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::domain_error("nearest_bid_corrected: gamma must lie in [0, 1)");
    const double k = std::sqrt(2.0 / (1.0 - gamma));
    if (!(v >= 0.0 && v < k)) throw std::domain_error("nearest_bid_corrected: v outside [0, sqrt(2/(1-gamma)))");
    return (std::log(k + v) - std::log(k - v)) / std::sqrt(8.0 * (1.0 - gamma));
}

std::vector<ProbeRow> probe(const InterpolatedStrategy& s, const AnalyticStrategy& oracle, std::size_t probes) {
    if (probes < 2) throw std::invalid_argument("need at least two probe points");
    if (s.grid().dims() != 1) throw std::invalid_argument("analytic comparison needs a 1-D strategy");
    std::vector<ProbeRow> rows;
    for (std::size_t k = 0; k < probes; ++k) {
        const double v = static_cast<double>(k) / static_cast<double>(probes - 1);
        rows.push_back({v, s.evaluate(Valuation{v})[0], oracle.bid(v)});
    }
    return rows;
}

double l_infinity_distance(const InterpolatedStrategy& s, const AnalyticStrategy& oracle, std::size_t probes) {
    double d = 0.0;
    for (const auto& r : probe(s, oracle, probes)) d = std::max(d, std::abs(r.strategy - r.oracle));
    return d;
}

std::string OracleRegistry::key(const std::string& rule, double alpha, double gamma) {
    std::ostringstream k;
    k << rule << " alpha=" << alpha << " gamma=" << gamma;
    return k.str();
}

OracleRegistry OracleRegistry::builtin() {
    OracleRegistry r;
    for (double gamma : {0.0, 0.5}) {
        AnalyticStrategy s;
        s.note = "nearest-bid rule, alpha = 2, closed form with the corrected constant";
        s.bid = [gamma](double v) { return nearest_bid_corrected(v, gamma); };
        r.add("nearest_bid", 2.0, gamma, std::move(s));
    }
    return r;
}

void OracleRegistry::add(const std::string& rule, double alpha, double gamma, AnalyticStrategy s) {
    s.key = key(rule, alpha, gamma);
    entries_[s.key] = std::move(s);
}

void OracleRegistry::load_formula_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open formula file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected '<rule> <alpha> <gamma> = <expr>'");
        std::istringstream head(line.substr(0, eq));
        std::string rule;
        double alpha = 0.0, gamma = 0.0;
        if (!(head >> rule >> alpha >> gamma))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": bad header '" + line.substr(0, eq) + "'");
        Formula f(line.substr(eq + 1));
        AnalyticStrategy s;
        s.note = "formula file " + path + ":" + std::to_string(lineno);
        s.bid = [f, alpha, gamma](double v) { return f.evaluate({{"v", v}, {"alpha", alpha}, {"gamma", gamma}}); };
        add(rule, alpha, gamma, std::move(s));
    }
}

bool OracleRegistry::has(const std::string& rule, double alpha, double gamma) const {
    return entries_.count(key(rule, alpha, gamma)) > 0;
}

const AnalyticStrategy& OracleRegistry::get(const std::string& rule, double alpha, double gamma) const {
    auto it = entries_.find(key(rule, alpha, gamma));
    if (it == entries_.end()) throw std::out_of_range("no analytic strategy for " + key(rule, alpha, gamma));
    return it->second;
}

std::vector<std::string> OracleRegistry::keys() const {
    std::vector<std::string> k;
    for (const auto& [name, _] : entries_) k.push_back(name);
    return k;
}

}  // namespace bne
