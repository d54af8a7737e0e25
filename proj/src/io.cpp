#include "bne/cli/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace bne {

using nlohmann::json;

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json values(std::span<const double> xs) { return json(std::vector<double>(xs.begin(), xs.end())); }

}  // namespace

std::string profile_to_json(const Domain& d, const Profile& p) {
    json strategies = json::array();
    json bidders = json::array();
    std::map<const InterpolatedStrategy*, std::size_t> index;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto* key = p.shared(i).get();
        if (!index.count(key)) {
            const auto& s = *p.shared(i);
            json axes = json::array();
            for (std::size_t k = 0; k < s.grid().dims(); ++k) axes.push_back(s.grid().axis(k));
            index[key] = strategies.size();
            strategies.push_back({{"mode", to_string(s.mode())},
                                  {"atoms", s.atoms()},
                                  {"axes", axes},
                                  {"bids", s.raw_bids()}});
        }
        bidders.push_back({{"name", d.bidder(i).name}, {"strategy", index[key]}});
    }
    json j = {{"domain", d.name}, {"bidders", bidders}, {"strategies", strategies}};
    return j.dump(1) + "\n";
}

Profile profile_from_json(const Domain& d, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("strategy file is not valid JSON: ") + e.what());
    }
    std::string where = "document";
    try {
        if (j.at("domain").get<std::string>() != d.name)
            throw ParseError("domain: file is for '" + j.at("domain").get<std::string>() + "', expected '" + d.name + "'");
        const auto& recs = j.at("strategies");
        std::vector<StrategyPtr> built;
        for (std::size_t r = 0; r < recs.size(); ++r) {
            where = "strategies[" + std::to_string(r) + "]";
            const auto& rec = recs[r];
            std::vector<std::vector<double>> axes = rec.at("axes").get<std::vector<std::vector<double>>>();
            built.push_back(std::make_shared<const InterpolatedStrategy>(
                ControlGrid(std::move(axes)), rec.at("atoms").get<std::size_t>(),
                rec.at("bids").get<std::vector<double>>(), interpolation_from_string(rec.at("mode").get<std::string>())));
        }
        const auto& bs = j.at("bidders");
        if (bs.size() != d.size())
            throw ParseError("bidders: expected " + std::to_string(d.size()) + " records, found " + std::to_string(bs.size()));
        std::vector<StrategyPtr> out;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            where = "bidders[" + std::to_string(i) + "]";
            const auto idx = bs[i].at("strategy").get<std::size_t>();
            if (idx >= built.size()) throw std::out_of_range("strategy index " + std::to_string(idx) + " out of range");
            const auto& spec = d.bidder(i);
            if (bs[i].at("name").get<std::string>() != spec.name)
                throw std::invalid_argument("name '" + bs[i].at("name").get<std::string>() + "' does not match '" + spec.name + "'");
            if (built[idx]->atoms() != spec.action_dim() || built[idx]->grid().dims() != spec.value_dim())
                throw std::invalid_argument("strategy shape does not match bidder " + spec.name);
            out.push_back(built[idx]);
        }
        return Profile(std::move(out));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::string report_to_json(const Domain& d, const EpsilonReport& r) {
    auto term = [&](const WorstTerm& w) {
        return json{{"bidder", w.bidder >= 0 ? d.bidder(static_cast<std::size_t>(w.bidder)).name : ""},
                    {"cell_lower", values(w.cell_lower.span())},
                    {"vertex", values(w.vertex.span())},
                    {"loss", w.loss}};
    };
    json j = {{"method", r.method}, {"epsilon", r.epsilon}, {"parameters", r.parameters}};
    if (r.estimate) j["estimate"] = *r.estimate;
    j["worst"] = json::array();
    for (const auto& w : r.worst) j["worst"].push_back(term(w));
    j["worst_estimate"] = json::array();
    for (const auto& w : r.worst_estimate) j["worst_estimate"].push_back(term(w));
    return j.dump(1) + "\n";
}

std::string trace_csv(const std::vector<IterationRecord>& trace) {
    std::ostringstream o;
    o << "iteration,phase,bidder,epsilon,points,seconds\n";
    for (const auto& t : trace)
        o << t.iteration << ',' << t.phase << ',' << t.bidder << ',' << num(t.epsilon) << ',' << t.points << ','
          << num(t.seconds) << '\n';
    return o.str();
}

std::string sweep_csv(const Domain& d, const std::vector<SweepRow>& rows) {
    std::ostringstream o;
    o << "bidder,level,points,bound,estimate\n";
    for (const auto& r : rows)
        o << d.bidder(static_cast<std::size_t>(r.bidder)).name << ',' << r.level << ',' << r.points << ','
          << num(r.bound) << ',' << num(r.estimate) << '\n';
    return o.str();
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
    std::ostringstream o;
    o << "v,strategy,oracle,abs_diff\n";
    for (const auto& r : rows)
        o << num(r.v) << ',' << num(r.strategy) << ',' << num(r.oracle) << ',' << num(std::abs(r.strategy - r.oracle))
          << '\n';
    return o.str();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + p.string() + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + p.string() + "'");
}

}  // namespace bne
