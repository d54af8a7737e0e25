#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "bne/oracles/analytic.hpp"
#include "bne/search/search.hpp"
#include "bne/verification/verification.hpp"

namespace bne {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Profile as JSON. Symmetric bidders reference one shared strategy record; doubles
// round-trip exactly.
std::string profile_to_json(const Domain& d, const Profile& p);
// Throws ParseError naming the offending record.
Profile profile_from_json(const Domain& d, const std::string& text);

std::string report_to_json(const Domain& d, const EpsilonReport& r);

std::string trace_csv(const std::vector<IterationRecord>& trace);
std::string sweep_csv(const Domain& d, const std::vector<SweepRow>& rows);
std::string probe_csv(const std::vector<ProbeRow>& rows);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

}  // namespace bne
