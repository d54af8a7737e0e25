#include "bne/cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "bne/cli/io.hpp"
#include "bne/util/hash.hpp"

namespace bne {

SolveResult solve(const RunConfig& c, const std::function<void(const IterationRecord&)>& on_record) {
    const Setting s = make_setting(c);
    SolveResult r;
    r.search = run_search(s, Profile::truthful(s.domain), c.search, on_record);
    r.strategy = piecewise_constant_profile(s, r.search.profile, c.verification.grid_points);
    r.report = verify(s, r.search.profile, c.verification);
    r.exit_code = exit_code_for(r.report, c.search.target_epsilon, r.search.converged);
    return r;
}

int exit_code_for(const EpsilonReport& r, double target, bool converged) {
    if (!converged) return kNotConverged;
    return r.epsilon <= target ? kBelowTarget : kAboveTarget;
}

Profile truthful_candidate(const Setting& s) { return Profile::truthful(s.domain); }

std::filesystem::path make_run_directory(const std::filesystem::path& root, const std::string& manifest) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y%m%d-%H%M%S", &tm);
    char hash[20];
    std::snprintf(hash, sizeof hash, "%08llx",
                  static_cast<unsigned long long>(fnv1a(manifest.data(), manifest.size()) & 0xffffffffull));
    std::filesystem::create_directories(root);
    std::filesystem::path dir = root / (std::string(stamp) + "-" + hash);
    for (int k = 2; std::filesystem::exists(dir); ++k)
        dir = root / (std::string(stamp) + "-" + hash + "-" + std::to_string(k));
    std::filesystem::create_directory(dir);
    return dir;
}

void write_solve_artifacts(const std::filesystem::path& dir, const RunConfig& c, const SolveResult& r) {
    const Setting s = make_setting(c);
    write_file(dir / "manifest", manifest_text(c));
    write_file(dir / "strategy", profile_to_json(s.domain, r.strategy));
    write_file(dir / "candidate", profile_to_json(s.domain, r.search.profile));
    write_file(dir / "epsilon", report_to_json(s.domain, r.report));
    write_file(dir / "trace.csv", trace_csv(r.search.trace));
}

}  // namespace bne
