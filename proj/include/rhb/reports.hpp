#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhb/json_io.hpp"

namespace rhb {

/// Rectangular (k,m) sweep; m runs over odd values m_min, m_min+2, ..., <= m_max.
struct GridSpec {
    long long k_min;
    long long k_max;
    long long m_min;
    long long m_max;

    GridSpec(long long k_min_, long long k_max_, long long m_min_, long long m_max_);

    std::vector<std::pair<long long, long long>> cells() const;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // failure locus, empty on pass
};

/// Outcome of the full per-cell pipeline: strings, blow-downs, lens
/// coherence, the reduction certificate and the embedding verdict.
struct CellResult {
    long long k = 0;
    long long m = 0;
    std::string string_s;
    LensSpace lens;
    EmbeddingVerdict verdict;
    std::size_t trace_moves = 0;
    std::optional<ReductionTrace> trace;
    std::vector<CheckResult> checks;
    bool ok = false;
};

/// Runs every check for one (k,m); k = -1 takes the degenerate (2,2,2) path
/// with no reduction. m must be odd. Never throws on a failed mathematical
/// check; failures are recorded in `checks`.
CellResult verify_cell(long long k, long long m, bool keep_trace = false);

/// Grid sweep with `jobs` worker threads; results in (k,m)-lexicographic order.
std::vector<CellResult> run_grid(const GridSpec& grid, int jobs);

struct TraceVerification {
    bool replay_matches = false;
    bool start_matches_tau = false;
    bool end_is_normal_form = false;
    bool ok() const { return replay_matches && start_matches_tau && end_is_normal_form; }
};

/// Independent certificate replay: recomputes every move from the recorded
/// start and compares against the recorded end, the claimed tau_{2k,m}
/// start and the CP^2 normal form.
TraceVerification verify_trace(const ReductionTrace& trace);

// Report payloads. All JSON output is deterministic: keys sorted, integers
// beyond structural fields as decimal strings, no timestamps.
json cell_to_json(const CellResult& cell, bool include_trace);
json report_verify(const std::string& command_echo, const CellResult& cell);
json report_table(const std::string& command_echo, const GridSpec& grid,
                  const std::vector<CellResult>& cells);
json report_identities(const std::string& command_echo, long long l_max);
json report_markov(const std::string& command_echo, int depth);
json report_hj(const std::string& command_echo, const PlumbingString& s);

std::string table_to_csv(const std::vector<CellResult>& cells);
std::string cell_to_text(const CellResult& cell);

}  // namespace rhb
