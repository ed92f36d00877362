#include "rhb/reports.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rhb/fraction.hpp"
#include "rhb/polyseq.hpp"
#include "rhb/version.hpp"

namespace rhb {

GridSpec::GridSpec(long long k_min_, long long k_max_, long long m_min_, long long m_max_)
    : k_min(k_min_), k_max(k_max_), m_min(m_min_), m_max(m_max_) {
    if (k_min < -1) throw std::invalid_argument("grid: k_min must be >= -1");
    if (m_min < 1 || m_min % 2 == 0) throw std::invalid_argument("grid: m_min must be odd and >= 1");
}

std::vector<std::pair<long long, long long>> GridSpec::cells() const {
    std::vector<std::pair<long long, long long>> out;
    for (long long k = k_min; k <= k_max; ++k)
        for (long long m = m_min; m <= m_max; m += 2) out.emplace_back(k, m);
    return out;
}

namespace {

void run_check(std::vector<CheckResult>& checks, const std::string& name,
               const std::function<bool()>& body) {
    try {
        bool pass = body();
        checks.push_back({name, pass, pass ? "" : "check returned false"});
    } catch (const std::exception& e) {
        checks.push_back({name, false, e.what()});
    }
}

bool first_column_is_zero_one(const PlumbingString& s) {
    Mat2 m = string_product(s);
    return m.a == 0 && (m.c == 1 || m.c == -1);
}

}  // namespace

CellResult verify_cell(long long k, long long m, bool keep_trace) {
    if (k < -1) throw std::invalid_argument("verify_cell: k must be >= -1");
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("verify_cell: m must be odd and >= 1");

    CellResult cell;
    cell.k = k;
    cell.m = m;

    PlumbingString s = make_s(k, m);
    cell.string_s = format_plumbing_string(s);
    cell.lens = lens_from_string(s);
    auto& checks = cell.checks;

    run_check(checks, "verdict_computation", [&] {
        cell.verdict = symplectic_verdict(k, m);  // internal routes cross-checked
        return true;
    });

    run_check(checks, "hj_matrix_cross_check", [&] {
        Fraction f = hj_evaluate(s);
        Mat2 prod = string_product(s);
        return f.num == prod.a && f.den == prod.c;
    });

    run_check(checks, "s_has_no_blow_down", [&] {
        return !blows_down_to_zero(s).reaches_zero;
    });

    run_check(checks, "s_prime_blows_down_to_zero", [&] {
        return blows_down_to_zero(make_s_prime(k, m)).reaches_zero;
    });

    run_check(checks, "s_prime_product_first_column", [&] {
        return first_column_is_zero_one(make_s_prime(k, m));
    });

    run_check(checks, "lens_is_p2_pq_minus_1", [&] {
        auto pq = lens_of_form_p2_pq_minus_1(cell.lens);
        return pq.has_value() && pq->first == cell.verdict.p && pq->second == cell.verdict.q;
    });

    if (k == -1) {
        run_check(checks, "verdict_symplectic_yes", [&] {
            return cell.verdict.symplectic == SymplecticStatus::yes && cell.verdict.p == 2 &&
                   cell.verdict.q == 1;
        });
    } else {
        run_check(checks, "s_doubleprime_blows_down_to_zero", [&] {
            return blows_down_to_zero(make_s_doubleprime(k, m)).reaches_zero;
        });

        run_check(checks, "s_doubleprime_product_first_column", [&] {
            return first_column_is_zero_one(make_s_doubleprime(k, m));
        });

        run_check(checks, "boundary_cross_checks", [&] {
            auto [p, q] = boundary_pq(k, m);  // throws on internal mismatch
            return p == cell.verdict.p && q == cell.verdict.q;
        });

        run_check(checks, "lens_coherence", [&] {
            auto [p, q] = boundary_pq(k, m);
            return lens_equivalent(cell.lens, lens_space(p * p, p * q - 1));
        });

        run_check(checks, "q2_plus_9_identity", [&] { return q2_plus_9_identity_check(k, m); });

        run_check(checks, "starting_triple_coherence", [&] {
            starting_triple(k, m);  // throws on mismatch with tau(2k,m)
            return true;
        });

        run_check(checks, "reduction_certificate", [&] {
            ReductionTrace trace = reduce_to_cp2(k, m);
            cell.trace_moves = trace.moves.size();
            bool end_ok = trace.end == cp2_normal_form();
            bool count_ok =
                trace.moves.size() == static_cast<std::size_t>((2 * k + 1) + (m - 1) + 3);
            bool replay_ok = replay(trace) == trace.end;
            if (keep_trace) cell.trace = std::move(trace);
            return end_ok && count_ok && replay_ok;
        });

        run_check(checks, "verdict_symplectic_obstructed", [&] {
            return cell.verdict.symplectic == SymplecticStatus::obstructed &&
                   !cell.verdict.divides;
        });
    }

    cell.ok = true;
    for (const CheckResult& c : checks) cell.ok = cell.ok && c.pass;
    return cell;
}

std::vector<CellResult> run_grid(const GridSpec& grid, int jobs) {
    auto cells = grid.cells();
    std::vector<CellResult> results(cells.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                results[i] = verify_cell(cells[i].first, cells[i].second, false);
            } catch (const std::exception& e) {
                // mark the row failed and keep sweeping
                CellResult failed;
                failed.k = cells[i].first;
                failed.m = cells[i].second;
                failed.checks.push_back({"cell_pipeline", false, e.what()});
                failed.ok = false;
                results[i] = std::move(failed);
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

TraceVerification verify_trace(const ReductionTrace& trace) {
    TraceVerification v;
    v.replay_matches = replay(trace) == trace.end;
    v.start_matches_tau = trace.start == tau(2 * trace.k, trace.m);
    v.end_is_normal_form = is_cp2_normal_form(trace.end);
    return v;
}

json cell_to_json(const CellResult& cell, bool include_trace) {
    json checks = json::array();
    for (const CheckResult& c : cell.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    json j{{"k", cell.k},
           {"m", cell.m},
           {"string", cell.string_s},
           {"lens", lens_to_json(cell.lens)},
           {"verdict", verdict_to_json(cell.verdict)},
           {"trace_moves", cell.trace_moves},
           {"checks", checks},
           {"status", cell.ok ? "ok" : "fail"}};
    if (include_trace && cell.trace) j["trace"] = trace_to_json(*cell.trace);
    return j;
}

namespace {

json report_header(const std::string& command_echo) {
    return json{{"command", command_echo}, {"version", kVersion}};
}

}  // namespace

json report_verify(const std::string& command_echo, const CellResult& cell) {
    json j = report_header(command_echo);
    j.update(cell_to_json(cell, true));
    return j;
}

json report_table(const std::string& command_echo, const GridSpec& grid,
                  const std::vector<CellResult>& cells) {
    json j = report_header(command_echo);
    j["grid"] = {{"k_min", grid.k_min}, {"k_max", grid.k_max},
                 {"m_min", grid.m_min}, {"m_max", grid.m_max}};
    json rows = json::array();
    bool all_ok = true;
    for (const CellResult& cell : cells) {
        rows.push_back(cell_to_json(cell, false));
        all_ok = all_ok && cell.ok;
    }
    j["rows"] = rows;
    j["status"] = all_ok ? "ok" : "fail";
    return j;
}

json report_identities(const std::string& command_echo, long long l_max) {
    json j = report_header(command_echo);
    json rows = json::array();
    bool all_ok = true;
    for (int id = 1; id <= 7; ++id) {
        bool pass = verify_identity(id, l_max);
        rows.push_back(json{{"id", id}, {"pass", pass}});
        all_ok = all_ok && pass;
    }
    j["l_max"] = l_max;
    j["identities"] = rows;
    j["status"] = all_ok ? "ok" : "fail";
    return j;
}

json report_markov(const std::string& command_echo, int depth) {
    json j = report_header(command_echo);
    auto triples = markov_tree(depth);
    json rows = json::array();
    for (const MarkovTriple& t : triples)
        rows.push_back(json::array({t.p[0].str(), t.p[1].str(), t.p[2].str()}));
    j["depth"] = depth;
    j["count"] = triples.size();
    j["triples"] = rows;
    j["status"] = "ok";
    return j;
}

json report_hj(const std::string& command_echo, const PlumbingString& s) {
    json j = report_header(command_echo);
    j["string"] = format_plumbing_string(s);
    j["length"] = s.size();
    if (!s.empty() && s.all_entries_at_least(2)) {
        Fraction f = hj_evaluate(s);
        j["fraction"] = {{"num", f.num.str()}, {"den", f.den.str()}};
        j["dual"] = format_plumbing_string(riemenschneider_dual(s));
    }
    if (!s.empty()) j["lens"] = lens_to_json(lens_from_string(s));
    auto blow = blows_down_to_zero(s);
    j["blows_down_to_zero"] = blow.reaches_zero;
    if (blow.reaches_zero) {
        json moves = json::array();
        for (std::size_t pos : blow.moves) moves.push_back(pos);
        j["blow_down_moves"] = moves;
    }
    j["status"] = "ok";
    return j;
}

std::string table_to_csv(const std::vector<CellResult>& cells) {
    std::ostringstream os;
    os << "k,m,p,q,lens_p,lens_q,smooth,symplectic,markov,divides_q2_plus_9,trace_moves,status\n";
    for (const CellResult& cell : cells) {
        os << cell.k << ',' << cell.m << ',' << cell.verdict.p << ',' << cell.verdict.q << ','
           << cell.lens.p << ',' << cell.lens.q << ',' << (cell.verdict.smooth ? "yes" : "no")
           << ',' << symplectic_status_name(cell.verdict.symplectic) << ','
           << markov_membership_name(cell.verdict.markov) << ','
           << (cell.verdict.divides ? "true" : "false") << ',' << cell.trace_moves << ','
           << (cell.ok ? "ok" : "fail") << '\n';
    }
    return os.str();
}

std::string cell_to_text(const CellResult& cell) {
    std::ostringstream os;
    os << "B(s_{" << cell.k << "," << cell.m << "})  string=" << cell.string_s << "\n";
    os << "  boundary " << cell.lens.str() << "  (p,q)=(" << cell.verdict.p << ","
       << cell.verdict.q << ")\n";
    os << "  smooth=" << (cell.verdict.smooth ? "yes" : "no")
       << "  symplectic=" << symplectic_status_name(cell.verdict.symplectic)
       << "  markov=" << markov_membership_name(cell.verdict.markov)
       << "  p|q^2+9=" << (cell.verdict.divides ? "true" : "false") << "\n";
    if (cell.trace_moves > 0) os << "  reduction moves: " << cell.trace_moves << "\n";
    for (const CheckResult& c : cell.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << (cell.ok ? "OK" : "FAILED") << "\n";
    return os.str();
}

}  // namespace rhb
