#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rhb/reports.hpp"
#include "rhb/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool log_enabled() {
    const char* env = std::getenv("RHB_LOG");
    return env != nullptr && *env != '\0';
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~Timer() {
        if (log_enabled()) {
            auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cerr << "rhb: wall time " << dt << " ms\n";
        }
    }
};

void emit(const std::string& payload, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(out_file, std::ios::binary);
        if (!os) throw CLI::ValidationError("--out", "cannot open '" + out_file + "'");
        os << payload;
        if (!payload.empty() && payload.back() != '\n') os << '\n';
    }
}

std::pair<long long, long long> parse_range(const std::string& text, const std::string& flag) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError(flag, "expected A:B");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected integer endpoints in A:B");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus for rational homology balls B(s_{k,m}) in CP^2: "
                 "reduction certificates, lens-space coherence and the q^2+9 obstruction"};
    app.set_version_flag("--version", rhb::kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // --format/--out may follow the subcommand

    std::string format = "json";
    std::string out_file;
    app.add_option("--format", format, "Output format: json|csv|text")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_file, "Write the report to FILE instead of stdout");

    long long k = 0, m = 1;
    int jobs = 1, depth = 3;
    long long l_max = 50;
    std::string k_range, m_range, trace_file, literal;

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run every check for one (k,m) cell");
    cmd_verify->add_option("--k", k, "Parameter k >= -1")->required();
    cmd_verify->add_option("--m", m, "Odd parameter m >= 1")->required();

    CLI::App* cmd_table = app.add_subcommand("table", "Sweep a (k,m) grid and tabulate results");
    cmd_table->add_option("--k-range", k_range, "k range A:B inclusive")->required();
    cmd_table->add_option("--m-range", m_range, "odd m range A:B inclusive")->required();
    cmd_table->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    CLI::App* cmd_trace = app.add_subcommand("trace", "Emit the reduction certificate for (k,m)");
    cmd_trace->add_option("--k", k, "Parameter k >= 0")->required();
    cmd_trace->add_option("--m", m, "Odd parameter m >= 1")->required();

    CLI::App* cmd_verify_trace =
        app.add_subcommand("verify-trace", "Independently replay a certificate file");
    cmd_verify_trace->add_option("file", trace_file, "Certificate JSON file")->required();

    CLI::App* cmd_identities =
        app.add_subcommand("identities", "Check the seven polynomial identities symbolically");
    cmd_identities->add_option("--l-max", l_max, "Largest index l")->capture_default_str();

    CLI::App* cmd_markov = app.add_subcommand("markov", "Enumerate the Markov triple tree");
    cmd_markov->add_option("--depth", depth, "Mutation depth from (1,1,1)")->capture_default_str();

    CLI::App* cmd_hj = app.add_subcommand(
        "hj", "Evaluate a plumbing string literal (repeat blocks allowed)");
    cmd_hj->add_option("string", literal, "e.g. \"2,(2^2,5)^3,2,2\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    Timer timer;
    std::ostringstream echo;
    for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

    try {
        if (*cmd_verify) {
            rhb::CellResult cell = rhb::verify_cell(k, m, true);
            if (format == "text")
                emit(rhb::cell_to_text(cell), out_file);
            else
                emit(rhb::report_verify(echo.str(), cell).dump(2), out_file);
            return cell.ok ? kExitOk : kExitCheckFailed;
        }

        if (*cmd_table) {
            auto [k_lo, k_hi] = parse_range(k_range, "--k-range");
            auto [m_lo, m_hi] = parse_range(m_range, "--m-range");
            rhb::GridSpec grid(k_lo, k_hi, m_lo, m_hi);
            auto cells = rhb::run_grid(grid, jobs);
            bool all_ok = true;
            for (const auto& cell : cells) all_ok = all_ok && cell.ok;
            if (format == "csv") {
                emit(rhb::table_to_csv(cells), out_file);
            } else if (format == "text") {
                std::ostringstream os;
                for (const auto& cell : cells) os << rhb::cell_to_text(cell) << "\n";
                emit(os.str(), out_file);
            } else {
                emit(rhb::report_table(echo.str(), grid, cells).dump(2), out_file);
            }
            return all_ok ? kExitOk : kExitCheckFailed;
        }

        if (*cmd_trace) {
            rhb::ReductionTrace trace = rhb::reduce_to_cp2(k, m);
            emit(rhb::trace_to_json(trace).dump(2), out_file);
            return kExitOk;
        }

        if (*cmd_verify_trace) {
            std::ifstream is(trace_file, std::ios::binary);
            if (!is) {
                std::cerr << "rhb: cannot open '" << trace_file << "'\n";
                return kExitUsage;
            }
            rhb::json doc;
            rhb::ReductionTrace trace;
            try {
                doc = rhb::json::parse(is);
                trace = rhb::trace_from_json(doc);
            } catch (const std::exception& e) {
                std::cerr << "rhb: malformed certificate: " << e.what() << "\n";
                return kExitUsage;
            }
            rhb::TraceVerification v = rhb::verify_trace(trace);
            rhb::json j{{"command", echo.str()},
                        {"version", rhb::kVersion},
                        {"k", trace.k},
                        {"m", trace.m},
                        {"moves", trace.moves.size()},
                        {"replay_matches", v.replay_matches},
                        {"start_matches_tau", v.start_matches_tau},
                        {"end_is_normal_form", v.end_is_normal_form},
                        {"status", v.ok() ? "ok" : "fail"}};
            emit(j.dump(2), out_file);
            return v.ok() ? kExitOk : kExitCheckFailed;
        }

        if (*cmd_identities) {
            rhb::json j = rhb::report_identities(echo.str(), l_max);
            if (format == "text") {
                std::ostringstream os;
                for (const auto& row : j["identities"])
                    os << "identity " << row["id"] << ": "
                       << (row["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
                emit(os.str(), out_file);
            } else {
                emit(j.dump(2), out_file);
            }
            return j["status"] == "ok" ? kExitOk : kExitCheckFailed;
        }

        if (*cmd_markov) {
            rhb::json j = rhb::report_markov(echo.str(), depth);
            if (format == "csv") {
                std::ostringstream os;
                os << "p1,p2,p3\n";
                for (const auto& row : j["triples"])
                    os << row[0].get<std::string>() << ',' << row[1].get<std::string>() << ','
                       << row[2].get<std::string>() << '\n';
                emit(os.str(), out_file);
            } else {
                emit(j.dump(2), out_file);
            }
            return kExitOk;
        }

        if (*cmd_hj) {
            rhb::PlumbingString s = rhb::parse_plumbing_string(literal);
            emit(rhb::report_hj(echo.str(), s).dump(2), out_file);
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "rhb: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rhb: invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "rhb: check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
