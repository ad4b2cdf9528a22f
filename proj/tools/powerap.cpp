#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerap/apsearch.hpp"
#include "powerap/arith.hpp"
#include "powerap/heuristics.hpp"
#include "powerap/pell.hpp"
#include "powerap/powerful.hpp"

namespace {

using json = nlohmann::json;
using namespace powerap;

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCheckpoint = 4;

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void render(const Table& t, const std::string& format, const std::string& command) {
    if (format == "json") {
        json out;
        out["command"] = command;
        out["rows"] = json::array();
        for (const auto& row : t.rows) {
            json r;
            for (size_t i = 0; i < t.header.size(); ++i) r[t.header[i]] = row[i];
            out["rows"].push_back(r);
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (size_t i = 0; i < t.header.size(); ++i)
            std::cout << (i ? "," : "") << t.header[i];
        std::cout << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
            std::cout << "\n";
        }
        return;
    }
    std::vector<size_t> w(t.header.size());
    for (size_t i = 0; i < t.header.size(); ++i) w[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "  " : "") << std::string(w[i] - row[i].size(), ' ') << row[i];
        std::cout << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

Table triples_table(const std::vector<ApTriple>& ts) {
    Table t;
    t.header = {"N", "N+d", "N+2d", "d", "d_over_sqrtN", "square_class"};
    for (const ApTriple& a : ts)
        t.rows.push_back({std::to_string(a.n1), std::to_string(a.n2), std::to_string(a.n3),
                          std::to_string(a.d), fmt3(a.ratio), std::to_string(a.square_count)});
    return t;
}

int run(int argc, char** argv) {
    CLI::App app{"Three-term arithmetic progressions of powerful numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Worker threads for the search");

    auto* construct = app.add_subcommand("construct", "First k Pell-built triples ((x-2)^2,(x-1)^2,x^2-2)");
    u64 count = 1;
    construct->add_option("--count", count, "Number of triples")->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "Exhaustive search for APs of consecutive powerful numbers");
    u64 limit = 100000000;
    u64 segment_size = 0;
    std::string checkpoint;
    search->add_option("--limit", limit, "Upper bound for the third element")->check(CLI::PositiveNumber);
    search->add_option("--segment-size", segment_size, "Segment width (0 = automatic)");
    search->add_option("--checkpoint", checkpoint, "Checkpoint file for resumable runs");

    auto* classify_cmd = app.add_subcommand("classify", "Square class of a triple (N, N+d, N+2d)");
    u64 cls_n = 0, cls_d = 0;
    classify_cmd->add_option("N", cls_n)->required()->check(CLI::PositiveNumber);
    classify_cmd->add_option("d", cls_d)->required()->check(CLI::PositiveNumber);

    auto* constants = app.add_subcommand("constants", "Heuristic constants with rigorous brackets");
    u64 truncation = 100000000;
    constants->add_option("--truncation", truncation, "Product truncation")
        ->check(CLI::Range(u64(1000), u64(10000000000)));

    auto* membership = app.add_subcommand("membership", "Squarefree m <= m-max with x^2 - m^3 y^2 = 2 solvable");
    u64 m_max = 10;
    membership->add_option("--m-max", m_max, "Upper bound on m")->check(CLI::PositiveNumber);

    auto* density = app.add_subcommand("density", "Empirical density of the (0,1) gap pattern");
    u64 x_max = 1000000;
    density->add_option("--x-max", x_max, "Scan x in [3, x-max]")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check-consecutive", "Consecutiveness certificate for orbit solution x_k");
    u64 orbit_k = 0;
    check->add_option("--k", orbit_k, "Orbit index (cost grows steeply with k)");

    auto* pell_cmd = app.add_subcommand("pell", "Pell equation utilities");
    auto* fund = pell_cmd->add_subcommand("fundamental", "Fundamental solution of x^2 - D y^2 = 1");
    u64 D = 7;
    fund->add_option("--D", D, "Non-square D >= 2")->required();
    auto* solve2 = pell_cmd->add_subcommand("solve2", "Smallest solution of x^2 - D y^2 = 2 with y <= bound");
    u64 D2 = 7, y_bound = 1000000;
    solve2->add_option("--D", D2, "Non-square D >= 2")->required();
    solve2->add_option("--y-bound", y_bound, "Scan bound on y");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (*construct) {
        RecurrenceSpec spec = build_recurrence_343();
        Table t;
        t.header = {"k", "x", "y", "N", "d", "verified"};
        OrbitStream stream(spec);
        for (u64 k = 0; k < count; ++k) {
            PellSolution s = stream.next();
            PellApRecord rec = verify_pell_triple(s.x, s.y);
            t.rows.push_back({std::to_string(k), rec.x.get_str(), rec.y.get_str(),
                              rec.n1.get_str(), rec.d.get_str(), "true"});
        }
        render(t, format, "construct");
    } else if (*search) {
        SearchOptions opts;
        opts.segment_size = segment_size;
        opts.threads = threads;
        if (!checkpoint.empty()) opts.checkpoint_path = checkpoint;
        std::vector<ApTriple> ts = search_consecutive_ap(limit, opts);
        render(triples_table(ts), format, "search");
    } else if (*classify_cmd) {
        ApTriple t = make_ap_triple(cls_n, cls_d);
        for (u64 v : {t.n1, t.n2, t.n3})
            if (!is_powerful(v)) {
                std::cerr << "error: " << v << " is not powerful\n";
                return kExitVerification;
            }
        Table out;
        out.header = {"N", "d", "square_class"};
        out.rows.push_back({std::to_string(t.n1), std::to_string(t.d),
                            std::to_string(classify(t))});
        render(out, format, "classify");
    } else if (*constants) {
        Bracket prod = density_product({1, 7}, truncation);
        Bracket c7 = compute_C_m(7, truncation);
        RecurrenceSpec spec = build_recurrence_343();
        Table t;
        t.header = {"quantity", "lo", "hi"};
        char lo[32], hi[32];
        auto row = [&](const std::string& name, const Bracket& b) {
            std::snprintf(lo, sizeof lo, "%.10f", b.lo);
            std::snprintf(hi, sizeof hi, "%.10f", b.hi);
            t.rows.push_back({name, lo, hi});
        };
        row("density_product_excl_1_7", prod);
        row("C_7", c7);
        t.rows.push_back({"min_threshold_m", std::to_string(min_threshold_m()),
                          std::to_string(min_threshold_m())});
        t.rows.push_back({"growth_constant_A", std::to_string(spec.A), std::to_string(spec.A)});
        render(t, format, "constants");
    } else if (*membership) {
        Table t;
        t.header = {"m"};
        for (u64 m : enumerate_M(m_max)) t.rows.push_back({std::to_string(m)});
        render(t, format, "membership");
    } else if (*density) {
        Table t;
        t.header = {"x_max", "density"};
        t.rows.push_back({std::to_string(x_max), fmt3(empirical_interval_density(x_max))});
        render(t, format, "density");
    } else if (*check) {
        RecurrenceSpec spec = build_recurrence_343();
        OrbitStream stream(spec);
        PellSolution s = stream.next();
        for (u64 k = 0; k < orbit_k; ++k) s = stream.next();
        CertificateResult cert = consecutiveness_certificate(s.x);
        Table t;
        t.header = {"k", "x", "consecutive", "violating_m", "x2_minus_1_powerful"};
        std::string viol;
        for (size_t i = 0; i < cert.violating_m.size(); ++i)
            viol += (i ? " " : "") + std::to_string(cert.violating_m[i]);
        const char* side = cert.xsq_minus1 == CertificateResult::XsqMinus1::powerful ? "powerful"
                           : cert.xsq_minus1 == CertificateResult::XsqMinus1::not_powerful
                               ? "not_powerful"
                               : "unknown";
        t.rows.push_back({std::to_string(s.k), s.x.get_str(),
                          cert.consecutive ? "true" : "false", viol, side});
        render(t, format, "check-consecutive");
        if (cert.xsq_minus1 == CertificateResult::XsqMinus1::powerful)
            std::cerr << "note: x^2 - 1 is powerful; three consecutive powerful integers found\n";
    } else if (*pell_cmd) {
        Table t;
        if (*fund) {
            FundamentalSolution f = fundamental_solution(D);
            t.header = {"D", "u0", "v0"};
            t.rows.push_back({std::to_string(D), f.u0.get_str(), f.v0.get_str()});
            render(t, format, "pell-fundamental");
        } else if (*solve2) {
            auto s = solve_rhs2(D2, y_bound);
            t.header = {"D", "x", "y"};
            if (s)
                t.rows.push_back({std::to_string(D2), s->x.get_str(), s->y.get_str()});
            render(t, format, "pell-solve2");
            if (!s) std::cerr << "no solution with y <= " << y_bound << "\n";
        } else {
            std::cerr << "error: pell requires a subcommand (fundamental | solve2)\n";
            return kExitUsage;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidCheckpoint& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return kExitCheckpoint;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const InternalConsistency& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
