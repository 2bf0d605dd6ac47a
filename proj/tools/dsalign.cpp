// Command-line driver: align patterns to D-strings, generate synthetic
// D-strings, plant divergence, and reproduce the benchmark grid.

#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsalign/io.hpp"
#include "dsalign/oracle.hpp"
#include "dsalign/report.hpp"
#include "dsalign/simulate.hpp"
#include "dsalign/wavefront.hpp"

using namespace dsalign;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct AlignOutcome {
    RunReport report;
    AlignmentResult result;
};

AlignOutcome run_alignment(const DString& ds, const std::string& text_blob,
                           const std::string& pattern, const Penalties& pen) {
    const auto t0 = std::chrono::steady_clock::now();
    WavefrontAligner aligner(ds, pattern, pen);
    AlignmentResult res = aligner.align();
    const auto t1 = std::chrono::steady_clock::now();

    const std::string consistency = check_alignment(ds, pattern, pen, res);
    if (!consistency.empty()) {
        throw std::logic_error("alignment self-check failed: " + consistency);
    }

    RunReport rep;
    rep.distance = res.distance;
    rep.events = summarize(res.events);
    rep.event_string = event_string(res.events);
    rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.work = res.stats.slot_writes;
    rep.peak_kb = peak_memory_kb();
    rep.text_digest = fnv1a_digest(text_blob);
    rep.pattern_digest = fnv1a_digest(pattern);
    rep.penalties = pen;
    rep.text_length = ds.length();
    rep.text_size = ds.size();
    rep.text_width = ds.width();
    rep.pattern_length = pattern.size();
    return {std::move(rep), std::move(res)};
}

int cmd_align(const std::string& text_path, const std::string& query_path, Penalties pen,
              const std::string& alphabet, bool use_oracle, std::uint64_t member_cap,
              bool as_json, bool with_cigar) {
    const std::string blob = read_file(text_path);
    DString ds = parse_dstring(blob, alphabet);
    const std::string pattern = read_pattern_file(query_path);

    AlignOutcome out = run_alignment(ds, blob, pattern, pen);

    bool oracle_ok = true;
    if (use_oracle) {
        OracleResult o = oracle_affine(ds, pattern, pen, member_cap);
        out.report.oracle_distance = o.distance;
        oracle_ok = o.distance == out.report.distance;
    }

    if (as_json) {
        nlohmann::json j = out.report;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.report.human() << "\n";
        if (with_cigar) std::cout << out.report.event_string << "\n";
        if (use_oracle) {
            std::cout << "oracle d=" << *out.report.oracle_distance
                      << (oracle_ok ? "  (agrees)" : "  (DISAGREES)") << "\n";
        }
    }
    if (!oracle_ok) {
        std::cerr << "error: oracle distance " << *out.report.oracle_distance
                  << " != wavefront distance " << out.report.distance << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_generate(std::size_t width, double degeneracy, std::size_t max_variants,
                 std::size_t max_len, std::uint64_t seed, const std::string& out_path,
                 const std::string& alphabet) {
    SimSpec spec{width, degeneracy, max_variants, max_len, seed};
    DString ds = generate_dstring(spec, alphabet);
    write_dstring_file(out_path, ds);
    std::cout << "n=" << ds.length() << " N=" << ds.size() << " W=" << ds.width() << "\n";
    return kExitOk;
}

TruthLog plant_divergence(const DString& ds, double snp_rate, double indel_rate,
                          std::uint64_t seed, const std::string& alphabet, std::string& pattern) {
    SplitMix64 master(seed);
    TruthLog truth;
    truth.member_seed = master.next();
    truth.snp_seed = master.next();
    truth.indel_seed = master.next();
    truth.snp_rate = snp_rate;
    truth.indel_rate = indel_rate;
    truth.width = ds.width();

    pattern = extract_member(ds, truth.member_seed);
    if (snp_rate > 0.0) {
        truth.snps = mutate_snps(pattern, snp_rate, truth.snp_seed, alphabet);
        pattern = truth.snps.pattern;
    }
    if (indel_rate > 0.0) {
        truth.indels = mutate_indels(pattern, indel_rate, truth.indel_seed, alphabet);
        pattern = truth.indels.pattern;
    }
    return truth;
}

int cmd_mutate(const std::string& text_path, double snp_rate, double indel_rate,
               std::uint64_t seed, const std::string& out_path, const std::string& truth_path,
               const std::string& alphabet) {
    DString ds = read_dstring_file(text_path, alphabet);
    std::string pattern;
    TruthLog truth = plant_divergence(ds, snp_rate, indel_rate, seed, alphabet, pattern);
    write_file(out_path, pattern + "\n");
    if (!truth_path.empty()) {
        nlohmann::json j = truth;
        write_file(truth_path, j.dump(2) + "\n");
    }
    std::cout << "pattern length=" << pattern.size() << " snps=" << truth.snps.events.size()
              << " (changed=" << truth.snps.changed << ") indel_events=" << truth.indels.events.size()
              << "\n";
    return kExitOk;
}

struct BenchCell {
    double g;
    std::size_t S, L;
    std::string divergence;  // "none", "snp", "indel"
    double rate;
};

struct BenchRow {
    BenchCell cell;
    RunReport report;
    std::string failure;  // empty on pass
};

BenchRow run_bench_cell(const BenchCell& cell, std::size_t width, std::uint64_t gen_seed,
                        std::uint64_t div_seed, const Penalties& pen) {
    BenchRow row{cell, {}, {}};
    try {
        SimSpec spec{width, cell.g, cell.S, cell.L, gen_seed};
        DString ds = generate_dstring(spec);
        std::string pattern;
        const double snp_rate = cell.divergence == "snp" ? cell.rate : 0.0;
        const double indel_rate = cell.divergence == "indel" ? cell.rate : 0.0;
        TruthLog truth = plant_divergence(ds, snp_rate, indel_rate, div_seed, kDnaAlphabet, pattern);
        AlignOutcome out = run_alignment(ds, format_dstring(ds), pattern, pen);
        row.report = out.report;
        row.failure = verify_against_truth(truth, out.report);
    } catch (const std::exception& e) {
        row.failure = e.what();
    }
    return row;
}

int cmd_bench(std::size_t scale, std::uint64_t seed, bool as_json, const Penalties& pen) {
    const std::vector<double> gs{0.01, 0.10, 0.20};
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 1}, {5, 4}};
    const std::vector<std::pair<std::string, double>> divs{
        {"none", 0.0}, {"snp", 0.001}, {"snp", 0.01}, {"indel", 0.001}};

    std::vector<BenchCell> cells;
    for (double g : gs) {
        for (auto [S, L] : shapes) {
            for (const auto& [div, rate] : divs) {
                cells.push_back({g, S, L, div, rate});
            }
        }
    }

    // cell seeds are drawn up front so every cell is reproducible on its own
    SplitMix64 master(seed);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> seeds;
    seeds.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::uint64_t a = master.next();
        const std::uint64_t b = master.next();
        seeds.emplace_back(a, b);
    }

    std::vector<std::future<BenchRow>> futures;
    futures.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        futures.push_back(std::async(std::launch::async, run_bench_cell, cells[i], scale,
                                     seeds[i].first, seeds[i].second, pen));
    }

    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < futures.size(); ++i) {
        BenchRow row = futures[i].get();
        const bool ok = row.failure.empty();
        all_ok = all_ok && ok;
        if (as_json) {
            nlohmann::json j;
            j["cell"] = {{"g", row.cell.g},
                         {"S", row.cell.S},
                         {"L", row.cell.L},
                         {"divergence", row.cell.divergence},
                         {"rate", row.cell.rate}};
            j["report"] = row.report;
            j["pass"] = ok;
            if (!ok) j["failure"] = row.failure;
            rows.push_back(std::move(j));
        } else {
            char head[96];
            std::snprintf(head, sizeof(head), "g=%2.0f%% S=%zu L=%zu %-6s %-7.4g", row.cell.g * 100,
                          row.cell.S, row.cell.L, row.cell.divergence.c_str(), row.cell.rate);
            std::cout << head << "  " << row.report.human() << "  "
                      << (ok ? "PASS" : "FAIL: " + row.failure) << "\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenerate-string alignment toolkit"};
    app.require_subcommand(1);

    std::string alphabet = kDnaAlphabet;
    app.add_option("--alphabet", alphabet, "allowed sequence characters")->capture_default_str();

    Penalties pen;
    auto add_penalties = [&pen](CLI::App* sub) {
        sub->add_option("-a", pen.a, "match score (must be 0)")->capture_default_str();
        sub->add_option("-x", pen.x, "mismatch score")->capture_default_str();
        sub->add_option("-o", pen.o, "gap-open score")->capture_default_str();
        sub->add_option("-e", pen.e, "gap-extend score")->capture_default_str();
    };

    // align
    auto* align = app.add_subcommand("align", "align a pattern to a D-string");
    std::string text_path, query_path;
    bool use_oracle = false, as_json = false, with_cigar = false;
    std::uint64_t member_cap = kDefaultMemberCap;
    align->add_option("--text", text_path, ".dst file")->required();
    align->add_option("--query", query_path, "pattern file (raw or FASTA)")->required();
    add_penalties(align);
    align->add_flag("--oracle", use_oracle, "also run the brute-force oracle and compare");
    align->add_option("--member-cap", member_cap, "oracle member limit")->capture_default_str();
    align->add_flag("--json", as_json, "emit a JSON report");
    align->add_flag("--cigar", with_cigar, "also print the run-length event string");

    // generate
    auto* gen = app.add_subcommand("generate", "generate a random D-string");
    std::size_t width = 10000, max_variants = 2, max_len = 1;
    double degeneracy = 0.01;
    std::uint64_t seed = 1;
    std::string out_path, truth_path;
    gen->add_option("--width", width, "total width W")->capture_default_str();
    gen->add_option("--degeneracy", degeneracy, "fraction of W made degenerate")->capture_default_str();
    gen->add_option("--max-variants", max_variants, "max variants per letter (S)")->capture_default_str();
    gen->add_option("--max-len", max_len, "max variant length (L)")->capture_default_str();
    gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen->add_option("--out", out_path, "output .dst path")->required();

    // mutate
    auto* mut = app.add_subcommand("mutate", "extract a member and plant divergence");
    double snp_rate = 0.0, indel_rate = 0.0;
    mut->add_option("--text", text_path, ".dst file")->required();
    mut->add_option("--snps", snp_rate, "SNP rate (fraction of W)")->capture_default_str();
    mut->add_option("--indels", indel_rate, "INDEL event rate (fraction of W)")->capture_default_str();
    mut->add_option("--seed", seed, "divergence seed")->capture_default_str();
    mut->add_option("--out", out_path, "output pattern path")->required();
    mut->add_option("--truth", truth_path, "truth-log JSON path");

    // bench
    auto* bench = app.add_subcommand("bench", "run the synthetic benchmark grid");
    std::size_t scale = 10000;
    bench->add_option("--scale", scale, "D-string width per cell")->capture_default_str();
    bench->add_option("--seed", seed, "master seed")->capture_default_str();
    add_penalties(bench);
    bench->add_flag("--json", as_json, "emit JSON rows");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*align) {
            return cmd_align(text_path, query_path, pen, alphabet, use_oracle, member_cap, as_json,
                             with_cigar);
        }
        if (*gen) {
            return cmd_generate(width, degeneracy, max_variants, max_len, seed, out_path, alphabet);
        }
        if (*mut) {
            return cmd_mutate(text_path, snp_rate, indel_rate, seed, out_path, truth_path, alphabet);
        }
        if (*bench) {
            return cmd_bench(scale, seed, as_json, pen);
        }
    } catch (const TooManyMembers& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
