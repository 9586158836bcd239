// Command-line front end. Exit codes:
//   0 success (certificate re-verified, family good, certificate valid, exact value settled)
//   1 input error
//   2 finder refusal (ThresholdNotMet) or generator budget exhausted
//   3 violation found / certificate invalid
//   4 scale guard exceeded (exact: bracket only)
//   5 internal error
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInput = 1, kRefused = 2, kViolation = 3, kGuard = 4, kInternal = 5 };

struct FamilySource {
    std::vector<std::uint64_t> random;  // n k seed
    std::string file;
    std::size_t mono = 0;
    std::size_t injective = 0;

    void attach(CLI::App* cmd) {
        auto* group = cmd->add_option_group("family source");
        group->add_option("--random", random, "uniform family: N K SEED")->expected(3);
        group->add_option("--family", file, "family file");
        group->add_option("--mono", mono, "monochromatic family on N vertices");
        group->add_option("--injective", injective, "injective family on N vertices");
        group->require_option(1);
    }

    ColoringFamily load() const {
        if (!random.empty())
            return ColoringFamily::uniform(random[0], static_cast<Color>(random[1]), random[2]);
        if (!file.empty()) return load_family(file);
        if (mono) return ColoringFamily::monochromatic(mono);
        return ColoringFamily::injective(injective);
    }

    json describe() const {
        if (!random.empty()) return {{"source", "random"}, {"n", random[0]}, {"k", random[1]}, {"seed", random[2]}};
        if (!file.empty()) return {{"source", "file"}, {"path", file}};
        if (mono) return {{"source", "mono"}, {"n", mono}};
        return {{"source", "injective"}, {"n", injective}};
    }
};

void attach_config(CLI::App* cmd, FinderConfig& config) {
    cmd->add_option("--coverage", config.coverage, "peeling coverage target");
    cmd->add_option("--star-coverage", config.star_coverage, "peeling coverage for stars with 5+ leaves");
    cmd->add_option("--pair-window", config.pair_window);
    cmd->add_option("--triple-window", config.triple_window);
    cmd->add_option("--edge-window", config.edge_window_vertices);
    cmd->add_option("--star-centers", config.star_x_candidates);
}

// "0-99", "3", or comma lists of either.
std::vector<std::uint64_t> parse_seeds(const std::vector<std::string>& specs) {
    std::vector<std::uint64_t> out;
    auto number = [](std::string_view s) {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad seed '" + std::string(s) + "'");
        return v;
    };
    for (const auto& spec : specs) {
        const auto dash = spec.find('-');
        if (dash == std::string::npos) {
            out.push_back(number(spec));
            continue;
        }
        const auto lo = number(std::string_view(spec).substr(0, dash));
        const auto hi = number(std::string_view(spec).substr(dash + 1));
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
    }
    return out;
}

int cmd_find(const std::string& pattern_spec, const FamilySource& source, const FinderConfig& config,
             const std::string& out_path, RunLog& log) {
    const auto start = std::chrono::steady_clock::now();
    const auto pattern = resolve_pattern(pattern_spec);
    const auto family = source.load();
    const auto outcome = find_for_pattern(family, pattern, config);
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    json record{{"pattern", pattern_spec}, {"family", source.describe()}};
    record["diagnostics"] = json::parse(outcome.diagnostics.to_json());
    int code = kOk;
    if (outcome.success()) {
        const auto check = check_anchored(family, outcome.violation());
        if (!check.valid) {
            for (const auto& p : check.problems) std::cerr << "certificate: " << p << '\n';
            record["outcome"] = "unverified";
            code = kInternal;
        } else {
            std::ofstream out(out_path);
            out << certificate_to_json(outcome.violation(), json{{"run", record}}.dump()) << '\n';
            if (!out) throw Error("cannot write " + out_path);
            record["outcome"] = "success";
            record["certificate"] = out_path;
            std::cout << "success: certificate written to " << out_path << '\n';
        }
    } else {
        const auto& r = outcome.refusal();
        record["outcome"] = "refused";
        record["stage"] = r.stage;
        record["observed"] = r.observed;
        record["required"] = r.required;
        std::cerr << "threshold not met at stage " << r.stage << ": observed " << r.observed << ", required "
                  << r.required << '\n';
        code = kRefused;
    }
    record["micros"] = micros;
    log.append("find", record.dump());
    return code;
}

int cmd_verify(const std::string& family_path, const std::string& pattern_spec, const std::string& cert_path,
               std::uint64_t max_copies, RunLog& log) {
    const auto family = load_family(family_path);
    json record{{"family", family_path}};
    int code = kOk;
    if (!cert_path.empty()) {
        record["certificate"] = cert_path;
        const auto cert = load_certificate(cert_path);
        const auto check = check_anchored(family, cert);
        for (const auto& p : check.problems) std::cerr << p << '\n';
        std::cout << (check.valid ? "valid" : "invalid") << '\n';
        record["outcome"] = check.valid ? "valid" : "invalid";
        code = check.valid ? kOk : kViolation;
    } else {
        record["pattern"] = pattern_spec;
        GoodnessOptions options;
        options.max_copies = max_copies;
        const auto report = family_is_good(family, resolve_pattern(pattern_spec), options);
        record["copies_checked"] = report.copies_checked;
        if (report.is_good) {
            std::cout << "good (" << report.copies_checked << " copies)\n";
            record["outcome"] = "good";
        } else {
            std::cout << certificate_to_json(AnchoredViolation{*report.witness, {}, {}}) << '\n';
            record["outcome"] = "violation";
            code = kViolation;
        }
    }
    log.append("verify", record.dump());
    return code;
}

int cmd_exact(std::size_t n, const std::string& pattern_spec, Color k_max, std::uint64_t max_nodes,
              const std::string& witness_path, RunLog& log) {
    DecideOptions options;
    options.max_nodes = max_nodes;
    const auto result = compute_c(n, resolve_pattern(pattern_spec), k_max, options);
    json record{{"n", n}, {"pattern", pattern_spec}, {"k_max", k_max}, {"max_nodes", max_nodes},
                {"method", result.method}, {"lower", result.lower}};
    record["value"] = result.value ? json(*result.value) : json(nullptr);
    record["upper"] = result.upper ? json(*result.upper) : json(nullptr);
    if (result.witness_family && !witness_path.empty()) {
        save_family(witness_path, *result.witness_family);
        record["witness"] = witness_path;
    }
    std::cout << record.dump() << '\n';
    log.append("exact", record.dump());
    return result.value ? kOk : kGuard;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow-copy certificates for families of edge colorings of K_n"};
    app.require_subcommand(1);
    std::optional<std::string> log_flag;
    app.add_option("--log", log_flag, "JSON-lines run log (default: $RAINBOW_LOG)");

    FinderConfig config;

    auto* find = app.add_subcommand("find", "search for a violation certificate");
    std::string find_pattern, find_out = "certificate.json";
    FamilySource find_source;
    find->add_option("pattern", find_pattern, "pattern tag or pattern file")->required();
    find->add_option("--out,-o", find_out, "certificate path");
    find_source.attach(find);
    attach_config(find, config);

    auto* verify = app.add_subcommand("verify", "check goodness or a certificate");
    std::string verify_family, verify_pattern, verify_cert;
    std::uint64_t verify_max = 100'000'000;
    verify->add_option("--family", verify_family, "family file")->required();
    auto* vp = verify->add_option("--pattern", verify_pattern, "goodness mode");
    auto* vc = verify->add_option("--certificate", verify_cert, "certificate mode");
    vp->excludes(vc);
    verify->add_option("--max-copies", verify_max, "scale guard");

    auto* exact = app.add_subcommand("exact", "compute C(n,H) at desk scale");
    std::size_t exact_n = 0;
    std::string exact_pattern, exact_witness;
    Color exact_kmax = 5;
    std::uint64_t exact_nodes = 200'000'000;
    exact->add_option("n", exact_n)->required();
    exact->add_option("pattern", exact_pattern)->required();
    exact->add_option("--k-max", exact_kmax);
    exact->add_option("--max-nodes", exact_nodes);
    exact->add_option("--witness", exact_witness, "write the witness family here");

    auto* cnf = app.add_subcommand("export-cnf", "DIMACS encoding of the decision problem");
    std::size_t cnf_n = 0;
    std::string cnf_pattern, cnf_out;
    Color cnf_k = 1;
    cnf->add_option("n", cnf_n)->required();
    cnf->add_option("pattern", cnf_pattern)->required();
    cnf->add_option("k", cnf_k)->required();
    cnf->add_option("out", cnf_out)->required();

    auto* gen = app.add_subcommand("generate", "write a coloring family");
    std::string gen_kind, gen_out, gen_pattern;
    std::size_t gen_n = 0;
    Color gen_k = 1;
    std::uint64_t gen_seed = 0, gen_budget = 1'000'000;
    gen->add_option("kind", gen_kind, "uniform | monochromatic | injective | proper-ish | resampled-good")->required();
    gen->add_option("n", gen_n)->required();
    gen->add_option("k", gen_k)->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--pattern", gen_pattern, "required for resampled-good");
    gen->add_option("--budget", gen_budget, "resamples");
    gen->add_option("--out,-o", gen_out, "family file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "finder success over a grid of uniform families");
    std::vector<std::string> sw_patterns, sw_seeds;
    std::vector<std::size_t> sw_hosts;
    std::vector<Color> sw_ks;
    std::string sw_out;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    sweep->add_option("--patterns", sw_patterns)->delimiter(';');
    sweep->add_option("--hosts", sw_hosts)->delimiter(',');
    sweep->add_option("--ks", sw_ks)->delimiter(',');
    sweep->add_option("--seeds", sw_seeds, "e.g. 0-99 or 1,5,9")->delimiter(',');
    sweep->add_option("--threads", threads);
    sweep->add_option("--out,-o", sw_out, "CSV path (default stdout)");
    attach_config(sweep, config);

    auto* bench = app.add_subcommand("bench", "timings at the desk-scale operating points");
    std::size_t bench_seeds = 5;
    std::string bench_out;
    bench->add_option("--seeds", bench_seeds, "seeds 0..N-1 per point");
    bench->add_option("--threads", threads);
    bench->add_option("--out,-o", bench_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        RunLog log = RunLog::open(log_flag);
        if (*find) return cmd_find(find_pattern, find_source, config, find_out, log);
        if (*verify) {
            if (verify_pattern.empty() == verify_cert.empty()) {
                std::cerr << "verify needs exactly one of --pattern or --certificate\n";
                return kInput;
            }
            return cmd_verify(verify_family, verify_pattern, verify_cert, verify_max, log);
        }
        if (*exact) return cmd_exact(exact_n, exact_pattern, exact_kmax, exact_nodes, exact_witness, log);
        if (*cnf) {
            const auto stats = export_cnf(cnf_n, resolve_pattern(cnf_pattern), cnf_k, cnf_out);
            json record{{"n", cnf_n},
                        {"pattern", cnf_pattern},
                        {"k", cnf_k},
                        {"path", cnf_out},
                        {"color_variables", stats.color_variables},
                        {"auxiliary_variables", stats.auxiliary_variables},
                        {"clauses", stats.clauses},
                        {"copies", stats.copies}};
            std::cout << record.dump() << '\n';
            log.append("export-cnf", record.dump());
            return kOk;
        }
        if (*gen) {
            GeneratorSpec spec{parse_generator_kind(gen_kind), gen_n, gen_k, gen_seed, std::nullopt, gen_budget};
            if (!gen_pattern.empty()) spec.pattern = resolve_pattern(gen_pattern);
            json record{{"kind", gen_kind}, {"n", gen_n}, {"k", gen_k}, {"seed", gen_seed}, {"budget", gen_budget}};
            if (!gen_pattern.empty()) record["pattern"] = gen_pattern;
            try {
                const auto family = generate(spec);
                if (gen_out.empty()) {
                    write_family(std::cout, family);
                } else {
                    save_family(gen_out, family);
                    record["path"] = gen_out;
                }
                record["outcome"] = "written";
                log.append("generate", record.dump());
                return kOk;
            } catch (const BudgetExhausted& e) {
                std::cerr << e.what() << '\n';
                record["outcome"] = "budget_exhausted";
                record["bad_copies"] = e.bad_copies;
                log.append("generate", record.dump());
                return kRefused;
            }
        }
        if (*sweep) {
            SweepGrid grid{sw_patterns, sw_hosts, sw_ks, parse_seeds(sw_seeds)};
            const auto rows = run_sweep(grid, config, threads, &log);
            if (sw_out.empty()) {
                write_sweep_csv(std::cout, rows);
            } else {
                std::ofstream out(sw_out);
                write_sweep_csv(out, rows);
                if (!out) throw Error("cannot write " + sw_out);
            }
            return kOk;
        }
        if (*bench) {
            const auto rows = run_bench(bench_seeds, config, threads, &log);
            if (bench_out.empty()) {
                write_bench_csv(std::cout, rows);
            } else {
                std::ofstream out(bench_out);
                write_bench_csv(out, rows);
            }
            return kOk;
        }
    } catch (const ScaleGuardExceeded& e) {
        std::cerr << "scale guard: " << e.what() << '\n';
        return kGuard;
    } catch (const FormatError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kInput;
    } catch (const SizeMismatchError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kInput;
    } catch (const ColorRangeError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kInput;
    } catch (const Error& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kInput;
}
