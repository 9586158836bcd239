#include "rainbow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "rainbow/io.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

using json = nlohmann::ordered_json;

RunLog::RunLog(const std::filesystem::path& path) : path_(path), out_(path, std::ios::app) {
    if (!out_) throw Error("cannot open run log " + path.string());
}

RunLog RunLog::open(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return RunLog(*flag);
    if (const char* env = std::getenv("RAINBOW_LOG"); env && *env) return RunLog(env);
    return RunLog();
}

void RunLog::append(const std::string& subcommand, const std::string& record_json) {
    if (!enabled()) return;
    json line;
    line["timestamp"] = utc_timestamp();
    line["subcommand"] = subcommand;
    const auto record = json::parse(record_json);
    for (const auto& [key, value] : record.items()) line[key] = value;
    std::lock_guard lock(mutex_);
    out_ << line.dump() << '\n';
    out_.flush();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t secs = std::chrono::system_clock::to_time_t(now);
    const auto millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    char out[40];
    std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(millis));
    return out;
}

PatternGraph resolve_pattern(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return load_pattern(spec);
    return parse_pattern(spec);
}

SweepRow run_cell(const PatternGraph& pattern, const std::string& label, std::size_t n, Color k, std::uint64_t seed,
                  const FinderConfig& config) {
    SweepRow row{label, n, k, seed, "", "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto family = ColoringFamily::uniform(n, k, seed);
        const auto outcome = find_for_pattern(family, pattern, config);
        if (outcome.success()) {
            const auto check = check_anchored(family, outcome.violation());
            row.outcome = check.valid ? "success" : "error";
            if (!check.valid) row.stage = "unverified";
        } else {
            row.outcome = "refused";
            row.stage = outcome.refusal().stage;
        }
    } catch (const ScaleGuardExceeded&) {
        row.outcome = "error";
        row.stage = "guard_exceeded";
    } catch (const std::invalid_argument&) {
        row.outcome = "error";
        row.stage = "invalid_input";
    } catch (const std::exception&) {
        row.outcome = "error";
        row.stage = "internal";
    }
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return row;
}

namespace {

json row_json(const SweepRow& row) {
    return json{{"pattern", row.pattern}, {"n", row.n},         {"k", row.k},          {"seed", row.seed},
                {"outcome", row.outcome}, {"stage", row.stage}, {"micros", row.micros}};
}

// Runs job(i) for i in [0, count) on a small pool; each index runs once.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) job(i);
    };
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepGrid& grid, const FinderConfig& config, unsigned threads, RunLog* log) {
    struct Cell {
        std::size_t pattern;
        std::size_t n;
        Color k;
        std::uint64_t seed;
    };
    std::vector<PatternGraph> patterns(grid.patterns.size());
    std::vector<char> parsed(grid.patterns.size(), 0);
    for (std::size_t p = 0; p < grid.patterns.size(); ++p) {
        try {
            patterns[p] = resolve_pattern(grid.patterns[p]);
            parsed[p] = 1;
        } catch (const std::exception&) {
        }
    }
    std::vector<Cell> cells;
    for (std::size_t p = 0; p < grid.patterns.size(); ++p)
        for (auto n : grid.hosts)
            for (auto k : grid.ks)
                for (auto seed : grid.seeds) cells.push_back({p, n, k, seed});

    std::vector<SweepRow> rows(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        const auto& c = cells[i];
        if (!parsed[c.pattern]) {
            rows[i] = SweepRow{grid.patterns[c.pattern], c.n, c.k, c.seed, "error", "invalid_pattern", 0};
        } else {
            rows[i] = run_cell(patterns[c.pattern], grid.patterns[c.pattern], c.n, c.k, c.seed, config);
        }
        if (log) log->append("sweep", row_json(rows[i]).dump());
    });
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const auto& r : rows) {
        out << '"' << r.pattern << "\"," << r.n << ',' << r.k << ',' << r.seed << ',' << r.outcome << ',' << r.stage
            << ',' << r.micros << '\n';
    }
}

std::vector<BenchRow> run_bench(std::size_t seeds, const FinderConfig& config, unsigned threads, RunLog* log) {
    std::vector<BenchRow> out;
    for (const auto& point : desk_points()) {
        SweepGrid grid{{point.finder}, {point.host}, {point.k}, {}};
        for (std::uint64_t s = 0; s < seeds; ++s) grid.seeds.push_back(s);
        const auto rows = run_sweep(grid, config, threads, nullptr);
        BenchRow b{point.finder, point.host, point.k, rows.size(), 0, 0, 0};
        for (const auto& r : rows) {
            b.successes += r.outcome == "success";
            b.mean_micros += static_cast<double>(r.micros);
            b.max_micros = std::max(b.max_micros, static_cast<double>(r.micros));
        }
        if (!rows.empty()) b.mean_micros /= static_cast<double>(rows.size());
        if (log) {
            log->append("bench", json{{"pattern", b.pattern}, {"n", b.n}, {"k", b.k}, {"runs", b.runs},
                                      {"successes", b.successes}, {"mean_micros", b.mean_micros},
                                      {"max_micros", b.max_micros}}
                                     .dump());
        }
        out.push_back(b);
    }
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "pattern,n,k,runs,successes,mean_micros,max_micros\n";
    for (const auto& b : rows) {
        out << '"' << b.pattern << "\"," << b.n << ',' << b.k << ',' << b.runs << ',' << b.successes << ','
            << static_cast<std::int64_t>(b.mean_micros) << ',' << static_cast<std::int64_t>(b.max_micros) << '\n';
    }
}

}  // namespace rainbow
