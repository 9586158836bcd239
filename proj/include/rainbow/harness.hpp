#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/finders.hpp"

namespace rainbow {

/// Append-only JSON-lines log. Every append is one line written under a
/// mutex, so concurrent writers never interleave. A default-constructed log
/// discards records.
class RunLog {
public:
    RunLog() = default;
    explicit RunLog(const std::filesystem::path& path);
    /// Path from the flag if given, else from RAINBOW_LOG, else disabled.
    static RunLog open(const std::optional<std::string>& flag);

    bool enabled() const { return out_.is_open(); }
    const std::filesystem::path& path() const { return path_; }
    /// record must be a JSON object; timestamp and subcommand are prepended.
    void append(const std::string& subcommand, const std::string& record_json);

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mutex_;
};

std::string utc_timestamp();

struct SweepGrid {
    std::vector<std::string> patterns;  // tags or pattern files
    std::vector<std::size_t> hosts;
    std::vector<Color> ks;
    std::vector<std::uint64_t> seeds;
};

struct SweepRow {
    std::string pattern;
    std::size_t n = 0;
    Color k = 0;
    std::uint64_t seed = 0;
    std::string outcome;  // success | refused | error
    std::string stage;    // refusal stage or error code, empty on success
    std::int64_t micros = 0;
};

/// Cells in grid order (pattern, n, k, seed, innermost last). Rows come back
/// in that order whatever the thread count; a cell that throws becomes an
/// "error" row and the sweep carries on.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, const FinderConfig& config = {}, unsigned threads = 1,
                                RunLog* log = nullptr);

/// One finder call on a uniform family, with the certificate re-verified.
SweepRow run_cell(const PatternGraph& pattern, const std::string& label, std::size_t n, Color k, std::uint64_t seed,
                  const FinderConfig& config = {});

inline const char* kSweepHeader = "pattern,n,k,seed,outcome,stage,micros";
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Tag understood by parse_pattern, or a path to a pattern file.
PatternGraph resolve_pattern(const std::string& spec);

struct BenchRow {
    std::string pattern;
    std::size_t n = 0;
    Color k = 0;
    std::size_t runs = 0;
    std::size_t successes = 0;
    double mean_micros = 0;
    double max_micros = 0;
};

/// Every desk point over seeds 0..seeds-1.
std::vector<BenchRow> run_bench(std::size_t seeds, const FinderConfig& config = {}, unsigned threads = 1,
                                RunLog* log = nullptr);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace rainbow
