#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gw/sums.hpp"

namespace gw {

enum class Format { Table, Csv, Json };

/// Parse "table" / "csv" / "json"; throws Error otherwise.
Format parse_format(const std::string& s);

struct ScanParams {
    long p_max = 0;
    int k_max = 1;
    int precision = 8;

    bool operator==(const ScanParams&) const = default;
};

/// Resumable scan state: one JSON document, rewritten atomically after each
/// completed prime.  Records are kept for all (base, k), Expected included.
struct Checkpoint {
    int schema_version = 1;
    ScanParams params;
    std::vector<long> completed_bases; // sorted ascending
    std::vector<CongruenceRecord> records; // sorted by (base, k)
};

/// Throws CheckpointError on unreadable/corrupt files or parameter mismatch
/// against `expected` (when provided).
Checkpoint load_checkpoint(const std::string& path,
                           const std::optional<ScanParams>& expected = std::nullopt);

/// Write-temp-then-rename.
void save_checkpoint(const std::string& path, const Checkpoint& cp);

struct ScanResult {
    std::vector<CongruenceRecord> records; // sorted by (base, k)
    bool complete = true;                  // false when stopped early
    long primes_scanned = 0;
};

/// Classify every (prime p <= p_max skipping 2, k = 1..k_max) with a worker
/// pool over primes.  Results merge in ascending base order, so output is
/// independent of the worker count.  With a checkpoint path, already-completed
/// primes are loaded and the file is rewritten after each newly finished
/// prime.  stop_after > 0 stops once that many primes have been committed
/// (test hook for interruption).
ScanResult run_scan(const ScanParams& params, int jobs,
                    const std::string& checkpoint_path = "", long stop_after = -1);

/// Render records sorted by (k, base).  Only non-Expected records unless
/// include_expected; saturated observations render as ">=M".
std::string render_records(std::vector<CongruenceRecord> records, Format format,
                           bool include_expected);

/// "7" or ">=8" for saturated observations.
std::string observed_str(const CongruenceRecord& rec);

} // namespace gw
