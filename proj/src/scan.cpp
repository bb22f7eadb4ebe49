#include "gw/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gw/primes.hpp"

namespace gw {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw Error("unknown format '" + s + "' (expected table, csv or json)");
}

std::string observed_str(const CongruenceRecord& rec) {
    if (rec.saturated) return ">=" + std::to_string(rec.observed);
    return std::to_string(rec.observed);
}

namespace {

Classification classification_from_string(const std::string& s) {
    if (s == "Expected") return Classification::Expected;
    if (s == "Weaker") return Classification::Weaker;
    if (s == "Stronger") return Classification::Stronger;
    if (s == "None") return Classification::None;
    throw CheckpointError("unknown classification '" + s + "'");
}

ordered_json record_to_json(const CongruenceRecord& rec) {
    ordered_json j;
    j["base"] = rec.base;
    j["k"] = rec.k;
    j["expected"] = rec.expected;
    if (rec.saturated) {
        j["observed"] = observed_str(rec);
    } else {
        j["observed"] = rec.observed;
    }
    j["saturated"] = rec.saturated;
    j["type"] = to_string(rec.classification);
    return j;
}

CongruenceRecord record_from_json(const ordered_json& j) {
    CongruenceRecord rec;
    rec.base = j.at("base").get<long>();
    rec.k = j.at("k").get<int>();
    rec.expected = j.at("expected").get<int>();
    rec.saturated = j.at("saturated").get<bool>();
    if (j.at("observed").is_string()) {
        std::string s = j.at("observed").get<std::string>();
        if (s.rfind(">=", 0) != 0) throw CheckpointError("bad observed value '" + s + "'");
        rec.observed = std::stoi(s.substr(2));
    } else {
        rec.observed = j.at("observed").get<int>();
    }
    rec.classification = classification_from_string(j.at("type").get<std::string>());
    return rec;
}

} // namespace

Checkpoint load_checkpoint(const std::string& path, const std::optional<ScanParams>& expected) {
    std::ifstream in(path);
    if (!in) throw CheckpointError("cannot read checkpoint file " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CheckpointError("corrupt checkpoint " + path + ": " + e.what());
    }
    Checkpoint cp;
    try {
        cp.schema_version = j.at("schema_version").get<int>();
        if (cp.schema_version != 1) {
            throw CheckpointError("unsupported checkpoint schema version " +
                                  std::to_string(cp.schema_version));
        }
        const auto& params = j.at("parameters");
        cp.params.p_max = params.at("p_max").get<long>();
        cp.params.k_max = params.at("k_max").get<int>();
        cp.params.precision = params.at("precision").get<int>();
        cp.completed_bases = j.at("completed_bases").get<std::vector<long>>();
        for (const auto& rj : j.at("records")) cp.records.push_back(record_from_json(rj));
    } catch (const CheckpointError&) {
        throw;
    } catch (const std::exception& e) {
        throw CheckpointError("corrupt checkpoint " + path + ": " + e.what());
    }
    if (expected && !(cp.params == *expected)) {
        throw CheckpointError("checkpoint " + path + " was written with different parameters");
    }
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    ordered_json j;
    j["schema_version"] = cp.schema_version;
    j["parameters"] = {{"p_max", cp.params.p_max},
                       {"k_max", cp.params.k_max},
                       {"precision", cp.params.precision}};
    j["completed_bases"] = cp.completed_bases;
    ordered_json records = ordered_json::array();
    for (const CongruenceRecord& rec : cp.records) records.push_back(record_to_json(rec));
    j["records"] = std::move(records);

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("cannot write checkpoint file " + tmp);
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw CheckpointError("cannot move checkpoint into place at " + path);
    }
}

ScanResult run_scan(const ScanParams& params, int jobs, const std::string& checkpoint_path,
                    long stop_after) {
    if (params.p_max < 3) throw Error("scan requires p_max >= 3");
    if (params.k_max < 1) throw Error("scan requires k_max >= 1");
    if (params.precision <= expected_exponent(1)) {
        throw Error("scan precision must exceed 4");
    }

    std::vector<long> primes = primes_upto(params.p_max);
    // p = 2 never contributes: the only candidate 1+i has even norm.
    std::erase(primes, 2L);

    std::map<long, std::vector<CongruenceRecord>> done;
    if (!checkpoint_path.empty()) {
        std::ifstream probe(checkpoint_path);
        if (probe.good()) {
            Checkpoint cp = load_checkpoint(checkpoint_path, params);
            std::set<long> known(primes.begin(), primes.end());
            for (long base : cp.completed_bases) {
                if (known.count(base)) done[base] = {};
            }
            for (const CongruenceRecord& rec : cp.records) {
                auto it = done.find(rec.base);
                if (it != done.end()) it->second.push_back(rec);
            }
        }
    }

    std::vector<long> pending;
    for (long p : primes) {
        if (!done.count(p)) pending.push_back(p);
    }

    if (jobs <= 0) {
        jobs = static_cast<int>(std::thread::hardware_concurrency());
        if (jobs <= 0) jobs = 1;
    }
    jobs = std::min(jobs, static_cast<int>(std::max<std::size_t>(pending.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::atomic<long> newly_committed{0};
    std::mutex mu;
    std::exception_ptr worker_error;

    auto worker = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            long p = pending[i];
            try {
                std::vector<CongruenceRecord> recs =
                    classify_all(p, params.k_max, params.precision);
                std::lock_guard<std::mutex> lock(mu);
                done[p] = std::move(recs);
                if (!checkpoint_path.empty()) {
                    Checkpoint cp;
                    cp.params = params;
                    for (const auto& [base, recs_for_base] : done) {
                        cp.completed_bases.push_back(base);
                        cp.records.insert(cp.records.end(), recs_for_base.begin(),
                                          recs_for_base.end());
                    }
                    save_checkpoint(checkpoint_path, cp);
                }
                long committed = newly_committed.fetch_add(1) + 1;
                if (stop_after > 0 && committed >= stop_after) stop.store(true);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!worker_error) worker_error = std::current_exception();
                stop.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);

    ScanResult result;
    result.primes_scanned = static_cast<long>(done.size());
    result.complete = (done.size() == primes.size());
    for (const auto& [base, recs] : done) {
        result.records.insert(result.records.end(), recs.begin(), recs.end());
    }
    return result;
}

std::string render_records(std::vector<CongruenceRecord> records, Format format,
                           bool include_expected) {
    if (!include_expected) {
        std::erase_if(records, [](const CongruenceRecord& rec) {
            return rec.classification == Classification::Expected;
        });
    }
    std::sort(records.begin(), records.end(),
              [](const CongruenceRecord& a, const CongruenceRecord& b) {
                  return std::tie(a.k, a.base) < std::tie(b.k, b.base);
              });

    std::ostringstream out;
    switch (format) {
        case Format::Csv: {
            out << "base,k,expected,observed,saturated,type\n";
            for (const CongruenceRecord& rec : records) {
                out << rec.base << ',' << rec.k << ',' << rec.expected << ','
                    << observed_str(rec) << ',' << (rec.saturated ? "true" : "false") << ','
                    << to_string(rec.classification) << '\n';
            }
            break;
        }
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const CongruenceRecord& rec : records) arr.push_back(record_to_json(rec));
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::Table: {
            out << "base      k   expected  observed  type\n";
            for (const CongruenceRecord& rec : records) {
                char line[96];
                std::snprintf(line, sizeof(line), "%-9ld %-3d %-9d %-9s %s\n", rec.base, rec.k,
                              rec.expected, observed_str(rec).c_str(),
                              to_string(rec.classification));
                out << line;
            }
            break;
        }
    }
    return out.str();
}

} // namespace gw
