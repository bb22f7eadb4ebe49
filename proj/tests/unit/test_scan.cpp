#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <tuple>

#include "gw/scan.hpp"

using namespace gw;

namespace {

std::string temp_path(const std::string& stem) {
    return (std::filesystem::temp_directory_path() /
            (stem + "." + std::to_string(::getpid()) + ".json"))
        .string();
}

using Anomaly = std::tuple<int, long, Classification>; // (k, base, type)

std::set<Anomaly> anomaly_set(const std::vector<CongruenceRecord>& records) {
    std::set<Anomaly> out;
    for (const CongruenceRecord& rec : records) {
        if (rec.classification != Classification::Expected) {
            out.insert({rec.k, rec.base, rec.classification});
        }
    }
    return out;
}

} // namespace

TEST_CASE("csv rendering is stable and sorted by (k, base)") {
    std::vector<CongruenceRecord> recs = {
        {31, 2, 3, 4, false, Classification::Stronger},
        {3, 1, 4, 3, false, Classification::Weaker},
        {7, 1, 4, 4, false, Classification::Expected},
        {11, 1, 4, 8, true, Classification::Stronger},
    };
    CHECK(render_records(recs, Format::Csv, false) ==
          "base,k,expected,observed,saturated,type\n"
          "3,1,4,3,false,Weaker\n"
          "11,1,4,>=8,true,Stronger\n"
          "31,2,3,4,false,Stronger\n");
    CHECK(render_records(recs, Format::Csv, true) ==
          "base,k,expected,observed,saturated,type\n"
          "3,1,4,3,false,Weaker\n"
          "7,1,4,4,false,Expected\n"
          "11,1,4,>=8,true,Stronger\n"
          "31,2,3,4,false,Stronger\n");
}

TEST_CASE("checkpoint round trip") {
    std::string path = temp_path("gw_ckpt_roundtrip");
    Checkpoint cp;
    cp.params = {100, 4, 8};
    cp.completed_bases = {3, 5, 7};
    cp.records = {
        {3, 1, 4, 3, false, Classification::Weaker},
        {5, 1, 4, 3, false, Classification::Weaker},
        {7, 1, 4, 4, false, Classification::Expected},
    };
    save_checkpoint(path, cp);
    Checkpoint loaded = load_checkpoint(path, cp.params);
    CHECK(loaded.params == cp.params);
    CHECK(loaded.completed_bases == cp.completed_bases);
    CHECK(loaded.records == cp.records);
    std::remove(path.c_str());
}

TEST_CASE("corrupt checkpoints are refused") {
    std::string path = temp_path("gw_ckpt_corrupt");
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_checkpoint(path), CheckpointError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_checkpoint(path), CheckpointError); // missing file
}

TEST_CASE("parameter mismatch is refused") {
    std::string path = temp_path("gw_ckpt_params");
    Checkpoint cp;
    cp.params = {100, 4, 8};
    save_checkpoint(path, cp);
    CHECK_NOTHROW(load_checkpoint(path, ScanParams{100, 4, 8}));
    CHECK_THROWS_AS(load_checkpoint(path, ScanParams{200, 4, 8}), CheckpointError);
    CHECK_THROWS_AS(load_checkpoint(path, ScanParams{100, 3, 8}), CheckpointError);
    std::remove(path.c_str());
}

TEST_CASE("scan up to 40 finds exactly the known anomalies for k <= 3") {
    ScanResult result = run_scan({40, 3, 8}, 2);
    CHECK(result.complete);
    std::set<Anomaly> expected = {
        {1, 3, Classification::Weaker},    {1, 5, Classification::Weaker},
        {1, 31, Classification::Stronger}, {1, 37, Classification::Stronger},
        {2, 5, Classification::Weaker},    {2, 31, Classification::Stronger},
        {2, 37, Classification::Stronger}, {3, 5, Classification::Weaker},
        {3, 31, Classification::Stronger}, {3, 37, Classification::Stronger},
    };
    CHECK(anomaly_set(result.records) == expected);
    // the two on-pattern small-prime rows stay Expected
    for (const CongruenceRecord& rec : result.records) {
        if (rec.base == 3 && rec.k == 2) CHECK(rec.classification == Classification::Expected);
        if (rec.base == 3 && rec.k == 3) CHECK(rec.classification == Classification::Expected);
    }
}

TEST_CASE("scan results are worker-count independent") {
    ScanResult one = run_scan({60, 2, 8}, 1);
    ScanResult many = run_scan({60, 2, 8}, 4);
    CHECK(one.records == many.records);
    CHECK(render_records(one.records, Format::Json, true) ==
          render_records(many.records, Format::Json, true));
}

TEST_CASE("interrupted scans resume to identical results") {
    std::string path = temp_path("gw_ckpt_resume");
    std::remove(path.c_str());
    ScanResult partial = run_scan({60, 2, 8}, 2, path, 3);
    CHECK_FALSE(partial.complete);
    CHECK(partial.primes_scanned >= 3);
    ScanResult resumed = run_scan({60, 2, 8}, 2, path);
    CHECK(resumed.complete);
    ScanResult fresh = run_scan({60, 2, 8}, 2);
    CHECK(resumed.records == fresh.records);
    std::remove(path.c_str());
}

TEST_CASE("format parsing") {
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("table") == Format::Table);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}
