#ifndef CYCLODET_STORE_HPP
#define CYCLODET_STORE_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclodet/report.hpp"

namespace cyclodet {

inline constexpr int kSchemaVersion = 1;

// Raised for unreadable or corrupt stores; line is 1-based.
struct StoreError : std::runtime_error {
    StoreError(const std::string& msg, std::size_t line_no) : std::runtime_error(msg), line(line_no) {}
    std::size_t line = 0;
};

// Canonical JSON object for one record. Key order is fixed, so a parse /
// re-serialize round trip is byte-identical.
Json record_to_json(const VerificationReport& r);

// One line of JSONL, no trailing newline.
std::string record_to_jsonl(const VerificationReport& r);

// Parses a whole store; throws StoreError with the offending line number.
std::vector<Json> load_store(const std::string& path);

// (identity, q) pairs present in a store, the resume key.
std::set<std::pair<std::string, std::uint64_t>> store_keys(const std::vector<Json>& records);

bool store_has_fail(const std::vector<Json>& records);

// Writes `identity,q,p,deg,status,lhs,rhs,witness,elapsed_ms` rows; list
// values are joined with ';'. Returns the number of data rows.
std::size_t export_csv(const std::string& store_path, const std::string& out_path);

}  // namespace cyclodet

#endif
