#ifndef CYCLODET_SCAN_HPP
#define CYCLODET_SCAN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cyclodet {

enum class IdentitySelector { A, B, Corollary, Lemmas, All };

struct ScanConfig {
    IdentitySelector selector = IdentitySelector::All;
    std::uint64_t q_min = 3;
    std::uint64_t q_max = 3;
    int jobs = 1;
    std::string out;  // empty streams records to stdout (no resume)
    bool resume = false;
    std::uint64_t seed = 0;
    bool include_edge = false;  // enables the q = 3 edge run of ThmA
};

// Enumerates odd prime powers in [q_min, q_max], runs the selected
// verifications per q (jobs > 1 evaluates fields concurrently; the store
// writer stays a single serialized sink sorted by q), appends records to
// the store, and returns 0 when no record failed, 1 when some record
// failed. Usage and store errors are thrown; the CLI maps them to exit 2.
// With resume set, (identity, q) pairs already present are not recomputed.
int run_verify(const ScanConfig& cfg);

}  // namespace cyclodet

#endif
