#ifndef CYCLODET_REPORT_HPP
#define CYCLODET_REPORT_HPP

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclodet/field.hpp"

namespace cyclodet {

using Json = nlohmann::ordered_json;

enum class Identity {
    ThmA,
    ThmB,
    CorollaryA,
    Lemma2_1,
    Lemma2_2,
    Lemma3_1,
    Lemma3_2,
    Eq3_2,
    Carlitz,
    SingularScanEntry,
};

enum class Status { Pass, Fail, Skipped };

const char* to_string(Identity id);
std::optional<Identity> identity_from_string(std::string_view s);

// One verification outcome for a single (identity, q). The lhs/rhs carry
// canonical encodings of the two compared sides; witness is the element or
// index that certifies the relation when one exists.
struct VerificationReport {
    Identity identity = Identity::ThmA;
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned deg = 1;
    std::vector<std::uint32_t> modulus{0, 1};
    Status status = Status::Pass;
    std::string skip_reason;  // machine-readable, set only when Skipped
    Json lhs;
    Json rhs;
    Json witness;
    std::vector<std::string> divergence_notes;
    std::uint64_t seed = 0;
    std::uint64_t elapsed_ms = 0;

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
};

// "pass", "fail", or "skipped(<reason>)".
std::string status_string(const VerificationReport& r);

// Canonical element encoding: a single integer for prime fields, the
// coefficient list (length deg) for extensions.
Json encode_elem(const Field& F, Fq x);

void stamp_field(VerificationReport& r, const Field& F);

class StopWatch {
public:
    StopWatch() : t0_(std::chrono::steady_clock::now()) {}
    std::uint64_t elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - t0_;
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace cyclodet

#endif
