#include "cyclodet/scan.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclodet/primes.hpp"
#include "cyclodet/store.hpp"
#include "cyclodet/theorems.hpp"

namespace cyclodet {
namespace {

constexpr int kScanLemma31Instances = 10;
constexpr int kScanLemma31MaxN = 8;
constexpr std::uint64_t kCarlitzMaxP = 31;

using KeySet = std::set<std::pair<std::string, std::uint64_t>>;

bool wanted(const ScanConfig& cfg, Identity id) {
    switch (cfg.selector) {
        case IdentitySelector::A: return id == Identity::ThmA;
        case IdentitySelector::B: return id == Identity::ThmB;
        case IdentitySelector::Corollary: return id == Identity::CorollaryA;
        case IdentitySelector::Lemmas:
            return id == Identity::Lemma2_1 || id == Identity::Lemma2_2 || id == Identity::Lemma3_1 ||
                   id == Identity::Lemma3_2 || id == Identity::Eq3_2;
        case IdentitySelector::All: return true;
    }
    return false;
}

bool pending(const KeySet& done, Identity id, std::uint64_t q) {
    return !done.contains({to_string(id), q});
}

std::vector<VerificationReport> verify_one_q(const PrimePower& pp, const ScanConfig& cfg, const KeySet& done) {
    std::vector<VerificationReport> out;
    auto want = [&](Identity id) { return wanted(cfg, id) && pending(done, id, pp.q); };

    const bool needs_field = want(Identity::ThmA) || want(Identity::ThmB) || want(Identity::Lemma2_1) ||
                             want(Identity::Lemma2_2) || want(Identity::Lemma3_1) || want(Identity::Lemma3_2) ||
                             want(Identity::Eq3_2);
    if (!needs_field && !want(Identity::CorollaryA) && !want(Identity::Carlitz)) return out;

    std::optional<Field> field;
    if (needs_field) field.emplace(field_of_order(pp.q));

    if (want(Identity::ThmA)) {
        if (pp.q == 3 && !cfg.include_edge) {
            VerificationReport r;
            r.identity = Identity::ThmA;
            stamp_field(r, *field);
            r.status = Status::Skipped;
            r.skip_reason = "q = 3 edge requires include_edge";
            out.push_back(std::move(r));
        } else {
            out.push_back(thm_A_report(*field));
        }
    }
    if (want(Identity::ThmB)) out.push_back(thm_B_report(*field));
    if (want(Identity::CorollaryA) && pp.n == 1) out.push_back(corollary_A_report(pp.p));
    if (want(Identity::Lemma2_1)) {
        out.push_back(lemma_2_1_check(*field, build_circulant_row(*field, field->primitive_element())));
    }
    if (want(Identity::Lemma2_2)) {
        out.push_back(lemma_2_2_check(*field, 3 * static_cast<std::int64_t>(pp.q - 1)));
    }
    if (want(Identity::Lemma3_1)) {
        out.push_back(lemma_3_1_random_suite(*field, cfg.seed, kScanLemma31Instances, kScanLemma31MaxN));
    }
    if (want(Identity::Lemma3_2)) out.push_back(lemma_3_2_check(*field));
    if (want(Identity::Eq3_2)) out.push_back(eq_3_2_check(*field));
    if (want(Identity::Carlitz) && pp.n == 1 && pp.p <= kCarlitzMaxP) out.push_back(carlitz_check(pp.p));

    for (auto& r : out) r.seed = cfg.seed;
    return out;
}

}  // namespace

int run_verify(const ScanConfig& cfg) {
    if (cfg.q_min > cfg.q_max) throw std::invalid_argument("q_min must not exceed q_max");
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (cfg.q_max > max_field_order()) {
        throw std::invalid_argument("q_max exceeds configured bound (CYCLODET_MAX_Q)");
    }
    if (cfg.resume && cfg.out.empty()) throw std::invalid_argument("resume requires an output store path");

    std::vector<Json> existing;
    KeySet done;
    if (cfg.resume) {
        existing = load_store(cfg.out);  // throws StoreError when missing or corrupt
        done = store_keys(existing);
    }

    const std::vector<PrimePower> qs = odd_prime_powers(cfg.q_min, cfg.q_max);
    std::vector<std::vector<VerificationReport>> slots(qs.size());

#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs) if (cfg.jobs > 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(qs.size()); ++i) {
        slots[static_cast<std::size_t>(i)] = verify_one_q(qs[static_cast<std::size_t>(i)], cfg, done);
    }

    bool any_fail = store_has_fail(existing);
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::app);
        if (!file) throw std::runtime_error("cannot open output store: " + cfg.out);
        sink = &file;
    }
    for (const auto& slot : slots) {  // slots are in ascending q order
        for (const auto& r : slot) {
            if (r.failed()) any_fail = true;
            *sink << record_to_jsonl(r) << '\n';
        }
    }
    if (!cfg.out.empty() && !file) throw std::runtime_error("write failure: " + cfg.out);
    return any_fail ? 1 : 0;
}

}  // namespace cyclodet
