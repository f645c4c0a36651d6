#include "cyclodet/report.hpp"

namespace cyclodet {

const char* to_string(Identity id) {
    switch (id) {
        case Identity::ThmA: return "ThmA";
        case Identity::ThmB: return "ThmB";
        case Identity::CorollaryA: return "CorollaryA";
        case Identity::Lemma2_1: return "Lemma2_1";
        case Identity::Lemma2_2: return "Lemma2_2";
        case Identity::Lemma3_1: return "Lemma3_1";
        case Identity::Lemma3_2: return "Lemma3_2";
        case Identity::Eq3_2: return "Eq3_2";
        case Identity::Carlitz: return "Carlitz";
        case Identity::SingularScanEntry: return "SingularScanEntry";
    }
    return "?";
}

std::optional<Identity> identity_from_string(std::string_view s) {
    for (Identity id : {Identity::ThmA, Identity::ThmB, Identity::CorollaryA, Identity::Lemma2_1,
                        Identity::Lemma2_2, Identity::Lemma3_1, Identity::Lemma3_2, Identity::Eq3_2,
                        Identity::Carlitz, Identity::SingularScanEntry}) {
        if (s == to_string(id)) return id;
    }
    return std::nullopt;
}

std::string status_string(const VerificationReport& r) {
    switch (r.status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped(" + r.skip_reason + ")";
    }
    return "?";
}

Json encode_elem(const Field& F, Fq x) {
    if (F.deg() == 1) return Json(F.lift(x));
    return Json(F.coeffs(x));
}

void stamp_field(VerificationReport& r, const Field& F) {
    r.q = F.q();
    r.p = F.p();
    r.deg = F.deg();
    r.modulus = F.modulus();
}

}  // namespace cyclodet
