#include "cyclodet/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "cyclodet/field.hpp"
#include "cyclodet/matrix.hpp"
#include "cyclodet/primes.hpp"
#include "cyclodet/scan.hpp"
#include "cyclodet/store.hpp"
#include "cyclodet/theorems.hpp"
#include "cyclodet/trinomial.hpp"

namespace cyclodet::cli {
namespace {

Json trinomial_json(std::int64_t n, std::optional<std::uint64_t> modulus, std::optional<std::int64_t> k) {
    auto row = trinomial_row_cached(n, modulus);
    auto value_of = [&](const Int& c) {
        // Exact coefficients can exceed any fixed-width integer; emit them
        // as decimal strings. Residues stay plain integers.
        return modulus ? Json(c.get_ui()) : Json(c.get_str());
    };
    Json j;
    j["n"] = n;
    if (modulus) j["mod"] = *modulus;
    if (k) {
        j["k"] = *k;
        j["coefficient"] = value_of(row->at(*k));
    } else {
        Json arr = Json::array();
        for (const Int& c : row->coeffs) arr.push_back(value_of(c));
        j["coefficients"] = arr;  // k = -n..n
    }
    return j;
}

Json det_json(std::uint64_t q) {
    if (q > max_field_order()) throw std::invalid_argument("q exceeds configured bound (CYCLODET_MAX_Q)");
    const Field F = field_of_order(q);
    Json j;
    j["q"] = F.q();
    j["p"] = F.p();
    j["deg"] = F.deg();
    j["modulus"] = F.modulus();
    j["det"] = encode_elem(F, det_S(F));
    return j;
}

int emit_records(const std::vector<VerificationReport>& records, const std::string& out) {
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!out.empty()) {
        file.open(out, std::ios::app);
        if (!file) throw std::runtime_error("cannot open output store: " + out);
        sink = &file;
    }
    bool any_fail = false;
    for (const auto& r : records) {
        if (r.failed()) any_fail = true;
        *sink << record_to_jsonl(r) << '\n';
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact verification of cyclotomic-matrix determinant identities over GF(q)"};
    app.require_subcommand(1);

    // verify
    ScanConfig cfg;
    std::string theorem = "all";
    auto* verify = app.add_subcommand("verify", "scan a q-range and append JSONL verification records");
    verify->add_option("--theorem", theorem, "identity selector: A, B, corollary, lemmas, all")
        ->check(CLI::IsMember({"A", "B", "corollary", "lemmas", "all"}));
    verify->add_option("--q-min", cfg.q_min, "smallest q (odd prime powers only are scanned)");
    verify->add_option("--q-max", cfg.q_max, "largest q")->required();
    verify->add_option("--jobs", cfg.jobs, "worker count; record content is identical at any value");
    verify->add_option("--out", cfg.out, "JSONL store path (appended); stdout when omitted");
    verify->add_flag("--resume", cfg.resume, "recompute only (identity, q) pairs missing from the store");
    verify->add_option("--seed", cfg.seed, "seed for randomized checks");
    verify->add_flag("--include-edge", cfg.include_edge, "run the q = 3 edge case of theorem A");

    // det
    std::uint64_t det_q = 0;
    auto* det = app.add_subcommand("det", "determinant of S_q as JSON");
    det->add_option("--q", det_q, "odd prime power")->required();

    // trinomial
    std::int64_t tri_n = 0;
    std::optional<std::uint64_t> tri_mod;
    std::optional<std::int64_t> tri_k;
    auto* tri = app.add_subcommand("trinomial", "trinomial coefficient row of (x + 1/x + 1)^n as JSON");
    tri->add_option("--n", tri_n, "row order")->required();
    tri->add_option("--mod", tri_mod, "odd prime modulus; exact bignum row when omitted");
    tri->add_option("--k", tri_k, "emit only the coefficient at signed index k");

    // singular-scan
    std::uint64_t ss_min = 7, ss_max = 7;
    bool ss_confirm = false;
    std::string ss_out;
    auto* ss = app.add_subcommand("singular-scan", "flag q with a vanishing trinomial coefficient");
    ss->add_option("--q-min", ss_min, "smallest q")->required();
    ss->add_option("--q-max", ss_max, "largest q")->required();
    ss->add_flag("--confirm", ss_confirm, "also build S_q and compare against rank deficiency");
    ss->add_option("--out", ss_out, "JSONL store path (appended); stdout when omitted");

    // carlitz
    std::uint64_t ca_p = 0;
    std::string ca_out;
    auto* ca = app.add_subcommand("carlitz", "characteristic-polynomial cross-check of C_p");
    ca->add_option("--p", ca_p, "odd prime, 3 <= p <= 31")->required();
    ca->add_option("--out", ca_out, "JSONL store path (appended); stdout when omitted");

    // export
    std::string ex_in, ex_out;
    auto* ex = app.add_subcommand("export", "JSONL store to CSV");
    ex->add_option("--in", ex_in, "JSONL store path")->required();
    ex->add_option("--out", ex_out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            static const std::map<std::string, IdentitySelector> selectors{
                {"A", IdentitySelector::A},
                {"B", IdentitySelector::B},
                {"corollary", IdentitySelector::Corollary},
                {"lemmas", IdentitySelector::Lemmas},
                {"all", IdentitySelector::All},
            };
            cfg.selector = selectors.at(theorem);
            return run_verify(cfg);
        }
        if (*det) {
            std::cout << det_json(det_q).dump() << '\n';
            return 0;
        }
        if (*tri) {
            std::cout << trinomial_json(tri_n, tri_mod, tri_k).dump() << '\n';
            return 0;
        }
        if (*ss) {
            return emit_records(singularity_scan(ss_min, ss_max, ss_confirm), ss_out);
        }
        if (*ca) {
            return emit_records({carlitz_check(ca_p)}, ca_out);
        }
        if (*ex) {
            std::cout << export_csv(ex_in, ex_out) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace cyclodet::cli
