#include "cyclodet/store.hpp"

#include <fstream>
#include <sstream>

namespace cyclodet {

Json record_to_json(const VerificationReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["identity"] = to_string(r.identity);
    j["q"] = r.q;
    j["p"] = r.p;
    j["deg"] = r.deg;
    j["modulus"] = r.modulus;
    j["status"] = status_string(r);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["witness"] = r.witness;
    j["divergence_notes"] = r.divergence_notes;
    j["seed"] = r.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string record_to_jsonl(const VerificationReport& r) {
    return record_to_json(r).dump();
}

std::vector<Json> load_store(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StoreError("cannot open store: " + path, 0);
    std::vector<Json> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("identity") || !j.contains("q")) {
            throw StoreError("corrupt store line " + std::to_string(line_no) + " in " + path, line_no);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::set<std::pair<std::string, std::uint64_t>> store_keys(const std::vector<Json>& records) {
    std::set<std::pair<std::string, std::uint64_t>> keys;
    for (const Json& j : records) {
        keys.emplace(j.at("identity").get<std::string>(), j.at("q").get<std::uint64_t>());
    }
    return keys;
}

bool store_has_fail(const std::vector<Json>& records) {
    for (const Json& j : records) {
        if (j.at("status").get<std::string>() == "fail") return true;
    }
    return false;
}

namespace {

std::string csv_value(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ';';
            out += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
        }
        return out;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::size_t export_csv(const std::string& store_path, const std::string& out_path) {
    const std::vector<Json> records = load_store(store_path);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output: " + out_path);
    out << "identity,q,p,deg,status,lhs,rhs,witness,elapsed_ms\n";
    for (const Json& j : records) {
        out << csv_escape(csv_value(j.at("identity"))) << ',' << csv_value(j.at("q")) << ','
            << csv_value(j.at("p")) << ',' << csv_value(j.at("deg")) << ','
            << csv_escape(csv_value(j.at("status"))) << ',' << csv_escape(csv_value(j.at("lhs"))) << ','
            << csv_escape(csv_value(j.at("rhs"))) << ',' << csv_escape(csv_value(j.at("witness"))) << ','
            << csv_value(j.at("elapsed_ms")) << '\n';
    }
    if (!out) throw std::runtime_error("write failure: " + out_path);
    return records.size();
}

}  // namespace cyclodet
