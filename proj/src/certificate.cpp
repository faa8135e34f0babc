#include "lenscalc/certificate.hpp"

namespace lenscalc {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::refuted: return "refuted";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "verified") return Verdict::verified;
    if (s == "refuted") return Verdict::refuted;
    if (s == "unknown") return Verdict::unknown;
    throw std::invalid_argument("unknown verdict: " + s);
}

Json Certificate::to_json() const {
    Json p = params;
    p["claim"] = claim;
    if (!warnings.empty()) p["warnings"] = warnings;
    Json j;
    j["verdict"] = to_string(verdict);
    j["backend"] = backend;
    j["params"] = std::move(p);
    j["witness"] = witness;
    j["version"] = 1;
    return j;
}

Certificate Certificate::from_json(const Json& j) {
    Certificate c;
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    c.backend = j.at("backend").get<std::string>();
    c.params = j.at("params");
    c.witness = j.at("witness");
    if (j.at("version").get<int>() != 1) throw std::invalid_argument("unsupported version");
    c.claim = c.params.value("claim", "");
    if (c.params.contains("warnings"))
        c.warnings = c.params["warnings"].get<std::vector<std::string>>();
    c.params.erase("claim");
    c.params.erase("warnings");
    return c;
}

std::string Certificate::dump() const { return to_json().dump(2) + "\n"; }

int exit_code_for(const std::vector<Certificate>& certs) {
    bool any_refuted = false, any_unknown = false, any_verified = false;
    for (const auto& c : certs) {
        if (c.witness.is_object() && c.witness.value("informational", false)) continue;
        switch (c.verdict) {
            case Verdict::refuted: any_refuted = true; break;
            case Verdict::unknown: any_unknown = true; break;
            case Verdict::verified: any_verified = true; break;
        }
    }
    if (any_refuted) return 1;
    if (any_unknown) return 2;
    return any_verified ? 0 : 0;
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(dec(x));
    return a;
}

Vec vec_from_json(const Json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(parse_int(x.get<std::string>()));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json a = Json::array();
    for (const auto& r : m) a.push_back(vec_to_json(r));
    return a;
}

Matrix matrix_from_json(const Json& j) {
    Matrix m;
    for (const auto& r : j) m.push_back(vec_from_json(r));
    return m;
}

}  // namespace lenscalc
