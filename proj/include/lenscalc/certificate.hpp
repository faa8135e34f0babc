#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lenscalc/bigint.hpp"

namespace lenscalc {

using Json = nlohmann::ordered_json;

enum class Verdict { verified, refuted, unknown };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// One verifiable claim plus the data needed to re-check it independently.
// Envelope keys are exactly: verdict, backend, params, witness, version.
// params carries a "claim" discriminator (and optional "warnings").
struct Certificate {
    Verdict verdict = Verdict::unknown;
    std::string backend;  // "exact-hnf", "modular", "formula", "none"
    std::string claim;
    Json params = Json::object();
    Json witness = Json::object();
    std::vector<std::string> warnings;

    Json to_json() const;
    static Certificate from_json(const Json& j);
    std::string dump() const;  // deterministic, 2-space indent, newline-terminated
};

// exit-code aggregation: 0 all verified, 1 any refutation/violation,
// 2 otherwise (inconclusive present). Bounds reports that are merely
// "not applicable" are informational and excluded.
int exit_code_for(const std::vector<Certificate>& certs);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

}  // namespace lenscalc
