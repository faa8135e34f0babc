#pragma once

#include <string>

#include "lenscalc/certificate.hpp"

namespace lenscalc {

struct CheckResult {
    bool ok = false;
    std::string message;  // "valid" or the first failure, deterministic
};

// Independent certificate validator: re-derives generators, residues and
// inequalities from params with its own small arithmetic helpers and
// replays the witness. Does not call the ring/lattice/genus/els code paths.
CheckResult check_certificate(const Json& cert);

}  // namespace lenscalc
