#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lenscalc/bigint.hpp"
#include "lenscalc/certificate.hpp"

namespace lenscalc {

struct FamilyStage {
    BigInt k;  // exponent stage: group Z/p^k   (k >= 0; rings need k >= 1)
    BigInt n;  // dimension stage: lens space L^n(p^k)
};

// parameter family (k_i, n_i)_{i>=0} of an essential lens sequence,
// either one of the built-in closed forms or a finite table from a file
class ParamFamily {
public:
    static ParamFamily builtin(const std::string& name, BigInt p);  // f1, f2, f3, cor
    static ParamFamily from_table(BigInt p, std::vector<FamilyStage> table, std::string source);

    // family file: header "p=<prime>", then lines "<i> <k_i> <n_i>" with
    // contiguous indices from 0; '#' comments and blank lines ignored
    static ParamFamily parse(std::istream& in, const std::string& source);
    static ParamFamily load(const std::string& path);

    const BigInt& p() const { return p_; }
    const std::string& name() const { return name_; }
    bool is_builtin() const { return table_.empty(); }
    // largest evaluable index; tables are finite, closed forms unbounded
    std::optional<std::uint64_t> max_index() const;

    FamilyStage eval(std::uint64_t i) const;

    Json to_json() const;  // enough for a checker to re-evaluate stages
    std::vector<std::string> warnings() const;

private:
    BigInt p_;
    std::string name_;                // "f1", "f2", "f3", "cor", or file source
    std::vector<FamilyStage> table_;  // empty for builtins
};

}  // namespace lenscalc
