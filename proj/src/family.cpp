#include "lenscalc/family.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace lenscalc {

namespace {
bool is_builtin_name(const std::string& s) {
    return s == "f1" || s == "f2" || s == "f3" || s == "cor";
}
}  // namespace

ParamFamily ParamFamily::builtin(const std::string& name, BigInt p) {
    if (!is_builtin_name(name))
        throw std::invalid_argument("unknown family '" + name + "' (builtins: f1, f2, f3, cor)");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + dec(p));
    if (name == "cor" && p == 2)
        throw std::invalid_argument("family 'cor' is stated for odd primes only");
    ParamFamily f;
    f.p_ = std::move(p);
    f.name_ = name;
    return f;
}

ParamFamily ParamFamily::from_table(BigInt p, std::vector<FamilyStage> table, std::string source) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + dec(p));
    if (table.empty()) throw std::invalid_argument("family table is empty");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].k < 0) throw std::invalid_argument("k must be >= 0 at index " + std::to_string(i));
        if (table[i].n < 1) throw std::invalid_argument("n must be >= 1 at index " + std::to_string(i));
    }
    ParamFamily f;
    f.p_ = std::move(p);
    f.name_ = std::move(source);
    f.table_ = std::move(table);
    return f;
}

ParamFamily ParamFamily::parse(std::istream& in, const std::string& source) {
    std::string line;
    std::optional<BigInt> p;
    std::vector<FamilyStage> table;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (!p) {
            if (first.rfind("p=", 0) != 0) fail("expected header 'p=<prime>'");
            p = parse_int(first.substr(2));
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            continue;
        }
        std::string ks, ns, extra;
        if (!(ls >> ks >> ns)) fail("expected '<i> <k_i> <n_i>'");
        if (ls >> extra) fail("trailing tokens after stage line");
        BigInt idx = parse_int(first);
        if (idx != BigInt(static_cast<unsigned long>(table.size())))
            fail("indices must be contiguous from 0; expected " + std::to_string(table.size()) +
                 ", got " + dec(idx));
        table.push_back({parse_int(ks), parse_int(ns)});
    }
    if (!p) throw std::runtime_error(source + ": missing header 'p=<prime>'");
    return from_table(*p, std::move(table), source);
}

ParamFamily ParamFamily::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    return parse(in, path);
}

std::optional<std::uint64_t> ParamFamily::max_index() const {
    if (is_builtin()) return std::nullopt;
    return table_.size() - 1;
}

FamilyStage ParamFamily::eval(std::uint64_t i) const {
    if (!is_builtin()) {
        if (i >= table_.size())
            throw std::out_of_range("index " + std::to_string(i) + " beyond table (max " +
                                    std::to_string(table_.size() - 1) + ")");
        return table_[i];
    }
    const BigInt bi(static_cast<unsigned long>(i));
    if (name_ == "f1") return {bi + 1, pow_big(p_, i) + 1};
    if (name_ == "f2") return {bi + 1, pow_big(p_, i) + 2};
    if (name_ == "f3") {
        if (i > 62) throw std::out_of_range("2^i exponent stage too large for i > 62");
        const std::uint64_t two_i = std::uint64_t(1) << i;
        return {BigInt(static_cast<unsigned long>(two_i)), pow_big(p_, two_i - 1) + 1};
    }
    // cor: k_i = i, n_i = 3p^i - sum_{s=1}^{i-1} p^s + 1
    BigInt acc = 0;
    for (std::uint64_t s = 1; s + 1 <= i; ++s) acc += pow_big(p_, s);
    return {bi, 3 * pow_big(p_, i) - acc + 1};
}

Json ParamFamily::to_json() const {
    Json j;
    j["p"] = dec(p_);
    j["name"] = name_;
    j["builtin"] = is_builtin();
    if (!is_builtin()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < table_.size(); ++i)
            rows.push_back(Json{{"i", i}, {"k", dec(table_[i].k)}, {"n", dec(table_[i].n)}});
        j["table"] = std::move(rows);
    }
    return j;
}

std::vector<std::string> ParamFamily::warnings() const {
    std::vector<std::string> w;
    if (p_ == 2)
        w.push_back(
            "p=2 permitted here, but the underlying sequence results are stated for odd primes");
    return w;
}

}  // namespace lenscalc
