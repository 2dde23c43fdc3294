// Small formatting helpers shared by the case files.
#pragma once

#include "planes/exactmath.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace planes::detail {

inline std::string str(const BigInt& x) { return x.str(); }
inline std::string str(long long x) { return std::to_string(x); }

/// "a=1, b=2" from name/value pairs.
inline std::string kv(std::initializer_list<std::pair<std::string, std::string>> items) {
    std::string out;
    for (const auto& [k, v] : items) {
        if (!out.empty()) out += ", ";
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

}  // namespace planes::detail
