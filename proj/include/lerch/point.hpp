#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "lerch/exact.hpp"

namespace lerch {

struct LerchPoint {
    Param s;
    Param z;
    Param c;
};

enum class StratumTag {
    regular,
    removable_c,
    singular_z0,
    singular_z1,
    singular_zinf,
    singular_c,
    multiple
};

struct StratumClass {
    StratumTag tag = StratumTag::regular;
    // individual conditions that hold, e.g. {"z=1", "c=1"}
    std::vector<std::string> conditions;

    bool evaluable() const {
        return tag == StratumTag::regular || tag == StratumTag::removable_c;
    }
    std::string describe() const;
};

inline std::string to_string(StratumTag t) {
    switch (t) {
    case StratumTag::regular: return "regular";
    case StratumTag::removable_c: return "removable_c";
    case StratumTag::singular_z0: return "singular_z0";
    case StratumTag::singular_z1: return "singular_z1";
    case StratumTag::singular_zinf: return "singular_zinf";
    case StratumTag::singular_c: return "singular_c";
    case StratumTag::multiple: return "multiple";
    }
    return "regular";
}

inline std::string StratumClass::describe() const {
    std::string out = to_string(tag);
    if (!conditions.empty()) {
        out += " (";
        for (std::size_t i = 0; i < conditions.size(); ++i) {
            if (i) out += ", ";
            out += conditions[i];
        }
        out += ")";
    }
    return out;
}

namespace detail {

inline constexpr double stratum_tol = 1e-12;

inline bool param_equals(const Param& p, long v) {
    if (p.exact) return p.exact->im == 0 && p.exact->re == v;
    return std::abs(p.value - cplx(double(v), 0.0)) <= stratum_tol;
}

// Returns true and sets n when p is an integer (exactly, or within tolerance
// for inexact inputs).
inline bool param_integer(const Param& p, long& n) {
    if (p.exact) {
        if (!p.exact->is_integer()) return false;
        n = boost::multiprecision::numerator(p.exact->re).convert_to<long>();
        return true;
    }
    if (!near_integer(p.value, stratum_tol)) return false;
    n = static_cast<long>(std::round(p.value.real()));
    return true;
}

}  // namespace detail

inline StratumClass classify_stratum(const LerchPoint& p) {
    StratumClass out;
    std::vector<StratumTag> tags;
    if (p.z.infinite || !std::isfinite(std::abs(p.z.value))) {
        tags.push_back(StratumTag::singular_zinf);
        out.conditions.push_back("z=inf");
    } else if (detail::param_equals(p.z, 0)) {
        tags.push_back(StratumTag::singular_z0);
        out.conditions.push_back("z=0");
    } else if (detail::param_equals(p.z, 1)) {
        tags.push_back(StratumTag::singular_z1);
        out.conditions.push_back("z=1");
    }
    long n = 0;
    if (detail::param_integer(p.c, n)) {
        if (n >= 1) {
            tags.push_back(StratumTag::removable_c);
        } else {
            tags.push_back(StratumTag::singular_c);
        }
        out.conditions.push_back("c=" + std::to_string(n));
    }
    if (tags.empty())
        out.tag = StratumTag::regular;
    else if (tags.size() == 1)
        out.tag = tags.front();
    else
        out.tag = StratumTag::multiple;
    return out;
}

}  // namespace lerch
