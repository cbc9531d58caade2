#pragma once

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lerch/exact.hpp"

namespace lerch::kit {

struct RealLiteral {
    Rational value;
    bool approximate = false;  // decimal or exponent notation
};

// Integers, p/q, and decimals with optional exponent. Decimals convert to
// the exact rational they spell.
inline RealLiteral parse_real(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    auto digits = [&](std::size_t& k) {
        std::size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        return text.substr(start, k - start);
    };
    // cpp_int reads a leading 0 as octal
    auto big = [](const std::string& d) {
        std::size_t nz = d.find_first_not_of('0');
        return BigInt(nz == std::string::npos ? std::string("0") : d.substr(nz));
    };
    std::string whole = digits(i);
    RealLiteral out;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den = digits(i);
        if (whole.empty() || den.empty() || i != text.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        BigInt d = big(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        out.value = Rational(big(whole), d);
        if (neg) out.value = -out.value;
        return out;
    }
    std::string frac;
    if (i < text.size() && text[i] == '.') {
        ++i;
        frac = digits(i);
        out.approximate = true;
    }
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed number '" + text + "'");
    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
        std::string ed = digits(i);
        if (ed.empty() || ed.size() > 6) throw std::invalid_argument("malformed exponent in '" + text + "'");
        exp10 = std::stol(ed);
        if (eneg) exp10 = -exp10;
        out.approximate = true;
    }
    if (i != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
    BigInt mant = big(whole + frac);
    exp10 -= static_cast<long>(frac.size());
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::abs(exp10)));
    out.value = exp10 >= 0 ? Rational(mant * scale) : Rational(mant, scale);
    if (neg) out.value = -out.value;
    return out;
}

// Real or complex parameter: "1/2", "0.3", "0.3+0.2i", "-1/2 - 3/4 i", "2i",
// "inf". Whitespace is ignored.
inline Param parse_param(const std::string& raw) {
    std::string t;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty parameter");
    if (t == "inf" || t == "+inf" || t == "infinity") {
        Param p(std::numeric_limits<double>::infinity());
        p.infinite = true;
        return p;
    }
    Rational re = 0, im = 0;
    bool approx = false;
    if (t.back() == 'i') {
        std::string body = t.substr(0, t.size() - 1);
        // split at the last sign that is not leading and not part of an exponent
        std::size_t cut = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;)
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                cut = k;
                break;
            }
        std::string rs = cut == std::string::npos ? "" : body.substr(0, cut);
        std::string is = cut == std::string::npos ? body : body.substr(cut);
        if (is.empty() || is == "+" || is == "-") is += "1";
        if (!rs.empty()) {
            RealLiteral r = parse_real(rs);
            re = r.value;
            approx = r.approximate;
        }
        RealLiteral q = parse_real(is);
        im = q.value;
        approx = approx || q.approximate;
    } else {
        RealLiteral r = parse_real(t);
        re = r.value;
        approx = r.approximate;
    }
    Param p;
    p.exact = ExactComplex{re, im};
    p.value = p.exact->to_complex();
    p.approximate = approx;
    return p;
}

}  // namespace lerch::kit
