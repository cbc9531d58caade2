#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lerch {

enum class LetterKind { Z0, Z1, Y };

struct GeneratorLetter {
    LetterKind kind = LetterKind::Z0;
    long n = 0;         // index of Y_n
    int exponent = 1;   // +1 or -1

    GeneratorLetter inverse() const { return {kind, n, -exponent}; }
    bool is_z() const { return kind != LetterKind::Y; }
    friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

inline GeneratorLetter Z0(int e = 1) { return {LetterKind::Z0, 0, e}; }
inline GeneratorLetter Z1(int e = 1) { return {LetterKind::Z1, 0, e}; }
inline GeneratorLetter Y(long n, int e = 1) { return {LetterKind::Y, n, e}; }

// Element of F<Z0, Z1> x (free abelian group on the Y_n). The Z part is kept
// freely reduced, the Y part as nonzero exponent sums.
struct HomotopyWord {
    std::vector<GeneratorLetter> z_part;
    std::map<long, long> y_exponents;

    bool is_identity() const { return z_part.empty() && y_exponents.empty(); }
    friend bool operator==(const HomotopyWord&, const HomotopyWord&) = default;
};

struct ZProfile {
    std::map<long, long> h;  // net exponent of Z0^k Z1 Z0^-k
    long t = 0;              // residual Z0 power
};

inline HomotopyWord reduce_word(const std::vector<GeneratorLetter>& raw) {
    HomotopyWord w;
    for (const auto& g : raw) {
        if (g.exponent != 1 && g.exponent != -1)
            throw std::invalid_argument("generator exponent must be +1 or -1");
        if (g.kind == LetterKind::Y) {
            long& k = w.y_exponents[g.n];
            k += g.exponent;
            if (k == 0) w.y_exponents.erase(g.n);
            continue;
        }
        if (!w.z_part.empty() && w.z_part.back() == g.inverse())
            w.z_part.pop_back();
        else
            w.z_part.push_back(g);
    }
    return w;
}

// Concatenation, written left to right in path order.
inline HomotopyWord operator*(const HomotopyWord& a, const HomotopyWord& b) {
    std::vector<GeneratorLetter> raw = a.z_part;
    raw.insert(raw.end(), b.z_part.begin(), b.z_part.end());
    for (const auto* m : {&a.y_exponents, &b.y_exponents})
        for (auto [n, k] : *m)
            for (long i = 0; i < std::abs(k); ++i) raw.push_back(Y(n, k > 0 ? 1 : -1));
    return reduce_word(raw);
}

inline HomotopyWord inverse(const HomotopyWord& w) {
    HomotopyWord r;
    for (auto it = w.z_part.rbegin(); it != w.z_part.rend(); ++it) r.z_part.push_back(it->inverse());
    for (auto [n, k] : w.y_exponents) r.y_exponents[n] = -k;
    return r;
}

inline HomotopyWord commutator(const HomotopyWord& a, const HomotopyWord& b) {
    return a * b * inverse(a) * inverse(b);
}

inline ZProfile z_profile(const std::vector<GeneratorLetter>& z_part) {
    ZProfile p;
    long o = 0;
    for (const auto& g : z_part) {
        if (g.kind == LetterKind::Z0) {
            o += g.exponent;
        } else if (g.kind == LetterKind::Z1) {
            long& v = p.h[o];
            v += g.exponent;
            if (v == 0) p.h.erase(o);
        }
    }
    p.t = o;
    return p;
}

inline std::string to_string(const GeneratorLetter& g) {
    std::string s = g.kind == LetterKind::Z0 ? "Z0" : g.kind == LetterKind::Z1 ? "Z1" : "Y" + std::to_string(g.n);
    return g.exponent == 1 ? s : s + "^-1";
}

inline std::string to_string(const HomotopyWord& w) {
    std::string out;
    auto put = [&](const std::string& tok) {
        if (!out.empty()) out += ' ';
        out += tok;
    };
    for (std::size_t i = 0; i < w.z_part.size();) {
        std::size_t j = i;
        while (j < w.z_part.size() && w.z_part[j] == w.z_part[i]) ++j;
        long run = static_cast<long>(j - i) * w.z_part[i].exponent;
        std::string base = w.z_part[i].kind == LetterKind::Z0 ? "Z0" : "Z1";
        put(run == 1 ? base : base + "^" + std::to_string(run));
        i = j;
    }
    for (auto [n, k] : w.y_exponents) {
        std::string base = "Y" + std::to_string(n);
        put(k == 1 ? base : base + "^" + std::to_string(k));
    }
    return out.empty() ? "e" : out;
}

inline constexpr long max_word_exponent = 100000;

// Tokens Z0, Z1, Y<n>, each with an optional ^<int>; "e" or "" is the identity.
inline std::vector<GeneratorLetter> parse_letters(const std::string& text) {
    std::vector<GeneratorLetter> raw;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "e" || tok == "1") continue;
        std::string head = tok, ex;
        const bool has_exp = tok.find('^') != std::string::npos;
        if (auto p = tok.find('^'); p != std::string::npos) {
            head = tok.substr(0, p);
            ex = tok.substr(p + 1);
        }
        auto parse_int = [&](const std::string& s) {
            if (s.empty()) throw std::invalid_argument("malformed word token '" + tok + "'");
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(s, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed word token '" + tok + "'");
            }
            if (used != s.size()) throw std::invalid_argument("malformed word token '" + tok + "'");
            return v;
        };
        GeneratorLetter g;
        if (head == "Z0")
            g = Z0();
        else if (head == "Z1")
            g = Z1();
        else if (head.size() >= 2 && head[0] == 'Y')
            g = Y(parse_int(head.substr(1)));
        else
            throw std::invalid_argument("unknown generator '" + tok + "'");
        long e = has_exp ? parse_int(ex) : 1;
        if (std::abs(e) > max_word_exponent) throw std::invalid_argument("exponent too large in '" + tok + "'");
        for (long i = 0; i < std::abs(e); ++i) raw.push_back({g.kind, g.n, e > 0 ? 1 : -1});
    }
    return raw;
}

inline HomotopyWord parse_word(const std::string& text) { return reduce_word(parse_letters(text)); }

}  // namespace lerch
