#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace tverberg {

// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
// denominator) after every arithmetic operation.
using Rat = mpq_class;

inline int sign(const Rat& x) { return sgn(x); }

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num" or "num/den" with optional leading sign on the numerator.
// Decimal points and exponents are rejected.
inline std::optional<Rat> parse_rat(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class nz, dz;
    if (nz.set_str(n, 10) != 0 || dz.set_str(std::string(den), 10) != 0) return std::nullopt;
    if (dz == 0) return std::nullopt;
    Rat r(nz, dz);
    r.canonicalize();
    return r;
}

// Canonical "num" or "num/den" form; parse_rat(to_string(x)) == x.
inline std::string to_string(const Rat& x) { return x.get_str(10); }

}  // namespace tverberg
