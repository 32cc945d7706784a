#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "arrtop/errors.hpp"

namespace arrtop {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/**
 * Parse a rational literal of the form "p/q" or "p" (optionally signed).
 * `field` names the input location and is echoed in error messages.
 */
inline Rational parse_rational(const std::string& text, const std::string& field) {
    auto bad = [&](const std::string& why) {
        throw ParseError("field " + field + ": " + why + " in rational literal \"" + text + "\"");
    };
    std::string s = text;
    if (s.empty()) bad("empty string");
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto parse_int = [&](const std::string& part) -> Integer {
        std::size_t i = 0;
        bool neg = false;
        if (i < part.size() && (part[i] == '-' || part[i] == '+')) {
            neg = part[i] == '-';
            ++i;
        }
        if (i == part.size()) bad("missing digits");
        Integer v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') bad("invalid character");
            v = v * 10 + (part[i] - '0');
        }
        return neg ? Integer(-v) : v;
    };
    Integer p = parse_int(num);
    Integer q = parse_int(den);
    if (q == 0) bad("zero denominator");
    if (q < 0) {  // cpp_rational wants a positive denominator
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace arrtop
