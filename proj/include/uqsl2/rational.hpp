#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace uqsl2 {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which the whole stack relies on for equality checks.
using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("parse_rational: empty string");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
    r.canonicalize();
    if (r.get_den() <= 0) {
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    }
    return r;
}

// Always renders as "num/den" so serialized forms are uniform.
inline std::string format_rational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Compact human form: "3", "-1/4".
inline std::string pretty_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace uqsl2
