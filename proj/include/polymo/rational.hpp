#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace polymo {

// Exact rational scalar. mpq_class keeps values reduced with positive
// denominator, which is exactly the canonical form every routine here
// relies on; string input still needs an explicit canonicalize().
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", with optional sign; rejects anything else.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad rational literal: " + s);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

using QVector = std::vector<Rational>;

}  // namespace polymo
