#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymo/rational.hpp"

namespace polymo {

// Exponent vector over a fixed variable set (one slot per Cox variable).
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic, x0 > x1 > ... ; returns true when a > b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// Sparse multivariate polynomial over Q. Terms are kept in descending
// graded-lex order, so begin() is the leading term and iteration order is
// the canonical serialization order. No zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index, const Rational& coeff = 1);
    static Polynomial monomial(Monomial m, const Rational& coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return int(terms_.size()); }

    // nullopt when the polynomial is not a nonzero constant
    std::optional<Rational> as_constant() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const = default;

    Polynomial derivative(int var) const;

    // Total degree of the leading term; -1 for the zero polynomial.
    int degree() const;
    // True when all terms share one total degree (zero counts as homogeneous).
    bool is_homogeneous() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    void check_vars(const Polynomial& o) const;

    int nvars_ = 0;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Product a*b; throws on variable-set mismatch (same as operator*).
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// Exact quotient f/g, or nullopt when no polynomial q with q*g == f exists.
// Leading-term long division in graded-lex order; a leftover remainder at
// any step certifies non-divisibility. Throws on g == 0.
std::optional<Polynomial> poly_exact_div(const Polynomial& f, const Polynomial& g);

}  // namespace polymo
