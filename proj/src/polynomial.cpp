#include "polymo/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace polymo {

bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors, x0 heaviest
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, const Rational& coeff) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rational& coeff) {
    Polynomial p(int(m.size()));
    p.add_term(m, coeff);
    return p;
}

std::optional<Rational> Polynomial::as_constant() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (total_degree(m) != 0) return std::nullopt;
    return c;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (int(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable-set mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_vars(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_vars(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_vars(o);
    Polynomial out(nvars_);
    Monomial prod(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * m[var]);
    }
    return out;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool has_vars = total_degree(m) > 0;
        if (a != 1 || !has_vars) os << rat_to_string(a) << (has_vars ? "*" : "");
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            if (int(var_names.size()) > i) os << var_names[i];
            else os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::optional<Polynomial> poly_exact_div(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.nvars() != g.nvars()) throw std::invalid_argument("polynomial variable-set mismatch");
    const int nvars = f.nvars();
    const auto& [gm, gc] = *g.terms().begin();

    Polynomial r = f;
    Polynomial q(nvars);
    Monomial t(nvars);
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().begin();
        for (int i = 0; i < nvars; ++i) {
            t[i] = rm[i] - gm[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rational c = rc / gc;
        q.add_term(t, c);
        r = r - g * Polynomial::monomial(t, c);
    }
    return q;
}

}  // namespace polymo
