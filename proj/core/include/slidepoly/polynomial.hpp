#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "slidepoly/composition.hpp"

namespace slidepoly {

using Integer = boost::multiprecision::cpp_int;

// Multivariate polynomial in x_1..x_m with exact integer coefficients.
// Exponent vectors always have length m; terms with zero coefficient are
// never stored.
class Polynomial {
public:
    Polynomial() : num_vars_(0) {}
    explicit Polynomial(int num_vars);
    static Polynomial monomial(const WeakComposition& exp, Integer coeff = 1);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<WeakComposition, Integer>& terms() const { return terms_; }
    Integer coeff(const WeakComposition& exp) const;

    Polynomial& add_term(const WeakComposition& exp, const Integer& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Integer& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
    friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial&) const = default;

    // Lex-smallest exponent with its coefficient; throws on the zero polynomial.
    std::pair<WeakComposition, Integer> min_term() const;

    // Canonical text form: terms in lex order of exponents, each printed as
    // c*x^[e1,e2,...], joined by " + ".  The zero polynomial prints "0".
    std::string str() const;

private:
    int num_vars_;
    std::map<WeakComposition, Integer> terms_;
};

// p(x_m, ..., x_1): reverse the variable order.
Polynomial reverse_variables(const Polynomial& p);
// Set x_{m+1} = ... = 0 and keep only the first m variables.
Polynomial truncate_vars(const Polynomial& p, int m);
// True iff the coefficient of x_{i_1}^{a_1}...x_{i_k}^{a_k} is the same for
// every strictly increasing choice of indices, for every composition a.
bool is_quasisymmetric(const Polynomial& p);

}  // namespace slidepoly
