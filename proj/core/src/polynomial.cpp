#include "slidepoly/polynomial.hpp"

#include <cstdint>
#include <stdexcept>

namespace slidepoly {

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("Polynomial: num_vars < 0");
}

Polynomial Polynomial::monomial(const WeakComposition& exp, Integer coeff) {
    Polynomial p(exp.length());
    p.add_term(exp, coeff);
    return p;
}

Integer Polynomial::coeff(const WeakComposition& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial& Polynomial::add_term(const WeakComposition& exp, const Integer& c) {
    if (exp.length() != num_vars_)
        throw std::invalid_argument("add_term: exponent length != num_vars");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && num_vars_ == 0) num_vars_ = o.num_vars_;
    if (o.num_vars_ != num_vars_)
        throw std::invalid_argument("polynomial arithmetic: num_vars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && num_vars_ == 0) num_vars_ = o.num_vars_;
    if (o.num_vars_ != num_vars_)
        throw std::invalid_argument("polynomial arithmetic: num_vars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::pair<WeakComposition, Integer> Polynomial::min_term() const {
    if (terms_.empty()) throw std::logic_error("min_term of zero polynomial");
    return *terms_.begin();  // map is keyed in lex order (all keys equal length)
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        out += "*x^[";
        out += e.str();
        out += ']';
    }
    return out;
}

Polynomial reverse_variables(const Polynomial& p) {
    Polynomial out(p.num_vars());
    for (const auto& [e, c] : p.terms()) out.add_term(rev(e), c);
    return out;
}

Polynomial truncate_vars(const Polynomial& p, int m) {
    if (m < 0 || m > p.num_vars())
        throw std::invalid_argument("truncate_vars: m out of range");
    Polynomial out(m);
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (int i = m; i < e.length(); ++i)
            if (e[i] != 0) { keep = false; break; }
        if (!keep) continue;
        std::vector<int> head(e.parts().begin(), e.parts().begin() + m);
        out.add_term(WeakComposition(std::move(head)), c);
    }
    return out;
}

namespace {
std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}
}  // namespace

bool is_quasisymmetric(const Polynomial& p) {
    // Group terms by the pattern (nonzero parts, in order).  Quasisymmetry
    // means every pattern occurs at all C(m, len) placements with one shared
    // coefficient.
    std::map<Composition, std::pair<Integer, std::uint64_t>> groups;
    for (const auto& [e, c] : p.terms()) {
        Composition pat = flat(e);
        auto [it, inserted] = groups.emplace(pat, std::make_pair(c, std::uint64_t{1}));
        if (!inserted) {
            if (it->second.first != c) return false;
            ++it->second.second;
        }
    }
    for (const auto& [pat, cc] : groups)
        if (cc.second != binom(p.num_vars(), pat.length())) return false;
    return true;
}

}  // namespace slidepoly
