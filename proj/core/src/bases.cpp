#include "slidepoly/bases.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace slidepoly {

namespace {

const std::pair<BasisTag, std::string_view> kBasisNames[] = {
    {BasisTag::DREV_SLIDE, "DREV_SLIDE"}, {BasisTag::DIS_SLIDE, "DIS_SLIDE"},
    {BasisTag::QKEY, "QKEY"},             {BasisTag::YQKEY, "YQKEY"},
    {BasisTag::FSLIDE, "FSLIDE"},         {BasisTag::YFSLIDE, "YFSLIDE"},
    {BasisTag::ATOM, "ATOM"},
    {BasisTag::MONO_QS, "MONO_QS"},       {BasisTag::FUND_QS, "FUND_QS"},
    {BasisTag::DUAL_IMM_QS, "DUAL_IMM_QS"},
    {BasisTag::REV_DUAL_IMM_QS, "REV_DUAL_IMM_QS"},
    {BasisTag::YQS, "YQS"},               {BasisTag::QS, "QS"},
};

Polynomial sum_over_fillings(FamilyTag family, const WeakComposition& shape,
                             int max_entry, int num_vars) {
    Polynomial p(num_vars);
    for (const Filling& f : enumerate(family, shape, max_entry))
        p.add_term(weight(f, num_vars), 1);
    return p;
}

Polynomial compute(BasisTag tag, const WeakComposition& a, int m);

std::map<std::tuple<BasisTag, WeakComposition, int>, Polynomial> basis_cache;
std::mutex basis_cache_mu;

Polynomial cached(BasisTag tag, const WeakComposition& a, int m) {
    auto& cache = basis_cache;
    auto& mu = basis_cache_mu;
    std::tuple<BasisTag, WeakComposition, int> key{tag, a, m};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Polynomial p = compute(tag, a, m);
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace

void clear_basis_cache() {
    std::lock_guard<std::mutex> lk(basis_cache_mu);
    basis_cache.clear();
}

namespace {

Polynomial compute(BasisTag tag, const WeakComposition& a, int m) {
    int len = a.length();
    switch (tag) {
        case BasisTag::DREV_SLIDE:
            return sum_over_fillings(FamilyTag::SSRIF, a, len, len);
        case BasisTag::QKEY:
            return sum_over_fillings(FamilyTag::RSSF, a, len, len);
        case BasisTag::FSLIDE:
            return sum_over_fillings(FamilyTag::FSSF, a, len, len);
        case BasisTag::ATOM:
            return sum_over_fillings(FamilyTag::ATOM, a, len, len);
        case BasisTag::DIS_SLIDE:
        case BasisTag::YQKEY:
        case BasisTag::YFSLIDE:
            return reverse_variables(cached(reverse_counterpart(tag), rev(a), len));
        case BasisTag::MONO_QS: {
            Composition alpha(a);
            int k = alpha.length();
            Polynomial p(m);
            std::vector<int> pick;
            auto rec = [&](auto&& self, int next) -> void {
                if (static_cast<int>(pick.size()) == k) {
                    std::vector<int> e(static_cast<size_t>(m), 0);
                    for (int i = 0; i < k; ++i) e[static_cast<size_t>(pick[static_cast<size_t>(i)])] = alpha[i];
                    p.add_term(WeakComposition(std::move(e)), 1);
                    return;
                }
                for (int i = next; i < m; ++i) {
                    pick.push_back(i);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
            return p;
        }
        case BasisTag::FUND_QS: {
            Composition alpha(a);
            Polynomial p(m);
            for (const Composition& beta : refinements(alpha))
                p += cached(BasisTag::MONO_QS, beta.wc(), m);
            return p;
        }
        case BasisTag::DUAL_IMM_QS:
            return sum_over_fillings(FamilyTag::SSIT, Composition(a).wc(), m, m);
        case BasisTag::REV_DUAL_IMM_QS:
            return sum_over_fillings(FamilyTag::SSRIT, Composition(a).wc(), m, m);
        case BasisTag::YQS:
            return sum_over_fillings(FamilyTag::YCT, Composition(a).wc(), m, m);
        case BasisTag::QS:
            return reverse_variables(cached(BasisTag::YQS, rev(Composition(a)).wc(), m));
    }
    throw std::logic_error("bad BasisTag");
}

}  // namespace

BasisTag parse_basis(std::string_view name) {
    for (const auto& [tag, s] : kBasisNames)
        if (s == name) return tag;
    throw std::invalid_argument("unknown basis: '" + std::string(name) + "'");
}

std::string_view basis_name(BasisTag tag) {
    for (const auto& [t, s] : kBasisNames)
        if (t == tag) return s;
    throw std::logic_error("bad BasisTag");
}

bool is_polynomial_basis(BasisTag tag) {
    switch (tag) {
        case BasisTag::DREV_SLIDE:
        case BasisTag::DIS_SLIDE:
        case BasisTag::QKEY:
        case BasisTag::YQKEY:
        case BasisTag::FSLIDE:
        case BasisTag::YFSLIDE:
        case BasisTag::ATOM:
            return true;
        default:
            return false;
    }
}

bool is_young_polynomial_basis(BasisTag tag) {
    return tag == BasisTag::DIS_SLIDE || tag == BasisTag::YQKEY || tag == BasisTag::YFSLIDE;
}

BasisTag reverse_counterpart(BasisTag tag) {
    switch (tag) {
        case BasisTag::DIS_SLIDE: return BasisTag::DREV_SLIDE;
        case BasisTag::YQKEY: return BasisTag::QKEY;
        case BasisTag::YFSLIDE: return BasisTag::FSLIDE;
        case BasisTag::YQS: return BasisTag::REV_DUAL_IMM_QS;
        default:
            throw std::invalid_argument(
                std::string("no reverse counterpart for ") + std::string(basis_name(tag)));
    }
}

Polynomial basis_polynomial(BasisTag tag, const WeakComposition& index,
                            std::optional<int> num_vars) {
    if (is_polynomial_basis(tag)) {
        if (num_vars && *num_vars != index.length())
            throw std::invalid_argument("basis_polynomial: polynomial bases use length(index) variables");
        return cached(tag, index, index.length());
    }
    if (!num_vars)
        throw std::invalid_argument("basis_polynomial: quasisymmetric bases need num_vars");
    if (*num_vars < 0) throw std::invalid_argument("basis_polynomial: negative num_vars");
    return cached(tag, index, *num_vars);
}

BasisCheckReport verify_basis_property(BasisTag tag, int n, int length) {
    BasisCheckReport rep;
    if (!is_polynomial_basis(tag) || is_young_polynomial_basis(tag))
        throw std::invalid_argument("verify_basis_property: reverse polynomial basis required");
    for (const WeakComposition& a : weak_compositions(n, length)) {
        ++rep.checked;
        Polynomial p = basis_polynomial(tag, a);
        bool ok = !p.is_zero();
        if (ok) {
            auto [e, c] = p.min_term();
            ok = e == a && c == 1;
        }
        if (!ok) {
            rep.all_pass = false;
            rep.violations.push_back(std::string(basis_name(tag)) + "[" + a.str() + "]");
        }
    }
    return rep;
}

}  // namespace slidepoly
