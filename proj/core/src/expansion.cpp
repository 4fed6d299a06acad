#include "slidepoly/expansion.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace slidepoly {

namespace {

std::string label(BasisTag tag, const WeakComposition& a) {
    return std::string(basis_name(tag)) + "[" + a.str() + "]";
}

ExpansionResult expand_via_wdes(BasisTag src, BasisTag tgt, FamilyTag fam,
                                const WeakComposition& a) {
    ExpansionResult out;
    out.source_label = label(src, a);
    out.target = tgt;
    out.num_vars = a.length();
    for (const Filling& s : enumerate(fam, a)) {
        WeakDescentResult w = weak_descent_composition(fam, s);
        if (!w.empty()) out.coeffs[*w.value] += 1;
    }
    return out;
}

// Numbers of DIRFs of the given shape, grouped by row strip shape.
const std::map<WeakComposition, int>& dirf_strip_counts(const WeakComposition& shape) {
    static std::map<WeakComposition, std::map<WeakComposition, int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
    std::map<WeakComposition, int> counts;
    for (const Filling& q : enumerate(FamilyTag::DIRF, shape))
        ++counts[row_strip_shape(q)];
    return cache.emplace(shape, std::move(counts)).first->second;
}

int dirf_count(const WeakComposition& shape, const WeakComposition& strip) {
    const auto& counts = dirf_strip_counts(shape);
    auto it = counts.find(strip);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

}  // namespace

std::string ExpansionResult::str() const {
    std::string out = "# " + source_label + " -> " + std::string(basis_name(target)) + "\n";
    for (const auto& [idx, c] : coeffs) {
        out += c.str();
        out += '\t';
        out += idx.str();
        out += '\n';
    }
    return out;
}

Polynomial ExpansionResult::reconstruct() const {
    Polynomial p(num_vars);
    bool quasi = !is_polynomial_basis(target);
    for (const auto& [idx, c] : coeffs) {
        if (quasi && idx.length() > num_vars) continue;  // element vanishes
        p += c * basis_polynomial(target, idx,
                                  quasi ? std::optional<int>(num_vars) : std::nullopt);
    }
    return p;
}

ExpansionResult expand_drev_to_fslide(const WeakComposition& a) {
    return expand_via_wdes(BasisTag::DREV_SLIDE, BasisTag::FSLIDE, FamilyTag::SRIF, a);
}

ExpansionResult expand_qk_to_fslide(const WeakComposition& a) {
    return expand_via_wdes(BasisTag::QKEY, BasisTag::FSLIDE, FamilyTag::RSF, a);
}

ExpansionResult expand_dis_to_yfslide(const WeakComposition& a) {
    return expand_via_wdes(BasisTag::DIS_SLIDE, BasisTag::YFSLIDE, FamilyTag::SIF, a);
}

ExpansionResult expand_yqk_to_yfslide(const WeakComposition& a) {
    return expand_via_wdes(BasisTag::YQKEY, BasisTag::YFSLIDE, FamilyTag::YSF, a);
}

ExpansionResult expand_dis_to_yqk(const WeakComposition& a) {
    ExpansionResult out;
    out.source_label = label(BasisTag::DIS_SLIDE, a);
    out.target = BasisTag::YQKEY;
    out.num_vars = a.length();
    WeakComposition strip = rev(a);
    for (const WeakComposition& b : weak_compositions(a.total(), a.length()))
        if (int c = dirf_count(b, strip); c > 0) out.coeffs[b] = c;
    return out;
}

ExpansionResult expand_drev_to_qk(const WeakComposition& a) {
    ExpansionResult out;
    out.source_label = label(BasisTag::DREV_SLIDE, a);
    out.target = BasisTag::QKEY;
    out.num_vars = a.length();
    for (const WeakComposition& b : weak_compositions(a.total(), a.length()))
        if (int c = dirf_count(rev(b), a); c > 0) out.coeffs[b] = c;
    return out;
}

ExpansionResult expand_rdi_to_qs(const Composition& alpha, int m) {
    ExpansionResult out;
    out.source_label = label(BasisTag::REV_DUAL_IMM_QS, alpha.wc()) + " vars=" + std::to_string(m);
    out.target = BasisTag::QS;
    out.num_vars = m;
    for (const Composition& beta : compositions_of(alpha.total()))
        if (int c = dirf_count(rev(beta).wc(), alpha.wc()); c > 0)
            out.coeffs[beta.wc()] = c;
    return out;
}

ExpansionResult generic_change_of_basis(BasisTag target, const Polynomial& p) {
    if (!is_polynomial_basis(target))
        throw std::invalid_argument("generic_change_of_basis: polynomial target basis required");
    if (is_young_polynomial_basis(target)) {
        ExpansionResult inner =
            generic_change_of_basis(reverse_counterpart(target), reverse_variables(p));
        ExpansionResult out;
        out.source_label = "polynomial";
        out.target = target;
        out.num_vars = p.num_vars();
        for (const auto& [b, c] : inner.coeffs) out.coeffs[rev(b)] = c;
        return out;
    }
    ExpansionResult out;
    out.source_label = "polynomial";
    out.target = target;
    out.num_vars = p.num_vars();

    std::uint64_t budget = 0;
    std::set<int> degrees;
    for (const auto& [e, c] : p.terms()) degrees.insert(e.total());
    for (int d : degrees) budget += binom(d + p.num_vars() - 1, p.num_vars() - 1);

    Polynomial work = p;
    std::uint64_t iters = 0;
    while (!work.is_zero()) {
        if (++iters > budget)
            throw std::runtime_error("generic_change_of_basis: triangularity violated");
        auto [b, c] = work.min_term();
        out.coeffs[b] += c;
        work -= c * basis_polynomial(target, b);
    }
    return out;
}

StableLimitReport verify_stable_limit(const WeakComposition& a, int m) {
    if (m < 1) throw std::invalid_argument("verify_stable_limit: m must be positive");
    StableLimitReport rep;
    WeakComposition padded = prepend_zeros(a, m);
    Composition fl = flat(a);
    int n = a.total();

    Polynomial lhs1 = truncate_vars(basis_polynomial(BasisTag::DREV_SLIDE, padded), m);
    Polynomial rhs1 = basis_polynomial(BasisTag::REV_DUAL_IMM_QS, fl.wc(), m);
    rep.drev_restriction_ok = lhs1 == rhs1;

    Polynomial lhs2 = truncate_vars(basis_polynomial(BasisTag::QKEY, padded), m);
    Polynomial rhs2 = basis_polynomial(BasisTag::QS, fl.wc(), m);
    rep.qkey_restriction_ok = lhs2 == rhs2;

    // Flattened weak descent compositions vs descent compositions of the
    // collapsed standard tableaux.  With m >= n-1 padding no wdes can be
    // EMPTY and the multisets must agree exactly; for smaller m every
    // nonempty flattened wdes must still occur on the tableau side.
    std::map<WeakComposition, int> fromF, fromT;
    for (const Filling& s : enumerate(FamilyTag::SRIF, padded)) {
        WeakDescentResult w = weak_descent_composition(FamilyTag::SRIF, s);
        if (!w.empty()) ++fromF[flat(*w.value).wc()];
    }
    for (const Filling& s : enumerate(FamilyTag::SRIT, fl.wc(), n)) {
        Composition dc = descent_set_to_composition(descent_set(FamilyTag::SRIT, s), n);
        ++fromT[dc.wc()];
    }
    if (m >= n - 1) {
        rep.multiset_ok = fromF == fromT;
    } else {
        rep.multiset_ok = true;
        for (const auto& [comp, cnt] : fromF) {
            auto it = fromT.find(comp);
            if (it == fromT.end() || it->second < cnt) rep.multiset_ok = false;
        }
    }

    if (!rep.passed()) rep.detail = "a=" + a.str() + " m=" + std::to_string(m);
    return rep;
}

std::map<Filling, Filling> psi_class_bijection(const Filling& s) {
    if (!validate(FamilyTag::SRIF, s))
        throw std::invalid_argument("psi_class_bijection: not a valid SRIF");
    WeakDescentResult w = weak_descent_composition(FamilyTag::SRIF, s);
    if (w.empty())
        throw std::invalid_argument("psi_class_bijection: weak descent composition is EMPTY");
    const WeakComposition& shape = *w.value;
    int L = shape.length();

    std::map<Filling, Filling> out;
    for (const Filling& t : enumerate(FamilyTag::SSRIF, s.shape())) {
        if (standardize(FamilyTag::SSRIF, t) != s) continue;
        RunDecomposition d = run_decomposition_semistandard(FamilyTag::SSRIF, t);
        if (d.failed)
            throw std::logic_error("psi_class_bijection: run anchors failed unexpectedly");
        std::vector<std::vector<int>> rows(static_cast<size_t>(L));
        for (size_t j = 0; j < d.runs.size(); ++j)
            rows[static_cast<size_t>(d.anchors[j] - 1)] = d.runs[j];
        WeakComposition got_shape([&] {
            std::vector<int> parts;
            for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
            return parts;
        }());
        if (got_shape != shape)
            throw std::logic_error("psi_class_bijection: image shape mismatch");
        out.emplace(t, Filling(shape, std::move(rows)));
    }
    return out;
}

PositivityReport expand_into_atoms(const Polynomial& p) {
    PositivityReport rep;
    rep.expansion = generic_change_of_basis(BasisTag::ATOM, p);
    for (const auto& [idx, c] : rep.expansion.coeffs)
        if (c < 0) rep.nonnegative = false;
    return rep;
}

}  // namespace slidepoly
