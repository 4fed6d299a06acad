#include "slidepoly/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>

#include "slidepoly/expansion.hpp"
#include "slidepoly/insertion.hpp"

namespace slidepoly {

namespace {

struct Instance {
    WeakComposition a;
    int m = 0;
};

using CheckFn = std::function<std::optional<std::string>(const Instance&)>;

std::vector<WeakComposition> all_shapes(int max_n, int max_len) {
    std::vector<WeakComposition> out;
    for (int n = 1; n <= max_n; ++n)
        for (int len = 1; len <= max_len; ++len)
            for (auto& a : weak_compositions(n, len)) out.push_back(a);
    return out;
}

std::vector<Instance> shape_instances(int max_n, int max_len) {
    std::vector<Instance> out;
    for (auto& a : all_shapes(max_n, max_len)) out.push_back({a, 0});
    return out;
}

void run_over(VerifyReport& rep, const std::vector<Instance>& insts,
              const CheckFn& check, int jobs) {
    rep.instances = static_cast<long long>(insts.size());
    if (jobs <= 1) {
        for (const auto& inst : insts)
            if (auto f = check(inst)) rep.failures.push_back(*f);
        return;
    }
    size_t chunk = (insts.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
    std::vector<std::future<std::vector<std::string>>> futs;
    for (size_t lo = 0; lo < insts.size(); lo += chunk) {
        size_t hi = std::min(insts.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<std::string> fails;
            for (size_t i = lo; i < hi; ++i)
                if (auto f = check(insts[i])) fails.push_back(*f);
            return fails;
        }));
    }
    for (auto& fu : futs)
        for (auto& f : fu.get()) rep.failures.push_back(f);
}

std::string where(const Instance& inst) {
    std::string s = "a=" + inst.a.str();
    if (inst.m > 0) s += " m=" + std::to_string(inst.m);
    return s;
}

// Shared pattern: a combinatorial expansion must reproduce its source
// element and agree with the peel-off oracle.
std::optional<std::string> check_expansion(const Instance& inst, BasisTag source,
                                           BasisTag target,
                                           ExpansionResult (*expand)(const WeakComposition&)) {
    Polynomial src = basis_polynomial(source, inst.a);
    ExpansionResult e = expand(inst.a);
    if (e.reconstruct() != src) return "reconstruction failed " + where(inst);
    if (generic_change_of_basis(target, src).coeffs != e.coeffs)
        return "oracle mismatch " + where(inst);
    return std::nullopt;
}

// The Young-side coefficients must also be the reversed reverse-side ones.
std::optional<std::string> check_conjugate(const Instance& inst, const ExpansionResult& young,
                                           ExpansionResult (*reverse_side)(const WeakComposition&)) {
    std::map<WeakComposition, Integer> conj;
    for (const auto& [b, c] : reverse_side(rev(inst.a)).coeffs) conj[rev(b)] = c;
    if (conj != young.coeffs) return "reversal conjugation mismatch " + where(inst);
    return std::nullopt;
}

bool zeros_only_prefix(const WeakComposition& a) {
    bool seen = false;
    for (int i = 0; i < a.length(); ++i) {
        if (a[i] != 0) seen = true;
        else if (seen) return false;
    }
    return true;
}

}  // namespace

std::string VerifyReport::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", seconds);
    std::string out = "identity=" + identity + " range(n<=" + std::to_string(max_n) +
                      ",len<=" + std::to_string(max_len) +
                      ",vars<=" + std::to_string(max_vars) +
                      ") instances=" + std::to_string(instances) +
                      " status=" + (passed() ? "PASS" : "FAIL") + " time=" + buf;
    for (const auto& f : failures) out += "\n  FAIL " + f;
    return out;
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "thm-1.1", "thm-1.2", "thm-1.3",
        "qk-fslide", "dis-yfslide", "yqk-yfslide",
        "rdistoqk", "rditoqs",
        "atom-positivity", "basis-triangularity", "insertion-bijection",
        "quasisymmetry-criterion", "stabilization-formula",
    };
    return names;
}

VerifyReport run_identity(const std::string& name, int max_n, int max_len,
                          int max_vars, int jobs) {
    VerifyReport rep;
    rep.identity = name;
    rep.max_n = max_n;
    rep.max_len = max_len;
    rep.max_vars = max_vars;
    auto t0 = std::chrono::steady_clock::now();

    std::vector<Instance> insts;
    CheckFn check;

    if (name == "thm-1.1") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) {
            return check_expansion(i, BasisTag::DREV_SLIDE, BasisTag::FSLIDE,
                                   &expand_drev_to_fslide);
        };
    } else if (name == "qk-fslide") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) {
            return check_expansion(i, BasisTag::QKEY, BasisTag::FSLIDE, &expand_qk_to_fslide);
        };
    } else if (name == "dis-yfslide") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) -> std::optional<std::string> {
            if (auto f = check_expansion(i, BasisTag::DIS_SLIDE, BasisTag::YFSLIDE,
                                         &expand_dis_to_yfslide))
                return f;
            return check_conjugate(i, expand_dis_to_yfslide(i.a), &expand_drev_to_fslide);
        };
    } else if (name == "yqk-yfslide") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) -> std::optional<std::string> {
            if (auto f = check_expansion(i, BasisTag::YQKEY, BasisTag::YFSLIDE,
                                         &expand_yqk_to_yfslide))
                return f;
            return check_conjugate(i, expand_yqk_to_yfslide(i.a), &expand_qk_to_fslide);
        };
    } else if (name == "thm-1.3") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) {
            return check_expansion(i, BasisTag::DIS_SLIDE, BasisTag::YQKEY, &expand_dis_to_yqk);
        };
    } else if (name == "rdistoqk") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) {
            return check_expansion(i, BasisTag::DREV_SLIDE, BasisTag::QKEY, &expand_drev_to_qk);
        };
    } else if (name == "rditoqs") {
        for (int n = 1; n <= max_n; ++n)
            for (const Composition& al : compositions_of(n))
                for (int m = 1; m <= max_vars; ++m) insts.push_back({al.wc(), m});
        check = [max_len](const Instance& i) -> std::optional<std::string> {
            Composition al(i.a);
            ExpansionResult e = expand_rdi_to_qs(al, i.m);
            if (e.reconstruct() != basis_polynomial(BasisTag::REV_DUAL_IMM_QS, al.wc(), i.m))
                return "reconstruction failed " + where(i);
            // Coefficients only depend on the flattened indices: lifting the
            // index by a zero row must not change any coefficient.
            if (i.m == 1 && al.length() < max_len) {
                ExpansionResult base = expand_dis_to_yqk(al.wc());
                ExpansionResult lifted = expand_dis_to_yqk(prepend_zeros(al.wc(), 1));
                for (const auto& [b, c] : lifted.coeffs) {
                    auto it = base.coeffs.find(flat(b).wc());
                    if (it == base.coeffs.end() || it->second != c)
                        return "flattening invariance failed " + where(i);
                }
            }
            return std::nullopt;
        };
    } else if (name == "thm-1.2" || name == "stabilization-formula") {
        bool multiset = name == "stabilization-formula";
        for (auto& a : all_shapes(max_n, max_len))
            for (int m = 1; m <= max_vars; ++m) insts.push_back({a, m});
        check = [multiset](const Instance& i) -> std::optional<std::string> {
            StableLimitReport r = verify_stable_limit(i.a, i.m);
            if (multiset ? !r.multiset_ok : !(r.drev_restriction_ok && r.qkey_restriction_ok))
                return "stable limit failed " + where(i);
            return std::nullopt;
        };
    } else if (name == "insertion-bijection") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) -> std::optional<std::string> {
            InsertionBijectionReport r = verify_insertion_bijection(i.a);
            if (!r.passed()) return "insertion bijection failed " + where(i) + " " + r.detail;
            return std::nullopt;
        };
    } else if (name == "atom-positivity") {
        insts = shape_instances(max_n, max_len);
        for (int n = 1; n <= max_n; ++n)
            for (const Composition& al : compositions_of(n))
                if (al.length() <= max_vars) insts.push_back({al.wc(), max_vars});
        check = [](const Instance& i) -> std::optional<std::string> {
            Polynomial p = i.m == 0
                               ? basis_polynomial(BasisTag::DREV_SLIDE, i.a)
                               : basis_polynomial(BasisTag::REV_DUAL_IMM_QS, i.a, i.m);
            if (!expand_into_atoms(p).nonnegative) return "negative atom coefficient " + where(i);
            return std::nullopt;
        };
    } else if (name == "basis-triangularity") {
        for (BasisTag tag : {BasisTag::DREV_SLIDE, BasisTag::QKEY, BasisTag::FSLIDE,
                             BasisTag::ATOM})
            insts.push_back({WeakComposition{static_cast<int>(tag)}, 0});
        check = [max_n, max_len](const Instance& i) -> std::optional<std::string> {
            BasisTag tag = static_cast<BasisTag>(i.a[0]);
            for (int n = 0; n <= max_n; ++n)
                for (int len = 1; len <= max_len; ++len) {
                    BasisCheckReport r = verify_basis_property(tag, n, len);
                    if (!r.all_pass)
                        return std::string(basis_name(tag)) + " not unitriangular at n=" +
                               std::to_string(n) + " len=" + std::to_string(len);
                }
            return std::nullopt;
        };
    } else if (name == "quasisymmetry-criterion") {
        insts = shape_instances(max_n, max_len);
        check = [](const Instance& i) -> std::optional<std::string> {
            bool qs_rev = is_quasisymmetric(basis_polynomial(BasisTag::DREV_SLIDE, i.a));
            if (qs_rev != zeros_only_prefix(i.a))
                return "reverse quasisymmetry criterion failed " + where(i);
            bool qs_young = is_quasisymmetric(basis_polynomial(BasisTag::DIS_SLIDE, i.a));
            if (qs_young != zeros_only_prefix(rev(i.a)))
                return "Young quasisymmetry criterion failed " + where(i);
            return std::nullopt;
        };
    } else {
        throw std::invalid_argument("unknown identity: '" + name + "'");
    }

    run_over(rep, insts, check, jobs);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace slidepoly
