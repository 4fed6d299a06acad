#include "doctest.h"

#include "slidepoly/expansion.hpp"

using namespace slidepoly;

namespace {

Filling F(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Filling(WeakComposition(std::move(parts)), std::move(rows));
}

std::map<WeakComposition, Integer> coeffs(std::initializer_list<std::pair<const char*, int>> cs) {
    std::map<WeakComposition, Integer> out;
    for (const auto& [idx, c] : cs) out[WeakComposition::parse(idx)] = c;
    return out;
}

}  // namespace

TEST_CASE("slide expansion of the reverse slide element (0,3,0,2)") {
    ExpansionResult e = expand_drev_to_fslide(WeakComposition({0, 3, 0, 2}));
    CHECK(e.coeffs == coeffs({{"0,3,0,2", 1}, {"1,3,0,1", 1}, {"2,2,0,1", 1}, {"0,4,0,1", 1}}));
    CHECK(e.reconstruct() == basis_polynomial(BasisTag::DREV_SLIDE, WeakComposition({0, 3, 0, 2})));
    CHECK(e.str() ==
          "# DREV_SLIDE[0,3,0,2] -> FSLIDE\n"
          "1\t0,3,0,2\n1\t0,4,0,1\n1\t1,3,0,1\n1\t2,2,0,1\n");
}

TEST_CASE("slide expansion of the quasi-key element (0,3,0,2)") {
    ExpansionResult e = expand_qk_to_fslide(WeakComposition({0, 3, 0, 2}));
    CHECK(e.coeffs == coeffs({{"0,3,0,2", 1}, {"2,2,0,1", 1}, {"1,3,0,1", 1}}));
    CHECK(e.reconstruct() == basis_polynomial(BasisTag::QKEY, WeakComposition({0, 3, 0, 2})));
}

TEST_CASE("Young quasi-key expansion of the Young slide element (2,0,3,0)") {
    ExpansionResult e = expand_dis_to_yqk(WeakComposition({2, 0, 3, 0}));
    CHECK(e.coeffs == coeffs({{"2,0,3,0", 1}, {"1,0,4,0", 1}}));
    CHECK(e.reconstruct() == basis_polynomial(BasisTag::DIS_SLIDE, WeakComposition({2, 0, 3, 0})));
}

TEST_CASE("quasi-key expansion of the reverse slide element (0,3,0,2)") {
    ExpansionResult e = expand_drev_to_qk(WeakComposition({0, 3, 0, 2}));
    CHECK(e.coeffs == coeffs({{"0,3,0,2", 1}, {"0,4,0,1", 1}}));
    CHECK(e.reconstruct() == basis_polynomial(BasisTag::DREV_SLIDE, WeakComposition({0, 3, 0, 2})));
}

TEST_CASE("frozen multiplicity: slide expansion of (1,2,3) at (2,2,2)") {
    ExpansionResult e = expand_drev_to_fslide(WeakComposition({1, 2, 3}));
    CHECK(e.coeffs.at(WeakComposition({2, 2, 2})) == 2);
}

TEST_CASE("generic change of basis matches the combinatorial expansions") {
    for (const WeakComposition& a : weak_compositions(4, 3)) {
        Polynomial drev = basis_polynomial(BasisTag::DREV_SLIDE, a);
        CHECK(generic_change_of_basis(BasisTag::FSLIDE, drev).coeffs ==
              expand_drev_to_fslide(a).coeffs);
        CHECK(generic_change_of_basis(BasisTag::QKEY, drev).coeffs ==
              expand_drev_to_qk(a).coeffs);
    }
}

TEST_CASE("generic change of basis conjugates Young targets through reversal") {
    WeakComposition a{2, 0, 3, 0};
    Polynomial dis = basis_polynomial(BasisTag::DIS_SLIDE, a);
    ExpansionResult e = generic_change_of_basis(BasisTag::YQKEY, dis);
    CHECK(e.coeffs == expand_dis_to_yqk(a).coeffs);
    CHECK_THROWS(generic_change_of_basis(BasisTag::QS, dis));
}

TEST_CASE("quasisymmetric Schur expansion reconstructs the dual immaculate element") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& al : compositions_of(n))
            for (int m = 1; m <= 3; ++m) {
                ExpansionResult e = expand_rdi_to_qs(al, m);
                CHECK(e.reconstruct() ==
                      basis_polynomial(BasisTag::REV_DUAL_IMM_QS, al.wc(), m));
                for (const auto& [b, c] : e.coeffs) CHECK(c > 0);
            }
}

TEST_CASE("stable limits hold for a worked instance") {
    StableLimitReport rep = verify_stable_limit(WeakComposition({1, 2}), 2);
    CHECK(rep.drev_restriction_ok);
    CHECK(rep.qkey_restriction_ok);
    CHECK(rep.multiset_ok);
    CHECK(rep.passed());
    CHECK_THROWS(verify_stable_limit(WeakComposition({1, 2}), 0));
}

TEST_CASE("class bijection onto the fundamental slide fillings") {
    // the standardization of the worked semistandard example
    Filling s = F({{}, {5, 2}, {}, {7, 6, 4, 1}, {9, 8, 3}});
    Filling t = F({{}, {2, 1}, {}, {3, 3, 2, 1}, {5, 4, 2}});
    auto psi = psi_class_bijection(s);
    REQUIRE(psi.count(t) == 1);
    CHECK(psi.at(t) == F({{1, 1}, {2, 2, 2}, {}, {3, 3}, {5, 4}}));

    for (int n = 1; n <= 4; ++n)
        for (int len = 1; len <= 3; ++len)
            for (const WeakComposition& a : weak_compositions(n, len))
                for (const Filling& srif : enumerate(FamilyTag::SRIF, a)) {
                    WeakDescentResult w = weak_descent_composition(FamilyTag::SRIF, srif);
                    if (w.empty()) continue;
                    auto map = psi_class_bijection(srif);
                    auto fssfs = enumerate(FamilyTag::FSSF, *w.value);
                    CHECK(map.size() == fssfs.size());
                    std::set<Filling> images;
                    for (const auto& [tt, k] : map) {
                        CHECK(validate(FamilyTag::FSSF, k));
                        CHECK(weight(k, a.length()) == weight(tt, a.length()));
                        images.insert(k);
                    }
                    CHECK(images.size() == map.size());  // injective
                }
}

TEST_CASE("class bijection rejects fillings without a weak descent composition") {
    Filling s = F({{4, 3, 1}, {}, {5, 2}});
    CHECK_THROWS(psi_class_bijection(s));
    CHECK_THROWS(psi_class_bijection(F({{1, 2}})));  // not an SRIF
}

TEST_CASE("atom expansions detect negativity") {
    Polynomial p = Polynomial::monomial(WeakComposition({1, 0}), -1);
    PositivityReport rep = expand_into_atoms(p);
    CHECK_FALSE(rep.nonnegative);
    CHECK(rep.expansion.coeffs.at(WeakComposition({1, 0})) == -1);

    CHECK(expand_into_atoms(basis_polynomial(BasisTag::DREV_SLIDE, WeakComposition({0, 2, 1})))
              .nonnegative);
}
