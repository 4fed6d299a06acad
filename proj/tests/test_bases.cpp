#include "doctest.h"

#include "slidepoly/bases.hpp"

using namespace slidepoly;

TEST_CASE("basis names round trip") {
    for (std::string_view name :
         {"DREV_SLIDE", "DIS_SLIDE", "QKEY", "YQKEY", "FSLIDE", "YFSLIDE", "ATOM",
          "MONO_QS", "FUND_QS", "DUAL_IMM_QS", "REV_DUAL_IMM_QS", "YQS", "QS"})
        CHECK(basis_name(parse_basis(name)) == name);
    CHECK_THROWS(parse_basis("SCHUR"));
}

TEST_CASE("fundamental slide element of (0,2,1)") {
    CHECK(basis_polynomial(BasisTag::FSLIDE, WeakComposition({0, 2, 1})).str() ==
          "1*x^[0,2,1] + 1*x^[1,1,1] + 1*x^[2,0,1] + 1*x^[2,1,0]");
}

TEST_CASE("quasi-key element of (0,3,0,2) has the nineteen known monomials") {
    Polynomial p = basis_polynomial(BasisTag::QKEY, WeakComposition({0, 3, 0, 2}));
    CHECK(p.terms().size() == 19);
    for (const char* e :
         {"0,3,0,2", "1,2,0,2", "2,1,0,2", "3,0,0,2", "0,3,1,1", "1,2,1,1", "2,1,1,1",
          "3,0,1,1", "3,1,0,1", "1,3,0,1", "2,2,0,1", "0,3,2,0", "1,2,2,0", "2,1,2,0",
          "3,0,2,0", "3,1,1,0", "1,3,1,0", "2,2,1,0", "3,2,0,0"})
        CHECK(p.coeff(WeakComposition::parse(e)) == 1);
}

TEST_CASE("reverse slide element of (0,3,0,2): thirty fillings, six doubled weights") {
    Polynomial p = basis_polynomial(BasisTag::DREV_SLIDE, WeakComposition({0, 3, 0, 2}));
    Integer mass = 0;
    for (const auto& [e, c] : p.terms()) mass += c;
    CHECK(mass == 30);
    CHECK(p.terms().size() == 24);
    for (const char* e : {"1,3,0,1", "2,2,0,1", "3,1,0,1", "1,3,1,0", "2,2,1,0", "3,1,1,0"})
        CHECK(p.coeff(WeakComposition::parse(e)) == 2);
    CHECK(p.coeff(WeakComposition({0, 3, 0, 2})) == 1);
    CHECK(p.coeff(WeakComposition({4, 1, 0, 0})) == 1);
}

TEST_CASE("Young slide element of (2,0,1)") {
    Polynomial p = basis_polynomial(BasisTag::DIS_SLIDE, WeakComposition({2, 0, 1}));
    CHECK(p.str() ==
          "1*x^[0,1,2] + 1*x^[0,2,1] + 1*x^[1,0,2] + 1*x^[1,1,1] + 1*x^[2,0,1]");
    // definitionally the reversed reverse element
    CHECK(p == reverse_variables(
                   basis_polynomial(BasisTag::DREV_SLIDE, WeakComposition({1, 0, 2}))));
}

TEST_CASE("dual immaculate element of (1,2,2) in four variables") {
    Polynomial p = basis_polynomial(BasisTag::DUAL_IMM_QS, WeakComposition({1, 2, 2}), 4);
    CHECK(p.terms().size() == 11);
    CHECK(p.coeff(WeakComposition({1, 1, 2, 1})) == 2);
    CHECK(p.coeff(WeakComposition({1, 1, 1, 2})) == 2);
    Integer mass = 0;
    for (const auto& [e, c] : p.terms()) mass += c;
    CHECK(mass == 13);
}

TEST_CASE("monomial and fundamental quasisymmetric elements") {
    Polynomial m = basis_polynomial(BasisTag::MONO_QS, WeakComposition({1, 2}), 3);
    CHECK(m.str() == "1*x^[0,1,2] + 1*x^[1,0,2] + 1*x^[1,2,0]");
    Polynomial f = basis_polynomial(BasisTag::FUND_QS, WeakComposition({2, 1}), 3);
    CHECK(f.str() == "1*x^[0,2,1] + 1*x^[1,1,1] + 1*x^[2,0,1] + 1*x^[2,1,0]");
    // too few variables: the element vanishes
    CHECK(basis_polynomial(BasisTag::MONO_QS, WeakComposition({1, 1, 1}), 2).is_zero());
}

TEST_CASE("quasisymmetric bases really are quasisymmetric") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& al : compositions_of(n))
            for (BasisTag tag : {BasisTag::MONO_QS, BasisTag::FUND_QS, BasisTag::DUAL_IMM_QS,
                                 BasisTag::REV_DUAL_IMM_QS, BasisTag::YQS, BasisTag::QS})
                CHECK(is_quasisymmetric(basis_polynomial(tag, al.wc(), 3)));
}

TEST_CASE("complement duality links the two dual immaculate families") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& al : compositions_of(n))
            CHECK(basis_polynomial(BasisTag::DUAL_IMM_QS, al.wc(), 3) ==
                  reverse_variables(
                      basis_polynomial(BasisTag::REV_DUAL_IMM_QS, rev(al).wc(), 3)));
}

TEST_CASE("Young quasisymmetric Schur element of (2,1) in two variables") {
    CHECK(basis_polynomial(BasisTag::YQS, WeakComposition({2, 1}), 2).str() == "1*x^[2,1]");
    CHECK(basis_polynomial(BasisTag::QS, WeakComposition({1, 2}), 2).str() == "1*x^[1,2]");
}

TEST_CASE("argument validation") {
    CHECK_THROWS(basis_polynomial(BasisTag::QS, WeakComposition({2, 1})));      // needs vars
    CHECK_THROWS(basis_polynomial(BasisTag::QS, WeakComposition({2, 0, 1}), 3)); // not a composition
    CHECK_THROWS(basis_polynomial(BasisTag::QKEY, WeakComposition({2, 1}), 5)); // wrong vars
    CHECK(basis_polynomial(BasisTag::QKEY, WeakComposition({2, 1}), 2).num_vars() == 2);
}

TEST_CASE("reverse polynomial bases are unitriangular") {
    for (BasisTag tag : {BasisTag::DREV_SLIDE, BasisTag::QKEY, BasisTag::FSLIDE, BasisTag::ATOM}) {
        for (int n = 0; n <= 4; ++n) {
            BasisCheckReport rep = verify_basis_property(tag, n, 3);
            CHECK(rep.all_pass);
            CHECK(rep.checked == static_cast<long long>(weak_compositions(n, 3).size()));
        }
    }
    CHECK_THROWS(verify_basis_property(BasisTag::YQKEY, 3, 2));
    CHECK_THROWS(verify_basis_property(BasisTag::QS, 3, 2));
}
