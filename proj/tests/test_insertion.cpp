#include "doctest.h"

#include "slidepoly/descent.hpp"
#include "slidepoly/insertion.hpp"

using namespace slidepoly;

namespace {

Filling F(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Filling(WeakComposition(std::move(parts)), std::move(rows));
}

}  // namespace

TEST_CASE("the worked insertion of the word 24513") {
    Filling u = F({{1, 3}, {}, {2, 4, 5}, {}});
    REQUIRE(reading_word(FamilyTag::SIF, u) == std::vector<int>{2, 4, 5, 1, 3});

    std::vector<BumpStep> trace;
    InsertionPair pair = weak_insert(u, &trace);
    CHECK(pair.P == F({{1, 4}, {}, {2, 3, 5}, {}}));
    CHECK(pair.Q == F({{4, 5}, {}, {1, 2, 3}, {}}));
    CHECK(row_strip_shape(pair.Q) == WeakComposition({0, 3, 0, 2}));

    // the final letter 3 bumps 4 out of the third cell scanned
    REQUIRE(trace.size() == 6);
    CHECK(trace[4].letter == 3);
    CHECK(trace[4].to == std::pair<int, int>{3, 2});
    CHECK(trace[5].letter == 4);
    CHECK(trace[5].from == std::pair<int, int>{3, 2});
    CHECK(trace[5].to == std::pair<int, int>{1, 2});
    CHECK(trace[5].str() == "bump 4 (3,2) -> (1,2)");
    CHECK(trace[0].str() == "place 2 - -> (3,1)");
}

TEST_CASE("the inverse recovers the worked example") {
    InsertionPair pair{F({{1, 4}, {}, {2, 3, 5}, {}}), F({{4, 5}, {}, {1, 2, 3}, {}})};
    CHECK(rapture_inverse(pair) == F({{1, 3}, {}, {2, 4, 5}, {}}));
}

TEST_CASE("every recording filling of shape (2,0,3,0) is a strip-shaped recording") {
    for (const Filling& u : enumerate(FamilyTag::SIF, WeakComposition({2, 0, 3, 0}))) {
        Filling q = weak_insert(u).Q;
        CHECK(validate(FamilyTag::DIRF, q));
        CHECK(row_strip_shape(q) == WeakComposition({0, 3, 0, 2}));
    }
}

TEST_CASE("insertion is a shape-strip bijection on small ranges") {
    for (int n = 1; n <= 5; ++n)
        for (int len = 1; len <= 3; ++len)
            for (const WeakComposition& a : weak_compositions(n, len)) {
                InsertionBijectionReport rep = verify_insertion_bijection(a);
                CHECK_MESSAGE(rep.passed(), "a=" << a.str());
                CHECK(rep.domain_size == rep.codomain_size);
            }
}

TEST_CASE("insertion preserves the weak descent composition") {
    for (const WeakComposition& a : weak_compositions(5, 4))
        for (const Filling& u : enumerate(FamilyTag::SIF, a))
            CHECK(weak_descent_composition(FamilyTag::SIF, u) ==
                  weak_descent_composition(FamilyTag::YSF, weak_insert(u).P));
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS(weak_insert(F({{2, 1}})));  // not increasing
    // recording filling whose largest entry is not last in its row
    InsertionPair bad{F({{1, 2}}), F({{2, 1}})};
    CHECK_THROWS(rapture_inverse(bad));
    InsertionPair mismatch{F({{1, 2}}), F({{1}, {2}})};
    CHECK_THROWS(rapture_inverse(mismatch));
}
