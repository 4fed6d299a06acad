#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slidepoly/composition.hpp"
#include "slidepoly/filling.hpp"

namespace slidepoly {

// Decomposition of a filling's entries into descent-free runs, with the row
// anchors used to build the weak descent composition.  runs[0] is the run
// containing the smallest entries; within a run, entries keep word order.
struct RunDecomposition {
    std::vector<std::vector<int>> runs;
    std::vector<std::vector<std::pair<int, int>>> run_boxes;  // (row, col) per entry
    std::vector<int> anchors;  // anchors[j] is the row for runs[j]; empty if failed
    bool failed = false;       // an anchor fell outside 1..length(shape)
};

// Distinct from every composition: an all-zero composition is a legal result
// only for the empty filling.
struct WeakDescentResult {
    std::optional<WeakComposition> value;
    bool empty() const { return !value.has_value(); }
    std::string str() const { return value ? value->str() : "EMPTY"; }
    bool operator==(const WeakDescentResult&) const = default;
};

// Standard fillings; tag must be SRIF, RSF, SIF or YSF.
RunDecomposition run_decomposition(FamilyTag tag, const Filling& s);
WeakDescentResult weak_descent_composition(FamilyTag tag, const Filling& s);

// Semistandard fillings; tag must be SSRIF or RSSF.  Entries are listed
// largest first, ties resolved by reading order (earlier = smaller), and a
// run break happens where a letter sits strictly above its successor.
RunDecomposition run_decomposition_semistandard(FamilyTag tag, const Filling& t);
WeakDescentResult weak_descent_composition_semistandard(FamilyTag tag, const Filling& t);

}  // namespace slidepoly
