#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slidepoly/composition.hpp"
#include "slidepoly/filling.hpp"

namespace slidepoly {

struct BumpStep {
    int letter;                                 // value being moved
    std::optional<std::pair<int, int>> from;    // absent for the inserted letter
    std::pair<int, int> to;                     // (row, col) it lands in
    std::string str() const;
};

struct InsertionPair {
    Filling P;  // YSF of some shape b
    Filling Q;  // DIRF of shape b recording the insertion order
    bool operator==(const InsertionPair&) const = default;
    auto operator<=>(const InsertionPair&) const = default;
};

// Insert the reading word of a standard increasing filling letter by letter.
// The result pair always satisfies: P is a YSF, Q is a DIRF of the same
// shape, and the row strip shape of Q is the reverse of U's shape.
InsertionPair weak_insert(const Filling& u, std::vector<BumpStep>* trace = nullptr);

// Exact inverse: peel insertions off in reverse order and rebuild U.
Filling rapture_inverse(const InsertionPair& pair,
                        std::vector<BumpStep>* trace = nullptr);

struct InsertionBijectionReport {
    long long domain_size = 0;
    long long codomain_size = 0;
    bool all_valid = true;      // every image pair passes its validators
    bool injective = true;
    bool surjective = true;     // image covers all (YSF, DIRF) pairs with the right strips
    bool round_trip = true;     // rapture_inverse(weak_insert(u)) == u
    bool wdes_preserved = true; // wdes(U) == wdes(P) for every U
    std::string detail;
    bool passed() const {
        return all_valid && injective && surjective && round_trip && wdes_preserved &&
               domain_size == codomain_size;
    }
};
InsertionBijectionReport verify_insertion_bijection(const WeakComposition& a);

}  // namespace slidepoly
