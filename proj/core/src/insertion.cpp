#include "slidepoly/insertion.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "slidepoly/descent.hpp"

namespace slidepoly {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

using Rows = std::vector<std::vector<int>>;

int rowlen(const Rows& rows, int r) { return static_cast<int>(rows[static_cast<size_t>(r - 1)].size()); }

int& at(Rows& rows, int r, int c) { return rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }

// Scan cells: boxes in columns >= 2 whose left neighbor is occupied, listed
// in the Young reading order (columns right to left, top to bottom within a
// column).  include_virtual adds the empty slot just past each row end.
std::vector<std::pair<int, int>> scan_cells(const Rows& rows, bool include_virtual) {
    int L = static_cast<int>(rows.size());
    int maxc = 0;
    for (int r = 1; r <= L; ++r) maxc = std::max(maxc, rowlen(rows, r));
    std::vector<std::pair<int, int>> cells;
    for (int c = maxc + (include_virtual ? 1 : 0); c >= 2; --c)
        for (int r = L; r >= 1; --r)
            if (rowlen(rows, r) >= c - (include_virtual ? 1 : 0) &&
                (include_virtual || rowlen(rows, r) >= c))
                cells.emplace_back(r, c);
    return cells;
}

Filling to_filling(const Rows& rows) {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Filling(WeakComposition(std::move(parts)), rows);
}

// Insert one letter; home maps each letter to its row in u.  Returns the
// terminal cell.
std::pair<int, int> insert_letter(Rows& rows, int letter, const std::map<int, int>& home,
                                  std::vector<BumpStep>* trace) {
    int current = letter;
    std::optional<std::pair<int, int>> from;  // the inserted letter comes from outside
    auto cells = scan_cells(rows, /*include_virtual=*/true);
    for (auto [r, c] : cells) {
        int left = at(rows, r, c - 1);
        int occupant = rowlen(rows, r) >= c ? at(rows, r, c) : kInf;
        if (left <= current && current < occupant) {
            if (occupant == kInf) {
                rows[static_cast<size_t>(r - 1)].push_back(current);
                if (trace) trace->push_back({current, from, {r, c}});
                return {r, c};
            }
            if (trace) trace->push_back({current, from, {r, c}});
            std::swap(at(rows, r, c), current);
            from = {r, c};
        }
    }
    // Nothing was displaced past the last column: the carried value starts a
    // new row in column 1, at the row its letter occupied in u.
    int home_row = home.at(current);
    if (!rows[static_cast<size_t>(home_row - 1)].empty())
        throw std::logic_error("weak_insert: home row already occupied");
    rows[static_cast<size_t>(home_row - 1)].push_back(current);
    if (trace) trace->push_back({current, from, {home_row, 1}});
    return {home_row, 1};
}

}  // namespace

std::string BumpStep::str() const {
    std::string out = from ? "bump " : "place ";
    out += std::to_string(letter);
    out += from ? " (" + std::to_string(from->first) + "," + std::to_string(from->second) + ")"
                : " -";
    out += " -> (" + std::to_string(to.first) + "," + std::to_string(to.second) + ")";
    return out;
}

InsertionPair weak_insert(const Filling& u, std::vector<BumpStep>* trace) {
    if (!validate(FamilyTag::SIF, u))
        throw std::invalid_argument("weak_insert: input is not a valid SIF");
    int L = u.num_rows();
    std::map<int, int> home;  // letter -> its row in u
    for (int r = 1; r <= L; ++r)
        for (int c = 1; c <= u.row_length(r); ++c) home[u.entry(r, c)] = r;

    Rows rowsP(static_cast<size_t>(L)), rowsQ(static_cast<size_t>(L));
    std::vector<int> word = reading_word(FamilyTag::SIF, u);
    for (size_t k = 0; k < word.size(); ++k) {
        auto [r, c] = insert_letter(rowsP, word[k], home, trace);
        (void)c;
        rowsQ[static_cast<size_t>(r - 1)].push_back(static_cast<int>(k) + 1);
    }

    InsertionPair out{to_filling(rowsP), to_filling(rowsQ)};
    if (!validate(FamilyTag::YSF, out.P) || !validate(FamilyTag::DIRF, out.Q) ||
        row_strip_shape(out.Q) != rev(u.shape()))
        throw std::logic_error("weak_insert: postcondition violated");
    return out;
}

Filling rapture_inverse(const InsertionPair& pair, std::vector<BumpStep>* trace) {
    if (!validate(FamilyTag::YSF, pair.P))
        throw std::invalid_argument("rapture_inverse: P is not a valid YSF");
    if (!validate(FamilyTag::DIRF, pair.Q))
        throw std::invalid_argument("rapture_inverse: Q is not a valid DIRF");
    if (pair.P.shape() != pair.Q.shape())
        throw std::invalid_argument("rapture_inverse: shape mismatch");
    int L = pair.P.num_rows();
    int n = pair.P.box_count();

    Rows rowsP = pair.P.rows();
    Rows rowsQ = pair.Q.rows();
    std::vector<int> letters(static_cast<size_t>(n), 0);

    for (int step = n; step >= 1; --step) {
        // The largest recording entry always sits at the end of its row.
        int r0 = 0, c0 = 0;
        for (int r = 1; r <= L; ++r)
            for (int c = 1; c <= rowlen(rowsQ, r); ++c)
                if (at(rowsQ, r, c) == step) { r0 = r; c0 = c; }
        if (r0 == 0 || c0 != rowlen(rowsQ, r0))
            throw std::invalid_argument("rapture_inverse: recording filling is not insertion order");
        rowsQ[static_cast<size_t>(r0 - 1)].pop_back();

        int current = at(rowsP, r0, c0);
        rowsP[static_cast<size_t>(r0 - 1)].pop_back();

        auto cells = scan_cells(rowsP, /*include_virtual=*/false);
        // Reverse-scan everything strictly before the removed box; when it
        // was in column 1 the scan instead starts at the last column-2 cell.
        int start;
        if (c0 == 1) {
            start = static_cast<int>(cells.size()) - 1;
        } else {
            auto precedes = [](std::pair<int, int> x, std::pair<int, int> y) {
                // reading order: larger column first, then higher row first
                if (x.second != y.second) return x.second > y.second;
                return x.first > y.first;
            };
            start = -1;
            for (size_t i = 0; i < cells.size(); ++i)
                if (precedes(cells[i], {r0, c0})) start = static_cast<int>(i);
        }
        for (int i = start; i >= 0; --i) {
            auto [r, c] = cells[static_cast<size_t>(i)];
            int w = at(rowsP, r, c);
            if (w >= current) continue;
            int right = rowlen(rowsP, r) >= c + 1 ? at(rowsP, r, c + 1) : kInf;
            if (right >= current) {
                at(rowsP, r, c) = current;
                if (trace) trace->push_back({current, std::make_pair(r0, c0), {r, c}});
                current = w;
                r0 = r;
                c0 = c;
            }
        }
        letters[static_cast<size_t>(step - 1)] = current;
    }

    for (const auto& row : rowsP)
        if (!row.empty()) throw std::logic_error("rapture_inverse: leftover entries");

    // Letters now form u's reading word; rows of u restart exactly at the
    // values found in the leftmost column of P.
    std::map<int, int> new_row;
    for (int r = 1; r <= L; ++r)
        if (pair.P.row_length(r) > 0) new_row[pair.P.entry(r, 1)] = r;
    Rows rowsU(static_cast<size_t>(L));
    int cur = 0;
    for (int v : letters) {
        auto it = new_row.find(v);
        if (it != new_row.end()) cur = it->second;
        else if (cur == 0)
            throw std::invalid_argument("rapture_inverse: word does not start a row");
        rowsU[static_cast<size_t>(cur - 1)].push_back(v);
    }
    Filling u = to_filling(rowsU);
    if (!validate(FamilyTag::SIF, u))
        throw std::invalid_argument("rapture_inverse: reconstruction is not a valid SIF");
    return u;
}

InsertionBijectionReport verify_insertion_bijection(const WeakComposition& a) {
    InsertionBijectionReport rep;
    int n = a.total();
    int L = a.length();
    WeakComposition strip = rev(a);

    std::set<InsertionPair> images;
    for (const Filling& u : enumerate(FamilyTag::SIF, a)) {
        ++rep.domain_size;
        InsertionPair pair;
        try {
            pair = weak_insert(u);
        } catch (const std::exception& e) {
            rep.all_valid = false;
            rep.detail = e.what();
            continue;
        }
        if (!images.insert(pair).second) rep.injective = false;
        try {
            if (rapture_inverse(pair) != u) rep.round_trip = false;
        } catch (const std::exception&) {
            rep.round_trip = false;
        }
        if (weak_descent_composition(FamilyTag::SIF, u) !=
            weak_descent_composition(FamilyTag::YSF, pair.P))
            rep.wdes_preserved = false;
    }

    for (const WeakComposition& b : weak_compositions(n, L)) {
        std::vector<Filling> dirfs;
        for (const Filling& q : enumerate(FamilyTag::DIRF, b))
            if (row_strip_shape(q) == strip) dirfs.push_back(q);
        if (dirfs.empty()) continue;
        for (const Filling& p : enumerate(FamilyTag::YSF, b))
            for (const Filling& q : dirfs) {
                ++rep.codomain_size;
                if (!images.count(InsertionPair{p, q})) rep.surjective = false;
            }
    }
    return rep;
}

}  // namespace slidepoly
