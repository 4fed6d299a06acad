#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "slidepoly/composition.hpp"

namespace slidepoly {

// Filling families.  The *IT families live on composition diagrams, the rest
// on weak composition diagrams; validation itself never inspects whether the
// shape has zero parts.
enum class FamilyTag {
    SSRIT, SRIT, SSIT, SIT, YCT, SYCT,
    SSRIF, SRIF, SSIF, SIF,
    RSSF, RSF, YSSF, YSF,
    FSSF, ATOM, DIRF,
};

FamilyTag parse_family(std::string_view name);
std::string_view family_name(FamilyTag tag);
const std::vector<FamilyTag>& all_families();
bool is_standard_family(FamilyTag tag);
// SSRIF->SRIF, RSSF->RSF, SSIF->SIF, YSSF->YSF; throws for other tags.
FamilyTag standard_counterpart(FamilyTag tag);

// Diagrams use French notation: row 1 is the bottom row, boxes are
// left-justified.  rows()[i] holds row i+1 from left to right.
class Filling {
public:
    Filling() = default;
    Filling(WeakComposition shape, std::vector<std::vector<int>> rows);

    const WeakComposition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int num_rows() const { return shape_.length(); }
    int row_length(int r) const { return shape_[r - 1]; }       // r is 1-based
    bool has_box(int r, int c) const;
    int entry(int r, int c) const;                              // 1-based, throws
    int box_count() const { return shape_.total(); }
    int max_entry() const;
    // Position (row, col) of value v, scanning the whole diagram; meaningful
    // for standard fillings where entries are distinct.
    std::optional<std::pair<int, int>> find_entry(int v) const;

    bool operator==(const Filling&) const = default;
    auto operator<=>(const Filling&) const = default;

private:
    WeakComposition shape_;
    std::vector<std::vector<int>> rows_;
};

bool validate(FamilyTag tag, const Filling& f);

// All valid fillings of the shape, sorted by reading word (row-major word for
// DIRF, which has no reading order).  Standard families ignore max_entry;
// semistandard families default it to length(shape).
std::vector<Filling> enumerate(FamilyTag tag, const WeakComposition& shape,
                               std::optional<int> max_entry = std::nullopt);

// Drops memoized enumeration results (benchmarking support).
void clear_enumeration_cache();

std::vector<int> reading_word(FamilyTag tag, const Filling& f);
// Boxes (row, col) in the tag's reading order.
std::vector<std::pair<int, int>> reading_order(FamilyTag tag, const WeakComposition& shape);

// Content vector (count of each value), padded with zeros to at least pad_len.
WeakComposition weight(const Filling& f, int pad_len = 0);

// Replace the i-th smallest entry by i; ties broken by reading order
// (earlier is smaller).  Defined for SSRIF, RSSF, SSIF, YSSF.
Filling standardize(FamilyTag tag, const Filling& f);

// Descent set of a standard filling; defined for SRIT, SIT, SRIF, SIF, RSF,
// YSF, SYCT.
std::set<int> descent_set(FamilyTag tag, const Filling& s);

// For a DIRF: rows from TOP to bottom; empty rows contribute 0, a nonempty
// row contributes the length of the strip e, e+1, ... starting at its
// leftmost box, where each next value must sit strictly further right.
WeakComposition row_strip_shape(const Filling& q);

// Reverse the row order and complement every entry v -> m+1-v.
Filling theta(const Filling& f, int m);
Filling theta(const Filling& f);  // m = box_count (standard fillings)

}  // namespace slidepoly
