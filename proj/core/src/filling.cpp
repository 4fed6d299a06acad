#include "slidepoly/filling.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace slidepoly {

namespace {

enum class RowRule { WeaklyDec, WeaklyInc, StrictlyInc };
enum class BoundRule { None, AtMostRow, AtLeastRow };
enum class TripleRule { None, Reverse, Young, Recording };
enum class ReadingKind { RowsRLTopDown, RowsLRTopDown, ColsUpRightLeft, ColsDownRightLeft, None };

struct FamilyRules {
    RowRule row;
    bool standard;
    bool first_col_inc_up;    // leftmost column strictly increases bottom to top
    bool first_col_inc_down;  // DIRF: strictly increases top to bottom
    bool cols_distinct;
    BoundRule bound;
    bool first_col_equals_row;  // ATOM
    bool rows_dominate;         // FSSF: higher rows beat every lower entry
    bool consecutive_rule;      // DIRF: i+1 weakly left of i forces column 1
    TripleRule triples;
    ReadingKind reading;
};

const FamilyRules& rules_for(FamilyTag t) {
    using R = RowRule;
    using B = BoundRule;
    using T = TripleRule;
    using K = ReadingKind;
    static const std::map<FamilyTag, FamilyRules> table = {
        {FamilyTag::SSRIT, {R::WeaklyDec, false, true, false, false, B::None, false, false, false, T::None, K::RowsRLTopDown}},
        {FamilyTag::SRIT,  {R::WeaklyDec, true,  true, false, false, B::None, false, false, false, T::None, K::RowsRLTopDown}},
        {FamilyTag::SSIT,  {R::WeaklyInc, false, true, false, false, B::None, false, false, false, T::None, K::RowsLRTopDown}},
        {FamilyTag::SIT,   {R::WeaklyInc, true,  true, false, false, B::None, false, false, false, T::None, K::RowsLRTopDown}},
        {FamilyTag::YCT,   {R::WeaklyInc, false, true, false, false, B::None, false, false, false, T::Young, K::ColsDownRightLeft}},
        {FamilyTag::SYCT,  {R::WeaklyInc, true,  true, false, false, B::None, false, false, false, T::Young, K::ColsDownRightLeft}},
        {FamilyTag::SSRIF, {R::WeaklyDec, false, true, false, false, B::AtMostRow, false, false, false, T::None, K::RowsRLTopDown}},
        {FamilyTag::SRIF,  {R::WeaklyDec, true,  true, false, false, B::None, false, false, false, T::None, K::RowsRLTopDown}},
        {FamilyTag::SSIF,  {R::WeaklyInc, false, true, false, false, B::AtLeastRow, false, false, false, T::None, K::RowsLRTopDown}},
        {FamilyTag::SIF,   {R::WeaklyInc, true,  true, false, false, B::None, false, false, false, T::None, K::RowsLRTopDown}},
        {FamilyTag::RSSF,  {R::WeaklyDec, false, true, false, true,  B::AtMostRow, false, false, false, T::Reverse, K::ColsUpRightLeft}},
        {FamilyTag::RSF,   {R::WeaklyDec, true,  true, false, true,  B::None, false, false, false, T::Reverse, K::ColsUpRightLeft}},
        {FamilyTag::YSSF,  {R::WeaklyInc, false, true, false, true,  B::AtLeastRow, false, false, false, T::Young, K::ColsDownRightLeft}},
        {FamilyTag::YSF,   {R::WeaklyInc, true,  true, false, true,  B::None, false, false, false, T::Young, K::ColsDownRightLeft}},
        {FamilyTag::FSSF,  {R::WeaklyDec, false, true, false, false, B::AtMostRow, false, true, false, T::None, K::RowsRLTopDown}},
        {FamilyTag::ATOM,  {R::WeaklyDec, false, true, false, true,  B::AtMostRow, true, false, false, T::Reverse, K::ColsUpRightLeft}},
        {FamilyTag::DIRF,  {R::StrictlyInc, true, false, true, false, B::None, false, false, true, T::Recording, K::None}},
    };
    return table.at(t);
}

const std::pair<FamilyTag, std::string_view> kNames[] = {
    {FamilyTag::SSRIT, "SSRIT"}, {FamilyTag::SRIT, "SRIT"},
    {FamilyTag::SSIT, "SSIT"},   {FamilyTag::SIT, "SIT"},
    {FamilyTag::YCT, "YCT"},     {FamilyTag::SYCT, "SYCT"},
    {FamilyTag::SSRIF, "SSRIF"}, {FamilyTag::SRIF, "SRIF"},
    {FamilyTag::SSIF, "SSIF"},   {FamilyTag::SIF, "SIF"},
    {FamilyTag::RSSF, "RSSF"},   {FamilyTag::RSF, "RSF"},
    {FamilyTag::YSSF, "YSSF"},   {FamilyTag::YSF, "YSF"},
    {FamilyTag::FSSF, "FSSF"},   {FamilyTag::ATOM, "ATOM"},
    {FamilyTag::DIRF, "DIRF"},
};

constexpr int kInf = std::numeric_limits<int>::max();

}  // namespace

FamilyTag parse_family(std::string_view name) {
    for (const auto& [tag, s] : kNames)
        if (s == name) return tag;
    throw std::invalid_argument("unknown filling family: '" + std::string(name) + "'");
}

std::string_view family_name(FamilyTag tag) {
    for (const auto& [t, s] : kNames)
        if (t == tag) return s;
    throw std::logic_error("bad FamilyTag");
}

const std::vector<FamilyTag>& all_families() {
    static const std::vector<FamilyTag> v = [] {
        std::vector<FamilyTag> out;
        for (const auto& [t, s] : kNames) out.push_back(t);
        return out;
    }();
    return v;
}

bool is_standard_family(FamilyTag tag) { return rules_for(tag).standard; }

FamilyTag standard_counterpart(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::SSRIF: return FamilyTag::SRIF;
        case FamilyTag::RSSF: return FamilyTag::RSF;
        case FamilyTag::SSIF: return FamilyTag::SIF;
        case FamilyTag::YSSF: return FamilyTag::YSF;
        default:
            throw std::invalid_argument(
                std::string("no standard counterpart for ") + std::string(family_name(tag)));
    }
}

Filling::Filling(WeakComposition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw std::invalid_argument("Filling: row count != shape length");
    for (int r = 0; r < shape_.length(); ++r) {
        if (static_cast<int>(rows_[static_cast<size_t>(r)].size()) != shape_[r])
            throw std::invalid_argument("Filling: row length != shape part");
        for (int v : rows_[static_cast<size_t>(r)])
            if (v < 1) throw std::invalid_argument("Filling: entries must be positive");
    }
}

bool Filling::has_box(int r, int c) const {
    return r >= 1 && r <= num_rows() && c >= 1 && c <= shape_[r - 1];
}

int Filling::entry(int r, int c) const {
    if (!has_box(r, c)) throw std::out_of_range("Filling::entry: no such box");
    return rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
}

int Filling::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row) m = std::max(m, v);
    return m;
}

std::optional<std::pair<int, int>> Filling::find_entry(int v) const {
    for (int r = 1; r <= num_rows(); ++r)
        for (int c = 1; c <= row_length(r); ++c)
            if (entry(r, c) == v) return std::make_pair(r, c);
    return std::nullopt;
}

namespace {

bool check_standard_entries(const Filling& f) {
    int n = f.box_count();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (const auto& row : f.rows())
        for (int v : row) {
            if (v > n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = true;
        }
    return true;
}

bool check_triples(TripleRule kind, const Filling& f) {
    int L = f.num_rows();
    switch (kind) {
        case TripleRule::None:
            return true;
        case TripleRule::Reverse:
            // z = (r,c), x = (r,c+1) [0 if absent], y = (r2,c+1) with r2 > r:
            // y <= z forces y < x.
            for (int r = 1; r <= L; ++r)
                for (int r2 = r + 1; r2 <= L; ++r2)
                    for (int c = 1; c <= f.row_length(r); ++c) {
                        if (!f.has_box(r2, c + 1)) continue;
                        int z = f.entry(r, c), y = f.entry(r2, c + 1);
                        int x = f.has_box(r, c + 1) ? f.entry(r, c + 1) : 0;
                        if (y <= z && !(y < x)) return false;
                    }
            return true;
        case TripleRule::Young:
            // z = (r,c), x = (r,c+1) [infinity if absent], y = (r2,c+1) with
            // r2 < r: y >= z forces y > x.
            for (int r = 1; r <= L; ++r)
                for (int r2 = 1; r2 < r; ++r2)
                    for (int c = 1; c <= f.row_length(r); ++c) {
                        if (!f.has_box(r2, c + 1)) continue;
                        int z = f.entry(r, c), y = f.entry(r2, c + 1);
                        int x = f.has_box(r, c + 1) ? f.entry(r, c + 1) : kInf;
                        if (y >= z && !(x != kInf && y > x)) return false;
                    }
            return true;
        case TripleRule::Recording:
            // x = (r,c), z = (r,c+1) [infinity if absent], y = (r2,c) with
            // r2 > r: y > x forces y > z.
            for (int r = 1; r <= L; ++r)
                for (int r2 = r + 1; r2 <= L; ++r2)
                    for (int c = 1; c <= f.row_length(r); ++c) {
                        if (!f.has_box(r2, c)) continue;
                        int x = f.entry(r, c), y = f.entry(r2, c);
                        int z = f.has_box(r, c + 1) ? f.entry(r, c + 1) : kInf;
                        if (y > x && !(z != kInf && y > z)) return false;
                    }
            return true;
    }
    return false;
}

}  // namespace

bool validate(FamilyTag tag, const Filling& f) {
    const FamilyRules& R = rules_for(tag);
    int L = f.num_rows();

    if (R.standard && !check_standard_entries(f)) return false;

    for (int r = 1; r <= L; ++r)
        for (int c = 2; c <= f.row_length(r); ++c) {
            int a = f.entry(r, c - 1), b = f.entry(r, c);
            if (R.row == RowRule::WeaklyDec && b > a) return false;
            if (R.row == RowRule::WeaklyInc && b < a) return false;
            if (R.row == RowRule::StrictlyInc && b <= a) return false;
        }

    if (R.first_col_inc_up || R.first_col_inc_down) {
        int prev = 0;
        bool first = true;
        for (int r = 1; r <= L; ++r) {
            if (f.row_length(r) == 0) continue;
            int v = f.entry(r, 1);
            if (!first) {
                if (R.first_col_inc_up && v <= prev) return false;
                if (R.first_col_inc_down && v >= prev) return false;
            }
            prev = v;
            first = false;
        }
    }

    if (R.cols_distinct) {
        int maxc = 0;
        for (int r = 1; r <= L; ++r) maxc = std::max(maxc, f.row_length(r));
        for (int c = 1; c <= maxc; ++c) {
            std::set<int> seen;
            for (int r = 1; r <= L; ++r)
                if (f.has_box(r, c) && !seen.insert(f.entry(r, c)).second) return false;
        }
    }

    if (R.bound != BoundRule::None)
        for (int r = 1; r <= L; ++r)
            for (int c = 1; c <= f.row_length(r); ++c) {
                int v = f.entry(r, c);
                if (R.bound == BoundRule::AtMostRow && v > r) return false;
                if (R.bound == BoundRule::AtLeastRow && v < r) return false;
            }

    if (R.first_col_equals_row)
        for (int r = 1; r <= L; ++r)
            if (f.row_length(r) > 0 && f.entry(r, 1) != r) return false;

    if (R.rows_dominate) {
        int below_max = 0;
        for (int r = 1; r <= L; ++r) {
            if (f.row_length(r) == 0) continue;
            int lo = kInf, hi = 0;
            for (int c = 1; c <= f.row_length(r); ++c) {
                lo = std::min(lo, f.entry(r, c));
                hi = std::max(hi, f.entry(r, c));
            }
            if (lo <= below_max) return false;
            below_max = hi;
        }
    }

    if (R.consecutive_rule) {
        int n = f.box_count();
        for (int i = 1; i < n; ++i) {
            auto p = f.find_entry(i);
            auto q = f.find_entry(i + 1);
            if (!p || !q) return false;
            if (q->second <= p->second && q->second != 1) return false;
        }
    }

    return check_triples(R.triples, f);
}

std::vector<std::pair<int, int>> reading_order(FamilyTag tag, const WeakComposition& shape) {
    const FamilyRules& R = rules_for(tag);
    int L = shape.length();
    int maxc = 0;
    for (int i = 0; i < L; ++i) maxc = std::max(maxc, shape[i]);
    std::vector<std::pair<int, int>> out;
    switch (R.reading) {
        case ReadingKind::RowsRLTopDown:
            for (int r = L; r >= 1; --r)
                for (int c = shape[r - 1]; c >= 1; --c) out.emplace_back(r, c);
            break;
        case ReadingKind::RowsLRTopDown:
            for (int r = L; r >= 1; --r)
                for (int c = 1; c <= shape[r - 1]; ++c) out.emplace_back(r, c);
            break;
        case ReadingKind::ColsUpRightLeft:
            for (int c = maxc; c >= 1; --c)
                for (int r = 1; r <= L; ++r)
                    if (shape[r - 1] >= c) out.emplace_back(r, c);
            break;
        case ReadingKind::ColsDownRightLeft:
            for (int c = maxc; c >= 1; --c)
                for (int r = L; r >= 1; --r)
                    if (shape[r - 1] >= c) out.emplace_back(r, c);
            break;
        case ReadingKind::None:
            throw std::invalid_argument(
                std::string(family_name(tag)) + " has no reading order");
    }
    return out;
}

std::vector<int> reading_word(FamilyTag tag, const Filling& f) {
    std::vector<int> w;
    for (auto [r, c] : reading_order(tag, f.shape())) w.push_back(f.entry(r, c));
    return w;
}

namespace {
std::map<std::tuple<FamilyTag, WeakComposition, int>, std::vector<Filling>> enum_cache;
std::mutex enum_cache_mu;
}  // namespace

void clear_enumeration_cache() {
    std::lock_guard<std::mutex> lk(enum_cache_mu);
    enum_cache.clear();
}

std::vector<Filling> enumerate(FamilyTag tag, const WeakComposition& shape,
                               std::optional<int> max_entry) {
    const FamilyRules& R = rules_for(tag);
    int L = shape.length();
    int n = shape.total();
    int m = R.standard ? n : max_entry.value_or(L);
    if (m < 0) throw std::invalid_argument("enumerate: negative max_entry");

    auto& cache = enum_cache;
    auto& cache_mu = enum_cache_mu;
    std::tuple<FamilyTag, WeakComposition, int> key{tag, shape, m};
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::vector<std::pair<int, int>> boxes;  // fill bottom row up, left to right
    for (int r = 1; r <= L; ++r)
        for (int c = 1; c <= shape[r - 1]; ++c) boxes.emplace_back(r, c);

    std::vector<std::vector<int>> rows(static_cast<size_t>(L));
    for (int r = 0; r < L; ++r) rows[static_cast<size_t>(r)].assign(static_cast<size_t>(shape[r]), 0);
    std::vector<bool> used(static_cast<size_t>(m) + 1, false);
    std::vector<Filling> results;

    auto first_col_below = [&](int r) -> int {  // 0 when no filled row below
        for (int r2 = r - 1; r2 >= 1; --r2)
            if (shape[r2 - 1] > 0) return rows[static_cast<size_t>(r2 - 1)][0];
        return 0;
    };

    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == boxes.size()) {
            Filling f(shape, rows);
            if (validate(tag, f)) results.push_back(std::move(f));
            return;
        }
        auto [r, c] = boxes[i];
        for (int v = 1; v <= m; ++v) {
            if (R.standard && used[static_cast<size_t>(v)]) continue;
            if (R.bound == BoundRule::AtMostRow && v > r) continue;
            if (R.bound == BoundRule::AtLeastRow && v < r) continue;
            if (c > 1) {
                int left = rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 2)];
                if (R.row == RowRule::WeaklyDec && v > left) continue;
                if (R.row == RowRule::WeaklyInc && v < left) continue;
                if (R.row == RowRule::StrictlyInc && v <= left) continue;
            } else {
                int below = first_col_below(r);
                if (below > 0) {
                    if (R.first_col_inc_up && v <= below) continue;
                    if (R.first_col_inc_down && v >= below) continue;
                }
                if (R.first_col_equals_row && v != r) continue;
            }
            rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
            if (R.standard) used[static_cast<size_t>(v)] = true;
            self(self, i + 1);
            if (R.standard) used[static_cast<size_t>(v)] = false;
        }
        rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = 0;
    };
    rec(rec, 0);

    if (R.reading == ReadingKind::None) {
        std::sort(results.begin(), results.end());  // row-major entry order
    } else {
        std::stable_sort(results.begin(), results.end(), [&](const Filling& a, const Filling& b) {
            return reading_word(tag, a) < reading_word(tag, b);
        });
    }

    std::lock_guard<std::mutex> lk(cache_mu);
    return cache.emplace(std::move(key), std::move(results)).first->second;
}

WeakComposition weight(const Filling& f, int pad_len) {
    int m = std::max(f.max_entry(), pad_len);
    std::vector<int> counts(static_cast<size_t>(m), 0);
    for (const auto& row : f.rows())
        for (int v : row) ++counts[static_cast<size_t>(v - 1)];
    return WeakComposition(std::move(counts));
}

Filling standardize(FamilyTag tag, const Filling& f) {
    standard_counterpart(tag);  // throws for unsupported tags
    if (!validate(tag, f))
        throw std::invalid_argument("standardize: input is not a valid filling for the tag");
    auto order = reading_order(tag, f.shape());
    std::vector<size_t> idx(order.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // Ties go to the earlier reading position, except for YSSF whose reading
    // order runs against the direction in which equal entries must grow.
    bool later_first = tag == FamilyTag::YSSF;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int va = f.entry(order[a].first, order[a].second);
        int vb = f.entry(order[b].first, order[b].second);
        if (va != vb) return va < vb;
        return later_first ? a > b : a < b;
    });
    std::vector<std::vector<int>> rows = f.rows();
    for (size_t k = 0; k < idx.size(); ++k) {
        auto [r, c] = order[idx[k]];
        rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = static_cast<int>(k) + 1;
    }
    return Filling(f.shape(), std::move(rows));
}

std::set<int> descent_set(FamilyTag tag, const Filling& s) {
    bool higher_row, weakly_right, weakly_left;
    higher_row = weakly_right = weakly_left = false;
    switch (tag) {
        case FamilyTag::SRIT:
        case FamilyTag::SIT:
        case FamilyTag::SRIF:
        case FamilyTag::SIF:
            higher_row = true;
            break;
        case FamilyTag::RSF:
            weakly_right = true;
            break;
        case FamilyTag::YSF:
        case FamilyTag::SYCT:
            weakly_left = true;
            break;
        default:
            throw std::invalid_argument(
                std::string("descent_set undefined for ") + std::string(family_name(tag)));
    }
    if (!validate(tag, s))
        throw std::invalid_argument("descent_set: input is not a valid standard filling");
    std::set<int> out;
    int n = s.box_count();
    for (int i = 1; i < n; ++i) {
        auto p = *s.find_entry(i);
        auto q = *s.find_entry(i + 1);
        if (higher_row && q.first > p.first) out.insert(i);
        if (weakly_right && q.second >= p.second) out.insert(i);
        if (weakly_left && q.second <= p.second) out.insert(i);
    }
    return out;
}

WeakComposition row_strip_shape(const Filling& q) {
    if (!validate(FamilyTag::DIRF, q))
        throw std::invalid_argument("row_strip_shape: not a valid DIRF");
    int L = q.num_rows();
    std::vector<int> parts;
    for (int r = L; r >= 1; --r) {
        if (q.row_length(r) == 0) {
            parts.push_back(0);
            continue;
        }
        int e = q.entry(r, 1);
        auto cur = std::make_pair(r, 1);
        int len = 1;
        while (true) {
            auto next = q.find_entry(e + len);
            if (!next || next->second <= cur.second) break;
            cur = *next;
            ++len;
        }
        parts.push_back(len);
    }
    return WeakComposition(std::move(parts));
}

Filling theta(const Filling& f, int m) {
    if (f.max_entry() > m) throw std::invalid_argument("theta: entry exceeds m");
    std::vector<std::vector<int>> rows(f.rows().rbegin(), f.rows().rend());
    for (auto& row : rows)
        for (int& v : row) v = m + 1 - v;
    return Filling(rev(f.shape()), std::move(rows));
}

Filling theta(const Filling& f) { return theta(f, f.box_count()); }

}  // namespace slidepoly
