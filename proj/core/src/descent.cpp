#include "slidepoly/descent.hpp"

#include <algorithm>
#include <stdexcept>

namespace slidepoly {

namespace {

enum class Paradigm { Reverse, Young };

Paradigm paradigm_of(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::SRIF:
        case FamilyTag::RSF:
        case FamilyTag::SSRIF:
        case FamilyTag::RSSF:
            return Paradigm::Reverse;
        case FamilyTag::SIF:
        case FamilyTag::YSF:
            return Paradigm::Young;
        default:
            throw std::invalid_argument(
                std::string("weak descent composition undefined for ") +
                std::string(family_name(tag)));
    }
}

// Compute anchors from runs; returns false when an anchor leaves 1..L.
bool place_anchors(RunDecomposition& d, Paradigm par, int L) {
    size_t k = d.runs.size();
    d.anchors.assign(k, 0);
    if (k == 0) return true;
    auto lowest_row = [&](size_t j) {
        int lo = d.run_boxes[j][0].first;
        for (auto& [r, c] : d.run_boxes[j]) lo = std::min(lo, r);
        return lo;
    };
    auto highest_row = [&](size_t j) {
        int hi = d.run_boxes[j][0].first;
        for (auto& [r, c] : d.run_boxes[j]) hi = std::max(hi, r);
        return hi;
    };
    if (par == Paradigm::Reverse) {
        // runs[k-1] holds the largest letters; its anchor is the row of the
        // first word letter, and anchors strictly decrease from there unless
        // a run already lives lower.
        d.anchors[k - 1] = d.run_boxes[k - 1][0].first;
        for (size_t j = k - 1; j-- > 0;)
            d.anchors[j] = std::min(d.anchors[j + 1] - 1, lowest_row(j));
        for (int p : d.anchors)
            if (p < 1) return false;
    } else {
        d.anchors[0] = d.run_boxes[0][0].first;
        for (size_t j = 1; j < k; ++j)
            d.anchors[j] = std::max(d.anchors[j - 1] + 1, highest_row(j));
        for (int p : d.anchors)
            if (p > L) return false;
    }
    return true;
}

WeakDescentResult result_from(const RunDecomposition& d, int L) {
    if (d.failed) return WeakDescentResult{};
    std::vector<int> parts(static_cast<size_t>(L), 0);
    for (size_t j = 0; j < d.runs.size(); ++j)
        parts[static_cast<size_t>(d.anchors[j] - 1)] = static_cast<int>(d.runs[j].size());
    return WeakDescentResult{WeakComposition(std::move(parts))};
}

}  // namespace

RunDecomposition run_decomposition(FamilyTag tag, const Filling& s) {
    Paradigm par = paradigm_of(tag);
    if (!is_standard_family(tag))
        throw std::invalid_argument("run_decomposition: standard tag required");
    std::set<int> des = descent_set(tag, s);  // also validates s
    int n = s.box_count();
    int L = s.num_rows();

    RunDecomposition d;
    // Word is n..1 for the reverse paradigm, 1..n for the Young paradigm;
    // a descent at i separates i+1 from i.
    std::vector<int> word;
    if (par == Paradigm::Reverse)
        for (int v = n; v >= 1; --v) word.push_back(v);
    else
        for (int v = 1; v <= n; ++v) word.push_back(v);
    std::vector<std::vector<int>> runs_word_order;
    std::vector<std::vector<std::pair<int, int>>> boxes_word_order;
    for (size_t i = 0; i < word.size(); ++i) {
        int v = word[i];
        bool cut = i == 0 || des.count(par == Paradigm::Reverse ? v : v - 1) > 0;
        if (cut) {
            runs_word_order.emplace_back();
            boxes_word_order.emplace_back();
        }
        runs_word_order.back().push_back(v);
        boxes_word_order.back().push_back(*s.find_entry(v));
    }
    if (par == Paradigm::Reverse) {
        d.runs.assign(runs_word_order.rbegin(), runs_word_order.rend());
        d.run_boxes.assign(boxes_word_order.rbegin(), boxes_word_order.rend());
    } else {
        d.runs = std::move(runs_word_order);
        d.run_boxes = std::move(boxes_word_order);
    }
    d.failed = !place_anchors(d, par, L);
    return d;
}

WeakDescentResult weak_descent_composition(FamilyTag tag, const Filling& s) {
    RunDecomposition d = run_decomposition(tag, s);
    return result_from(d, s.num_rows());
}

RunDecomposition run_decomposition_semistandard(FamilyTag tag, const Filling& t) {
    if (tag != FamilyTag::SSRIF && tag != FamilyTag::RSSF)
        throw std::invalid_argument("run_decomposition_semistandard: tag must be SSRIF or RSSF");
    if (!validate(tag, t))
        throw std::invalid_argument("run_decomposition_semistandard: invalid filling");
    int L = t.num_rows();
    auto order = reading_order(tag, t.shape());

    // Word: entries largest first; ties broken so the earlier reading-order
    // occurrence counts as smaller (hence comes later in the word).
    std::vector<size_t> idx(order.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int va = t.entry(order[a].first, order[a].second);
        int vb = t.entry(order[b].first, order[b].second);
        if (va != vb) return va > vb;
        return a > b;
    });

    RunDecomposition d;
    std::vector<std::vector<int>> runs_word_order;
    std::vector<std::vector<std::pair<int, int>>> boxes_word_order;
    int prev_row = 0, prev_col = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        auto [r, c] = order[idx[i]];
        // A new run starts where the standard descent criterion separates the
        // word letter from its successor: strictly above it (SSRIF) or weakly
        // to its right (RSSF).
        bool cut = tag == FamilyTag::SSRIF ? prev_row > r : prev_col >= c;
        if (i == 0 || cut) {
            runs_word_order.emplace_back();
            boxes_word_order.emplace_back();
        }
        runs_word_order.back().push_back(t.entry(r, c));
        boxes_word_order.back().emplace_back(r, c);
        prev_row = r;
        prev_col = c;
    }
    d.runs.assign(runs_word_order.rbegin(), runs_word_order.rend());
    d.run_boxes.assign(boxes_word_order.rbegin(), boxes_word_order.rend());
    d.failed = !place_anchors(d, Paradigm::Reverse, L);
    return d;
}

WeakDescentResult weak_descent_composition_semistandard(FamilyTag tag, const Filling& t) {
    RunDecomposition d = run_decomposition_semistandard(tag, t);
    return result_from(d, t.num_rows());
}

}  // namespace slidepoly
