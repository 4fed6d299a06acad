#include "slidepoly/composition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace slidepoly {

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("weak composition part must be nonnegative");
}

WeakComposition::WeakComposition(std::initializer_list<int> parts)
    : WeakComposition(std::vector<int>(parts)) {}

int WeakComposition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string WeakComposition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

WeakComposition WeakComposition::parse(std::string_view s) {
    std::vector<int> parts;
    if (s.empty()) return WeakComposition(parts);
    size_t pos = 0;
    while (true) {
        size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad composition literal: '" + std::string(s) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return WeakComposition(std::move(parts));
}

Composition::Composition(std::vector<int> parts) : wc_(std::move(parts)) {
    for (int p : wc_.parts())
        if (p <= 0) throw std::invalid_argument("composition part must be positive");
}

Composition::Composition(const WeakComposition& w) : Composition(w.parts()) {}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view s) {
    return Composition(WeakComposition::parse(s));
}

WeakComposition rev(const WeakComposition& a) {
    std::vector<int> p(a.parts().rbegin(), a.parts().rend());
    return WeakComposition(std::move(p));
}

Composition rev(const Composition& a) { return Composition(rev(a.wc())); }

Composition flat(const WeakComposition& a) {
    std::vector<int> p;
    for (int x : a.parts())
        if (x > 0) p.push_back(x);
    return Composition(std::move(p));
}

WeakComposition prepend_zeros(const WeakComposition& a, int m) {
    if (m < 0) throw std::invalid_argument("prepend_zeros: m < 0");
    std::vector<int> p(static_cast<size_t>(m), 0);
    p.insert(p.end(), a.parts().begin(), a.parts().end());
    return WeakComposition(std::move(p));
}

WeakComposition append_zeros(const WeakComposition& a, int m) {
    if (m < 0) throw std::invalid_argument("append_zeros: m < 0");
    std::vector<int> p = a.parts();
    p.insert(p.end(), static_cast<size_t>(m), 0);
    return WeakComposition(std::move(p));
}

int lex_compare(const WeakComposition& a, const WeakComposition& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("lex_compare: length mismatch");
    for (int i = 0; i < a.length(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Composition descent_set_to_composition(const std::set<int>& descents, int n) {
    if (n < 0) throw std::invalid_argument("descent_set_to_composition: n < 0");
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= n)
            throw std::invalid_argument("descent_set_to_composition: set not within 1..n-1");
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > prev) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::set<int> composition_to_descent_set(const Composition& a) {
    std::set<int> out;
    int sum = 0;
    for (int i = 0; i + 1 < a.length(); ++i) {
        sum += a[i];
        out.insert(sum);
    }
    return out;
}

std::vector<WeakComposition> weak_compositions(int n, int length) {
    if (n < 0 || length < 0) throw std::invalid_argument("weak_compositions: negative argument");
    std::vector<WeakComposition> out;
    if (length == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(length), 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == length - 1) {
            cur[static_cast<size_t>(i)] = rem;
            out.push_back(WeakComposition(cur));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: n < 0");
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(Composition(cur));
            return;
        }
        for (int v = 1; v <= rem; ++v) {
            cur.push_back(v);
            self(self, rem - v);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<Composition> refinements(const Composition& a) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int part) -> void {
        if (part == a.length()) {
            out.push_back(Composition(cur));
            return;
        }
        for (const Composition& piece : compositions_of(a[part])) {
            size_t base = cur.size();
            cur.insert(cur.end(), piece.parts().begin(), piece.parts().end());
            self(self, part + 1);
            cur.resize(base);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace slidepoly
