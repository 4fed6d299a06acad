#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slidepoly {

// A finite sequence of nonnegative integers.  Length matters: (2,3) and
// (2,3,0) are different objects.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);
    WeakComposition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int total() const;
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    bool operator==(const WeakComposition&) const = default;
    // Container ordering (shorter first, then entrywise); coincides with lex
    // order on equal lengths, which is what polynomial term maps rely on.
    auto operator<=>(const WeakComposition&) const = default;

    std::string str() const;                      // "0,3,0,2"; "" for length 0
    static WeakComposition parse(std::string_view s);

private:
    std::vector<int> parts_;
};

// A weak composition with all parts strictly positive.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    explicit Composition(const WeakComposition& w);
    Composition(std::initializer_list<int> parts);

    const WeakComposition& wc() const { return wc_; }
    const std::vector<int>& parts() const { return wc_.parts(); }
    int length() const { return wc_.length(); }
    int total() const { return wc_.total(); }
    int operator[](int i) const { return wc_[i]; }

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

    std::string str() const { return wc_.str(); }
    static Composition parse(std::string_view s);

private:
    WeakComposition wc_;
};

WeakComposition rev(const WeakComposition& a);
Composition rev(const Composition& a);
Composition flat(const WeakComposition& a);   // drop zero parts
WeakComposition prepend_zeros(const WeakComposition& a, int m);
WeakComposition append_zeros(const WeakComposition& a, int m);

// -1 / 0 / +1; only defined for equal lengths.
int lex_compare(const WeakComposition& a, const WeakComposition& b);

// Inverse of "descent set of a composition": subset of {1..n-1} -> composition
// of n whose partial sums are exactly the set.
Composition descent_set_to_composition(const std::set<int>& descents, int n);
std::set<int> composition_to_descent_set(const Composition& a);

// All weak compositions of n with the given length, in lex order.
std::vector<WeakComposition> weak_compositions(int n, int length);
// All compositions of n (any length), n >= 0.
std::vector<Composition> compositions_of(int n);
// All refinements of a (compositions collapsing to a by summing runs).
std::vector<Composition> refinements(const Composition& a);

}  // namespace slidepoly
