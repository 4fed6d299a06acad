#pragma once

#include <map>
#include <string>

#include "slidepoly/bases.hpp"
#include "slidepoly/composition.hpp"
#include "slidepoly/descent.hpp"
#include "slidepoly/filling.hpp"
#include "slidepoly/polynomial.hpp"

namespace slidepoly {

struct ExpansionResult {
    std::string source_label;  // e.g. "DREV_SLIDE[0,3,0,2]" or "polynomial"
    BasisTag target;
    std::map<WeakComposition, Integer> coeffs;
    int num_vars = 0;  // variable count for reconstruct()

    // "# <source> -> <target>" header, then coefficient<TAB>index lines in
    // lex order of the indices.
    std::string str() const;
    Polynomial reconstruct() const;  // sum of coeff * basis element
};

// Combinatorial expansions: every coefficient counts fillings directly.
ExpansionResult expand_drev_to_fslide(const WeakComposition& a);  // over SRIF wdes
ExpansionResult expand_qk_to_fslide(const WeakComposition& a);    // over RSF wdes
ExpansionResult expand_dis_to_yfslide(const WeakComposition& a);  // over SIF wdes
ExpansionResult expand_yqk_to_yfslide(const WeakComposition& a);  // over YSF wdes
ExpansionResult expand_dis_to_yqk(const WeakComposition& a);      // DIRF strip counts
ExpansionResult expand_drev_to_qk(const WeakComposition& a);      // DIRF strip counts, reversed
ExpansionResult expand_rdi_to_qs(const Composition& alpha, int m);  // DIRT strip counts

// Peel off lex-minimal terms against a triangular target basis.  Young
// targets are handled by conjugating through variable reversal.  Throws if
// the iteration budget (number of candidate indices) is exhausted, which
// would mean the input is not in the target's span.
ExpansionResult generic_change_of_basis(BasisTag target, const Polynomial& p);

struct StableLimitReport {
    bool drev_restriction_ok = false;  // first m variables of the zero-padded slide element
    bool qkey_restriction_ok = false;  // same for the quasi-key element
    bool multiset_ok = false;          // flattened wdes's vs descent compositions
    std::string detail;
    bool passed() const { return drev_restriction_ok && qkey_restriction_ok && multiset_ok; }
};
StableLimitReport verify_stable_limit(const WeakComposition& a, int m);

// For a standard SRIF s with nonempty wdes: maps every semistandard filling
// standardizing to s to its run filling of shape wdes(s).
std::map<Filling, Filling> psi_class_bijection(const Filling& s);

struct PositivityReport {
    bool nonnegative = true;
    ExpansionResult expansion;
};
PositivityReport expand_into_atoms(const Polynomial& p);

}  // namespace slidepoly
