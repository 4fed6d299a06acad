#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slidepoly/composition.hpp"
#include "slidepoly/filling.hpp"
#include "slidepoly/polynomial.hpp"

namespace slidepoly {

// Polynomial bases are indexed by weak compositions and live in
// length(index) variables.  Quasisymmetric bases are indexed by compositions
// and need an explicit variable count m >= 0.
enum class BasisTag {
    DREV_SLIDE, DIS_SLIDE, QKEY, YQKEY, FSLIDE, YFSLIDE, ATOM,
    MONO_QS, FUND_QS, DUAL_IMM_QS, REV_DUAL_IMM_QS, YQS, QS,
};

BasisTag parse_basis(std::string_view name);
std::string_view basis_name(BasisTag tag);
bool is_polynomial_basis(BasisTag tag);       // indexed by weak compositions
bool is_young_polynomial_basis(BasisTag tag); // DIS_SLIDE, YQKEY, YFSLIDE
// DIS_SLIDE->DREV_SLIDE, YQKEY->QKEY, YFSLIDE->FSLIDE, YQS->REV... pairs used
// for variable-reversal conjugation; throws when there is none.
BasisTag reverse_counterpart(BasisTag tag);

// The basis element as an explicit polynomial.  num_vars is required for
// quasisymmetric bases; for polynomial bases it must be absent or equal to
// length(index).  Results are memoized.
Polynomial basis_polynomial(BasisTag tag, const WeakComposition& index,
                            std::optional<int> num_vars = std::nullopt);

// Drops memoized basis elements (benchmarking support).
void clear_basis_cache();

struct BasisCheckReport {
    bool all_pass = true;
    long long checked = 0;
    std::vector<std::string> violations;
};

// Check that every element with index of total n and given length has
// lex-minimal monomial x^index with coefficient 1 (only meaningful for the
// four reverse polynomial bases and MONO_QS-free setting).
BasisCheckReport verify_basis_property(BasisTag tag, int n, int length);

}  // namespace slidepoly
