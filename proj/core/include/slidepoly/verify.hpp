#pragma once

#include <string>
#include <vector>

#include "slidepoly/composition.hpp"

namespace slidepoly {

struct VerifyReport {
    std::string identity;
    int max_n = 0;
    int max_len = 0;
    int max_vars = 0;
    long long instances = 0;
    std::vector<std::string> failures;  // one line per failing instance
    double seconds = 0.0;
    bool passed() const { return failures.empty(); }
    std::string str() const;
};

const std::vector<std::string>& identity_names();

// Exhaustively check one named identity on all indices with total <= max_n
// and length <= max_len (variable counts up to max_vars where relevant).
// jobs > 1 splits the index list across threads.
VerifyReport run_identity(const std::string& name, int max_n, int max_len,
                          int max_vars, int jobs = 1);

}  // namespace slidepoly
