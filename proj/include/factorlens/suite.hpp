#pragma once

#include <string>
#include <vector>

#include "factorlens/length_set.hpp"

namespace factorlens {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure (or with a short summary)
};

/// Runs the eight reproduction criteria. `budget` caps every enumeration;
/// when it is too small for a criterion, that criterion reports failure with
/// a resource diagnostic rather than a false positive.
std::vector<CriterionResult> acceptance_suite(Int budget);

}  // namespace factorlens
