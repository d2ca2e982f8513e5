#pragma once

#include <stdexcept>
#include <string>

namespace mwtk {

// Internal inconsistency while building or using a decomposition tree.
struct decomposition_error : std::runtime_error {
    explicit decomposition_error(const std::string& what) : std::runtime_error(what) {}
};

// A query blob (or the tuple data inside one) fails validation.
struct malformed_query : std::runtime_error {
    explicit malformed_query(const std::string& what) : std::runtime_error(what) {}
};

// An oracle answered inconsistently (e.g. zero or multiple accepts in membership mode).
struct oracle_error : std::runtime_error {
    explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mwtk
