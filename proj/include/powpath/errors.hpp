// Error types shared across the library. Contract violations are exceptions;
// negative results that are legitimate outputs (absence of a subgraph, an
// unsatisfiable partition) are returned as values, never thrown.
#pragma once

#include <stdexcept>
#include <string>

namespace powpath {

// Parameters outside the domain where the quantity being computed is defined.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A builder was invoked on an instance that fails one of its stated
// hypotheses. `clause` names the hypothesis that failed.
struct hypothesis_violation : std::runtime_error {
    std::string clause;
    explicit hypothesis_violation(const std::string& clause_, const std::string& detail = "")
        : std::runtime_error("hypothesis violated: " + clause_ +
                             (detail.empty() ? "" : " (" + detail + ")")),
          clause(clause_) {}
};

// A greedy extension ran out of candidates. For procedures whose success is
// guaranteed under verified hypotheses this indicates a bug or a violated
// precondition upstream.
struct extension_failure : std::runtime_error {
    explicit extension_failure(const std::string& what) : std::runtime_error(what) {}
};

// An insertion step of the power step-up starved; `block` is the index of the
// first block whose common-neighbour supply was exhausted.
struct insertion_failure : std::runtime_error {
    int block;
    insertion_failure(int block_, const std::string& what)
        : std::runtime_error(what), block(block_) {}
};

// A search or enumeration exceeded its configured resource limit.
struct resource_exhausted : std::runtime_error {
    explicit resource_exhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace powpath
