#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "acatlab/caps.hpp"

namespace acatlab {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t skipped = 0;  // over a cap
    std::vector<nlohmann::json> failures;
    nlohmann::json details = nlohmann::json::object();
    bool ok() const { return failures.empty() && cases > 0; }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    Caps caps;
    unsigned workers = 1;
    std::size_t max_failures = 20;  // counterexamples kept per suite
};

/// Fixed-point formula for every catalog group up to max_order, every subgroup, every n < |G|.
SuiteResult verify_fixed_points(std::size_t max_order, const VerifyOptions& opt = {});
/// Connectivity of the fixed subcomplexes against floor((n+1)/|H|) - 2.
SuiteResult verify_connectivity(std::size_t max_order, const VerifyOptions& opt = {});
/// Depth lemma, containment and uniqueness, Sylow counts, order drop along chains.
SuiteResult verify_lattice(std::size_t max_order, const VerifyOptions& opt = {});
/// Bound bookkeeping on the catalog: sharp, non-sharp, bracket and proof inequality.
SuiteResult verify_bounds(std::size_t max_order, const VerifyOptions& opt = {});
/// Random SNF certificates and the skeleton Betti numbers C(m-1, k+1).
SuiteResult verify_homology(std::size_t random_matrices, std::size_t max_vertices, const VerifyOptions& opt = {});
/// X_p(G) property (3), X(G) acyclicity and Smith acyclicity, certificate range.
SuiteResult verify_construction(const std::vector<std::string>& groups, const VerifyOptions& opt = {});

/// The catalog corpus used by `verify construction`.
std::vector<std::string> construction_corpus();

}  // namespace acatlab
