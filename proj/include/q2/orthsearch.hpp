#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "q2/verify.hpp"

namespace q2 {

struct SearchParams {
    int max_iterations = 5000;
    int restarts = 200;
    double tolerance = 1e-9;
    std::uint64_t seed = 12345;
    bool polish = true;
};

struct SearchFailure {
    double best_residual = 0.0;
    long iterations = 0;
};

struct SearchOutcome {
    std::optional<Certificate> certificate;  // verified on success
    SearchFailure failure;                   // populated on failure
    long iterations = 0;
    int restarts_used = 0;
    bool success() const { return certificate.has_value(); }
};

// Alternating projections between matrices supported on E(g) + diagonal and
// symmetric orthogonal matrices (eigenvalue sign snapping), with seeded
// restarts and an optional Gauss-Newton polish on the pattern coordinates.
// Success requires a verified certificate with every edge entry of magnitude
// > tolerance; convergence to a proper-subpattern matrix counts as failure.
SearchOutcome search_orthogonal(const Graph& g, const SearchParams& p);

enum class CertifyRoute { ClosedForm, NamedTable, Search };

struct CertifyResult {
    std::optional<Certificate> certificate;
    std::optional<SearchFailure> failure;
    CertifyRoute route = CertifyRoute::Search;
    bool success() const { return certificate.has_value(); }
};

// Tries candle closed forms, then the named matrix table (M, M1, M2; exact or
// isomorphism-fallback), then search. use_named_table=false skips the table.
CertifyResult certify_q2(const Graph& g, const SearchParams& p, bool use_named_table = true);

std::string certify_route_name(CertifyRoute r);

}  // namespace q2
