#pragma once

// Closed-form bounds on the largest (c,s)-frameproof families and codes.
// Every entry lists its hypotheses; inapplicable entries stay in the report.

#include <cstdint>
#include <optional>

#include "fplab/report.hpp"

namespace fplab {

/// Bounds on f_{c,s}(n,k). `m` is m(k,t,lambda;s+1,c-s+1) with t and lambda
/// from lambda_of(c,s,k). `packing_size` is the size of a known
/// (n,k,t)-packing, `design_available` whether an (n,k,t)-design is known.
/// The critical upper entry bounds g_{c,s}(n,k) >= f_{c,s}(n,k) and keeps the factor s0.
BoundReport hypergraph_bounds(int n, int k, int c, int s, const BigInt& m,
                              std::optional<std::uint64_t> packing_size = std::nullopt,
                              bool design_available = false);

/// Bounds on f^q_{c,s}(n) for codes in [q]^n. `m` is m(n,t,lambda;s+1,c-s+1)
/// with t and lambda from lambda_of(c,s,n). Throws ParameterError when q < 2.
BoundReport code_bounds(int n, int c, int s, int q, const BigInt& m);

/// Smallest prime-power factor p^e in the canonical factorization of q >= 2.
std::uint64_t smallest_prime_power_factor(std::uint64_t q);

}  // namespace fplab
