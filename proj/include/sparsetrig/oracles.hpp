#pragma once

#include <cstdint>
#include <span>

#include "sparsetrig/model.hpp"
#include "sparsetrig/partitions.hpp"

namespace sparsetrig {

/// Largest number of tuples the exhaustive oracles will visit.
inline constexpr std::uint64_t kOracleTupleLimit = 10'000'000;

/// Number of (k_1,...,k_n) in T^n with k_j != k_{j+1} (k_{n+1} = k_1) and
/// sum_{r in A_i} (k_{r+1} - k_r) = 0 for every block, by exhaustive search.
/// Throws std::invalid_argument when |T|^n exceeds kOracleTupleLimit.
std::uint64_t brute_force_C(const Partition& A, std::span<const FrequencyIndex> T);

/// The same count organised by the equality pattern of the tuple: sums, over
/// B in U(n,s), the injective assignments of distinct elements of T to the
/// blocks of B that satisfy the block constraints.
std::uint64_t count_C_by_patterns(const Partition& A, std::span<const FrequencyIndex> T);

/// Number of arrays k^{(p)}_r in T, (p,r) in [K] x [m], with
/// k^{(p)}_{r-1} != k^{(p)}_r (k^{(p)}_0 = k0) and
/// sum_{(p,r) in A_i} (-1)^p (k^{(p)}_r - k^{(p)}_{r-1}) = 0 for every block.
/// Throws std::invalid_argument when |T|^{Km} exceeds kOracleTupleLimit.
std::uint64_t brute_force_B(const GridPartition& A, std::span<const FrequencyIndex> T,
                            const FrequencyIndex& k0);

}  // namespace sparsetrig
