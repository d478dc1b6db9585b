#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sparsetrig {

/// A set partition of {1,...,n}. Canonical form: elements ascending within
/// each block, blocks ordered by their minimum.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  bool operator==(const Partition&) const = default;
};

/// A cell (p,u) of the grid [K] x [m].
using Cell = std::pair<int, int>;

/// A set partition of [K] x [m] in canonical form under the lexicographic
/// cell order, which identifies (p,u) with (p-1)m + u in [Km].
struct GridPartition {
  int K = 0;
  int m = 0;
  std::vector<std::vector<Cell>> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  bool operator==(const GridPartition&) const = default;
};

void canonicalize(Partition& A);
void canonicalize(GridPartition& A);

/// Throws std::invalid_argument unless the blocks form a disjoint cover.
void validate(const Partition& A);
void validate(const GridPartition& A);

/// "{{1,2},{3,4}}"
std::string to_string(const Partition& A);
/// "{{(1,1),(2,1)},{(1,2),(2,2)}}"
std::string to_string(const GridPartition& A);
/// Inverse of to_string; n is the largest element. Result is canonical.
Partition parse_partition(std::string_view text);
GridPartition parse_grid_partition(std::string_view text, int K, int m);

/// Zero-based block label of each element (index e-1) or cell (index (p-1)m + u-1).
std::vector<int> block_labels(const Partition& A);
std::vector<int> block_labels(const GridPartition& A);

/// Partitions of [n] into t blocks of size >= 2, built by the two-branch
/// recursion (insert n into a block of P(n-1,t), or adjoin a pair {l,n} to a
/// relabelled member of P(n-2,t-1)).
std::vector<Partition> enumerate_P(int n, int t);
/// All partitions of [n] into s blocks.
std::vector<Partition> enumerate_V(int n, int s);
/// V(n,s) without partitions having a block with circularly consecutive
/// elements (n and 1 count as consecutive).
std::vector<Partition> enumerate_U(int n, int s);
/// Partitions of [K] x [m] into s blocks where (p,u) and (p,u+1) never share
/// a block; obtained by filtering V(Km,s).
std::vector<GridPartition> enumerate_U_star(int K, int m, int s);

bool has_circular_adjacency(const Partition& A);
bool has_vertical_adjacency(const GridPartition& A);
GridPartition to_grid(const Partition& flat, int K, int m);

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// M_ij = |A_i ∩ B_j| - |(A_i + 1) ∩ B_j| with n + 1 identified with 1.
IntMatrix matrix_M(const Partition& A, const Partition& B);
/// L_ij = sum over (p,u) in A_i ∩ B_j of (-1)^p minus the same sum over
/// (A_i - 1) ∩ B_j, where A_i - 1 shifts u down without wrap-around.
IntMatrix matrix_L(const GridPartition& A, const GridPartition& B);

/// Rank over the rationals by fraction-free elimination. Runs in checked
/// 64-bit arithmetic and restarts with arbitrary precision on overflow.
int integer_rank(const IntMatrix& mat);

}  // namespace sparsetrig
