#include "sparsetrig/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace sparsetrig {

namespace {

int flat_index(const Cell& c, int m) { return (c.first - 1) * m + (c.second - 1); }

Cell cell_of(int flat, int m) { return {flat / m + 1, flat % m + 1}; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw std::invalid_argument(std::string("partition parse error: expected '") + c + "'");
    }
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("partition parse error: expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) throw std::invalid_argument("partition parse error: trailing characters");
  }

 private:
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\t')) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Item, class ReadItem>
std::vector<std::vector<Item>> parse_blocks(std::string_view text, ReadItem read_item) {
  Parser in(text);
  std::vector<std::vector<Item>> blocks;
  in.expect('{');
  if (!in.accept('}')) {
    do {
      in.expect('{');
      std::vector<Item> block;
      do {
        block.push_back(read_item(in));
      } while (in.accept(','));
      in.expect('}');
      blocks.push_back(std::move(block));
    } while (in.accept(','));
    in.expect('}');
  }
  in.finish();
  return blocks;
}

Partition singletons(int n) {
  Partition A{n, {}};
  for (int e = 1; e <= n; ++e) A.blocks.push_back({e});
  return A;
}

Partition whole(int n) {
  Partition A{n, {{}}};
  for (int e = 1; e <= n; ++e) A.blocks[0].push_back(e);
  return A;
}

using Memo = std::map<std::pair<int, int>, std::vector<Partition>>;

const std::vector<Partition>& P_rec(int n, int t, Memo& memo) {
  if (auto it = memo.find({n, t}); it != memo.end()) return it->second;
  std::vector<Partition> out;
  if (n < 2 || t < 1 || 2 * t > n) {
    // empty
  } else if (t == 1) {
    out.push_back(whole(n));
  } else {
    for (const auto& A : P_rec(n - 1, t, memo)) {
      for (int j = 0; j < t; ++j) {
        Partition B = A;
        B.n = n;
        B.blocks[static_cast<std::size_t>(j)].push_back(n);
        out.push_back(std::move(B));
      }
    }
    const std::vector<Partition> smaller = P_rec(n - 2, t - 1, memo);
    for (const auto& A : smaller) {
      for (int l = 1; l <= n - 1; ++l) {
        Partition B{n, A.blocks};
        for (auto& block : B.blocks) {
          for (int& e : block) {
            if (e >= l) ++e;
          }
        }
        B.blocks.push_back({l, n});
        canonicalize(B);
        out.push_back(std::move(B));
      }
    }
  }
  return memo.emplace(std::make_pair(n, t), std::move(out)).first->second;
}

const std::vector<Partition>& V_rec(int n, int s, Memo& memo) {
  if (auto it = memo.find({n, s}); it != memo.end()) return it->second;
  std::vector<Partition> out;
  if (n < 1 || s < 1 || s > n) {
    // empty
  } else if (s == 1) {
    out.push_back(whole(n));
  } else if (s == n) {
    out.push_back(singletons(n));
  } else {
    for (const auto& A : V_rec(n - 1, s, memo)) {
      for (int j = 0; j < s; ++j) {
        Partition B = A;
        B.n = n;
        B.blocks[static_cast<std::size_t>(j)].push_back(n);
        out.push_back(std::move(B));
      }
    }
    const std::vector<Partition> smaller = V_rec(n - 1, s - 1, memo);
    for (const auto& A : smaller) {
      Partition B = A;
      B.n = n;
      B.blocks.push_back({n});
      out.push_back(std::move(B));
    }
  }
  return memo.emplace(std::make_pair(n, s), std::move(out)).first->second;
}

}  // namespace

void canonicalize(Partition& A) {
  for (auto& block : A.blocks) std::sort(block.begin(), block.end());
  std::sort(A.blocks.begin(), A.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

void canonicalize(GridPartition& A) {
  for (auto& block : A.blocks) std::sort(block.begin(), block.end());
  std::sort(A.blocks.begin(), A.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

void validate(const Partition& A) {
  if (A.n < 0) throw std::invalid_argument("partition: negative ground set size");
  std::vector<bool> seen(static_cast<std::size_t>(A.n) + 1, false);
  int count = 0;
  for (const auto& block : A.blocks) {
    if (block.empty()) throw std::invalid_argument("partition: empty block");
    for (int e : block) {
      if (e < 1 || e > A.n) throw std::invalid_argument("partition: element outside [n]");
      if (seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("partition: repeated element");
      seen[static_cast<std::size_t>(e)] = true;
      ++count;
    }
  }
  if (count != A.n) throw std::invalid_argument("partition: blocks do not cover [n]");
}

void validate(const GridPartition& A) {
  if (A.K < 1 || A.m < 1) throw std::invalid_argument("grid partition: K and m must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(A.K) * A.m, false);
  std::size_t count = 0;
  for (const auto& block : A.blocks) {
    if (block.empty()) throw std::invalid_argument("grid partition: empty block");
    for (const auto& c : block) {
      if (c.first < 1 || c.first > A.K || c.second < 1 || c.second > A.m) {
        throw std::invalid_argument("grid partition: cell outside [K]x[m]");
      }
      const auto idx = static_cast<std::size_t>(flat_index(c, A.m));
      if (seen[idx]) throw std::invalid_argument("grid partition: repeated cell");
      seen[idx] = true;
      ++count;
    }
  }
  if (count != seen.size()) throw std::invalid_argument("grid partition: blocks do not cover the grid");
}

std::string to_string(const Partition& A) {
  std::string out = "{";
  for (std::size_t i = 0; i < A.blocks.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < A.blocks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(A.blocks[i][j]);
    }
    out += '}';
  }
  return out + "}";
}

std::string to_string(const GridPartition& A) {
  std::string out = "{";
  for (std::size_t i = 0; i < A.blocks.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < A.blocks[i].size(); ++j) {
      if (j) out += ',';
      const auto& c = A.blocks[i][j];
      out += '(' + std::to_string(c.first) + ',' + std::to_string(c.second) + ')';
    }
    out += '}';
  }
  return out + "}";
}

Partition parse_partition(std::string_view text) {
  Partition A;
  A.blocks = parse_blocks<int>(text, [](Parser& in) { return in.integer(); });
  for (const auto& block : A.blocks) {
    for (int e : block) A.n = std::max(A.n, e);
  }
  validate(A);
  canonicalize(A);
  return A;
}

GridPartition parse_grid_partition(std::string_view text, int K, int m) {
  GridPartition A{K, m, {}};
  A.blocks = parse_blocks<Cell>(text, [](Parser& in) {
    in.expect('(');
    const int p = in.integer();
    in.expect(',');
    const int u = in.integer();
    in.expect(')');
    return Cell{p, u};
  });
  validate(A);
  canonicalize(A);
  return A;
}

std::vector<int> block_labels(const Partition& A) {
  std::vector<int> labels(static_cast<std::size_t>(A.n), -1);
  for (std::size_t i = 0; i < A.blocks.size(); ++i) {
    for (int e : A.blocks[i]) labels[static_cast<std::size_t>(e - 1)] = static_cast<int>(i);
  }
  return labels;
}

std::vector<int> block_labels(const GridPartition& A) {
  std::vector<int> labels(static_cast<std::size_t>(A.K) * A.m, -1);
  for (std::size_t i = 0; i < A.blocks.size(); ++i) {
    for (const auto& c : A.blocks[i]) labels[static_cast<std::size_t>(flat_index(c, A.m))] = static_cast<int>(i);
  }
  return labels;
}

std::vector<Partition> enumerate_P(int n, int t) {
  Memo memo;
  return P_rec(n, t, memo);
}

std::vector<Partition> enumerate_V(int n, int s) {
  Memo memo;
  std::vector<Partition> out = V_rec(n, s, memo);
  for (auto& A : out) canonicalize(A);
  return out;
}

bool has_circular_adjacency(const Partition& A) {
  const auto labels = block_labels(A);
  for (int e = 0; e < A.n; ++e) {
    if (labels[static_cast<std::size_t>(e)] == labels[static_cast<std::size_t>((e + 1) % A.n)]) return true;
  }
  return false;
}

bool has_vertical_adjacency(const GridPartition& A) {
  const auto labels = block_labels(A);
  for (int p = 1; p <= A.K; ++p) {
    for (int u = 1; u < A.m; ++u) {
      if (labels[static_cast<std::size_t>(flat_index({p, u}, A.m))] ==
          labels[static_cast<std::size_t>(flat_index({p, u + 1}, A.m))]) {
        return true;
      }
    }
  }
  return false;
}

std::vector<Partition> enumerate_U(int n, int s) {
  std::vector<Partition> out;
  for (auto& A : enumerate_V(n, s)) {
    if (!has_circular_adjacency(A)) out.push_back(std::move(A));
  }
  return out;
}

GridPartition to_grid(const Partition& flat, int K, int m) {
  if (flat.n != K * m) throw std::invalid_argument("to_grid: partition size differs from K*m");
  GridPartition G{K, m, {}};
  for (const auto& block : flat.blocks) {
    std::vector<Cell> cells;
    for (int e : block) cells.push_back(cell_of(e - 1, m));
    G.blocks.push_back(std::move(cells));
  }
  canonicalize(G);
  return G;
}

std::vector<GridPartition> enumerate_U_star(int K, int m, int s) {
  if (K < 1 || m < 1) throw std::invalid_argument("enumerate_U_star: K and m must be positive");
  std::vector<GridPartition> out;
  for (const auto& A : enumerate_V(K * m, s)) {
    GridPartition G = to_grid(A, K, m);
    if (!has_vertical_adjacency(G)) out.push_back(std::move(G));
  }
  return out;
}

IntMatrix matrix_M(const Partition& A, const Partition& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix_M: partitions of different ground sets");
  const auto a = block_labels(A);
  const auto b = block_labels(B);
  IntMatrix M(A.size(), B.size());
  for (int e = 0; e < A.n; ++e) {
    const int i = a[static_cast<std::size_t>(e)];
    M(i, b[static_cast<std::size_t>(e)]) += 1;
    M(i, b[static_cast<std::size_t>((e + 1) % A.n)]) -= 1;
  }
  return M;
}

IntMatrix matrix_L(const GridPartition& A, const GridPartition& B) {
  if (A.K != B.K || A.m != B.m) throw std::invalid_argument("matrix_L: partitions of different grids");
  const auto a = block_labels(A);
  const auto b = block_labels(B);
  IntMatrix L(A.size(), B.size());
  for (int p = 1; p <= A.K; ++p) {
    const int sign = p % 2 == 0 ? 1 : -1;
    for (int u = 1; u <= A.m; ++u) {
      const auto idx = static_cast<std::size_t>(flat_index({p, u}, A.m));
      L(a[idx], b[idx]) += sign;
      if (u >= 2) L(a[idx], b[idx - 1]) -= sign;
    }
  }
  return L;
}

}  // namespace sparsetrig
