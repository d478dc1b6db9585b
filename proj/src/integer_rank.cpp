#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sparsetrig/partitions.hpp"

namespace sparsetrig {

namespace {

using boost::multiprecision::cpp_int;

struct Checked {
  static bool mul_sub_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t prev,
                          std::int64_t& out) {
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
        __builtin_sub_overflow(ab, cd, &diff)) {
      return false;
    }
    out = diff / prev;
    return true;
  }
};

// Bareiss elimination with row and column pivoting. Returns nullopt when an
// intermediate product leaves the 64-bit range.
template <class T, class Step>
std::optional<int> bareiss_rank(std::vector<T> a, int rows, int cols, Step step) {
  auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * cols + j]; };
  T prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        if (!step(at(rank, col), at(i, j), at(i, col), at(rank, j), prev, at(i, j))) return std::nullopt;
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

int integer_rank(const IntMatrix& mat) {
  if (mat.rows == 0 || mat.cols == 0) return 0;
  const auto fast = bareiss_rank<std::int64_t>(mat.data, mat.rows, mat.cols, Checked::mul_sub_div);
  if (fast) return *fast;
  std::vector<cpp_int> big(mat.data.begin(), mat.data.end());
  const auto exact = bareiss_rank<cpp_int>(std::move(big), mat.rows, mat.cols,
                                           [](const cpp_int& a, const cpp_int& b, const cpp_int& c,
                                              const cpp_int& d, const cpp_int& prev, cpp_int& out) {
                                             out = (a * b - c * d) / prev;
                                             return true;
                                           });
  return *exact;
}

}  // namespace sparsetrig
