#include "sparsetrig/census.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <thread>

namespace sparsetrig {

namespace {

struct Labelled {
  std::vector<int> labels;
  int blocks = 0;
};

// Dense (t,s,R) counters for one worker.
class Accumulator {
 public:
  explicit Accumulator(int n) : side_(n + 1), counts_(static_cast<std::size_t>(side_ * side_ * side_), 0) {}
  void bump(int t, int s, int R) { ++counts_[index(t, s, R)]; }
  std::uint64_t get(int t, int s, int R) const { return counts_[index(t, s, R)]; }
  int side() const { return side_; }

 private:
  std::size_t index(int t, int s, int R) const {
    return (static_cast<std::size_t>(t) * side_ + s) * side_ + R;
  }
  int side_;
  std::vector<std::uint64_t> counts_;
};

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

bool wanted(const CensusOptions& options, int t, int s) {
  return options.only.empty() || options.only.contains({t, s});
}

bool wanted_t(const CensusOptions& options, int t) {
  if (options.only.empty()) return true;
  return std::any_of(options.only.begin(), options.only.end(), [t](const auto& p) { return p.first == t; });
}

bool wanted_s(const CensusOptions& options, int s) {
  if (options.only.empty()) return true;
  return std::any_of(options.only.begin(), options.only.end(), [s](const auto& p) { return p.second == s; });
}

template <class MatrixOf>
QTable run_census(QTable table, const std::vector<Labelled>& As, const std::vector<Labelled>& Bs,
                  const CensusOptions& options, MatrixOf matrix_of) {
  const unsigned workers = worker_count(options.threads, As.size());
  std::vector<Accumulator> acc(workers, Accumulator(table.n));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < As.size(); i += workers) {
          const auto& A = As[i];
          for (const auto& B : Bs) {
            if (!wanted(options, A.blocks, B.blocks)) continue;
            acc[w].bump(A.blocks, B.blocks, integer_rank(matrix_of(A, B)));
          }
        }
      });
    }
  }
  const int side = table.n + 1;
  for (int t = 0; t < side; ++t) {
    for (int s = 0; s < side; ++s) {
      for (int R = 0; R < side; ++R) {
        for (const auto& a : acc) table.add(t, s, R, a.get(t, s, R));
      }
    }
  }
  return table;
}

Labelled label(const Partition& A) { return {block_labels(A), A.size()}; }

std::uint64_t parse_u64(std::string_view field) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("qtable CSV: bad integer '" + std::string(field) + "'");
  }
  return v;
}

std::uint64_t central_half(int n) {
  // (2n)! / (2 (n!)^2) = C(2n, n) / 2
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
  return c / 2;
}

}  // namespace

std::uint64_t QTable::at(int t, int s, int R) const {
  auto it = entries.find({t, s, R});
  return it == entries.end() ? 0 : it->second;
}

void QTable::add(int t, int s, int R, std::uint64_t count) {
  if (count == 0) return;
  auto& slot = entries[{t, s, R}];
  if (__builtin_add_overflow(slot, count, &slot)) throw std::overflow_error("QTable: count overflow");
}

std::uint64_t QTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, v] : entries) {
    if (__builtin_add_overflow(sum, v, &sum)) throw std::overflow_error("QTable: total overflow");
  }
  return sum;
}

std::uint64_t QTable::row_total(int t, int s) const {
  std::uint64_t sum = 0;
  for (const auto& [key, v] : entries) {
    if (std::get<0>(key) == t && std::get<1>(key) == s) sum += v;
  }
  return sum;
}

QTable compute_Q(int n, const CensusOptions& options) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("compute_Q: n must be even and at least 2");
  if (n > kMaxCensusN) {
    throw CapacityError("compute_Q: n = " + std::to_string(n) + " exceeds the supported maximum " +
                        std::to_string(kMaxCensusN));
  }
  std::vector<Labelled> As;
  std::vector<Labelled> Bs;
  for (int t = 1; 2 * t <= n; ++t) {
    if (!wanted_t(options, t)) continue;
    for (const auto& A : enumerate_P(n, t)) As.push_back(label(A));
  }
  for (int s = 2; s <= n; ++s) {
    if (!wanted_s(options, s)) continue;
    for (const auto& B : enumerate_U(n, s)) Bs.push_back(label(B));
  }
  QTable table;
  table.kind = CensusKind::Q;
  table.n = n;
  return run_census(std::move(table), As, Bs, options, [n](const Labelled& A, const Labelled& B) {
    IntMatrix M(A.blocks, B.blocks);
    for (int e = 0; e < n; ++e) {
      const int i = A.labels[static_cast<std::size_t>(e)];
      M(i, B.labels[static_cast<std::size_t>(e)]) += 1;
      M(i, B.labels[static_cast<std::size_t>((e + 1) % n)]) -= 1;
    }
    return M;
  });
}

QTable compute_Q_star(int K, int m, const CensusOptions& options) {
  if (K < 1 || m < 1) throw std::invalid_argument("compute_Q_star: K and m must be positive");
  if (K * m > kMaxCensusStarCells) {
    throw CapacityError("compute_Q_star: K*m = " + std::to_string(K * m) + " exceeds the supported maximum " +
                        std::to_string(kMaxCensusStarCells));
  }
  const int n = K * m;
  std::vector<Labelled> As;
  std::vector<Labelled> Bs;
  for (int t = 1; 2 * t <= n; ++t) {
    if (!wanted_t(options, t)) continue;
    for (const auto& A : enumerate_P(n, t)) As.push_back(label(A));
  }
  for (int s = 1; s <= n; ++s) {
    if (!wanted_s(options, s)) continue;
    for (const auto& B : enumerate_U_star(K, m, s)) Bs.push_back({block_labels(B), B.size()});
  }
  QTable table;
  table.kind = CensusKind::QStar;
  table.n = n;
  table.K = K;
  table.m = m;
  // Flat index e = (p-1)m + (u-1) for cell (p,u).
  return run_census(std::move(table), As, Bs, options, [K, m](const Labelled& A, const Labelled& B) {
    IntMatrix L(A.blocks, B.blocks);
    for (int p = 1; p <= K; ++p) {
      const int sign = p % 2 == 0 ? 1 : -1;
      for (int u = 1; u <= m; ++u) {
        const auto e = static_cast<std::size_t>((p - 1) * m + (u - 1));
        L(A.labels[e], B.labels[e]) += sign;
        if (u >= 2) L(A.labels[e], B.labels[e - 1]) -= sign;
      }
    }
    return L;
  });
}

std::string emit_qtable_csv(const QTable& table) {
  std::ostringstream out;
  out << "t,s,R,count\n";
  const bool star = table.kind == CensusKind::QStar;
  const int s_lo = star && table.m == 1 ? 1 : 2;
  for (int t = 1; 2 * t <= table.n; ++t) {
    for (int s = s_lo; s <= table.n; ++s) {
      const int R_hi = star ? t : t - 1;
      for (int R = 0; R <= R_hi; ++R) out << t << ',' << s << ',' << R << ',' << table.at(t, s, R) << '\n';
    }
  }
  return out.str();
}

QTable parse_qtable_csv(std::string_view csv, CensusKind kind, int n, int K, int m) {
  QTable table;
  table.kind = kind;
  table.n = n;
  table.K = K;
  table.m = m;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto end = csv.find('\n');
    std::string_view line = csv.substr(0, end);
    csv = end == std::string_view::npos ? std::string_view{} : csv.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no++ == 0) {
      if (line != "t,s,R,count") throw std::invalid_argument("qtable CSV: unexpected header");
      continue;
    }
    if (line.empty()) continue;
    std::uint64_t f[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = line.find(',');
      if ((comma == std::string_view::npos) != (i == 3)) throw std::invalid_argument("qtable CSV: expected 4 fields");
      f[i] = parse_u64(line.substr(0, comma));
      if (i < 3) line = line.substr(comma + 1);
    }
    table.add(static_cast<int>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2]), f[3]);
  }
  return table;
}

std::vector<ClosedFormCheck> closed_form_checks(int two_n) {
  if (two_n < 4 || two_n % 2 != 0 || two_n > kMaxCensusN) {
    throw std::invalid_argument("closed_form_checks: 2n must be even in [4, 10]");
  }
  const int n = two_n / 2;
  CensusOptions options;
  for (int s = 2; s <= two_n; ++s) options.only.insert({1, s});
  options.only.insert({2, 2});
  for (int s = 2; s <= two_n; ++s) {
    if (n > 2 && 2 * s >= 3 * n) options.only.insert({n, s});
  }
  for (int t = 2; t <= n; ++t) options.only.insert({t, two_n});
  for (int t = 2; t <= n; ++t) {
    if (n > 3 && 3 * t >= 2 * n) options.only.insert({t, two_n - 1});
  }
  const QTable Q = compute_Q(two_n, options);

  std::vector<ClosedFormCheck> report;
  auto record = [&](std::string name, std::uint64_t got, std::uint64_t want) {
    report.push_back({std::move(name), got == want,
                      "got " + std::to_string(got) + ", expected " + std::to_string(want)});
  };
  const std::string tag = "Q(" + std::to_string(two_n) + ",";
  for (int s = 2; s <= two_n; ++s) {
    record(tag + "1," + std::to_string(s) + ",0) = |U|", Q.at(1, s, 0), enumerate_U(two_n, s).size());
  }
  const std::uint64_t half = central_half(n);
  record(tag + "2,2,0) closed form", Q.at(2, 2, 0), half - 1);
  record(tag + "2,2,1) closed form", Q.at(2, 2, 1), (std::uint64_t{1} << (two_n - 1)) - two_n - half);
  for (int s = 2; s <= two_n; ++s) {
    if (n > 2 && 2 * s >= 3 * n) record(tag + std::to_string(n) + "," + std::to_string(s) + ",0) = 0", Q.at(n, s, 0), 0);
  }
  for (int t = 2; t <= n; ++t) record(tag + std::to_string(t) + "," + std::to_string(two_n) + ",0) = 0", Q.at(t, two_n, 0), 0);
  for (int t = 2; t <= n; ++t) {
    if (n > 3 && 3 * t >= 2 * n) {
      record(tag + std::to_string(t) + "," + std::to_string(two_n - 1) + ",0) = 0", Q.at(t, two_n - 1, 0), 0);
    }
  }
  return report;
}

std::map<std::pair<int, int>, std::uint64_t> expected_C_polynomial(const Partition& A) {
  validate(A);
  for (const auto& block : A.blocks) {
    if (block.size() < 2) throw std::invalid_argument("expected_C_polynomial: A has a singleton block");
  }
  std::map<std::pair<int, int>, std::uint64_t> counts;
  for (int s = 2; s <= A.n; ++s) {
    for (const auto& B : enumerate_U(A.n, s)) ++counts[{s, integer_rank(matrix_M(A, B))}];
  }
  return counts;
}

}  // namespace sparsetrig
