#include "ardehali/lhv.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace ardehali {

namespace {

constexpr int kMaxEnumerationQubits = 12;

void check_n(int n) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  if (n > kMaxEnumerationQubits) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "n=" + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(kMaxEnumerationQubits));
  }
}

// Best last-site contribution given the prefix product R + iM of
// (a_j + i a'_j) over j < n: the four sign choices yield +-2R and +-2M.
std::int64_t best_tail(std::int64_t r, std::int64_t m) {
  return 2 * std::max(std::abs(r), std::abs(m));
}

std::int64_t max_over_suffix(const int k, const int depth, std::int64_t r,
                             std::int64_t m) {
  if (depth == k) return best_tail(r, m);
  std::int64_t best = INT64_MIN;
  for (int a = -1; a <= 1; a += 2) {
    for (int ap = -1; ap <= 1; ap += 2) {
      // (r + i m)(a + i ap)
      std::int64_t r2 = r * a - m * ap;
      std::int64_t m2 = r * ap + m * a;
      best = std::max(best, max_over_suffix(k, depth + 1, r2, m2));
    }
  }
  return best;
}

}  // namespace

std::int64_t strategy_value(const DeterministicStrategy& s) {
  const int n = s.n();
  if (n < 2 || static_cast<int>(s.ap.size()) != n) {
    throw Error(ErrorCode::MalformedInput, "strategy arity mismatch");
  }
  std::int64_t r = 0, m = 0;
  for (int j = 0; j < n; ++j) {
    if (std::abs(s.a[j]) != 1 || std::abs(s.ap[j]) != 1) {
      throw Error(ErrorCode::MalformedInput, "outcomes must be +-1");
    }
    if (j == 0) {
      r = s.a[0];
      m = s.ap[0];
    } else if (j < n - 1) {
      std::int64_t r2 = r * s.a[j] - m * s.ap[j];
      m = r * s.ap[j] + m * s.a[j];
      r = r2;
    }
  }
  return r * (s.a[n - 1] - s.ap[n - 1]) + m * (s.a[n - 1] + s.ap[n - 1]);
}

std::int64_t lhv_max(int n) {
  check_n(n);
  // Negating both outcomes at site 1 negates the value and maps
  // (|R|, |M|) to itself, so fixing a_1 = +1 loses nothing.
  std::int64_t best = INT64_MIN;
  for (int ap = -1; ap <= 1; ap += 2) {
    best = std::max(best, max_over_suffix(n - 1, 1, 1, ap));
  }
  return best;
}

DeterministicStrategy decode_strategy(int n, std::uint64_t index) {
  DeterministicStrategy s;
  s.a.resize(n);
  s.ap.resize(n);
  for (int j = 0; j < n; ++j) {
    s.a[j] = (index >> (2 * j)) & 1 ? -1 : 1;
    s.ap[j] = (index >> (2 * j + 1)) & 1 ? -1 : 1;
  }
  return s;
}

double mixed_strategy_value(int n, const std::vector<double>& weights) {
  check_n(n);
  const std::uint64_t count = std::uint64_t(1) << (2 * n);
  if (weights.size() != count) {
    throw Error(ErrorCode::InvalidDistribution,
                "expected " + std::to_string(count) + " weights, got " +
                    std::to_string(weights.size()));
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw Error(ErrorCode::InvalidDistribution, "negative weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidDistribution,
                "weights sum to " + std::to_string(sum));
  }
  double value = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (weights[i] != 0.0) {
      value += weights[i] * double(strategy_value(decode_strategy(n, i)));
    }
  }
  return value;
}

}  // namespace ardehali
