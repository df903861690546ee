#ifndef ARDEHALI_LHV_HPP
#define ARDEHALI_LHV_HPP

#include <cstdint>
#include <vector>

#include "ardehali/types.hpp"

namespace ardehali {

/// Local deterministic assignment: a[j], ap[j] in {-1,+1} are the
/// preassigned outcomes of A_{j+1}, A'_{j+1}.
struct DeterministicStrategy {
  std::vector<int> a;
  std::vector<int> ap;
  int n() const { return static_cast<int>(a.size()); }
};

/// Value of the Bell-Ardehali correlation polynomial at a deterministic
/// strategy, computed in exact integer arithmetic. Always an even
/// integer.
std::int64_t strategy_value(const DeterministicStrategy& s);

/// Exact maximum of strategy_value over all 4^n strategies.
/// Matches classical_bound(n) for all n. Capped at n = 12.
std::int64_t lhv_max(int n);

/// Expected value under a probability distribution over all 4^n
/// strategies. Strategy index encoding: bits (2j, 2j+1) hold the
/// outcomes for site j+1 (A then A'), bit value 0 meaning +1.
double mixed_strategy_value(int n, const std::vector<double>& weights);

/// Decodes the mixed_strategy_value index encoding.
DeterministicStrategy decode_strategy(int n, std::uint64_t index);

}  // namespace ardehali

#endif
