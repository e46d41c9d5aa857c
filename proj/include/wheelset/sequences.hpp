#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "wheelset/exact.hpp"

namespace wheelset {

/// Memoized combinatorial sequences. All values are exact and the cache is
/// safe for concurrent readers: growth happens under an internal lock, reads
/// of already-filled prefixes never block each other beyond that lock.
///
/// Indexing follows the counting engine's usage:
///   catalan(0..)      1, 1, 2, 5, 14, ...
///   motzkin(0..)      1, 1, 2, 4, 9, 21, 51, ...
///   ternary_trees(k)  k >= 1: 1, 1, 3, 12, 55, ...   (T_k = binom(3k-3, k-1)/(2k-1))
///   totient(k)        k >= 1
class NumberCache {
 public:
  static NumberCache& instance();

  Int catalan(size_t k);
  Int motzkin(size_t k);
  Int ternary_trees(size_t k);
  Int totient(size_t k);

 private:
  NumberCache() = default;
  std::mutex mu_;
  std::vector<Int> catalan_, motzkin_, ternary_, totient_;
};

/// binom(n, k); 0 whenever k < 0 or k > n or n < 0.
Int binomial(long long n, long long k);
Int binomial(const Int& n, const Int& k);

// Convenience wrappers over the shared cache.
Int catalan(size_t k);
Int motzkin(size_t k);
Int ternary_trees(size_t k);
Int totient(size_t k);

}  // namespace wheelset
