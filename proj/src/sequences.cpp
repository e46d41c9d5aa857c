#include "wheelset/sequences.hpp"

namespace wheelset {

NumberCache& NumberCache::instance() {
  static NumberCache cache;
  return cache;
}

Int NumberCache::catalan(size_t k) {
  std::lock_guard<std::mutex> lock(mu_);
  if (catalan_.empty()) catalan_ = {Int(1)};
  while (catalan_.size() <= k) {
    const size_t m = catalan_.size() - 1;  // have C_m, want C_{m+1}
    catalan_.push_back(exact_div(catalan_.back() * 2 * (2 * Int(m) + 1), Int(m) + 2));
  }
  return catalan_[k];
}

Int NumberCache::motzkin(size_t k) {
  std::lock_guard<std::mutex> lock(mu_);
  if (motzkin_.empty()) motzkin_ = {Int(1), Int(1)};
  while (motzkin_.size() <= k) {
    const size_t m = motzkin_.size() - 1;  // have M_m, M_{m-1}
    const Int num = (2 * Int(m) + 3) * motzkin_[m] + 3 * Int(m) * motzkin_[m - 1];
    motzkin_.push_back(exact_div(num, Int(m) + 3));
  }
  return motzkin_[k];
}

Int NumberCache::ternary_trees(size_t k) {
  if (k == 0) throw Error("ternary_trees: index starts at 1");
  std::lock_guard<std::mutex> lock(mu_);
  while (ternary_.size() < k) {
    const long long m = static_cast<long long>(ternary_.size());  // T_{m+1}
    ternary_.push_back(exact_div(binomial(3 * m, m), 2 * Int(m) + 1));
  }
  return ternary_[k - 1];
}

Int NumberCache::totient(size_t k) {
  if (k == 0) throw Error("totient: index starts at 1");
  std::lock_guard<std::mutex> lock(mu_);
  while (totient_.size() < k) {
    size_t m = totient_.size() + 1;
    Int phi(m);
    size_t rest = m;
    for (size_t p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      phi -= exact_div(phi, Int(p));
      while (rest % p == 0) rest /= p;
    }
    if (rest > 1) phi -= exact_div(phi, Int(rest));
    totient_.push_back(phi);
  }
  return totient_[k - 1];
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r(1);
  for (long long i = 0; i < k; ++i) r = exact_div(r * (n - i), Int(i + 1));
  return r;
}

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int kk = (k > n - k) ? Int(n - k) : k;
  Int r(1);
  for (Int i(0); i < kk; ++i) r = exact_div(r * (n - i), i + 1);
  return r;
}

Int catalan(size_t k) { return NumberCache::instance().catalan(k); }
Int motzkin(size_t k) { return NumberCache::instance().motzkin(k); }
Int ternary_trees(size_t k) { return NumberCache::instance().ternary_trees(k); }
Int totient(size_t k) { return NumberCache::instance().totient(k); }

}  // namespace wheelset
