#ifndef GSEMBED_TOWER_HPP_
#define GSEMBED_TOWER_HPP_

#include <gmpxx.h>

#include <cstdint>

namespace gsembed {

/// The tower c_0 = m, c_{i+1} = 2^c_i of power-object cardinalities over a
/// base set of m points, computed on demand.  Values whose bit count would
/// exceed the materialization limit are never built; the exact comparisons
/// below reason about them through bit lengths instead (for i >= 1 the bit
/// length of c_i is exactly c_{i-1} + 1).
class CardTower {
 public:
  explicit CardTower(std::uint64_t m) : m_(m) {}

  std::uint64_t base() const { return m_; }

  /// c_i as an exact natural.  Throws capacity_error when the value cannot
  /// be materialized within max_bits.
  mpz_class value(int i, std::uint64_t max_bits = kDefaultMaxBits) const;

  bool materializable(int i, std::uint64_t max_bits = kDefaultMaxBits) const;

  /// Exact truth of c_{n+1} > c_n * m!, decided without materializing
  /// oversized values.
  bool exceeds_product(int n) const;

  static constexpr std::uint64_t kDefaultMaxBits = 1u << 20;

 private:
  std::uint64_t m_;
};

mpz_class tower_card(std::uint64_t m, int i);

/// Minimal n >= 1 with c_n >= k.
int choose_level(std::uint64_t k, std::uint64_t m);

mpz_class factorial(std::uint64_t n);

}  // namespace gsembed

#endif  // GSEMBED_TOWER_HPP_
