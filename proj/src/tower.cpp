#include "gsembed/tower.hpp"

#include <string>

#include "gsembed/errors.hpp"

namespace gsembed {

mpz_class CardTower::value(int i, std::uint64_t max_bits) const {
  if (i < 0) throw input_error("negative tower index");
  mpz_class c(static_cast<unsigned long>(m_));
  for (int j = 0; j < i; ++j) {
    if (c > static_cast<unsigned long>(max_bits))
      throw capacity_error("tower value c_" + std::to_string(j + 1) +
                           " exceeds " + std::to_string(max_bits) + " bits");
    mpz_class next;
    mpz_mul_2exp(next.get_mpz_t(), mpz_class(1).get_mpz_t(), c.get_ui());
    c = next;
  }
  return c;
}

bool CardTower::materializable(int i, std::uint64_t max_bits) const {
  if (i < 0) return false;
  mpz_class c(static_cast<unsigned long>(m_));
  for (int j = 0; j < i; ++j) {
    if (c > static_cast<unsigned long>(max_bits)) return false;
    mpz_class next;
    mpz_mul_2exp(next.get_mpz_t(), mpz_class(1).get_mpz_t(), c.get_ui());
    c = next;
  }
  return true;
}

bool CardTower::exceeds_product(int n) const {
  if (n < 0) throw input_error("negative tower index");
  const mpz_class bang = factorial(m_);
  if (materializable(n + 1))
    return value(n + 1) > value(n) * bang;

  // c_{n+1} is not materializable, so c_n > 2^20; with the factorial guard
  // (m <= 64, so bitlen(m!) <= 297) bit lengths settle the comparison:
  //   bitlen(c_{n+1}) = c_n + 1
  //   bitlen(c_n * m!) <= bitlen(c_n) + bitlen(m!) = c_{n-1} + 1 + bitlen(m!)
  // and c_n = 2^{c_{n-1}} > c_{n-1} + 297 whenever c_{n-1} >= 9, which holds
  // here because c_n > 2^20 forces c_{n-1} >= 21.
  return true;
}

mpz_class tower_card(std::uint64_t m, int i) { return CardTower(m).value(i); }

int choose_level(std::uint64_t k, std::uint64_t m) {
  CardTower tower(m);
  for (int n = 1;; ++n) {
    if (!tower.materializable(n)) return n;  // beyond 2^20 bits, so >= any k
    if (tower.value(n) >= static_cast<unsigned long>(k)) return n;
  }
}

mpz_class factorial(std::uint64_t n) {
  if (n > 64) throw capacity_error("factorial guard exceeded");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace gsembed
