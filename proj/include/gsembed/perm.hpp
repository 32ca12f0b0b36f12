#ifndef GSEMBED_PERM_HPP_
#define GSEMBED_PERM_HPP_

#include <vector>

namespace gsembed {

// Permutations in one-line notation: p[i] = image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

Perm identity_perm(int n);

// compose(p, q)[i] = p[q[i]]  (apply q first, then p)
Perm compose(const Perm& p, const Perm& q);

Perm inverse_perm(const Perm& p);

// All permutations of {0..n-1} in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

}  // namespace gsembed

#endif  // GSEMBED_PERM_HPP_
