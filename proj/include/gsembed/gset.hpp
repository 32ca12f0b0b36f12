#ifndef GSEMBED_GSET_HPP_
#define GSEMBED_GSET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gsembed/group.hpp"

namespace gsembed {

/// A finite G-set: points 0..size-1 with a validated action table.
/// action(g, p) is the image of point p under group element g.  The
/// constructor checks that the identity acts trivially, that every element
/// acts by a permutation, and that act(g, act(h, p)) == act(g*h, p).
class GSet {
 public:
  /// Empty placeholder; every usable GSet comes from make or trivial.
  GSet() = default;

  static GSet make(GroupPtr group, int size,
                   std::vector<std::vector<int>> action,
                   std::vector<std::string> labels = {});

  /// All points fixed by all of G (the trivial action on `size` points).
  static GSet trivial(GroupPtr group, int size,
                      std::vector<std::string> labels = {});

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(int g, int p) const { return action_[g][p]; }
  const std::vector<std::vector<int>>& action() const { return action_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label_of(int p) const;

 private:
  GroupPtr group_;
  int size_ = 0;
  std::vector<std::vector<int>> action_;  // order x size
  std::vector<std::string> labels_;
};

/// Equivariant bijection between two G-sets over the same group:
/// bijection[p] in Y for each point p of X.
struct IsoWitness {
  std::vector<int> bijection;
};

/// Orbit partition, each orbit sorted, the list ordered by minimal point.
std::vector<std::vector<int>> orbits(const GSet& x);

/// {g : g p = p}.
Subgroup stabilizer(const GSet& x, int p);

/// G_X = {g : g x = x for all x}; the whole group when X is empty.
Subgroup fixed_kernel(const GSet& x);

/// The coset space G/H with left translation.  Point i is the i-th coset of
/// left_cosets(G, H); labels show the coset members.
GSet coset_gset(const GroupPtr& g, const Subgroup& h);

/// Equivariant bijection X -> Y if one exists.  Orbits are matched by size
/// and stabilizer conjugacy class (transitive G-sets are isomorphic exactly
/// when their point stabilizers are conjugate), then the bijection is
/// assembled orbit by orbit.
std::optional<IsoWitness> are_isomorphic(const GSet& x, const GSet& y);

/// Result of checking a candidate subobject witness.
struct InjectionReport {
  bool injective = false;
  bool equivariant = false;
  bool subobject_witness = false;
  std::string detail;  // first counterexample, empty when both checks pass
};

/// Checks f : X -> Y for injectivity and equivariance.  Semantic failures
/// are report content; a malformed f (wrong length, target out of range) is
/// an input error.
InjectionReport check_equivariant_injection(const std::vector<int>& f,
                                            const GSet& x, const GSet& y);

}  // namespace gsembed

#endif  // GSEMBED_GSET_HPP_
