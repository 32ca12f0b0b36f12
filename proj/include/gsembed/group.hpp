#ifndef GSEMBED_GROUP_HPP_
#define GSEMBED_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsembed/perm.hpp"

namespace gsembed {

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..order-1; table(i, j) is the index of the
/// product g_i * g_j, where products act left-to-right on points: the action
/// of g_i * g_j is "apply g_j, then g_i".  Construction validates the Latin
/// square property, associativity, the identity and two-sided inverses, and
/// names the first failing cell when a check fails.
class Group {
 public:
  static Group from_table(std::vector<std::vector<int>> table,
                          std::vector<std::string> names = {});

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int a) const;

  bool same_table(const Group& other) const { return table_ == other.table_; }

 private:
  Group() = default;

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_group(std::vector<std::vector<int>> table,
                    std::vector<std::string> names = {});

/// A subgroup, stored as the sorted member indices of its parent group.
/// Construction checks identity membership and closure under product and
/// inverse.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const;

  bool operator==(const Subgroup& other) const {
    return members_ == other.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> members_;  // sorted
};

/// Closure of generator pairs inside Sym(M-points) x Sym(X-points).
/// The group is the generated image; the two action tables record how each
/// element acts on M and on X.  An empty generator list yields the trivial
/// group.
struct GeneratedAction {
  GroupPtr group;
  std::vector<std::vector<int>> m_action;  // order x |M|
  std::vector<std::vector<int>> x_action;  // order x |X|
};

GeneratedAction closure_from_generators(
    const std::vector<std::pair<Perm, Perm>>& perm_pairs, int m_points,
    int x_points);

/// Smallest subgroup of G containing the seed elements.
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seeds);

/// Left cosets of H in G, each sorted, the list ordered by minimal member.
std::vector<std::vector<int>> left_cosets(const GroupPtr& g, const Subgroup& h);

/// Some g with g H1 g^-1 = H2, or nullopt.  Returns the minimal such index.
std::optional<int> are_conjugate(const GroupPtr& g, const Subgroup& h1,
                                 const Subgroup& h2);

/// Every subgroup of G, ordered by (size, members).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

}  // namespace gsembed

#endif  // GSEMBED_GROUP_HPP_
