#include "gsembed/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gsembed/errors.hpp"

namespace gsembed {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Group Group::from_table(std::vector<std::vector<int>> table,
                        std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw input_error("group table is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw input_error("group table row " + std::to_string(i) +
                        " has wrong length");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw input_error("group table entry out of range at " + cell(i, j));
  }

  // Latin square: each row and each column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]])
        throw input_error("row " + std::to_string(i) +
                          " repeats a value at column " + std::to_string(j));
      row[table[i][j]] = true;
      if (col[table[j][i]])
        throw input_error("column " + std::to_string(i) +
                          " repeats a value at row " + std::to_string(j));
      col[table[j][i]] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = table[e][j] == j && table[j][e] == j;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw input_error("group table has no identity element");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw input_error("associativity fails at (" + std::to_string(i) +
                            "," + std::to_string(j) + "," + std::to_string(k) +
                            ")");

  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (table[i][j] == identity && table[j][i] == identity) {
        inverse[i] = j;
        break;
      }
    }
    if (inverse[i] < 0)
      throw input_error("element " + std::to_string(i) +
                        " has no two-sided inverse");
  }

  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw input_error("names list does not match group order");

  Group g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.names_ = std::move(names);
  g.identity_ = identity;
  return g;
}

std::string Group::name_of(int a) const {
  if (!names_.empty()) return names_[a];
  return "g" + std::to_string(a);
}

GroupPtr make_group(std::vector<std::vector<int>> table,
                    std::vector<std::string> names) {
  return std::make_shared<const Group>(
      Group::from_table(std::move(table), std::move(names)));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  const int n = parent_->order();
  for (int m : members_)
    if (m < 0 || m >= n)
      throw input_error("subgroup member " + std::to_string(m) +
                        " out of range");
  if (!std::binary_search(members_.begin(), members_.end(),
                          parent_->identity()))
    throw input_error("subgroup does not contain the identity");
  for (int a : members_) {
    if (!contains(parent_->inv(a)))
      throw input_error("subgroup not closed under inverse at element " +
                        std::to_string(a));
    for (int b : members_)
      if (!contains(parent_->mul(a, b)))
        throw input_error("subgroup not closed under product at " + cell(a, b));
  }
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

GeneratedAction closure_from_generators(
    const std::vector<std::pair<Perm, Perm>>& perm_pairs, int m_points,
    int x_points) {
  for (const auto& [pm, px] : perm_pairs) {
    if (static_cast<int>(pm.size()) != m_points || !is_permutation(pm))
      throw input_error("generator is not a permutation of the M points");
    if (static_cast<int>(px.size()) != x_points || !is_permutation(px))
      throw input_error("generator is not a permutation of the X points");
  }

  using Element = std::pair<Perm, Perm>;
  const Element id{identity_perm(m_points), identity_perm(x_points)};

  // Breadth-first closure from the identity, multiplying by generators on
  // the right; element order is discovery order, which is deterministic.
  std::vector<Element> elements{id};
  std::map<Element, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : perm_pairs) {
      Element next{compose(elements[i].first, gen.first),
                   compose(elements[i].second, gen.second)};
      if (index.emplace(next, static_cast<int>(elements.size())).second)
        elements.push_back(std::move(next));
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element prod{compose(elements[i].first, elements[j].first),
                   compose(elements[i].second, elements[j].second)};
      table[i][j] = index.at(prod);
    }

  GeneratedAction out;
  out.group = make_group(std::move(table));
  out.m_action.resize(n);
  out.x_action.resize(n);
  for (int i = 0; i < n; ++i) {
    out.m_action[i] = elements[i].first;
    out.x_action[i] = elements[i].second;
  }
  return out;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seeds) {
  const int n = g->order();
  for (int s : seeds)
    if (s < 0 || s >= n)
      throw input_error("seed element " + std::to_string(s) + " out of range");

  std::set<int> members(seeds.begin(), seeds.end());
  members.insert(g->identity());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> current(members.begin(), members.end());
    for (int a : current) {
      if (members.insert(g->inv(a)).second) changed = true;
      for (int b : current)
        if (members.insert(g->mul(a, b)).second) changed = true;
    }
  }
  return Subgroup(g, std::vector<int>(members.begin(), members.end()));
}

std::vector<std::vector<int>> left_cosets(const GroupPtr& g,
                                          const Subgroup& h) {
  const int n = g->order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cosets;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<int> coset;
    for (int m : h.members()) coset.push_back(g->mul(a, m));
    std::sort(coset.begin(), coset.end());
    for (int e : coset) seen[e] = true;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::optional<int> are_conjugate(const GroupPtr& g, const Subgroup& h1,
                                 const Subgroup& h2) {
  if (h1.size() != h2.size()) return std::nullopt;
  for (int c = 0; c < g->order(); ++c) {
    std::vector<int> image;
    image.reserve(h1.size());
    for (int m : h1.members()) image.push_back(g->conj(c, m));
    std::sort(image.begin(), image.end());
    if (image == h2.members()) return c;
  }
  return std::nullopt;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> found{
      subgroup_generated(g, {}).members()};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& members : std::vector<std::vector<int>>(found.begin(),
                                                             found.end())) {
      for (int e = 0; e < g->order(); ++e) {
        if (std::binary_search(members.begin(), members.end(), e)) continue;
        std::vector<int> seeds = members;
        seeds.push_back(e);
        auto bigger = subgroup_generated(g, seeds).members();
        if (found.insert(std::move(bigger)).second) changed = true;
      }
    }
  }
  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& members : sorted) out.emplace_back(g, std::move(members));
  return out;
}

}  // namespace gsembed
