#include "support/test_groups.hpp"

#include <map>
#include <utility>

#include "gsembed/perm.hpp"

namespace gsembed::testing {

GroupPtr cyclic(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return make_group(std::move(table));
}

GroupPtr klein_four() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
  return make_group(std::move(table));
}

GroupPtr sym3() {
  const std::vector<Perm> perms = all_perms(3);
  std::map<Perm, int> index;
  for (int i = 0; i < 6; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) table[i][j] = index[compose(perms[i], perms[j])];
  return make_group(std::move(table));
}

std::vector<NamedGroup> catalog_groups() {
  return {
      {"C1", cyclic(1)}, {"C2", cyclic(2)}, {"C3", cyclic(3)},
      {"C4", cyclic(4)}, {"V4", klein_four()}, {"C5", cyclic(5)},
      {"C6", cyclic(6)}, {"S3", sym3()},
  };
}

std::vector<GSet> catalog_actions(const GroupPtr& g, int m) {
  const std::vector<Perm> perms = all_perms(m);
  const int np = static_cast<int>(perms.size());
  const int order = g->order();

  std::vector<GSet> kept;
  std::vector<int> phi(order, 0);
  while (true) {
    bool hom = true;
    for (int i = 0; i < order && hom; ++i)
      for (int j = 0; j < order && hom; ++j) {
        const Perm product = compose(perms[phi[i]], perms[phi[j]]);
        if (perms[phi[g->mul(i, j)]] != product) hom = false;
      }
    if (hom) {
      std::vector<std::vector<int>> action;
      action.reserve(order);
      for (int i = 0; i < order; ++i) action.push_back(perms[phi[i]]);
      GSet candidate = GSet::make(g, m, std::move(action));
      bool fresh = true;
      for (const GSet& old : kept)
        if (are_isomorphic(candidate, old)) {
          fresh = false;
          break;
        }
      if (fresh) kept.push_back(std::move(candidate));
    }

    int pos = order - 1;
    while (pos >= 0 && phi[pos] == np - 1) phi[pos--] = 0;
    if (pos < 0) break;
    ++phi[pos];
  }
  return kept;
}

std::vector<CatalogInstance> catalog_instances(int max_points, int cap) {
  std::vector<CatalogInstance> out;
  for (const NamedGroup& named : catalog_groups()) {
    std::vector<GSet> actions;
    std::vector<std::string> tags;
    for (int size = 0; size <= max_points; ++size) {
      const std::vector<GSet> batch = catalog_actions(named.group, size);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        actions.push_back(batch[i]);
        tags.push_back(std::to_string(size) + "." + std::to_string(i));
      }
    }
    for (std::size_t a = 0; a < actions.size(); ++a)
      for (std::size_t b = 0; b < actions.size(); ++b) {
        if (static_cast<int>(out.size()) >= cap) return out;
        out.push_back(CatalogInstance{
            named.name + " M=" + tags[a] + " X=" + tags[b], actions[a],
            actions[b]});
      }
  }
  return out;
}

}  // namespace gsembed::testing
