#include "gsembed/gset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gsembed/errors.hpp"

namespace gsembed {

GSet GSet::make(GroupPtr group, int size,
                std::vector<std::vector<int>> action,
                std::vector<std::string> labels) {
  if (!group) throw input_error("gset has no group");
  if (size < 0) throw input_error("gset size is negative");
  const int order = group->order();
  if (static_cast<int>(action.size()) != order)
    throw input_error("action table must have one row per group element");
  for (int g = 0; g < order; ++g) {
    if (static_cast<int>(action[g].size()) != size)
      throw input_error("action row " + std::to_string(g) +
                        " has wrong length");
    if (!is_permutation(action[g]))
      throw input_error("action of element " + std::to_string(g) +
                        " is not a permutation of the points");
  }
  const int e = group->identity();
  for (int p = 0; p < size; ++p)
    if (action[e][p] != p)
      throw input_error("identity action moves point " + std::to_string(p));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int p = 0; p < size; ++p)
        if (action[g][action[h][p]] != action[group->mul(g, h)][p])
          throw input_error("action axiom fails at (g=" + std::to_string(g) +
                            ",h=" + std::to_string(h) +
                            ",p=" + std::to_string(p) + ")");
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    throw input_error("labels list does not match gset size");

  GSet x;
  x.group_ = std::move(group);
  x.size_ = size;
  x.action_ = std::move(action);
  x.labels_ = std::move(labels);
  return x;
}

GSet GSet::trivial(GroupPtr group, int size, std::vector<std::string> labels) {
  std::vector<int> row(size);
  std::iota(row.begin(), row.end(), 0);
  std::vector<std::vector<int>> action(group->order(), row);
  return make(std::move(group), size, std::move(action), std::move(labels));
}

std::string GSet::label_of(int p) const {
  if (!labels_.empty()) return labels_[p];
  return std::to_string(p);
}

std::vector<std::vector<int>> orbits(const GSet& x) {
  std::vector<bool> seen(x.size(), false);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    std::vector<int> orbit;
    for (int g = 0; g < x.group()->order(); ++g) {
      int q = x.act(g, p);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const GSet& x, int p) {
  if (p < 0 || p >= x.size())
    throw input_error("stabilizer point out of range");
  std::vector<int> members;
  for (int g = 0; g < x.group()->order(); ++g)
    if (x.act(g, p) == p) members.push_back(g);
  return Subgroup(x.group(), std::move(members));
}

Subgroup fixed_kernel(const GSet& x) {
  std::vector<int> members;
  for (int g = 0; g < x.group()->order(); ++g) {
    bool fixes_all = true;
    for (int p = 0; p < x.size() && fixes_all; ++p)
      fixes_all = x.act(g, p) == p;
    if (fixes_all) members.push_back(g);
  }
  return Subgroup(x.group(), std::move(members));
}

GSet coset_gset(const GroupPtr& g, const Subgroup& h) {
  auto cosets = left_cosets(g, h);
  const int size = static_cast<int>(cosets.size());
  std::vector<int> coset_of(g->order());
  for (int i = 0; i < size; ++i)
    for (int e : cosets[i]) coset_of[e] = i;

  std::vector<std::vector<int>> action(g->order(), std::vector<int>(size));
  for (int a = 0; a < g->order(); ++a)
    for (int i = 0; i < size; ++i)
      action[a][i] = coset_of[g->mul(a, cosets[i].front())];

  std::vector<std::string> labels;
  labels.reserve(size);
  for (const auto& coset : cosets) {
    std::string label = "{";
    for (std::size_t k = 0; k < coset.size(); ++k) {
      if (k) label += ",";
      label += g->name_of(coset[k]);
    }
    label += "}";
    labels.push_back(std::move(label));
  }
  return GSet::make(g, size, std::move(action), std::move(labels));
}

namespace {

// Orbit descriptor used for matching: base point, size, stabilizer.
struct OrbitInfo {
  std::vector<int> points;
  Subgroup stab;
};

std::vector<OrbitInfo> orbit_infos(const GSet& x) {
  std::vector<OrbitInfo> out;
  for (auto& orbit : orbits(x)) {
    Subgroup stab = stabilizer(x, orbit.front());
    out.push_back(OrbitInfo{std::move(orbit), std::move(stab)});
  }
  return out;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const GSet& x, const GSet& y) {
  if (!x.group()->same_table(*y.group()))
    throw input_error("gsets are over different groups");
  if (x.size() != y.size()) return std::nullopt;

  auto xo = orbit_infos(x);
  auto yo = orbit_infos(y);
  if (xo.size() != yo.size()) return std::nullopt;

  const GroupPtr& g = x.group();
  std::vector<int> bijection(x.size(), -1);
  std::vector<bool> used(yo.size(), false);
  for (const auto& ox : xo) {
    bool matched = false;
    for (std::size_t j = 0; j < yo.size() && !matched; ++j) {
      if (used[j] || yo[j].points.size() != ox.points.size()) continue;
      auto c = are_conjugate(g, ox.stab, yo[j].stab);
      if (!c) continue;
      // c Stab(p) c^-1 = Stab(q), so q' = c^-1 q has Stab(q') = Stab(p)
      // and gp -> gq' is a well-defined equivariant bijection of orbits.
      used[j] = true;
      matched = true;
      const int p = ox.points.front();
      const int qprime = y.act(g->inv(*c), yo[j].points.front());
      for (int point : ox.points) {
        int mover = 0;
        while (x.act(mover, p) != point) ++mover;
        bijection[point] = y.act(mover, qprime);
      }
    }
    if (!matched) return std::nullopt;
  }
  return IsoWitness{std::move(bijection)};
}

InjectionReport check_equivariant_injection(const std::vector<int>& f,
                                            const GSet& x, const GSet& y) {
  if (static_cast<int>(f.size()) != x.size())
    throw input_error("map must be total on the points of X");
  for (int v : f)
    if (v < 0 || v >= y.size())
      throw input_error("map target " + std::to_string(v) + " is not in Y");

  InjectionReport report;
  report.injective = true;
  report.equivariant = true;
  for (int p = 0; p < x.size() && report.injective; ++p)
    for (int q = p + 1; q < x.size() && report.injective; ++q)
      if (f[p] == f[q]) {
        report.injective = false;
        report.detail = "points " + std::to_string(p) + " and " +
                        std::to_string(q) + " share the image " +
                        std::to_string(f[p]);
      }
  for (int g = 0; g < x.group()->order() && report.equivariant; ++g)
    for (int p = 0; p < x.size() && report.equivariant; ++p)
      if (f[x.act(g, p)] != y.act(g, f[p])) {
        report.equivariant = false;
        if (report.detail.empty())
          report.detail = "f(g p) != g f(p) at (g=" + std::to_string(g) +
                          ",p=" + std::to_string(p) + ")";
      }
  report.subobject_witness = report.injective && report.equivariant;
  return report;
}

}  // namespace gsembed
