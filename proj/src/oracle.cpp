#include "gsembed/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "gsembed/errors.hpp"
#include "gsembed/perm.hpp"

namespace gsembed {

namespace {

SubGSet sub_from_points(const GSet& y, std::vector<int> points) {
  const GroupPtr& group = y.group();
  const int size = static_cast<int>(points.size());
  std::vector<int> position(y.size(), -1);
  for (int i = 0; i < size; ++i) position[points[i]] = i;

  std::vector<std::vector<int>> action(group->order(), std::vector<int>(size));
  for (int g = 0; g < group->order(); ++g)
    for (int i = 0; i < size; ++i)
      action[g][i] = position[y.act(g, points[i])];

  std::vector<std::string> labels;
  if (!y.labels().empty()) {
    labels.reserve(size);
    for (int p : points) labels.push_back(y.labels()[p]);
  }

  SubGSet sub;
  sub.gset = GSet::make(group, size, std::move(action), std::move(labels));
  sub.points = std::move(points);
  return sub;
}

}  // namespace

std::vector<SubGSet> enumerate_sub_gsets(const GSet& y, int max_orbits) {
  const std::vector<std::vector<int>> orbs = orbits(y);
  const int k = static_cast<int>(orbs.size());
  if (k > max_orbits)
    throw capacity_error("G-set has " + std::to_string(k) +
                         " orbits, beyond the guard of " +
                         std::to_string(max_orbits));
  std::vector<SubGSet> out;
  out.reserve(std::size_t{1} << k);
  for (long mask = 0; mask < (1L << k); ++mask) {
    std::vector<int> points;
    for (int i = 0; i < k; ++i)
      if (mask & (1L << i))
        points.insert(points.end(), orbs[i].begin(), orbs[i].end());
    std::sort(points.begin(), points.end());
    out.push_back(sub_from_points(y, std::move(points)));
  }
  return out;
}

bool OracleReport::exhaustive_no() const {
  if (found || searched_levels.empty()) return false;
  for (LevelStatus s : status)
    if (s != LevelStatus::kExhaustive) return false;
  return true;
}

OracleReport subobject_search(const GSet& x, const GSet& m, int max_level) {
  if (!x.group() || !m.group() || !x.group()->same_table(*m.group()))
    throw input_error("the two G-sets are not over the same group");
  if (max_level < 1) throw input_error("search needs max_level >= 1");

  OracleReport report;
  PowerGSet current = base_power(m);
  for (int level = 1; level <= max_level; ++level) {
    try {
      current = power_object(current);
    } catch (const capacity_error&) {
      for (int rest = level; rest <= max_level; ++rest) {
        report.searched_levels.push_back(rest);
        report.status.push_back(LevelStatus::kInconclusive);
      }
      return report;
    }

    const std::vector<std::vector<int>> orbs = orbits(current.gset);
    const int k = static_cast<int>(orbs.size());
    if (k > 20) {
      for (int rest = level; rest <= max_level; ++rest) {
        report.searched_levels.push_back(rest);
        report.status.push_back(LevelStatus::kInconclusive);
      }
      return report;
    }

    for (long mask = 0; mask < (1L << k); ++mask) {
      int size = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1L << i)) size += static_cast<int>(orbs[i].size());
      if (size != x.size()) continue;

      std::vector<int> points;
      for (int i = 0; i < k; ++i)
        if (mask & (1L << i))
          points.insert(points.end(), orbs[i].begin(), orbs[i].end());
      std::sort(points.begin(), points.end());
      SubGSet sub = sub_from_points(current.gset, std::move(points));

      std::optional<IsoWitness> witness = are_isomorphic(x, sub.gset);
      if (witness) {
        OracleFound hit;
        hit.level = level;
        hit.sub_points = sub.points;
        for (int p : sub.points) hit.sub_values.push_back(current.points[p]);
        hit.witness = std::move(*witness);
        report.searched_levels.push_back(level);
        report.status.push_back(LevelStatus::kExhaustive);
        report.found = std::move(hit);
        return report;
      }
    }
    report.searched_levels.push_back(level);
    report.status.push_back(LevelStatus::kExhaustive);
  }
  return report;
}

TheoremCheck theorem_check(const GSet& x, const GSet& m, int max_level) {
  TheoremCheck record;
  record.cond2 = check_conditions(m, x).cond2;
  record.oracle = subobject_search(x, m, max_level);
  record.oracle_found = record.oracle.found.has_value();
  record.direction_a = !record.oracle_found || record.cond2;
  if (record.cond2) {
    const EmbeddingCertificate cert = embed(m, x);
    record.direction_b = verify_certificate(m, x, cert).pass;
  } else {
    record.direction_b = true;  // vacuous
  }
  return record;
}

SymOrbitCount count_sym_orbits(const GSet& m, int level) {
  if (m.size() > kMaxAtomsForBijections)
    throw capacity_error("|M| exceeds the bijection guard");
  const std::vector<HSet> universe = level_universe(m.size(), level);
  const std::vector<Perm> perms = all_perms(m.size());

  SymOrbitCount count;
  std::set<std::string> minima;
  long long fixed_total = 0;
  for (const HSet& h : universe) {
    std::string best = h.serialization();
    for (const Perm& f : perms) {
      const HSet image = apply_bijection(h, f);
      if (image == h) ++fixed_total;
      const std::string& ser = image.serialization();
      if (ser.size() < best.size() ||
          (ser.size() == best.size() && ser < best))
        best = ser;
    }
    minima.insert(std::move(best));
  }
  count.by_enumeration = static_cast<long long>(minima.size());
  count.by_burnside = fixed_total / static_cast<long long>(perms.size());
  return count;
}

}  // namespace gsembed
