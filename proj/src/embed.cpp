#include "gsembed/embed.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "gsembed/errors.hpp"

namespace gsembed {

namespace {

void require_same_group(const GSet& a, const GSet& b) {
  if (!a.group() || !b.group() || !a.group()->same_table(*b.group()))
    throw input_error("the two G-sets are not over the same group");
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members().begin(), b.members().end(),
                       a.members().begin(), a.members().end());
}

void check_embed_guards(const GSet& m, const GSet& x) {
  if (m.group()->order() > kMaxGroupOrder)
    throw capacity_error("group order " + std::to_string(m.group()->order()) +
                         " exceeds the guard of " +
                         std::to_string(kMaxGroupOrder));
  if (m.size() > kMaxAtomsForBijections)
    throw capacity_error("|M| = " + std::to_string(m.size()) +
                         " exceeds the bijection guard of " +
                         std::to_string(kMaxAtomsForBijections));
  if (x.size() > kMaxXPoints)
    throw capacity_error("|X| = " + std::to_string(x.size()) +
                         " exceeds the guard of " + std::to_string(kMaxXPoints));
}

bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

WellOrder WellOrder::identity(int m) {
  WellOrder ord;
  ord.positions = identity_perm(m);
  return ord;
}

ConditionReport check_conditions(const GSet& m, const GSet& x) {
  require_same_group(m, x);
  Subgroup g_m = fixed_kernel(m);
  Subgroup g_x = fixed_kernel(x);
  const bool cond2 = subgroup_leq(g_m, g_x);
  std::string note =
      "satisfied for every finite instance: the cardinalities |M|, 2^|M|, "
      "2^2^|M|, ... are unbounded, so card X lies below their supremum";
  return ConditionReport{true, std::move(note), cond2, std::move(g_m),
                         std::move(g_x)};
}

HSet chain_element(const GSet& m, const WellOrder& ord) {
  if (static_cast<int>(ord.positions.size()) != m.size() ||
      !is_permutation(ord.positions))
    throw input_error("well-order is not an ordering of M's points");
  std::vector<HSet> segments;
  segments.reserve(m.size() + 1);
  std::vector<HSet> prefix;
  segments.push_back(HSet::set({}));
  for (int beta = 0; beta < m.size(); ++beta) {
    prefix.push_back(HSet::atom(ord.positions[beta]));
    segments.push_back(HSet::set(prefix));
  }
  return HSet::set(std::move(segments));
}

Subgroup stabilizer_of_hset(const GSet& m, const HSet& h) {
  std::vector<int> members;
  for (int g = 0; g < m.group()->order(); ++g)
    if (act(g, h, m) == h) members.push_back(g);
  return Subgroup(m.group(), std::move(members));
}

HSet coset_tag(const GSet& m, const Subgroup& h, const HSet& z) {
  if (!h.parent() || !h.parent()->same_table(*m.group()))
    throw input_error("subgroup belongs to a different group");
  if (!subgroup_leq(fixed_kernel(m), h))
    throw precondition_error(
        "coset tag requires the kernel G_M to lie inside H");
  std::vector<HSet> translates;
  translates.reserve(h.size());
  for (int hh : h.members()) translates.push_back(act(hh, z, m));
  return HSet::set(std::move(translates));
}

std::pair<PowerGSet, IsoWitness> transitive_embed(const GSet& m,
                                                  const Subgroup& h) {
  const GroupPtr& group = m.group();
  const HSet z = chain_element(m, WellOrder::identity(m.size()));
  const HSet hz = coset_tag(m, h, z);

  std::vector<HSet> points;
  for (int g = 0; g < group->order(); ++g) {
    HSet image = act(g, hz, m);
    bool seen = false;
    for (const HSet& p : points)
      if (p == image) {
        seen = true;
        break;
      }
    if (!seen) points.push_back(std::move(image));
  }

  const int size = static_cast<int>(points.size());
  auto index_of = [&points](const HSet& v) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == v) return static_cast<int>(i);
    throw precondition_error("orbit is not closed under the action");
  };

  std::vector<std::vector<int>> action(group->order(), std::vector<int>(size));
  for (int g = 0; g < group->order(); ++g)
    for (int i = 0; i < size; ++i) action[g][i] = index_of(act(g, points[i], m));

  std::vector<std::string> labels;
  labels.reserve(size);
  for (const HSet& p : points) labels.push_back(p.serialization());

  const std::vector<std::vector<int>> cosets = left_cosets(group, h);
  IsoWitness witness;
  witness.bijection.reserve(cosets.size());
  for (const std::vector<int>& coset : cosets)
    witness.bijection.push_back(
        index_of(act(coset.front(), hz, m)));

  PowerGSet orbit;
  orbit.gset = GSet::make(group, size, std::move(action), std::move(labels));
  orbit.points = std::move(points);
  orbit.level = 3;
  return {std::move(orbit), std::move(witness)};
}

HSet bij_orbit_class(const GSet& m, const HSet& w, int level) {
  if (m.size() > kMaxAtomsForBijections)
    throw capacity_error("|M| exceeds the bijection guard");
  if (!has_level(w, level))
    throw precondition_error("representative is not at the stated level");
  std::vector<HSet> orbit;
  for (const Perm& f : all_perms(m.size()))
    orbit.push_back(apply_bijection(w, f));
  return HSet::set(std::move(orbit));
}

std::vector<HSet> distinct_class_reps(const GSet& m, int k, int level) {
  if (k < 0) throw input_error("negative class count");
  if (k == 0) return {};
  if (level < 1) throw precondition_error("classes live at level >= 1");
  if (m.size() > kMaxAtomsForBijections)
    throw capacity_error("|M| exceeds the bijection guard");
  CardTower tower(m.size());
  if (tower.materializable(level - 1) &&
      tower.value(level - 1) < static_cast<unsigned long>(k))
    throw precondition_error(
        "fewer classes than requested at this level");

  const std::vector<Perm> perms = all_perms(m.size());
  std::vector<HSet> reps;
  LevelEnumerator stream(m.size(), level);
  for (std::size_t i = 0; static_cast<int>(reps.size()) < k; ++i) {
    std::optional<HSet> h = stream.at(i);
    if (!h)
      throw precondition_error("fewer classes than requested at this level");
    const std::string& ser = h->serialization();
    bool minimal = true;
    for (const Perm& f : perms) {
      if (shortlex_less(apply_bijection(*h, f).serialization(), ser)) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(*h);
  }
  return reps;
}

HSet tagged_copy(const HSet& x, const HSet& w_class, int n) {
  if (n < 1) throw precondition_error("tagged copies need n >= 1");
  if (!has_level(x, 3))
    throw precondition_error("tagged point is not at level 3");
  if (!has_level(w_class, n + 2))
    throw precondition_error("class tag is not at level n + 2");
  return kuratowski_pair(wrap_singletons(x, n - 1), w_class);
}

EmbeddingCertificate embed(const GSet& m, const GSet& x) {
  const ConditionReport cond = check_conditions(m, x);
  if (!cond.cond2)
    throw necessity_error(
        "no embedding exists: the kernel G_M is not contained in G_X");
  check_embed_guards(m, x);

  EmbeddingCertificate cert;
  cert.z = chain_element(m, WellOrder::identity(m.size()));
  if (x.size() == 0) {
    cert.target_level = 1;
    cert.n = 0;
    return cert;
  }

  const std::vector<std::vector<int>> orbs = orbits(x);
  const int k = static_cast<int>(orbs.size());
  const int n = choose_level(k, m.size());
  cert.n = n;
  cert.target_level = n + 4;

  const std::vector<HSet> reps = distinct_class_reps(m, k, n + 1);
  cert.map.resize(x.size());
  for (int delta = 0; delta < k; ++delta) {
    const std::vector<int>& orbit = orbs[delta];
    const int base = orbit.front();
    Subgroup h = stabilizer(x, base);
    const HSet hz = coset_tag(m, h, cert.z);
    const HSet w_class = bij_orbit_class(m, reps[delta], n + 1);

    for (int p : orbit) {
      int mover = -1;
      for (int g = 0; g < m.group()->order(); ++g)
        if (x.act(g, base) == p) {
          mover = g;
          break;
        }
      cert.map[p] = tagged_copy(act(mover, hz, m), w_class, n);
    }
    cert.orbit_plan.push_back(
        OrbitPlan{base, h.members(), reps[delta], w_class});
  }
  return cert;
}

std::string VerifyReport::first_failure() const {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return c.name + ": " + c.detail;
  return {};
}

VerifyReport verify_certificate(const GSet& m, const GSet& x,
                                const EmbeddingCertificate& cert) {
  require_same_group(m, x);
  VerifyReport report;
  auto add = [&report](std::string name, bool pass, std::string detail) {
    report.checks.push_back(
        VerifyCheck{std::move(name), pass, pass ? "" : std::move(detail)});
  };

  if (static_cast<int>(cert.map.size()) != x.size()) {
    add("map-domain", false,
        "map covers " + std::to_string(cert.map.size()) + " of " +
            std::to_string(x.size()) + " points");
    report.pass = false;
    return report;
  }
  add("map-domain", true, "");

  {
    bool ok = true;
    std::string detail;
    for (int p = 0; p < x.size() && ok; ++p)
      if (!has_level(cert.map[p], cert.target_level)) {
        ok = false;
        detail = "image of point " + std::to_string(p) +
                 " is not at level " + std::to_string(cert.target_level);
      }
    add("image-levels", ok, std::move(detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (int p = 0; p < x.size() && ok; ++p)
      for (int q = p + 1; q < x.size() && ok; ++q)
        if (cert.map[p] == cert.map[q]) {
          ok = false;
          detail = "points " + std::to_string(p) + " and " +
                   std::to_string(q) + " share an image";
        }
    add("injective", ok, std::move(detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (int g = 0; g < m.group()->order() && ok; ++g)
      for (int p = 0; p < x.size() && ok; ++p)
        if (act(g, cert.map[p], m) != cert.map[x.act(g, p)]) {
          ok = false;
          detail = "g = " + std::to_string(g) + ", point " + std::to_string(p);
        }
    add("equivariant", ok, std::move(detail));
  }

  {
    const Subgroup kernel = fixed_kernel(m);
    const Subgroup stab = stabilizer_of_hset(m, cert.z);
    add("stab-z", stab == kernel,
        "Stab(z) differs from the kernel G_M");
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t d = 0; d < cert.orbit_plan.size() && ok; ++d) {
      const OrbitPlan& plan = cert.orbit_plan[d];
      if (plan.base < 0 || plan.base >= x.size()) {
        ok = false;
        detail = "orbit " + std::to_string(d) + ": base point out of range";
        break;
      }
      try {
        Subgroup h(m.group(), plan.h);
        std::vector<HSet> translates;
        for (int hh : h.members()) translates.push_back(act(hh, cert.z, m));
        const HSet hz = HSet::set(std::move(translates));
        if (!(stabilizer_of_hset(m, hz) == h)) {
          ok = false;
          detail = "orbit " + std::to_string(d) +
                   ": Stab(Hz) differs from the stated H";
        }
      } catch (const input_error& e) {
        ok = false;
        detail = "orbit " + std::to_string(d) + ": " + e.what();
      }
    }
    add("orbit-stabilizers", ok, std::move(detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < cert.orbit_plan.size() && ok; ++a)
      for (std::size_t b = a + 1; b < cert.orbit_plan.size() && ok; ++b)
        if (cert.orbit_plan[a].w_class == cert.orbit_plan[b].w_class) {
          ok = false;
          detail = "orbits " + std::to_string(a) + " and " + std::to_string(b) +
                   " share a class tag";
        }
    add("classes-distinct", ok, std::move(detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t d = 0; d < cert.orbit_plan.size() && ok; ++d)
      for (int g = 0; g < m.group()->order() && ok; ++g)
        if (act(g, cert.orbit_plan[d].w_class, m) !=
            cert.orbit_plan[d].w_class) {
          ok = false;
          detail = "orbit " + std::to_string(d) +
                   ": class tag moved by g = " + std::to_string(g);
        }
    add("classes-invariant", ok, std::move(detail));
  }

  report.pass = true;
  for (const VerifyCheck& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

}  // namespace gsembed
