// Acceptance suite for the embedding engine.  Each criterion prints one
// [PASS]/[FAIL] line; the process exits nonzero when any criterion fails.
//
// Usage: acceptance <path-to-cli> <path-to-instances-dir>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "gsembed/embed.hpp"
#include "gsembed/errors.hpp"
#include "gsembed/gset.hpp"
#include "gsembed/group.hpp"
#include "gsembed/hset.hpp"
#include "gsembed/oracle.hpp"
#include "gsembed/perm.hpp"
#include "gsembed/tower.hpp"
#include "support/raw_hset.hpp"
#include "support/test_groups.hpp"

using namespace gsembed;
using namespace gsembed::testing;

namespace {

std::string g_cli;
std::string g_instances;

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members().begin(), b.members().end(),
                       a.members().begin(), a.members().end());
}

int minimal_mover(const GSet& x, int base, int p) {
  for (int g = 0; g < x.group()->order(); ++g)
    if (x.act(g, base) == p) return g;
  return -1;
}

// Assembles a certificate along the construction's own recipe but without
// the kernel precondition, so it can be built for instances where no
// embedding exists.  Every such certificate must fail verification.
EmbeddingCertificate forced_certificate(const GSet& m, const GSet& x) {
  EmbeddingCertificate cert;
  cert.z = chain_element(m, WellOrder::identity(m.size()));
  const auto orbs = orbits(x);
  const int k = static_cast<int>(orbs.size());
  cert.n = choose_level(static_cast<std::uint64_t>(k), m.size());
  cert.target_level = cert.n + 4;
  const auto reps = distinct_class_reps(m, k, cert.n + 1);
  cert.map.resize(x.size());
  for (int d = 0; d < k; ++d) {
    const int base = orbs[d].front();
    const Subgroup stab = stabilizer(x, base);
    std::vector<HSet> translates;
    for (int h : stab.members()) translates.push_back(act(h, cert.z, m));
    const HSet hz = HSet::set(std::move(translates));
    const HSet cls = bij_orbit_class(m, reps[d], cert.n + 1);
    for (int p : orbs[d]) {
      const int g = minimal_mover(x, base, p);
      cert.map[p] = tagged_copy(act(g, hz, m), cls, cert.n);
    }
    cert.orbit_plan.push_back(OrbitPlan{base, stab.members(), reps[d], cls});
  }
  return cert;
}

EmbeddingCertificate mutate(const EmbeddingCertificate& cert, const GSet& m,
                            std::mt19937& rng) {
  EmbeddingCertificate c = cert;
  const int op = static_cast<int>(rng() % 8);
  const int size = static_cast<int>(c.map.size());
  auto pick = [&rng](int bound) { return static_cast<int>(rng() % bound); };
  switch (op) {
    case 0:
      if (size >= 2) {
        const int i = pick(size);
        int j = pick(size - 1);
        if (j >= i) ++j;
        std::swap(c.map[i], c.map[j]);
        break;
      }
      [[fallthrough]];
    case 1:
      c.map[pick(size)] = wrap_singletons(c.map[pick(size)], 1);
      break;
    case 2:
      if (size >= 2) {
        const int i = pick(size);
        int j = pick(size - 1);
        if (j >= i) ++j;
        c.map[i] = c.map[j];
      } else {
        c.map[0] = wrap_singletons(c.map[0], 1);
      }
      break;
    case 3:
      c.z = HSet::set({c.z});
      break;
    case 4:
      if (!c.orbit_plan.empty()) {
        auto& h = c.orbit_plan[pick(static_cast<int>(c.orbit_plan.size()))].h;
        if (static_cast<int>(h.size()) < m.group()->order()) {
          for (int g = 0; g < m.group()->order(); ++g)
            if (std::find(h.begin(), h.end(), g) == h.end()) {
              h.push_back(g);
              std::sort(h.begin(), h.end());
              break;
            }
        } else if (h.size() > 1) {
          h.pop_back();
        }
      }
      break;
    case 5:
      if (!c.orbit_plan.empty()) {
        auto& plan = c.orbit_plan[pick(static_cast<int>(c.orbit_plan.size()))];
        plan.w_class = plan.w;
      }
      break;
    case 6:
      std::shuffle(c.map.begin(), c.map.end(), rng);
      break;
    default:
      c.target_level += 1;
      break;
  }
  return c;
}

int run_cli(const std::string& args) {
  const int status = std::system((g_cli + " " + args).c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// ---------------------------------------------------------------------------

bool criterion_sufficiency(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto instances = catalog_instances();
  if (instances.size() < 200 || instances.size() > 500) {
    detail = "catalog has " + std::to_string(instances.size()) + " instances";
    return false;
  }
  int embeddable = 0;
  for (const auto& inst : instances) {
    const ConditionReport cond = check_conditions(inst.m, inst.x);
    if (!cond.cond2) continue;
    ++embeddable;
    const EmbeddingCertificate cert = embed(inst.m, inst.x);
    if (cert.target_level != cert.n + 4 && inst.x.size() > 0) {
      detail = inst.name + ": target level " +
               std::to_string(cert.target_level) + " is not n + 4";
      return false;
    }
    const VerifyReport rep = verify_certificate(inst.m, inst.x, cert);
    if (!rep.pass) {
      detail = inst.name + ": " + rep.first_failure();
      return false;
    }
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (ms >= 60000) {
    detail = "catalog sweep took " + std::to_string(ms) + " ms";
    return false;
  }
  detail = std::to_string(instances.size()) + " instances, " +
           std::to_string(embeddable) + " embeddable, " + std::to_string(ms) +
           " ms";
  return true;
}

bool criterion_necessity(std::string& detail) {
  std::mt19937 rng(20260822u);
  int fuzzed = 0;
  int searched = 0;
  for (const auto& inst : catalog_instances()) {
    try {
      if (check_conditions(inst.m, inst.x).cond2) continue;
      const EmbeddingCertificate forced = forced_certificate(inst.m, inst.x);
      if (verify_certificate(inst.m, inst.x, forced).pass) {
        detail = inst.name + ": forced certificate verified";
        return false;
      }
      for (int i = 0; i < 100; ++i) {
        const EmbeddingCertificate c = mutate(forced, inst.m, rng);
        if (verify_certificate(inst.m, inst.x, c).pass) {
          detail = inst.name + ": mutant " + std::to_string(i) + " verified";
          return false;
        }
      }
      ++fuzzed;
      if (inst.m.size() <= 2) {
        const OracleReport rep = subobject_search(inst.x, inst.m, 2);
        if (!rep.exhaustive_no()) {
          detail = inst.name + ": search to level 2 not an exhaustive no";
          return false;
        }
        ++searched;
      } else {
        const OracleReport rep = subobject_search(inst.x, inst.m, 1);
        if (!rep.exhaustive_no()) {
          detail = inst.name + ": search at level 1 not an exhaustive no";
          return false;
        }
        ++searched;
      }
    } catch (const std::exception& e) {
      detail = inst.name + ": exception: " + e.what();
      return false;
    }
  }
  if (fuzzed == 0) {
    detail = "catalog has no instance with the kernel condition false";
    return false;
  }
  detail = std::to_string(fuzzed) + " instances fuzzed (100 mutants each), " +
           std::to_string(searched) + " exhaustive searches";
  return true;
}

bool criterion_direction_a(std::string& detail) {
  int found = 0;
  int total = 0;
  for (const auto& inst : catalog_instances()) {
    const TheoremCheck record = theorem_check(inst.x, inst.m, 2);
    ++total;
    if (record.oracle_found) ++found;
    if (!record.direction_a) {
      detail = inst.name + ": oracle found a subobject without the kernel "
                           "condition";
      return false;
    }
    if (!record.direction_b) {
      detail = inst.name + ": kernel condition held but the certificate "
                           "failed";
      return false;
    }
  }
  detail = std::to_string(total) + " instances, " + std::to_string(found) +
           " oracle hits";
  return true;
}

bool criterion_stab_z(std::string& detail) {
  int checked = 0;
  for (const auto& named : catalog_groups())
    for (int pts = 0; pts <= 3; ++pts)
      for (const GSet& m : catalog_actions(named.group, pts)) {
        const auto perms = all_perms(pts);
        const int orders = std::min<int>(3, static_cast<int>(perms.size()));
        for (int i = 0; i < orders; ++i) {
          const HSet z = chain_element(m, WellOrder{perms[i]});
          if (!(stabilizer_of_hset(m, z) == fixed_kernel(m))) {
            detail = named.name + ", " + std::to_string(pts) +
                     " points, order " + std::to_string(i) +
                     ": Stab(z) differs from the kernel";
            return false;
          }
          ++checked;
        }
      }
  detail = std::to_string(checked) + " (group, action, well-order) triples";
  return true;
}

bool criterion_stab_hz(std::string& detail) {
  int checked = 0;
  for (const auto& named : catalog_groups())
    for (int pts = 0; pts <= 3; ++pts)
      for (const GSet& m : catalog_actions(named.group, pts)) {
        const Subgroup kernel = fixed_kernel(m);
        const HSet z = chain_element(m, WellOrder::identity(pts));
        for (const Subgroup& h : all_subgroups(named.group)) {
          if (!subgroup_leq(kernel, h)) continue;
          const HSet hz = coset_tag(m, h, z);
          if (!(stabilizer_of_hset(m, hz) == h)) {
            detail = named.name + ": Stab(Hz) differs from H";
            return false;
          }
          const auto [orbit, witness] = transitive_embed(m, h);
          const GSet cosets = coset_gset(named.group, h);
          const InjectionReport inj = check_equivariant_injection(
              witness.bijection, cosets, orbit.gset);
          if (!inj.injective || !inj.equivariant || !inj.subobject_witness) {
            detail = named.name + ": coset witness rejected: " + inj.detail;
            return false;
          }
          if (!are_isomorphic(cosets, orbit.gset)) {
            detail = named.name + ": orbit of Hz not isomorphic to G/H";
            return false;
          }
          ++checked;
        }
      }
  detail = std::to_string(checked) + " (group, action, subgroup) triples";
  return true;
}

bool criterion_counting(std::string& detail) {
  for (std::uint64_t m = 0; m <= 6; ++m)
    for (int n = 1; n <= 4; ++n)
      if (!CardTower(m).exceeds_product(n)) {
        detail = "tower inequality fails at m = " + std::to_string(m) +
                 ", n = " + std::to_string(n);
        return false;
      }
  const GSet two = GSet::make(cyclic(2), 2, {{0, 1}, {1, 0}});
  const SymOrbitCount l1 = count_sym_orbits(two, 1);
  const SymOrbitCount l2 = count_sym_orbits(two, 2);
  if (l1.by_enumeration != 3 || l1.by_burnside != 3) {
    detail = "level 1 orbit count is " + std::to_string(l1.by_enumeration) +
             "/" + std::to_string(l1.by_burnside);
    return false;
  }
  if (l2.by_enumeration != 12 || l2.by_burnside != 12) {
    detail = "level 2 orbit count is " + std::to_string(l2.by_enumeration) +
             "/" + std::to_string(l2.by_burnside);
    return false;
  }
  if (!(l1.by_enumeration > 2 && l2.by_enumeration > 4)) {
    detail = "orbit counts do not dominate the tower";
    return false;
  }
  detail = "tower strict for n >= 1; orbit counts 3 and 12 by both methods";
  return true;
}

bool criterion_disjointness(std::string& detail) {
  const GSet m = GSet::make(cyclic(2), 2, {{0, 1}, {1, 0}});
  const auto reps = distinct_class_reps(m, 3, 2);
  std::vector<HSet> classes;
  for (const HSet& w : reps) classes.push_back(bij_orbit_class(m, w, 2));

  const auto level2 = level_universe(2, 2);
  const int count = 1 << 16;  // all of M_3 over two atoms

  // (hash of the tagged point, generating mask), one list per class
  std::vector<std::vector<std::pair<std::uint64_t, int>>> tagged(3);
  const std::hash<std::string> hasher;
  for (int mask = 0; mask < count; ++mask) {
    std::vector<HSet> members;
    for (int b = 0; b < 16; ++b)
      if (mask & (1 << b)) members.push_back(level2[b]);
    const HSet x = HSet::set(std::move(members));
    for (int s = 0; s < 3; ++s)
      tagged[s].emplace_back(
          hasher(kuratowski_pair(x, classes[s]).serialization()), mask);
  }
  for (auto& list : tagged) std::sort(list.begin(), list.end());

  auto rebuild = [&](int mask, int s) {
    std::vector<HSet> members;
    for (int b = 0; b < 16; ++b)
      if (mask & (1 << b)) members.push_back(level2[b]);
    return kuratowski_pair(HSet::set(std::move(members)), classes[s]);
  };
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t) {
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < tagged[s].size() && j < tagged[t].size()) {
        if (tagged[s][i].first < tagged[t][j].first) {
          ++i;
        } else if (tagged[t][j].first < tagged[s][i].first) {
          ++j;
        } else {
          // hash collision: decide by the actual values
          if (rebuild(tagged[s][i].second, s) ==
              rebuild(tagged[t][j].second, t)) {
            detail = "copies " + std::to_string(s) + " and " +
                     std::to_string(t) + " share a point (masks " +
                     std::to_string(tagged[s][i].second) + ", " +
                     std::to_string(tagged[t][j].second) + ")";
            return false;
          }
          ++i;
        }
      }
    }
  detail = "3 copies x 65536 points, pairwise empty intersections";
  return true;
}

bool criterion_data_structures(std::string& detail) {
  std::mt19937 rng(424242u);
  const auto perms3 = all_perms(3);
  RawTree previous = random_raw_tree(rng, 3, 4);
  for (int i = 0; i < 10000; ++i) {
    const RawTree tree = random_raw_tree(rng, 3, 4);
    const HSet h = to_hset(tree);
    if (parse_hset(h.serialization()) != h) {
      detail = "round trip broke at tree " + std::to_string(i);
      return false;
    }
    if (!h.is_atom() && HSet::set(h.members()) != h) {
      detail = "canonicalization not idempotent at tree " + std::to_string(i);
      return false;
    }
    const RawTree shuffled = reshuffled(tree, rng);
    if (!ext_equal(tree, shuffled) || to_hset(shuffled) != h) {
      detail = "reshuffle changed the value at tree " + std::to_string(i);
      return false;
    }
    const bool oracle_eq = ext_equal(previous, tree);
    if (oracle_eq != (to_hset(previous) == h)) {
      detail = "structural equality disagrees with the extensional oracle "
               "at tree " +
               std::to_string(i);
      return false;
    }
    if (i % 10 == 0) {
      const Perm& f = perms3[rng() % perms3.size()];
      const Perm& g = perms3[rng() % perms3.size()];
      if (apply_bijection(h, {0, 1, 2}) != h ||
          apply_bijection(apply_bijection(h, g), f) !=
              apply_bijection(h, compose(f, g))) {
        detail = "bijection laws fail at tree " + std::to_string(i);
        return false;
      }
    }
    previous = tree;
  }
  for (const auto& named : catalog_groups())
    for (int pts = 0; pts <= 3; ++pts)
      for (const GSet& m : catalog_actions(named.group, pts)) {
        const PowerGSet p1 = power_object(base_power(m));
        if (p1.gset.size() != (1 << pts)) {
          detail = named.name + ": first power has " +
                   std::to_string(p1.gset.size()) + " points";
          return false;
        }
        if (pts <= 2) {
          const PowerGSet p2 = power_object(p1);
          if (p2.gset.size() != (1 << (1 << pts))) {
            detail = named.name + ": second power has " +
                     std::to_string(p2.gset.size()) + " points";
            return false;
          }
        }
      }
  detail = "10000 trees plus power objects over the catalog";
  return true;
}

bool criterion_determinism(std::string& detail) {
  const auto tmp = std::filesystem::temp_directory_path();
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"embed", "c2_swap_vs_fixed.json"},
      {"embed", "s3_natural_vs_sign.json"},
      {"oracle", "c2_swap_vs_fixed.json"},
      {"oracle", "c2_fixed_vs_swap.json"},
  };
  for (const auto& [cmd, file] : runs) {
    const auto out1 = tmp / ("gsembed_det_1_" + cmd + "_" + file);
    const auto out2 = tmp / ("gsembed_det_2_" + cmd + "_" + file);
    const std::string inst = g_instances + "/" + file;
    const int s1 =
        run_cli(cmd + " " + inst + " --out " + out1.string() + " >/dev/null");
    const int s2 =
        run_cli(cmd + " " + inst + " --out " + out2.string() + " >/dev/null");
    const std::string b1 = slurp(out1);
    const std::string b2 = slurp(out2);
    std::remove(out1.string().c_str());
    std::remove(out2.string().c_str());
    if (s1 != s2) {
      detail = cmd + " " + file + ": exit codes " + std::to_string(s1) +
               " vs " + std::to_string(s2);
      return false;
    }
    if (b1.empty() || b1 != b2) {
      detail = cmd + " " + file + ": outputs differ across runs";
      return false;
    }
  }
  detail = "embed and oracle byte-identical across repeated runs";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli> <instances-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_instances = argv[2];

  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {"1 sufficiency on the desk catalog", criterion_sufficiency},
      {"2 necessity: fuzzed certificates and exhaustive no", criterion_necessity},
      {"3 oracle hits imply the kernel condition", criterion_direction_a},
      {"4 Stab(z) equals the kernel for every well-order", criterion_stab_z},
      {"5 Stab(Hz) equals H and the orbit realizes G/H", criterion_stab_hz},
      {"6 tower and orbit counting", criterion_counting},
      {"7 tagged copies are pairwise disjoint", criterion_disjointness},
      {"8 hereditarily finite set soundness", criterion_data_structures},
      {"9 byte-identical CLI output", criterion_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string det;
    bool ok = false;
    try {
      ok = c.run(det);
    } catch (const std::exception& e) {
      det = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << det
              << ")\n";
    if (!ok) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures ? 1 : 0;
}
