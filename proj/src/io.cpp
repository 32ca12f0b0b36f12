#include "gsembed/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "gsembed/errors.hpp"

namespace gsembed {

namespace {

int get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw input_error(what + " is not an integer");
  return j.get<int>();
}

std::vector<int> get_int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " is not an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& cell : j) out.push_back(get_int(cell, what + " entry"));
  return out;
}

std::vector<std::vector<int>> get_table(const json& j,
                                        const std::string& what) {
  if (!j.is_array()) throw input_error(what + " is not an array");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const json& row : j)
    out.push_back(get_int_vector(row, what + " row"));
  return out;
}

std::vector<std::string> get_labels(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " is not an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const json& cell : j) {
    if (!cell.is_string()) throw input_error(what + " entry is not a string");
    out.push_back(cell.get<std::string>());
  }
  return out;
}

GSet gset_from_table_form(const GroupPtr& group, const json& j,
                          const std::string& name) {
  if (!j.is_object()) throw input_error(name + " is not a JSON object");
  if (!j.contains("size")) throw input_error(name + " lacks \"size\"");
  const int size = get_int(j.at("size"), name + ".size");
  if (!j.contains("action")) throw input_error(name + " lacks \"action\"");
  std::vector<std::vector<int>> action =
      get_table(j.at("action"), name + ".action");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get_labels(j.at("labels"), name + ".labels");
  return GSet::make(group, size, std::move(action), std::move(labels));
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw input_error("instance is not a JSON object");
  for (const char* key : {"group", "M", "X"})
    if (!j.contains(key))
      throw input_error(std::string("instance lacks \"") + key + "\"");
  const json& jg = j.at("group");
  if (!jg.is_object()) throw input_error("group is not a JSON object");

  Instance inst;
  if (jg.contains("table")) {
    if (!jg.contains("order")) throw input_error("group lacks \"order\"");
    const int order = get_int(jg.at("order"), "group.order");
    std::vector<std::vector<int>> table =
        get_table(jg.at("table"), "group.table");
    if (static_cast<int>(table.size()) != order)
      throw input_error("group.order does not match the table size");
    std::vector<std::string> names;
    if (jg.contains("names")) names = get_labels(jg.at("names"), "group.names");
    inst.group = make_group(std::move(table), std::move(names));
    inst.m = gset_from_table_form(inst.group, j.at("M"), "M");
    inst.x = gset_from_table_form(inst.group, j.at("X"), "X");
    return inst;
  }

  if (!jg.contains("generators"))
    throw input_error("group needs either \"table\" or \"generators\"");
  const json& jm = j.at("M");
  const json& jx = j.at("X");
  if (!jm.is_object() || !jx.is_object())
    throw input_error("M and X must be JSON objects");
  auto check_generator_gset = [](const json& jref, const std::string& name) {
    if (!jref.contains("size")) throw input_error(name + " lacks \"size\"");
    if (jref.contains("action"))
      throw input_error(name +
                        ".action must be omitted with a generator-form group");
  };
  check_generator_gset(jm, "M");
  check_generator_gset(jx, "X");
  const int m_size = get_int(jm.at("size"), "M.size");
  const int x_size = get_int(jx.at("size"), "X.size");

  if (!jg.at("generators").is_array())
    throw input_error("group.generators is not an array");
  std::vector<std::pair<Perm, Perm>> pairs;
  for (const json& gen : jg.at("generators")) {
    if (!gen.is_object() || !gen.contains("on_M") || !gen.contains("on_X"))
      throw input_error("each generator needs \"on_M\" and \"on_X\"");
    pairs.emplace_back(get_int_vector(gen.at("on_M"), "generator on_M"),
                       get_int_vector(gen.at("on_X"), "generator on_X"));
  }
  GeneratedAction gen = closure_from_generators(pairs, m_size, x_size);
  inst.group = gen.group;
  std::vector<std::string> m_labels, x_labels;
  if (jm.contains("labels")) m_labels = get_labels(jm.at("labels"), "M.labels");
  if (jx.contains("labels")) x_labels = get_labels(jx.at("labels"), "X.labels");
  inst.m = GSet::make(inst.group, m_size, std::move(gen.m_action),
                      std::move(m_labels));
  inst.x = GSet::make(inst.group, x_size, std::move(gen.x_action),
                      std::move(x_labels));
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
  return parse_instance(j);
}

json hset_to_json(const HSet& h) {
  if (h.is_atom()) return json(h.atom_index());
  json out = json::array();
  for (const HSet& m : h.members()) out.push_back(hset_to_json(m));
  return out;
}

HSet hset_from_json(const json& j, int atom_bound) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0 || v >= atom_bound)
      throw input_error("atom index " + std::to_string(v) +
                        " outside 0.." + std::to_string(atom_bound - 1));
    return HSet::atom(v);
  }
  if (j.is_array()) {
    std::vector<HSet> members;
    members.reserve(j.size());
    for (const json& cell : j) members.push_back(hset_from_json(cell, atom_bound));
    return HSet::set(std::move(members));
  }
  throw input_error("hset JSON must be an integer atom or an array");
}

namespace {

std::vector<std::string> point_keys(const GSet& x) {
  std::vector<std::string> keys;
  keys.reserve(x.size());
  std::set<std::string> seen;
  for (int p = 0; p < x.size(); ++p) {
    std::string key = x.label_of(p);
    if (!seen.insert(key).second)
      throw input_error("duplicate point label: " + key);
    keys.push_back(std::move(key));
  }
  return keys;
}

}  // namespace

json certificate_to_json(const EmbeddingCertificate& cert, const GSet& x) {
  json out;
  out["target_level"] = cert.target_level;
  out["n"] = cert.n;
  out["z"] = hset_to_json(cert.z);
  json plan = json::array();
  for (const OrbitPlan& p : cert.orbit_plan) {
    json item;
    item["base"] = p.base;
    item["H"] = p.h;
    item["w"] = hset_to_json(p.w);
    item["class"] = hset_to_json(p.w_class);
    plan.push_back(std::move(item));
  }
  out["orbit_plan"] = std::move(plan);
  const std::vector<std::string> keys = point_keys(x);
  json map = json::object();
  for (int p = 0; p < x.size(); ++p)
    map[keys[p]] = hset_to_json(cert.map[p]);
  out["map"] = std::move(map);
  return out;
}

EmbeddingCertificate certificate_from_json(const json& j, const GSet& m,
                                           const GSet& x) {
  if (!j.is_object()) throw input_error("certificate is not a JSON object");
  for (const char* key : {"target_level", "n", "z", "orbit_plan", "map"})
    if (!j.contains(key))
      throw input_error(std::string("certificate lacks \"") + key + "\"");

  EmbeddingCertificate cert;
  cert.target_level = get_int(j.at("target_level"), "target_level");
  cert.n = get_int(j.at("n"), "n");
  if (cert.target_level < 1 || cert.n < 0)
    throw input_error("certificate levels out of range");
  cert.z = hset_from_json(j.at("z"), m.size());

  if (!j.at("orbit_plan").is_array())
    throw input_error("orbit_plan is not an array");
  for (const json& item : j.at("orbit_plan")) {
    if (!item.is_object()) throw input_error("orbit_plan entry is not an object");
    for (const char* key : {"base", "H", "w", "class"})
      if (!item.contains(key))
        throw input_error(std::string("orbit_plan entry lacks \"") + key +
                          "\"");
    OrbitPlan plan;
    plan.base = get_int(item.at("base"), "orbit_plan base");
    plan.h = get_int_vector(item.at("H"), "orbit_plan H");
    for (int g : plan.h)
      if (g < 0 || g >= m.group()->order())
        throw input_error("orbit_plan H member out of range");
    std::sort(plan.h.begin(), plan.h.end());
    plan.w = hset_from_json(item.at("w"), m.size());
    plan.w_class = hset_from_json(item.at("class"), m.size());
    cert.orbit_plan.push_back(std::move(plan));
  }

  const json& jmap = j.at("map");
  if (!jmap.is_object()) throw input_error("certificate map is not an object");
  const std::vector<std::string> keys = point_keys(x);
  if (static_cast<int>(jmap.size()) != x.size())
    throw input_error("certificate map has " + std::to_string(jmap.size()) +
                      " entries for " + std::to_string(x.size()) + " points");
  cert.map.reserve(x.size());
  for (int p = 0; p < x.size(); ++p) {
    if (!jmap.contains(keys[p]))
      throw input_error("certificate map lacks point \"" + keys[p] + "\"");
    cert.map.push_back(hset_from_json(jmap.at(keys[p]), m.size()));
  }
  return cert;
}

json condition_report_to_json(const ConditionReport& report) {
  json out;
  out["cond1"] = report.cond1;
  out["cond1_note"] = report.cond1_note;
  out["cond2"] = report.cond2;
  out["G_M"] = report.g_m.members();
  out["G_X"] = report.g_x.members();
  return out;
}

json verify_report_to_json(const VerifyReport& report) {
  json out;
  out["pass"] = report.pass;
  json checks = json::array();
  for (const VerifyCheck& c : report.checks) {
    json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  out["first_failure"] = report.first_failure();
  return out;
}

json oracle_report_to_json(const OracleReport& report) {
  json out;
  out["searched_levels"] = report.searched_levels;
  json exhaustive = json::array();
  for (LevelStatus s : report.status)
    exhaustive.push_back(s == LevelStatus::kExhaustive);
  out["exhaustive"] = std::move(exhaustive);
  if (report.found) {
    json hit;
    hit["level"] = report.found->level;
    hit["sub_points"] = report.found->sub_points;
    json values = json::array();
    for (const HSet& h : report.found->sub_values)
      values.push_back(hset_to_json(h));
    hit["sub_values"] = std::move(values);
    hit["witness"] = report.found->witness.bijection;
    out["found"] = std::move(hit);
  } else {
    out["found"] = nullptr;
  }
  return out;
}

json theorem_check_to_json(const TheoremCheck& record) {
  json out;
  out["cond2"] = record.cond2;
  out["oracle"] = oracle_report_to_json(record.oracle);
  out["oracle_found"] = record.oracle_found;
  out["direction_a"] = record.direction_a;
  out["direction_b"] = record.direction_b;
  return out;
}

json power_to_json(const PowerGSet& p) {
  json out;
  out["level"] = p.level;
  out["size"] = p.gset.size();
  json points = json::array();
  for (const HSet& h : p.points) points.push_back(h.serialization());
  out["points"] = std::move(points);
  out["action"] = p.gset.action();
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gsembed
