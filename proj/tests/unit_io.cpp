#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gsembed/embed.hpp"
#include "gsembed/errors.hpp"
#include "gsembed/io.hpp"
#include "gsembed/oracle.hpp"
#include "support/test_groups.hpp"

using namespace gsembed;
using namespace gsembed::testing;

namespace {

const char* kSwapVsFixed = R"({
  "group": {"order": 2, "table": [[0, 1], [1, 0]], "names": ["e", "s"]},
  "M": {"size": 2, "action": [[0, 1], [1, 0]], "labels": ["a", "b"]},
  "X": {"size": 1, "action": [[0], [0]], "labels": ["x"]}
})";

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("parse_instance, table form") {
  const Instance inst = parse_instance(json::parse(kSwapVsFixed));
  CHECK(inst.group->order() == 2);
  CHECK(inst.group->name_of(1) == "s");
  CHECK(inst.m.size() == 2);
  CHECK(inst.m.act(1, 0) == 1);
  CHECK(inst.m.label_of(0) == "a");
  CHECK(inst.x.size() == 1);
  CHECK(inst.x.label_of(0) == "x");
}

TEST_CASE("parse_instance, generator form") {
  const json j = json::parse(R"({
    "group": {"generators": [{"on_M": [1, 2, 0], "on_X": [0]},
                             {"on_M": [1, 0, 2], "on_X": [0]}]},
    "M": {"size": 3, "labels": ["p", "q", "r"]},
    "X": {"size": 1}
  })");
  const Instance inst = parse_instance(j);
  CHECK(inst.group->order() == 6);
  CHECK(inst.m.size() == 3);
  CHECK(orbits(inst.m).size() == 1);
  CHECK(fixed_kernel(inst.m).size() == 1);
  CHECK(inst.m.label_of(2) == "r");
  CHECK(inst.x.size() == 1);
  CHECK(fixed_kernel(inst.x).size() == 6);
}

TEST_CASE("parse_instance, shape errors") {
  json both = json::parse(kSwapVsFixed);
  both["group"]["generators"] =
      json::array({json{{"on_M", {1, 0}}, {"on_X", {0}}}});
  CHECK(parse_instance(both).group->order() == 2);  // table wins

  json gen_with_action = json::parse(R"({
    "group": {"generators": [{"on_M": [1, 0], "on_X": [0]}]},
    "M": {"size": 2, "action": [[0, 1], [1, 0]]},
    "X": {"size": 1}
  })");
  CHECK_THROWS_AS(parse_instance(gen_with_action), input_error);

  json no_group = json::parse(kSwapVsFixed);
  no_group.erase("group");
  CHECK_THROWS_AS(parse_instance(no_group), input_error);

  json no_size = json::parse(kSwapVsFixed);
  no_size["M"].erase("size");
  CHECK_THROWS_AS(parse_instance(no_size), input_error);

  json bad_order = json::parse(kSwapVsFixed);
  bad_order["group"]["order"] = 3;
  CHECK_THROWS_AS(parse_instance(bad_order), input_error);

  CHECK_THROWS_AS(parse_instance(json::array()), input_error);
}

TEST_CASE("load_instance") {
  const auto path = temp_file("gsembed_unit_io.json");
  {
    std::ofstream out(path);
    out << kSwapVsFixed;
  }
  const Instance inst = load_instance(path.string());
  CHECK(inst.m.size() == 2);
  std::remove(path.string().c_str());

  CHECK_THROWS_AS(load_instance(path.string()), input_error);

  const auto bad = temp_file("gsembed_unit_io_bad.json");
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_instance(bad.string()), input_error);
  std::remove(bad.string().c_str());
}

TEST_CASE("hset JSON form") {
  const HSet z = parse_hset("{{},{A0},{A0,A1}}");
  CHECK(hset_to_json(z) == json::parse("[[], [0], [0, 1]]"));
  CHECK(hset_from_json(json::parse("[[], [0], [0, 1]]"), 2) == z);
  CHECK(hset_from_json(json::parse("[1, 1, 0]"), 2) ==
        parse_hset("{A0,A1}"));
  CHECK(hset_from_json(json(1), 2) == HSet::atom(1));
  CHECK_THROWS_AS(hset_from_json(json(2), 2), input_error);
  CHECK_THROWS_AS(hset_from_json(json(-1), 2), input_error);
  CHECK_THROWS_AS(hset_from_json(json("A0"), 2), input_error);
}

TEST_CASE("certificate round trip") {
  const Instance inst = parse_instance(json::parse(kSwapVsFixed));
  const EmbeddingCertificate cert = embed(inst.m, inst.x);

  const json j = certificate_to_json(cert, inst.x);
  CHECK(j.at("target_level") == 5);
  CHECK(j.at("n") == 1);
  CHECK(j.at("map").contains("x"));  // labeled point

  const EmbeddingCertificate back =
      certificate_from_json(j, inst.m, inst.x);
  CHECK(back.map == cert.map);
  CHECK(back.z == cert.z);
  CHECK(verify_certificate(inst.m, inst.x, back).pass);
  CHECK(dump_json(certificate_to_json(back, inst.x)) == dump_json(j));

  json no_z = j;
  no_z.erase("z");
  CHECK_THROWS_AS(certificate_from_json(no_z, inst.m, inst.x), input_error);

  json bad_level = j;
  bad_level["target_level"] = 0;
  CHECK_THROWS_AS(certificate_from_json(bad_level, inst.m, inst.x),
                  input_error);

  json wrong_map = j;
  wrong_map["map"].erase("x");
  CHECK_THROWS_AS(certificate_from_json(wrong_map, inst.m, inst.x),
                  input_error);

  json bad_h = j;
  bad_h["orbit_plan"][0]["H"] = {0, 5};
  CHECK_THROWS_AS(certificate_from_json(bad_h, inst.m, inst.x), input_error);
}

TEST_CASE("duplicate point labels cannot key a map") {
  const auto g2 = cyclic(2);
  const GSet m = GSet::make(g2, 2, {{0, 1}, {1, 0}});
  const GSet x =
      GSet::make(g2, 2, {{0, 1}, {0, 1}}, std::vector<std::string>{"u", "u"});
  const EmbeddingCertificate cert = embed(m, x);
  CHECK_THROWS_AS(certificate_to_json(cert, x), input_error);
}

TEST_CASE("report converters") {
  const Instance inst = parse_instance(json::parse(kSwapVsFixed));

  const json cond = condition_report_to_json(check_conditions(inst.m, inst.x));
  CHECK(cond.at("cond1") == true);
  CHECK(cond.at("cond2") == true);
  CHECK(cond.at("G_M") == json::array({0}));
  CHECK(cond.at("G_X") == json::array({0, 1}));

  const json ver = verify_report_to_json(
      verify_certificate(inst.m, inst.x, embed(inst.m, inst.x)));
  CHECK(ver.at("pass") == true);
  CHECK(ver.at("first_failure") == "");
  CHECK(ver.at("checks").is_array());

  const json orep =
      oracle_report_to_json(subobject_search(inst.x, inst.m, 2));
  CHECK(orep.at("searched_levels") == json::array({1}));
  CHECK(orep.at("exhaustive") == json::array({true}));
  CHECK(orep.at("found").at("level") == 1);
  CHECK(orep.at("found").at("witness") == json::array({0}));

  const json miss = oracle_report_to_json(
      subobject_search(inst.m, GSet::make(inst.group, 2, {{0, 1}, {0, 1}}),
                       2));
  CHECK(miss.at("found").is_null());

  const json thm = theorem_check_to_json(theorem_check(inst.x, inst.m, 2));
  CHECK(thm.at("cond2") == true);
  CHECK(thm.at("direction_a") == true);
  CHECK(thm.at("direction_b") == true);
  CHECK(thm.at("oracle_found") == true);

  const json pow = power_to_json(power_object(base_power(inst.m)));
  CHECK(pow.at("level") == 1);
  CHECK(pow.at("size") == 4);
  CHECK(pow.at("points") ==
        json::array({"{}", "{A0}", "{A1}", "{A0,A1}"}));
}

TEST_CASE("dump_json is canonical") {
  json j;
  j["b"] = 1;
  j["a"] = json::array({2});
  CHECK(dump_json(j) == "{\n  \"a\": [\n    2\n  ],\n  \"b\": 1\n}\n");
  CHECK(dump_json(json::object()) == "{}\n");
}
