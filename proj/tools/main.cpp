#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gsembed/embed.hpp"
#include "gsembed/errors.hpp"
#include "gsembed/io.hpp"
#include "gsembed/oracle.hpp"

namespace {

using namespace gsembed;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw input_error("cannot write output file: " + out_path);
  out << text;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
}

std::string subgroup_text(const Subgroup& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.members().size(); ++i) {
    if (i) out += ", ";
    out += h.parent()->name_of(h.members()[i]);
  }
  return out + "}";
}

int cmd_check(const Instance& inst, bool as_json, const std::string& out) {
  const ConditionReport report = check_conditions(inst.m, inst.x);
  if (as_json) {
    emit(dump_json(condition_report_to_json(report)), out);
  } else {
    std::ostringstream os;
    os << "cond1 (cardinality): satisfied (" << report.cond1_note << ")\n";
    os << "G_M = " << subgroup_text(report.g_m) << "\n";
    os << "G_X = " << subgroup_text(report.g_x) << "\n";
    os << "cond2 (kernel): "
       << (report.cond2 ? "G_M <= G_X holds" : "G_M is not contained in G_X")
       << "\n";
    os << "embeddable: " << (report.cond2 ? "yes" : "no") << "\n";
    emit(os.str(), out);
  }
  return report.cond2 ? 0 : 1;
}

int cmd_embed(const Instance& inst, const std::string& out) {
  const EmbeddingCertificate cert = embed(inst.m, inst.x);
  emit(dump_json(certificate_to_json(cert, inst.x)), out);
  return 0;
}

int cmd_verify(const Instance& inst, const std::string& cert_path, bool as_json,
               const std::string& out) {
  const EmbeddingCertificate cert =
      certificate_from_json(load_json_file(cert_path), inst.m, inst.x);
  const VerifyReport report = verify_certificate(inst.m, inst.x, cert);
  if (as_json) {
    emit(dump_json(verify_report_to_json(report)), out);
  } else {
    std::ostringstream os;
    for (const VerifyCheck& c : report.checks) {
      os << c.name << ": ";
      if (c.pass)
        os << "pass\n";
      else
        os << "fail (" << c.detail << ")\n";
    }
    os << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    emit(os.str(), out);
  }
  return report.pass ? 0 : 1;
}

int cmd_power(const Instance& inst, const std::string& which, int times,
              bool as_json, const std::string& out) {
  PowerGSet p = base_power(which == "X" ? inst.x : inst.m);
  for (int i = 0; i < times; ++i) p = power_object(p);
  if (as_json) {
    emit(dump_json(power_to_json(p)), out);
    return 0;
  }
  std::ostringstream os;
  os << "P^" << times << "(" << which << "): level " << p.level << ", "
     << p.gset.size() << " points\n";
  for (int i = 0; i < p.gset.size(); ++i)
    os << "  " << i << "  " << p.points[i].serialization() << "\n";
  os << "action:\n";
  for (int g = 0; g < p.gset.group()->order(); ++g) {
    os << "  " << p.gset.group()->name_of(g) << ":";
    for (int i = 0; i < p.gset.size(); ++i) os << " " << p.gset.act(g, i);
    os << "\n";
  }
  emit(os.str(), out);
  return 0;
}

int cmd_oracle(const Instance& inst, int max_level, const std::string& out) {
  const OracleReport report = subobject_search(inst.x, inst.m, max_level);
  emit(dump_json(oracle_report_to_json(report)), out);
  return report.found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides whether the G-set X embeds as a subobject of an iterated "
      "power object P^n(M), builds an explicit equivariant injection when it "
      "does, and cross-checks the decision by exhaustive search on small "
      "instances."};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string out_path;
  unsigned seed = 0;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write the primary output to a file");
  app.add_option("--seed", seed,
                 "accepted for interface stability; every command is "
                 "deterministic and ignores it");

  std::string instance_path;
  std::string cert_path;
  std::string which_gset = "M";
  int times = 1;
  int max_level = 2;

  CLI::App* check = app.add_subcommand("check", "report the two conditions");
  check->add_option("instance", instance_path, "instance JSON file")
      ->required();

  CLI::App* embed_cmd =
      app.add_subcommand("embed", "construct an embedding certificate");
  embed_cmd->add_option("instance", instance_path, "instance JSON file")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "re-check a certificate against an instance");
  verify->add_option("instance", instance_path, "instance JSON file")
      ->required();
  verify->add_option("--cert", cert_path, "certificate JSON file")->required();

  CLI::App* power =
      app.add_subcommand("power", "materialize an iterated power object");
  power->add_option("instance", instance_path, "instance JSON file")
      ->required();
  power->add_option("--gset", which_gset, "which G-set to power (M or X)")
      ->check(CLI::IsMember({"M", "X"}));
  power->add_option("--times", times, "how many power steps")
      ->check(CLI::Range(0, 32));

  CLI::App* oracle =
      app.add_subcommand("oracle", "exhaustive subobject search up to a level");
  oracle->add_option("instance", instance_path, "instance JSON file")
      ->required();
  oracle->add_option("--max-level", max_level, "highest power level to search")
      ->check(CLI::Range(1, 32));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Instance inst = load_instance(instance_path);
    if (check->parsed()) return cmd_check(inst, as_json, out_path);
    if (embed_cmd->parsed()) return cmd_embed(inst, out_path);
    if (verify->parsed())
      return cmd_verify(inst, cert_path, as_json, out_path);
    if (power->parsed())
      return cmd_power(inst, which_gset, times, as_json, out_path);
    if (oracle->parsed()) return cmd_oracle(inst, max_level, out_path);
  } catch (const necessity_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
