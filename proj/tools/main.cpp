// mq — construct, verify, restrict, compare, enumerate and color multi-rack
// structures from the command line.
//
// Exit codes: 0 success; 1 verification failure / no isomorphism;
// 2 isomorphism search budget exceeded; 64 usage error; 65 malformed or
// invalid input.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mq/constructions.hpp"
#include "mq/io.hpp"
#include "mq/knot.hpp"
#include "mq/multirack.hpp"

namespace {

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(item);
  return out;
}

std::string witness_json(const mq::MorphismWitness& w) {
  nlohmann::json j;
  j["elementMap"] = w.element_map;
  j["labelMap"] = w.label_map;
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-rack and multi-quandle toolkit"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a structure and write it to a file");
  construct->require_subcommand(1);
  std::string out_path;

  auto* c_trivial = construct->add_subcommand("trivial", "trivial quandle on m points");
  int trivial_order = 1;
  c_trivial->add_option("--order", trivial_order, "carrier size")->required();
  c_trivial->add_option("-o,--output", out_path, "output file")->required();

  auto* c_alex = construct->add_subcommand("alexander", "Alexander quandle family on Z/n");
  int alex_mod = 0;
  std::string alex_units;
  c_alex->add_option("--mod", alex_mod, "modulus")->required();
  c_alex->add_option("--units", alex_units, "comma-separated units")->required();
  c_alex->add_option("-o,--output", out_path, "output file")->required();

  auto* c_conjrack = construct->add_subcommand("conjrack", "conjugation multi-rack of a group");
  std::string group_path;
  c_conjrack->add_option("--group", group_path, "group file")->required();
  c_conjrack->add_option("-o,--output", out_path, "output file")->required();

  auto* c_conjpower = construct->add_subcommand("conjpower", "conjugation-power multi-quandle");
  std::string powers;
  c_conjpower->add_option("--group", group_path, "group file")->required();
  c_conjpower->add_option("--powers", powers, "comma-separated powers (default: all residues)");
  c_conjpower->add_option("-o,--output", out_path, "output file")->required();

  auto* c_coset = construct->add_subcommand("coset", "coset multi-quandle on G/H");
  std::string subgroup_gens;
  std::optional<int> coset_s;
  c_coset->add_option("--group", group_path, "group file")->required();
  c_coset->add_option("--subgroup-gens", subgroup_gens, "comma-separated generator indices")->required();
  c_coset->add_option("--s", coset_s, "single operation element (default: all of Z(H))");
  c_coset->add_option("-o,--output", out_path, "output file")->required();

  auto* c_group = construct->add_subcommand("group", "standard group file");
  std::string group_kind;
  int group_n = 0;
  c_group->add_option("--kind", group_kind, "cyclic|dihedral|symmetric|quaternion8")->required();
  c_group->add_option("--n", group_n, "parameter for cyclic/dihedral/symmetric");
  c_group->add_option("-o,--output", out_path, "output file")->required();

  // verify
  auto* v_cmd = app.add_subcommand("verify", "check multi-rack axioms of a file");
  std::string verify_path;
  bool verify_quandle = false;
  std::size_t max_violations = 10;
  v_cmd->add_option("file", verify_path, "multirack file")->required();
  v_cmd->add_flag("--quandle", verify_quandle, "also check the diagonal law");
  v_cmd->add_option("--max-violations", max_violations, "report cap (default 10)");

  // restrict
  auto* r_cmd = app.add_subcommand("restrict", "keep a subset of the operations");
  std::string restrict_path, restrict_labels;
  r_cmd->add_option("file", restrict_path, "multirack file")->required();
  r_cmd->add_option("--labels", restrict_labels, "comma-separated labels to keep")->required();
  r_cmd->add_option("-o,--output", out_path, "output file")->required();

  // iso
  auto* i_cmd = app.add_subcommand("iso", "search for an isomorphism between two files");
  std::string iso_a, iso_b;
  std::uint64_t iso_budget = mq::SearchOptions{}.node_budget;
  i_cmd->add_option("first", iso_a, "multirack file")->required();
  i_cmd->add_option("second", iso_b, "multirack file")->required();
  i_cmd->add_option("--budget", iso_budget, "search node budget");

  // enumerate
  auto* e_cmd = app.add_subcommand("enumerate", "stream small structures up to isomorphism");
  int enum_order = 0, enum_labels = 1;
  bool enum_racks = false;
  e_cmd->add_option("--order", enum_order, "carrier size (1..5)")->required();
  e_cmd->add_option("--labels", enum_labels, "label count (1..2)");
  e_cmd->add_flag("--racks", enum_racks, "drop the diagonal law");

  // color
  auto* k_cmd = app.add_subcommand("color", "count colorings of a PD-coded knot");
  std::string pd_code, target_path, op_label;
  k_cmd->add_option("--pd", pd_code, "PD code or 'unknot'")->required();
  k_cmd->add_option("--target", target_path, "multirack file")->required();
  k_cmd->add_option("--op", op_label, "meridian operation label")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (c_trivial->parsed()) {
      mq::write_multirack_file(out_path, mq::trivial_quandle(trivial_order));
    } else if (c_alex->parsed()) {
      const auto units = parse_int_list(alex_units);
      mq::write_multirack_file(
          out_path, mq::automorphism_multiquandle(mq::alexander_family(alex_mod, units)));
    } else if (c_conjrack->parsed()) {
      mq::write_multirack_file(out_path, mq::conjugation_multirack(mq::read_group_file(group_path)));
    } else if (c_conjpower->parsed()) {
      const mq::FiniteGroup g = mq::read_group_file(group_path);
      std::optional<std::vector<long long>> ps;
      if (!powers.empty()) ps = parse_int_list(powers);
      mq::write_multirack_file(out_path, mq::conjugation_power_multiquandle(g, ps));
    } else if (c_coset->parsed()) {
      const mq::FiniteGroup g = mq::read_group_file(group_path);
      std::vector<int> gens;
      for (long long x : parse_int_list(subgroup_gens)) gens.push_back(static_cast<int>(x));
      const mq::Subgroup h = mq::subgroup_generated(g, gens);
      std::optional<std::vector<int>> chosen;
      if (coset_s) chosen = std::vector<int>{*coset_s};
      mq::write_multirack_file(out_path, mq::coset_multiquandle(g, h, chosen));
    } else if (c_group->parsed()) {
      mq::StandardKind kind;
      if (group_kind == "cyclic") kind = mq::StandardKind::Cyclic;
      else if (group_kind == "dihedral") kind = mq::StandardKind::Dihedral;
      else if (group_kind == "symmetric") kind = mq::StandardKind::Symmetric;
      else if (group_kind == "quaternion8") kind = mq::StandardKind::Quaternion8;
      else {
        std::cerr << "usage error: unknown group kind '" << group_kind << "'\n";
        return 64;
      }
      mq::write_group_file(out_path, mq::standard_group(kind, group_n));
    } else if (v_cmd->parsed()) {
      const mq::TableFamily family = mq::read_table_family_file(verify_path);
      mq::VerifyOptions options;
      options.check_quandle = verify_quandle;
      options.max_violations = max_violations;
      const mq::VerificationReport report = mq::verify(family, options);
      if (report.passed) {
        std::cout << "PASS: order " << family.order << ", " << family.labels.size()
                  << " operation(s), axioms hold" << (verify_quandle ? " (quandle)" : "") << "\n";
        return 0;
      }
      std::cout << "FAIL: " << report.violations.size() << " violation(s) reported\n";
      for (const auto& v : report.violations) std::cout << "  " << v.describe() << "\n";
      return 1;
    } else if (r_cmd->parsed()) {
      const mq::MultiRack m =
          mq::MultiRack::create(mq::read_table_family_file(restrict_path), false);
      const auto keep = parse_string_list(restrict_labels);
      mq::write_multirack_file(out_path, mq::restrict_operations(m, keep));
    } else if (i_cmd->parsed()) {
      const mq::MultiRack a = mq::MultiRack::create(mq::read_table_family_file(iso_a), false);
      const mq::MultiRack b = mq::MultiRack::create(mq::read_table_family_file(iso_b), false);
      try {
        const auto witness = mq::find_isomorphism(a, b, {iso_budget});
        if (!witness) {
          std::cout << "none\n";
          return 1;
        }
        std::cout << witness_json(*witness) << "\n";
        return 0;
      } catch (const mq::Error& e) {
        if (e.code() != mq::ErrorCode::SearchLimitExceeded) throw;
        std::cout << "budget-exceeded\n";
        return 2;
      }
    } else if (e_cmd->parsed()) {
      mq::EnumerateOptions options;
      options.require_quandle = !enum_racks;
      for (const mq::MultiRack& m : mq::enumerate_multiquandles(enum_order, enum_labels, options))
        std::cout << mq::multirack_to_json(m);
    } else if (k_cmd->parsed()) {
      const mq::MultiRack target =
          mq::MultiRack::create(mq::read_table_family_file(target_path), false);
      const mq::QuandlePresentation p = mq::wirtinger_presentation(mq::parse_pd(pd_code));
      std::cout << mq::count_colorings(p, target, op_label) << "\n";
    }
    return 0;
  } catch (const mq::Error& e) {
    std::cerr << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  }
}
