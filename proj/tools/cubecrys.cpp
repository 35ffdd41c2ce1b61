// cubecrys: command-line frontend to the library.
//
// Exit codes: 0 success (a rejected group is a successful computation),
// 1 usage, input or parse errors, 2 internal self-check failures.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubecrys/boundary.hpp"
#include "cubecrys/error.hpp"
#include "cubecrys/report.hpp"

using namespace cubecrys;

namespace {

struct Options {
  bool json = false;
  bool text = false;
  std::uint64_t seed = 0;
  std::string group_file;
  std::string walls_file;
  std::string out_file;
  std::string expression;
  std::string export_dir;
  bool use_witness_basis = false;
  std::size_t samples = 100;
  std::size_t random_dim = 0;
  std::size_t max_walls = 10;
};

Json command_echo(const std::string &name, const std::vector<std::string> &args,
                  const Options &opt) {
  return Json{{"subcommand", name}, {"arguments", args}, {"seed", opt.seed}};
}

Json start_report(const std::string &name, const std::vector<std::string> &args,
                  const Options &opt, const std::string &input) {
  return Json{{"command", command_echo(name, args, opt)},
              {"input_digest", "sha256:" + sha256_hex(input)}};
}

CrystGroup load_group(const std::string &path, std::string &raw) {
  raw = read_file(path);
  CrystGroup g = group_from_json(parse_json_text(raw));
  validate(g);
  return g;
}

Json run_validate(const Options &opt) {
  std::string raw = read_file(opt.group_file);
  CrystGroup g = group_from_json(parse_json_text(raw));
  ValidationReport r = validate(g);
  Json report = start_report("validate", {opt.group_file}, opt, raw);
  report["validation"] = validation_to_json(r);
  return report;
}

Json run_classify(const Options &opt) {
  std::string raw;
  CrystGroup g = load_group(opt.group_file, raw);
  Json report = start_report("classify", {opt.group_file}, opt, raw);
  report["group"] = g.name;
  report["dimension"] = g.dimension;
  report["point_group_order"] = g.points().order();
  report.update(verdict_to_json(g, is_hyperoctahedral(g)));
  return report;
}

Json run_cubulate(const Options &opt) {
  std::string raw;
  CrystGroup g = load_group(opt.group_file, raw);
  std::vector<std::string> args{opt.group_file};
  if (opt.use_witness_basis)
    args.emplace_back("--use-witness-basis");
  Json report = start_report("cubulate", args, opt, raw);
  report["group"] = g.name;
  report["basis"] = opt.use_witness_basis ? "witness" : "lattice";
  Cubulation c = cubulate(g, opt.use_witness_basis, opt.seed, opt.samples);
  report.update(cubulation_to_json(c));
  if (!opt.out_file.empty()) {
    write_file(opt.out_file, group_to_json(c.stabilized).dump(2) + "\n");
    report["written"] = opt.out_file;
  }
  return report;
}

Json run_dual(const Options &opt) {
  if (opt.walls_file.empty() == (opt.random_dim == 0))
    throw InputError("dual needs exactly one of a walls file or --random-dim");
  std::string raw;
  std::vector<std::string> args;
  FiniteWallspace ws = [&] {
    if (!opt.walls_file.empty()) {
      raw = read_file(opt.walls_file);
      args.push_back(opt.walls_file);
      return wallspace_from_json(parse_json_text(raw));
    }
    if (opt.max_walls < 1 || opt.max_walls > kWallCap)
      throw InputError("--max-walls must be in 1.." + std::to_string(kWallCap));
    args = {"--random-dim", std::to_string(opt.random_dim), "--max-walls",
            std::to_string(opt.max_walls)};
    FiniteWallspace generated = random_wallspace(opt.seed, opt.random_dim, opt.max_walls);
    raw = wallspace_to_json(generated).dump();
    return generated;
  }();
  CubeComplex c = dual_complex(ws);
  Json report = start_report("dual", args, opt, raw);
  report["wall_count"] = ws.wall_count();
  report["checks"] = complex_checks_to_json(c);
  Json file = complex_to_json(c, &ws);
  if (!opt.out_file.empty()) {
    write_file(opt.out_file, file.dump(2) + "\n");
    report["written"] = opt.out_file;
  }
  report["complex"] = file;
  return report;
}

Json run_boundary(const Options &opt) {
  auto factors = parse_factor_expression(opt.expression);
  BoundaryDescriptor b = product_boundary(factors);
  Json report = start_report("boundary", {opt.expression}, opt, opt.expression);
  Json names = Json::array();
  for (const auto &f : factors)
    names.push_back(f.str());
  report["factors"] = names;
  if (b.is_finite()) {
    report["kind"] = "finite";
    report["complex"] = to_json(b.finite());
    report["f_vector"] = b.finite().f_vector();
  } else {
    report["kind"] = "symbolic";
    report["symbolic"] =
        std::vector<std::string>(b.infinite_discrete_factors(), BoundaryDescriptor::kInfiniteDiscrete);
    report["finite_join_factor"] = to_json(b.finite_part());
  }
  report["summary"] = b.str();
  return report;
}

Json run_catalog(const Options &opt) {
  auto groups = load_catalog();
  Json all = Json::array();
  for (const auto &g : groups)
    all.push_back(group_to_json(g));
  std::vector<std::string> args;
  if (!opt.export_dir.empty()) {
    args = {"--export", opt.export_dir};
    std::filesystem::create_directories(opt.export_dir);
    for (const auto &g : groups)
      write_file((std::filesystem::path(opt.export_dir) / (g.name + ".json")).string(),
                 group_to_json(g).dump(2) + "\n");
  }
  Json report = start_report("catalog", args, opt, all.dump());
  report["catalog"] = catalog_to_json(classify_catalog());
  return report;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"cubecrys: cubulating crystallographic groups with exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  auto *json_flag = app.add_flag("--json", opt.json, "Emit the JSON report (default)");
  app.add_flag("--text", opt.text, "Emit a human-readable report")->excludes(json_flag);
  app.add_option("--seed", opt.seed, "Seed for sampling and random wallspaces")
      ->envname("CUBECRYS_SEED")
      ->capture_default_str();

  auto *validate_cmd = app.add_subcommand("validate", "Check a group file");
  validate_cmd->add_option("group-file", opt.group_file)->required();

  auto *classify_cmd = app.add_subcommand("classify", "Decide whether a group is hyperoctahedral");
  classify_cmd->add_option("group-file", opt.group_file)->required();

  auto *cubulate_cmd = app.add_subcommand("cubulate", "Build the standard cubulation");
  cubulate_cmd->add_option("group-file", opt.group_file)->required();
  cubulate_cmd->add_flag("--use-witness-basis", opt.use_witness_basis,
                         "Use the basis from the hyperoctahedral witness");
  cubulate_cmd->add_option("--samples", opt.samples, "Linear separation sample pairs")
      ->capture_default_str();
  cubulate_cmd->add_option("--out", opt.out_file, "Write the stabilized group file");

  auto *dual_cmd = app.add_subcommand("dual", "Dual cube complex of a finite wallspace");
  dual_cmd->add_option("walls-file", opt.walls_file);
  dual_cmd->add_option("--random-dim", opt.random_dim, "Use a seeded random wallspace instead");
  dual_cmd->add_option("--max-walls", opt.max_walls, "Wall bound for --random-dim")
      ->capture_default_str();
  dual_cmd->add_option("--out", opt.out_file, "Write the complex file");

  auto *boundary_cmd = app.add_subcommand("boundary", "Simplicial boundary of a product");
  boundary_cmd->add_option("factor-expr", opt.expression, "e.g. \"Line*Line*HalfLine\"")
      ->required();

  auto *catalog_cmd = app.add_subcommand("catalog", "Classify every embedded group");
  catalog_cmd->add_option("--export", opt.export_dir, "Write each group file into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    Json report;
    if (*validate_cmd)
      report = run_validate(opt);
    else if (*classify_cmd)
      report = run_classify(opt);
    else if (*cubulate_cmd)
      report = run_cubulate(opt);
    else if (*dual_cmd)
      report = run_dual(opt);
    else if (*boundary_cmd)
      report = run_boundary(opt);
    else
      report = run_catalog(opt);
    std::cout << (opt.text ? render_text(report) : report.dump(2) + "\n");
    return 0;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
