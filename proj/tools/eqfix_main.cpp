#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eqfix/errors.hpp"
#include "eqfix/scene.hpp"

namespace {

struct Options {
  std::string scene_path;
  std::string format = "text";
  int max_order = eqfix::kDefaultOrderCap;
  std::string command;
};

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--scene", opts.scene_path, "scene file (JSON)")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--max-order", opts.max_order, "largest allowed group order")
      ->capture_default_str();
}

CLI::App* add_leaf(CLI::App* parent, const char* name, const char* description,
                   const std::string& canonical, Options& opts) {
  CLI::App* cmd = parent->add_subcommand(name, description);
  add_common(cmd, opts);
  cmd->callback([&opts, canonical] { opts.command = canonical; });
  return cmd;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Burnside ring invariants of equivariant fixed point data"};
  app.require_subcommand(1);
  Options opts;

  add_leaf(&app, "group-info", "group order and subgroup class summary", "group-info", opts);
  add_leaf(&app, "marks", "table of marks", "marks", opts);

  CLI::App* burnside = app.add_subcommand("burnside", "Burnside ring operations");
  burnside->require_subcommand(1);
  add_leaf(burnside, "mul", "product of two elements", "burnside-mul", opts);
  add_leaf(burnside, "eta", "fixed point functor to the Weyl group", "burnside-eta", opts);
  add_leaf(burnside, "induce", "induction from a subgroup", "burnside-induce", opts);
  add_leaf(burnside, "restrict", "restriction to a subgroup", "burnside-restrict", opts);

  add_leaf(&app, "degree", "equivariant degree of a linear map", "degree", opts);

  CLI::App* lefschetz = app.add_subcommand("lefschetz", "equivariant fixed point indices");
  lefschetz->require_subcommand(1);
  add_leaf(lefschetz, "orbits", "assemble the index from fixed orbit data", "lefschetz-orbits",
           opts);
  add_leaf(lefschetz, "marks", "recover the index from stratum fixed point counts",
           "lefschetz-marks", opts);
  add_leaf(lefschetz, "cellular", "alternating trace of a cellular map", "lefschetz-cellular",
           opts);

  add_leaf(&app, "fuller", "rational index of periodic orbit data", "fuller", opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    eqfix::Scene scene = eqfix::parse_scene_file(opts.scene_path, opts.max_order);
    eqfix::OutputFormat format =
        opts.format == "json" ? eqfix::OutputFormat::json : eqfix::OutputFormat::text;
    std::cout << eqfix::run_scene_command(scene, opts.command, format);
    return 0;
  } catch (const eqfix::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const eqfix::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
