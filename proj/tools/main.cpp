#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  using namespace surfbasis;
  CLI::App app{"Sparse cycle bases for graphs embedded on surfaces"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string path, basis_path, method = "auto", output;
  int max_k = 4;
  std::int64_t genus = 1, g0 = cli::kDefaultThreshold;
  RandomEmbeddingOptions rnd;

  auto* validate = app.add_subcommand("validate", "Check an embedded-graph file");
  auto* faces = app.add_subcommand("faces", "Trace face walks");
  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  auto* surface = app.add_subcommand("surface", "Surface type and genus");
  auto* planar = app.add_subcommand("planar", "Planarity with certificate");
  for (auto* sub : {validate, faces, euler, surface, planar})
    sub->add_option("graph", path, "Embedded-graph file")->required();

  auto* basis = app.add_subcommand("basis", "Construct a sparse cycle basis");
  basis->add_option("graph", path, "Embedded-graph file")->required();
  basis->add_option("--method", method, "auto, maclane, face or three")
      ->check(CLI::IsMember({"auto", "maclane", "face", "three"}));
  basis->add_option("--output", output, "Write the basis file here");

  auto* verify = app.add_subcommand("verify", "Check a basis file against a graph");
  verify->add_option("graph", path, "Embedded-graph file")->required();
  verify->add_option("basis", basis_path, "Basis file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact basis number by exhaustive search");
  oracle->add_option("graph", path, "Embedded-graph file")->required();
  oracle->add_option("--max-k", max_k, "Largest k to try")->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Genus recursion for the basis-number bound");
  bound->add_option("--genus", genus, "Orientable genus")->required();
  bound->add_option("--g0", g0, "Threshold below which 2 + 2g is used");

  auto* randgen = app.add_subcommand("randgen", "Random embedding with a given Euler characteristic");
  randgen->add_option("--vertices", rnd.vertices)->required();
  randgen->add_option("--edges", rnd.edges)->required();
  randgen->add_option("--seed", rnd.seed);
  randgen->add_option("--target-chi", rnd.target_chi);
  randgen->add_option("--tries", rnd.tries);
  randgen->add_option("--output", output, "Write the graph file here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kInputError;
  }
  const cli::Output out{std::cout, std::cerr, json};

  if (*validate) return cli::cmd_validate(path, out);
  if (*faces) return cli::cmd_faces(path, out);
  if (*euler) return cli::cmd_euler(path, out);
  if (*surface) return cli::cmd_surface(path, out);
  if (*planar) return cli::cmd_planar(path, out);
  if (*basis) return cli::cmd_basis(path, method, output, out);
  if (*verify) return cli::cmd_verify(path, basis_path, out);
  if (*oracle) return cli::cmd_oracle(path, max_k, out);
  if (*bound) return cli::cmd_bound(genus, g0, out);
  if (*randgen) return cli::cmd_randgen(rnd, output, out);
  return cli::kInputError;
}
