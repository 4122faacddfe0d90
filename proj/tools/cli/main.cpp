#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace cocycle::cli;
  RunConfig rc;
  CLI::App app{"Cocycle deformations of switchback pairs, skein R-matrices and their braid invariants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string ring, specialize, output = "text";
  app.add_option("--ring", ring, "Scalar ring: gauss, laurent or ratfun (default ratfun)")
      ->check(CLI::IsMember({"gauss", "laurent", "ratfun"}));
  app.add_option("--specialize", specialize, "Evaluate A at a value, e.g. A=2; the ring becomes gauss");
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "records"}));

  auto pair_opt = [&](CLI::App* c) {
    c->add_option("--pair", rc.pair, "Pair config file, or 'bracket' for the builtin pair");
  };
  auto d2d1_opts = [&](CLI::App* c) {
    c->add_option("--model", rc.model, "Concrete model: bracket or dual-numbers");
    c->add_option("--trials", rc.trials, "Random f per identity");
    c->add_option("--seed", rc.seed, "Seed for the random f");
    c->add_option("--identity", rc.identity, "Only this identity label");
    pair_opt(c);
  };
  auto braid_opts = [&](CLI::App* c) {
    c->add_option("--braid", rc.braids, "Braid word such as \"s1 s2^-1\" (repeatable)")->allow_extra_args(false);
    c->add_option("--strands", rc.strands, "Strand count (default: one more than the largest index)");
  };

  auto* infil = app.add_subcommand("infiltrate", "Print elaborate plans and 2-differentials of an identity file");
  infil->add_option("idl", rc.idl, "Identity file")->required();
  infil->add_flag("--check-d2d1", rc.check_d2d1, "Also check d2 d1 = 0 on a model");
  d2d1_opts(infil);

  auto* d2d1 = app.add_subcommand("check-d2d1", "Check d2 d1 f = 0 on random f for a concrete model");
  d2d1->add_option("idl", rc.idl, "Identity file")->required();
  d2d1_opts(d2d1);

  pair_opt(app.add_subcommand("verify-switchback", "Check the switchback conditions of a pair"));
  pair_opt(app.add_subcommand("cohomology", "Dimensions of cocycles, coboundaries and cohomology"));

  auto* solve = app.add_subcommand("solve-cocycles", "Bases of Z^1, Z^2 or Z^3");
  pair_opt(solve);
  solve->add_option("--degree", rc.degree, "1, 2 or 3 (default 2)");

  auto* deform = app.add_subcommand("deform", "First-order deformation along a cochain and its obstruction");
  pair_opt(deform);
  deform->add_option("--cocycle", rc.cocycle, "Cocycle config file")->required();

  auto* ybe = app.add_subcommand("verify-ybe", "Yang-Baxter equation for the skein R-matrix");
  pair_opt(ybe);
  ybe->add_option("--cocycle", rc.cocycle, "Deform along this cocycle first");

  auto* tl = app.add_subcommand("tl-check", "Temperley-Lieb relations of the cup-cap generators");
  pair_opt(tl);
  tl->add_option("--cocycle", rc.cocycle, "Deform along this cochain first");
  tl->add_option("--max-n", rc.max_n, "Largest strand count (default 5)");

  auto* inv = app.add_subcommand("invariant", "Braid closure invariants T_R / T_R(unknot)");
  pair_opt(inv);
  inv->add_option("--cocycle", rc.cocycle, "Cocycle config for --deformed");
  inv->add_flag("--deformed", rc.deformed, "Use the deformed R-matrix over dual numbers");
  inv->add_flag("--compare-oracle", rc.compare_oracle, "Check the t = 0 value against the bracket oracle");
  inv->add_flag("--raw", rc.raw, "Print T_R itself, without dividing by T_R(unknot)");
  braid_opts(inv);

  auto* oracle = app.add_subcommand("jones-oracle", "Bracket state-sum oracle (-A^3)^-writhe <closure>");
  braid_opts(oracle);
  oracle->add_flag("--raw", rc.raw, "Print the bracket without the writhe normalization");

  auto* cmp = app.add_subcommand("compare", "Deformed invariant against the oracle with A^2 -> c");
  pair_opt(cmp);
  cmp->add_option("--cocycle", rc.cocycle, "Cocycle config file")->required();
  braid_opts(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  rc.command = app.get_subcommands().front()->get_name();
  rc.format = output == "records" ? Report::Format::records : Report::Format::text;
  try {
    if (!ring.empty()) {
      rc.ring = cocycle::parse_ring_tag(ring);
      rc.ring_given = true;
    }
    if (!specialize.empty()) rc.specialize = parse_specialization(specialize);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return run(rc, std::cout, std::cerr);
}
