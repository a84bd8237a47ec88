#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace refl::cli;

  CLI::App app{"Exact Jacobi-form computations for reflective modular forms", "refl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  LatticeArgs lattice;
  auto* lat = app.add_subcommand("lattice", "Rank, determinant, roots and reflective classes of a lattice");
  lat->add_option("--family", lattice.family, "Lattice name, e.g. 2E8+A1, D4, A2+<6>")->required();
  lat->add_option("--m", lattice.m, "Rescale the Gram matrix by m");
  lat->add_option("--p", lattice.p, "List the level-p reflective classes instead");

  IdentityArgs identity;
  auto* idn = app.add_subcommand("identity", "Build a form and check the q^0 identity and the weight");
  idn->add_option("--form", identity.form, "Form spec, e.g. \"E41 x thetaE8 x thetaE8 / Delta\"")->required();
  idn->add_option("--trunc", identity.trunc, "Known q-exponents are < trunc");
  idn->add_option("--kind", identity.kind)->check(CLI::IsMember({"two-reflective", "prime-level"}));
  idn->add_option("--p", identity.p);
  idn->add_option("--dump", identity.dump, "Write the expansion to this file");

  ClassifyArgs classify;
  auto* cls = app.add_subcommand("classify", "Rank classification table");
  cls->add_option("--kind", classify.kind)->check(CLI::IsMember({"two-reflective", "prime-level"}));
  cls->add_option("--p", classify.p);

  int tn_n = 1;
  auto* tn = app.add_subcommand("tn", "Weight obstruction for 2E8 + <2n>");
  tn->add_option("--n", tn_n)->required();

  std::string dd_family = "all";
  auto* dd = app.add_subcommand("dd", "Weights and admissible lattices for dd-modular forms");
  dd->add_option("--family", dd_family)->check(CLI::IsMember({"all", "nA1", "A", "D", "AD"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report report;
    if (*lat)
      report = cmd_lattice(lattice);
    else if (*idn)
      report = cmd_identity(identity);
    else if (*cls)
      report = cmd_classify(classify);
    else if (*tn)
      report = cmd_tn(tn_n);
    else
      report = cmd_dd(dd_family);
    std::cout << (format == "json" ? render_json(report) : render_text(report));
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
