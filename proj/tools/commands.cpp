#include "commands.hpp"

#include "specs.hpp"
#include "refl/dd.hpp"
#include "refl/reflective.hpp"

#include <fstream>
#include <set>
#include <tuple>

namespace refl::cli {

namespace {

Tree vector_tree(const RationalVector& v) {
  Tree out = Tree::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(exact(v(i)));
  return out;
}

ReflectiveKind kind_from(const std::string& name, const std::optional<int>& p) {
  if (name == "two-reflective") {
    if (p) throw UsageError("--p only applies to --kind prime-level");
    return ReflectiveKind::two_reflective();
  }
  if (name == "prime-level") {
    if (!p) throw UsageError("--kind prime-level needs --p");
    if (!is_prime(*p)) throw UsageError("--p must be prime");
    return ReflectiveKind::prime_level(*p);
  }
  throw UsageError("unknown --kind '" + name + "'");
}

Tree class_tree(const IntegerLattice& L, const CosetClass& cls, const ReflectiveKind& kind) {
  Tree t = Tree::object();
  t["representative"] = vector_tree(cls.representative.coords());
  t["order"] = cls.order;
  t["norm_mod_2"] = exact(cls.norm_mod_2);
  t[kind.type == ReflectiveKind::Type::two_reflective ? "R_mu" : "C_gamma"] =
      count_vectors(L, cls, kind.class_norm());
  return t;
}

Tree candidate_tree(const DdCandidate& d) {
  Tree t = Tree::object();
  t["family"] = to_string(d.family);
  t["n"] = d.n;
  t["m"] = d.m;
  t["rank"] = d.rank;
  t["c"] = d.c;
  t["k"] = exact(d.k);
  t["orbit_size"] = d.orbit_size;
  t["orbit_norm"] = exact(d.orbit_norm);
  t["admissible"] = d.admissible;
  t["reason"] = d.exclusion_reason ? Tree(*d.exclusion_reason) : Tree(nullptr);
  return t;
}

}  // namespace

Report cmd_lattice(const LatticeArgs& args) {
  if (args.m < 1) throw UsageError("--m must be positive");
  Report r;
  r.command = "lattice";
  r.inputs["family"] = args.family;
  r.inputs["m"] = args.m;
  if (args.p) r.inputs["p"] = *args.p;
  const ReflectiveKind kind = args.p ? kind_from("prime-level", args.p) : ReflectiveKind::two_reflective();
  const IntegerLattice L = rescale(parse_lattice(args.family), args.m);
  const DetLevel dl = det_and_level(L);
  r.results["rank"] = L.rank();
  r.results["det"] = dl.det.get_str();
  r.results["level"] = dl.level;
  r.results["roots"] = count_roots(L);
  r.results["discriminant_order"] = dl.det.get_str();
  r.results["kind"] = kind.name();
  Tree classes = Tree::array();
  for (const CosetClass& cls : reflective_classes(L, kind)) classes.push_back(class_tree(L, cls, kind));
  r.results["reflective_classes"] = classes;
  r.citations = {"root count", "reflective discriminant classes"};
  return r;
}

Report cmd_identity(const IdentityArgs& args) {
  Report r;
  r.command = "identity";
  r.inputs["form"] = args.form;
  r.inputs["trunc"] = args.trunc;
  r.inputs["kind"] = args.kind;
  if (args.p) r.inputs["p"] = *args.p;
  const ReflectiveKind kind = kind_from(args.kind, args.p);

  const FormValue value = evaluate_form(args.form, args.trunc);
  const JacobiExpansion phi = std::holds_alternative<JacobiExpansion>(value)
                                  ? std::get<JacobiExpansion>(value)
                                  : JacobiExpansion::from_scalar(std::get<QSeries>(value));
  if (args.dump) {
    std::ofstream out(*args.dump);
    if (!out) throw UsageError("cannot write " + *args.dump);
    write_text(out, phi);
  }
  r.results["rank"] = phi.rank();
  r.results["weight"] = exact(phi.weight());
  r.results["valuation"] = phi.valuation();
  r.results["trunc"] = phi.trunc();
  r.results["terms"] = phi.size();
  r.results["holomorphy"] = to_string(classify(phi));
  r.results["residual"] = exact(gritsenko_residual(phi));
  r.citations = {"q0-identity"};

  if (phi.weight() != 0) return r;
  Tree div = Tree::object();
  try {
    const DivisorData d = derive_divisor(phi, kind);
    div["kind"] = kind.name();
    div["beta0"] = d.beta0.get_str();
    Tree betas = Tree::array();
    for (const auto& [cls, beta] : d.beta) {
      Tree b = class_tree(phi.index(), cls, kind);
      b["beta"] = beta.get_str();
      betas.push_back(b);
    }
    div["classes"] = betas;
    const Rational k_formula = kind.type == ReflectiveKind::Type::two_reflective
                                   ? weight_two_reflective(phi.index(), d)
                                   : weight_prime_level(phi.index(), kind.p, d);
    const Rational k_constant = phi.coefficient(0, IntVector::Zero(phi.rank())) / 2;
    div["weight_from_divisor"] = exact(k_formula);
    div["weight_from_constant_term"] = exact(k_constant);
    div["readings_agree"] = k_formula == k_constant;
    r.citations.push_back(kind.type == ReflectiveKind::Type::two_reflective ? "2-reflective weight formula"
                                                                           : "prime-level weight formula");
  } catch (const DivisorError& e) {
    div["error"] = e.what();
  }
  r.results["divisor"] = div;
  return r;
}

Report cmd_classify(const ClassifyArgs& args) {
  Report r;
  r.command = "classify";
  r.inputs["kind"] = args.kind;
  if (args.p) r.inputs["p"] = *args.p;
  const ReflectiveKind kind = kind_from(args.kind, args.p);
  Tree rows = Tree::array();
  for (const ClassificationRow& row : rank_classification(kind)) {
    Tree t = Tree::object();
    t["ranks"] = row.ranks;
    t["weight"] = row.weight.empty() ? Tree(nullptr) : Tree(row.weight);
    t["status"] = row.status;
    t["computation"] = row.computation;
    rows.push_back(t);
  }
  r.results["rows"] = rows;
  if (kind.type == ReflectiveKind::Type::prime_level) {
    r.results["rank_bound"] = exact(riemann_roch_rank_bound(kind.p));
    r.citations = {"Riemann-Roch rank bound", "differential-operator chain", "prime-level weight formula"};
  } else {
    r.citations = {"differential-operator chain", "complete 2-divisor case", "2-reflective weight formula"};
  }
  return r;
}

Report cmd_tn(int n) {
  if (n < 1) throw UsageError("--n must be positive");
  Report r;
  r.command = "tn";
  r.inputs["n"] = n;
  const TnReport t = check_Tn(n);
  r.results["lattice"] = "2E8+<" + std::to_string(2 * n) + ">";
  r.results["roots"] = t.roots;
  r.results["class_vectors"] = t.class_vectors;
  r.results["formula_weight_per_beta0"] = exact(t.formula_weight_per_beta0);
  r.results["class_coefficient"] = exact(t.class_coefficient);
  r.results["required_weight_per_beta0"] = exact(t.required_weight_per_beta0);
  r.results["beta_difference"] = t.beta_difference ? exact(*t.beta_difference) : Tree(nullptr);
  r.results["obstructed"] = t.obstructed;
  r.citations = {"2-reflective weight formula", "rank-17 weight"};
  return r;
}

Report cmd_dd(const std::string& family) {
  static const std::set<std::string> known = {"all", "nA1", "A", "D", "AD"};
  if (!known.count(family)) throw UsageError("unknown --family '" + family + "' (all, nA1, A, D, AD)");
  Report r;
  r.command = "dd";
  r.inputs["family"] = family;
  r.citations = {"q0-identity", "dd weight"};

  if (family == "all" || family == "nA1") {
    const M5Exclusion m5 = exclude_m5();
    Tree cands = Tree::array();
    Tree pairs = Tree::array();
    for (const DdCandidate& d : enumerate_nA1()) {
      Tree t = candidate_tree(d);
      if (d.m == 5 && d.n == 1 && !d.admissible && d.k > 0) t["reason"] = m5.verdict;
      cands.push_back(t);
      if (d.admissible) pairs.push_back({{"n", d.n}, {"m", d.m}, {"k", exact(d.k)}});
    }
    Tree trace = Tree::object();
    trace["q0_zeta1"] = exact(m5.q0_zeta1);
    trace["q0_zeta0"] = exact(m5.q0_zeta0);
    trace["q1_zeta5"] = exact(m5.q1_zeta5);
    Tree neg = Tree::array();
    for (const SingularTerm& t : m5.negative_singular_terms)
      neg.push_back({{"n", t.n}, {"l", vector_tree(t.l.coords())}, {"coefficient", exact(t.coefficient)}});
    trace["negative_singular_terms"] = neg;
    trace["verdict"] = m5.verdict;
    Tree counterparts = Tree::array();
    for (const CounterpartCheck& c : dd_counterparts())
      counterparts.push_back({{"m", c.m},
                              {"k", exact(c.k)},
                              {"min_singular_coefficient", exact(c.min_singular_coefficient)},
                              {"nonnegative", c.nonnegative}});
    r.results["nA1"] = {{"candidates", cands}, {"admissible", pairs}, {"index5_exclusion", trace},
                        {"smaller_index_inputs", counterparts}};
  }

  if (family != "nA1") {
    const auto full = enumerate_AnDn(DdConvention::full_orbit);
    const auto etype = enumerate_AnDn(DdConvention::e_type);
    const auto wanted = [&](const DdCandidate& d) {
      return family == "all" || family == "AD" || to_string(d.family) == family;
    };
    const auto pair_set = [&](const std::vector<DdCandidate>& v) {
      std::set<std::tuple<int, int, int>> s;
      for (const DdCandidate& d : v)
        if (d.admissible && wanted(d)) s.insert({static_cast<int>(d.family), d.n, d.m});
      return s;
    };
    Tree cands = Tree::array();
    Tree pairs = Tree::array();
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (!wanted(full[i])) continue;
      Tree t = candidate_tree(full[i]);
      t["k_e_type"] = exact(etype[i].k);
      cands.push_back(t);
      if (full[i].admissible)
        pairs.push_back({{"lattice", to_string(full[i].family) + std::to_string(full[i].n)}, {"m", full[i].m}});
    }
    r.results["AnDn"] = {{"convention", to_string(DdConvention::full_orbit)},
                         {"candidates", cands},
                         {"admissible", pairs},
                         {"conventions_agree", pair_set(full) == pair_set(etype)}};
  }
  return r;
}

}  // namespace refl::cli
