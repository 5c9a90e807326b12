// homleib: exact computations for finite-dimensional Hom-Leibniz algebras
// over Q. Subcommands: validate, invariants, homology, product, capability,
// check, catalog. Exit codes: 0 ok, 1 mathematical counterexample found,
// 2 usage or parse error.

#include "homleib/algebra_io.hpp"
#include "homleib/capability.hpp"
#include "homleib/catalog.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace homleib;
using nlohmann::ordered_json;

namespace {

struct Options {
  long cap = kDefaultCap;
  std::string format = "text";
  unsigned long seed = 1;
};

HomLeibnizAlgebra load_input(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) return catalog_build(arg.substr(8));
  return load_algebra_file(arg);
}

ordered_json rat_vec_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const Rat& c : v) out.push_back(rat_str(c));
  return out;
}

ordered_json subspace_json(const Subspace& s) {
  ordered_json out;
  out["dim"] = s.dim();
  ordered_json basis = ordered_json::array();
  for (const Vec& v : s.basis()) basis.push_back(rat_vec_json(v));
  out["basis"] = basis;
  return out;
}

std::string pretty_vector(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = rat_str(v[i]);
    out += (c == "1" ? "" : c + "*") + (i < labels.size() ? labels[i] : "e" + std::to_string(i + 1));
  }
  return out.empty() ? "0" : out;
}

ordered_json report_json(const CheckReport& r) {
  ordered_json items = ordered_json::array();
  for (const auto& it : r.items) {
    ordered_json j;
    j["name"] = it.name;
    j["status"] = !it.applicable ? "n/a" : (it.pass ? "pass" : "fail");
    if (!it.detail.empty()) j["detail"] = it.detail;
    items.push_back(j);
  }
  return items;
}

ordered_json violations_json(const ValidationReport& rep) {
  ordered_json out = ordered_json::array();
  for (const auto& v : rep) {
    ordered_json j;
    j["axiom"] = v.axiom;
    j["indices"] = v.indices;
    j["residual"] = rat_vec_json(v.residual);
    out.push_back(j);
  }
  return out;
}

void render_text(std::ostream& os, const ordered_json& j, int indent = 0) {
  std::string pad(size_t(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value().front().is_object() || it.value().front().is_array()))) {
        os << pad << it.key() << ":\n";
        render_text(os, it.value(), indent + 1);
      } else {
        os << pad << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& el : j) {
      if (el.is_object() || el.is_array()) {
        os << pad << "-\n";
        render_text(os, el, indent + 1);
      } else {
        os << pad << "- " << (el.is_string() ? el.get<std::string>() : el.dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

int emit(const Options& opt, const std::string& command, const std::string& algebra_name,
         ordered_json results, ordered_json witnesses, bool counterexample) {
  ordered_json doc;
  doc["command"] = command;
  doc["algebra"] = algebra_name;
  doc["results"] = std::move(results);
  doc["witnesses"] = std::move(witnesses);
  doc["status"] = counterexample ? "counterexample" : "ok";
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    render_text(std::cout, doc);
  }
  return counterexample ? 1 : 0;
}

bool report_failed(const CheckReport& r) { return !r.all_passed(); }

int cmd_validate(const Options& opt, const std::string& file) {
  HomLeibnizAlgebra g = load_input(file);
  ValidationReport rep = validate_algebra(g);
  ordered_json results;
  results["dim"] = g.dim;
  results["violations"] = int(rep.size());
  ordered_json witnesses;
  witnesses["violations"] = violations_json(rep);
  return emit(opt, "validate", g.name, results, witnesses, !rep.empty());
}

int cmd_invariants(const Options& opt, const std::string& file) {
  HomLeibnizAlgebra g = load_input(file);
  ordered_json results;
  results["dim"] = g.dim;
  results["abelian"] = g.is_abelian();
  results["perfect"] = is_perfect(g);
  results["alpha_surjective"] = g.alpha_surjective();
  results["alpha_injective"] = g.alpha_injective();
  results["center"] = subspace_json(center(g));
  results["center_left"] = subspace_json(center(g, CenterMode::left));
  results["alpha_center"] = subspace_json(alpha_center(g));
  results["alpha_center_left"] = subspace_json(alpha_center(g, CenterMode::left));
  results["derived"] = subspace_json(derived_subalgebra(g));
  QuotientAlgebra ab = abelianization(g);
  results["abelianization_dim"] = ab.algebra.dim;
  ordered_json ab_alpha = ordered_json::array();
  for (int i = 0; i < ab.algebra.dim; ++i) ab_alpha.push_back(rat_vec_json(ab.algebra.alpha.col(i)));
  results["abelianization_alpha_cols"] = ab_alpha;
  return emit(opt, "invariants", g.name, results, ordered_json::object(), false);
}

int cmd_homology(const Options& opt, const std::string& file, int max_degree) {
  HomLeibnizAlgebra g = load_input(file);
  ChainComplexSlice slice = chain_complex(g, max_degree, opt.cap);
  ordered_json results;
  results["dim"] = g.dim;
  results["max_degree"] = max_degree;
  ordered_json degrees = ordered_json::array();
  for (int n = 1; n <= max_degree; ++n) {
    HomologyResult h = homology(g, n, opt.cap);
    ordered_json jn;
    jn["degree"] = n;
    jn["dim"] = h.dimension;
    jn["cycle_dim"] = h.cycles.dim();
    jn["boundary_rank"] = h.boundaries.dim();
    jn["induced_endo_rank"] = image_basis(h.induced_endo).dim();
    degrees.push_back(jn);
  }
  results["homology"] = degrees;
  ordered_json ranks = ordered_json::array();
  for (int n = 1; n <= max_degree + 1; ++n) ranks.push_back(image_basis(slice.d(n)).dim());
  results["boundary_ranks"] = ranks;
  return emit(opt, "homology", g.name, results, ordered_json::object(), false);
}

Subspace parse_ideal_spec(const HomLeibnizAlgebra& g, const std::string& spec) {
  // comma-separated basis indices (0-based) or basis labels
  std::vector<Vec> rows;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int idx = -1;
    for (int i = 0; i < g.dim; ++i)
      if (g.basis_labels[i] == tok) idx = i;
    if (idx < 0) {
      try {
        idx = std::stoi(tok);
      } catch (...) {
        throw Error(ErrorKind::parse, "bad ideal spec token \"" + tok + "\"");
      }
    }
    if (idx < 0 || idx >= g.dim) throw Error(ErrorKind::parse, "ideal spec index out of range");
    rows.push_back(vec_unit(g.dim, idx));
  }
  Subspace s = Subspace::span(g.dim, rows);
  if (!is_ideal(g, s)) throw Error(ErrorKind::precondition, "ideal spec \"" + spec + "\" does not span an ideal");
  return s;
}

int cmd_product(const Options& opt, const std::string& file, const std::string& kind,
                const std::vector<std::string>& ideal_specs) {
  HomLeibnizAlgebra g = load_input(file);
  CrossedModulePair pair = [&] {
    if (ideal_specs.empty()) return self_pair(g);
    if (ideal_specs.size() != 2)
      throw Error(ErrorKind::parse, "--ideal must be given exactly twice (or not at all)");
    return pair_from_ideals(g, parse_ideal_spec(g, ideal_specs[0]), parse_ideal_spec(g, ideal_specs[1]));
  }();
  ProductPresentation q = (kind == "tensor") ? tensor_product(pair, opt.cap) : exterior_product(pair, opt.cap);
  Subspace ker = commutator_kernel(q);
  ordered_json results;
  results["kind"] = kind;
  results["carrier_dim"] = q.carrier_dim();
  results["relation_rank"] = q.relation_space.dim();
  results["total_dim"] = q.total.dim;
  results["tensor_dim"] = q.tensor_dim;
  results["square_dim"] = q.square_space.dim();
  results["lambda_kernel_dim"] = ker.dim();
  results["generators"] = q.gen_labels;
  ordered_json witnesses;
  ordered_json kerbasis = ordered_json::array();
  for (const Vec& v : ker.basis()) kerbasis.push_back(pretty_vector(v, q.gen_labels));
  witnesses["lambda_kernel_basis"] = kerbasis;
  return emit(opt, "product", g.name, results, witnesses, false);
}

int cmd_capability(const Options& opt, const std::string& file) {
  HomLeibnizAlgebra g = load_input(file);
  auto [capable, rep] = is_capable(g, opt.cap);
  ordered_json results;
  results["dim"] = g.dim;
  results["capable"] = capable;
  results["center"] = subspace_json(rep.z);
  results["alpha_center"] = subspace_json(rep.z_alpha);
  results["tensor_center"] = subspace_json(rep.z_star);
  results["exterior_center"] = subspace_json(rep.z_wedge);
  ordered_json witnesses;
  if (rep.witness) {
    witnesses["noncapability_witness"] = rat_vec_json(*rep.witness);
    witnesses["noncapability_witness_pretty"] = pretty_vector(*rep.witness, g.basis_labels);
  }
  return emit(opt, "capability", g.name, results, witnesses, false);
}

// one hopf line: dual-route HL2 with matching induced endomorphism ranks
CheckReport hopf_check(const HomLeibnizAlgebra& g, long cap) {
  CheckReport rep;
  HomologyResult h2 = homology(g, 2, cap);
  ProductPresentation pe = exterior_square(g, cap);
  Subspace ker = commutator_kernel(pe);
  rep.add("dim HL2 (chain) = dim ker(lambda) (product)", h2.dimension == ker.dim(),
          std::to_string(h2.dimension) + " vs " + std::to_string(ker.dim()));
  // rank of alpha on the kernel vs rank of the induced endomorphism on HL2
  std::vector<Vec> imgs;
  for (const Vec& v : ker.basis()) imgs.push_back(pe.total.alpha.apply(v));
  int rank_prod = Subspace::span(pe.total.dim, imgs).dim();
  int rank_chain = image_basis(h2.induced_endo).dim();
  rep.add("induced endomorphism ranks agree", rank_prod == rank_chain,
          std::to_string(rank_chain) + " vs " + std::to_string(rank_prod));
  if (g.is_abelian()) {
    rep.add("abelian: dim(g^g) = dim HL2", pe.total.dim == h2.dimension,
            std::to_string(pe.total.dim) + " vs " + std::to_string(h2.dimension));
  }
  return rep;
}

CheckReport sequence_suite(const HomLeibnizAlgebra& g, long cap) {
  CheckReport rep;
  std::vector<std::pair<std::string, Subspace>> ideals;
  Subspace za = alpha_center(g);
  if (za.dim() > 0 && za.dim() < g.dim && is_ideal(g, za)) ideals.push_back({"alpha-center", za});
  Subspace der = derived_subalgebra(g);
  if (der.dim() > 0 && der.dim() < g.dim) ideals.push_back({"derived", der});
  if (ideals.empty()) rep.add_na("no proper nonzero ideal available");
  for (auto& [name, m] : ideals) {
    for (auto& it : ideal_sequence_check(g, m, cap).items) {
      it.name = name + ": " + it.name;
      rep.items.push_back(it);
    }
    for (auto& it : eight_term_check(g, m, nullptr, cap).items) {
      it.name = name + ": " + it.name;
      rep.items.push_back(it);
    }
  }
  return rep;
}

int cmd_check(const Options& opt, const std::string& file, const std::string& suite) {
  std::vector<std::pair<std::string, HomLeibnizAlgebra>> targets;
  bool catalog_mode = file.empty();
  if (!catalog_mode) {
    HomLeibnizAlgebra g = load_input(file);
    targets.push_back({g.name, g});
  } else {
    for (const auto& e : catalog()) targets.push_back({e.id, e.build()});
    int extra = 0;
    for (auto& g : combinator_sweep(opt.seed, 2))
      targets.push_back({"sweep" + std::to_string(extra++) + ":" + g.name, g});
  }

  ordered_json table = ordered_json::array();
  bool failed = false;
  auto run_one = [&](const std::string& id, const std::string& which, const CheckReport& rep) {
    ordered_json row;
    row["algebra"] = id;
    row["suite"] = which;
    row["items"] = report_json(rep);
    row["passed"] = !report_failed(rep);
    table.push_back(row);
    failed |= report_failed(rep);
  };

  for (auto& [id, g] : targets) {
    long product_size = 2L * g.dim * g.dim;
    bool product_ok = product_size <= opt.cap && g.dim <= 10;
    if (suite == "hopf" || suite == "all") {
      if (g.dim <= 5 && product_ok) run_one(id, "hopf", hopf_check(g, opt.cap));
    }
    if (suite == "sequence" || suite == "all") {
      if (g.dim <= 4 && product_ok) run_one(id, "sequence", sequence_suite(g, opt.cap));
    }
    if (suite == "capability" || suite == "all") {
      if (g.dim <= 6 && product_ok) run_one(id, "capability", capability_consistency_suite(g, nullptr, nullptr, opt.cap));
    }
  }
  if (suite == "dsum" || suite == "all") {
    std::vector<std::pair<std::string, std::pair<HomLeibnizAlgebra, HomLeibnizAlgebra>>> pairs;
    if (!catalog_mode) {
      HomLeibnizAlgebra g = load_input(file);
      if (g.dim <= 4) {
        pairs.push_back({g.name + " (+) abelian(1)", {g, abelian_algebra(1, Mat::identity(1))}});
        pairs.push_back({g.name + " (+) " + g.name, {g, g}});
      }
    } else {
      pairs.push_back({"abelian(1) (+) abelian(1)",
                       {abelian_algebra(1, Mat::identity(1)), abelian_algebra(1, Mat::identity(1))}});
      pairs.push_back({"nil3t (+) abelian(1)", {nil3_twisted(), abelian_algebra(1, Mat::identity(1))}});
      pairs.push_back({"heisenberg(1) (+) heisenberg(1)", {heisenberg(1), heisenberg(1)}});
      pairs.push_back({"sl2 (+) sl2", {sl2(), sl2()}});
      {
        Mat a(2, 2);
        a.at(0, 1) = 1;
        pairs.push_back({"abelian(2,zero) (+) abelian(2,nilp)",
                         {abelian_algebra(2, Mat(2, 2)), abelian_algebra(2, a)}});
      }
    }
    for (auto& [id, gg] : pairs) run_one(id, "dsum", direct_sum_formulas_check(gg.first, gg.second, opt.cap));
  }
  if (suite == "capability" || suite == "all") {
    if (catalog_mode) {
      // regular direct sums with known summands for the inheritance item
      HomLeibnizAlgebra h1 = heisenberg(1), h2 = heisenberg(2);
      HomLeibnizAlgebra s11 = direct_sum(h1, h1), s22 = direct_sum(h2, h2);
      run_one("heisenberg(1)(+)heisenberg(1)", "capability", capability_consistency_suite(s11, &h1, &h1, opt.cap));
      run_one("heisenberg(2)(+)heisenberg(2)", "capability", capability_consistency_suite(s22, &h2, &h2, opt.cap));
    }
  }

  ordered_json results;
  results["suite"] = suite;
  results["checks"] = table;
  return emit(opt, "check", catalog_mode ? "catalog" : targets.front().first, results, ordered_json::object(),
              failed);
}

int cmd_catalog(const Options& opt, const std::string& action, const std::string& name) {
  if (action == "list") {
    ordered_json results;
    ordered_json list = ordered_json::array();
    for (const auto& e : catalog()) {
      ordered_json j;
      j["id"] = e.id;
      j["dim"] = e.build().dim;
      j["description"] = e.description;
      list.push_back(j);
    }
    results["entries"] = list;
    return emit(opt, "catalog list", "", results, ordered_json::object(), false);
  }
  if (action == "emit") {
    HomLeibnizAlgebra g = catalog_build(name);
    std::cout << serialize_algebra(g) << "\n";
    return 0;
  }
  throw Error(ErrorKind::parse, "catalog: action must be list or emit");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hom-Leibniz algebra computations over Q"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand
  Options opt;
  app.add_option("--cap", opt.cap, "size cap for assembled linear spaces");
  app.add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for combinator-generated sweeps");

  std::string file, kind = "tensor", suite = "all", cat_action, cat_name;
  int max_degree = 2;
  std::vector<std::string> ideal_specs;

  auto* validate = app.add_subcommand("validate", "check the Hom-Leibniz axioms");
  validate->fallthrough();
  validate->add_option("file", file)->required();
  auto* invariants = app.add_subcommand("invariants", "centers, derived ideal, flags, abelianization");
  invariants->fallthrough();
  invariants->add_option("file", file)->required();
  auto* homology_cmd = app.add_subcommand("homology", "HL_n dimensions and boundary ranks");
  homology_cmd->fallthrough();
  homology_cmd->add_option("file", file)->required();
  homology_cmd->add_option("--max-degree", max_degree, "highest homology degree (default 2)");
  auto* product = app.add_subcommand("product", "non-abelian tensor/exterior product");
  product->fallthrough();
  product->add_option("file", file)->required();
  product->add_option("--kind", kind)->check(CLI::IsMember({"tensor", "exterior"}));
  product->add_option("--ideal", ideal_specs, "ideal spec (give twice); comma-separated indices or labels");
  auto* capability = app.add_subcommand("capability", "centers and the capability verdict");
  capability->fallthrough();
  capability->add_option("file", file)->required();
  auto* check = app.add_subcommand("check", "consistency suites (counterexamples exit 1)");
  check->fallthrough();
  check->add_option("file", file, "algebra file or catalog:ID; omit for the whole catalog");
  check->add_option("--suite", suite)->check(CLI::IsMember({"hopf", "sequence", "dsum", "capability", "all"}));
  auto* cat = app.add_subcommand("catalog", "list entries or emit one as an algebra file");
  cat->fallthrough();
  cat->add_option("action", cat_action)->required()->check(CLI::IsMember({"list", "emit"}));
  cat->add_option("name", cat_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, file);
    if (invariants->parsed()) return cmd_invariants(opt, file);
    if (homology_cmd->parsed()) return cmd_homology(opt, file, max_degree);
    if (product->parsed()) return cmd_product(opt, file, kind, ideal_specs);
    if (capability->parsed()) return cmd_capability(opt, file);
    if (check->parsed()) return cmd_check(opt, file, suite);
    if (cat->parsed()) return cmd_catalog(opt, cat_action, cat_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::integrity: return 1;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
