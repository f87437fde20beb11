#include "hyperforge/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperforge/axioms.hpp"
#include "hyperforge/catalog.hpp"
#include "hyperforge/forms.hpp"
#include "hyperforge/hauptsatz.hpp"
#include "hyperforge/ideal.hpp"
#include "hyperforge/json_io.hpp"
#include "hyperforge/marshall.hpp"
#include "hyperforge/poly.hpp"
#include "hyperforge/quadext.hpp"

namespace hyperforge {
namespace cli {

using nlohmann::json;

namespace {

uint64_t fnv1a(const std::string& data, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json violations_json(const Structure* s, const Report& rep) {
  json out = json::array();
  for (const Violation& v : rep.violations) {
    json w = json::array();
    for (int i : v.witness) w.push_back(s ? s->label_of(i) : std::to_string(i));
    out.push_back({{"axiom", v.axiom}, {"witness", w}, {"detail", v.detail}});
  }
  return out;
}

json labels_of(const Structure& s, const ElemSet& set) {
  json out = json::array();
  set.for_each([&](int i) { out.push_back(s.label_of(i)); });
  return out;
}

json structure_json_obj(const Structure& s) {
  return json::parse(structure_to_json(s));
}

std::vector<int> parse_elements(const Structure& s, const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    std::string label = item.substr(b, e - b + 1);
    int idx = s.index_of(label);
    if (idx < 0)
      throw std::invalid_argument("unknown element '" + label + "' in " + s.name);
    out.push_back(idx);
  }
  return out;
}

long long budget_from_env(long long fallback) {
  if (const char* env = std::getenv("HYPERFORGE_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

struct Invocation {
  std::string verb;
  uint64_t digest = 0;
  uint64_t seed = 0;
  bool json_output = false;
  json result;
  json violations = json::array();
  int exit_code = 0;
};

void emit(const Invocation& inv, std::ostream& out, double wall_ms) {
  json report;
  report["verb"] = inv.verb;
  report["input_digest"] = hex64(inv.digest);
  report["seed"] = inv.seed;
  report["result"] = inv.result;
  report["violations"] = inv.violations;
  if (inv.json_output) {
    out << report.dump(2) << "\n";
    return;
  }
  out << "verb: " << inv.verb << "\n";
  out << "input digest: " << hex64(inv.digest) << "\n";
  if (!inv.violations.empty()) out << "violations: " << inv.violations.dump() << "\n";
  out << "result: " << inv.result.dump(2) << "\n";
  out << "wall time: " << wall_ms << " ms\n";
  out << (inv.exit_code == 0 ? "status: ok" : "status: violation") << "\n";
}

}  // namespace

Structure load_structure(const std::string& ref, bool verify) {
  Structure s;
  if (ref.rfind("catalog:", 0) == 0) {
    s = catalog::make(ref.substr(8));
  } else {
    std::ifstream in(ref);
    if (!in) throw ParseError("cannot open '" + ref + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    s = structure_from_json(buf.str());
  }
  if (verify) {
    Report rep = check_axioms(s, s.declared);
    if (!rep.passed())
      throw VerificationError(
          "structure " + s.name + " fails its declared " +
              std::string(kind_name(s.declared)) + " axioms",
          rep);
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite multivalued algebra workbench"};
  app.name("hyperforge");

  bool json_output = false;
  bool no_verify = false;
  uint64_t seed = 0;
  app.add_flag("--json", json_output, "emit the report as canonical JSON");
  app.add_flag("--no-verify", no_verify, "skip axiom verification on load");
  app.add_option("--seed", seed, "seed for sampled modes (echoed in reports)");

  std::string s_ref, kind_str, ideal_list, subset_spec, base_ref, alphas_list;
  std::string f_text, g_text, at_label, lhs_list, rhs_list, form_list, gens_list;
  std::string poly_op = "divide", emit_mode = "json";
  int hn = 1, hterms = 1;
  bool with_trace = false, do_swap = false, do_freal = false;
  std::string class_eq_pair;

  CLI::App* c_check = app.add_subcommand("check", "run an axiom suite");
  c_check->add_option("--structure", s_ref)->required();
  c_check->add_option("--kind", kind_str)->required();

  CLI::App* c_char = app.add_subcommand("characteristic", "smallest n with 0 in n*1");
  c_char->add_option("--structure", s_ref)->required();

  CLI::App* c_quot = app.add_subcommand("quotient", "quotient by a generated ideal");
  c_quot->add_option("--structure", s_ref)->required();
  c_quot->add_option("--ideal", ideal_list, "comma-separated generators")->required();

  CLI::App* c_marsh = app.add_subcommand("marshall", "Marshall quotient");
  c_marsh->add_option("--structure", s_ref)->required();
  c_marsh->add_option("--subset", subset_spec,
                      "squares | sumsquares | explicit:<a,b,...>")
      ->required();

  CLI::App* c_poly = app.add_subcommand("poly", "polynomial operations");
  c_poly->add_option("--structure", s_ref)->required();
  c_poly->add_option("--op", poly_op, "add|mul|eval|roots|divide|irreducible|quotient");
  c_poly->add_option("--f", f_text)->required();
  c_poly->add_option("--g", g_text);
  c_poly->add_option("--at", at_label);

  CLI::App* c_forms = app.add_subcommand("forms", "quadratic form queries");
  CLI::App* f_iso = c_forms->add_subcommand("isometric", "decide isometry");
  f_iso->add_option("--structure", s_ref)->required();
  f_iso->add_option("--lhs", lhs_list)->required();
  f_iso->add_option("--rhs", rhs_list)->required();
  CLI::App* f_witt = c_forms->add_subcommand("witt", "Witt decomposition");
  f_witt->add_option("--structure", s_ref)->required();
  f_witt->add_option("--form", form_list)->required();
  CLI::App* f_value = c_forms->add_subcommand("value", "value set D(phi)");
  f_value->add_option("--structure", s_ref)->required();
  f_value->add_option("--form", form_list)->required();
  CLI::App* f_pf = c_forms->add_subcommand("pfister", "expand a Pfister form");
  f_pf->add_option("--structure", s_ref)->required();
  f_pf->add_option("--gens", gens_list)->required();
  CLI::App* f_cls = c_forms->add_subcommand("classify", "classification flags");
  f_cls->add_option("--structure", s_ref)->required();
  c_forms->require_subcommand(1);

  CLI::App* c_ext = app.add_subcommand("extend", "quadratic extension and its quotient");
  c_ext->add_option("--base", base_ref)->required();
  c_ext->add_option("--alphas", alphas_list)->required();
  c_ext->add_option("--emit", emit_mode, "json|summary");

  CLI::App* c_tower = app.add_subcommand("tower", "iterated quadratic extensions");
  c_tower->add_option("--base", base_ref)->required();
  c_tower->add_option("--alphas", alphas_list)->required();
  c_tower->add_option("--class-eq", class_eq_pair, "a,b");
  c_tower->add_flag("--formally-real", do_freal);
  c_tower->add_flag("--swap", do_swap, "verify both orders are isomorphic (2 scalars)");

  CLI::App* c_haupt = app.add_subcommand("hauptsatz", "exhaustive bound check on I^n");
  c_haupt->add_option("--base", base_ref)->required();
  c_haupt->add_option("--n", hn)->required();
  c_haupt->add_option("--terms", hterms)->required();
  c_haupt->add_flag("--trace", with_trace);

  app.add_subcommand("catalog-list", "list built-in structures");

  app.require_subcommand(1);
  app.fallthrough();
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  std::vector<std::string> argv_copy(args.rbegin(), args.rend());  // CLI11 pops from the back
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  Invocation inv;
  inv.seed = seed;
  inv.json_output = json_output;
  {
    std::string digest_src;
    for (const auto& a : args) digest_src += a + "\x1f";
    inv.digest = fnv1a(digest_src);
  }

  const long long bfs_budget = budget_from_env(forms::kDefaultBfsBudget);
  const long long gen_budget = budget_from_env(hauptsatz::kDefaultGenBudget);

  try {
    if (app.got_subcommand("check")) {
      inv.verb = "check";
      auto kind = parse_kind(kind_str);
      if (!kind) throw std::invalid_argument("unknown kind '" + kind_str + "'");
      Structure s = load_structure(s_ref, false);
      Report rep = check_axioms(s, *kind);
      inv.result = {{"structure", s.name},
                    {"kind", kind_str},
                    {"passed", rep.passed()}};
      inv.violations = violations_json(&s, rep);
      inv.exit_code = rep.passed() ? 0 : 1;
    } else if (app.got_subcommand("characteristic")) {
      inv.verb = "characteristic";
      Structure s = load_structure(s_ref, !no_verify);
      inv.result = {{"structure", s.name}, {"characteristic", characteristic(s)}};
    } else if (app.got_subcommand("quotient")) {
      inv.verb = "quotient";
      Structure s = load_structure(s_ref, !no_verify);
      ElemSet gens(s.size);
      for (int g : parse_elements(s, ideal_list)) gens.insert(g);
      Ideal ideal = ideal_generate(s, gens);
      IdealFlags flags = classify_ideal(s, ideal);
      QuotientByIdeal q = quotient_by_ideal(s, ideal);
      json proj = json::object();
      for (int a = 0; a < s.size; ++a)
        proj[s.label_of(a)] = q.quotient.label_of(q.projection[static_cast<size_t>(a)]);
      inv.result = {{"structure", s.name},
                    {"ideal", labels_of(s, ideal.members)},
                    {"prime", flags.prime},
                    {"strongly_prime", flags.strongly_prime},
                    {"maximal", flags.maximal},
                    {"quotient", structure_json_obj(q.quotient)},
                    {"projection", proj}};
    } else if (app.got_subcommand("marshall")) {
      inv.verb = "marshall";
      Structure s = load_structure(s_ref, !no_verify);
      ElemSet m(s.size);
      if (subset_spec == "squares") {
        m = marshall::nonzero_squares(s);
      } else if (subset_spec == "sumsquares") {
        m = marshall::nonzero_sums_of_squares(s);
      } else if (subset_spec.rfind("explicit:", 0) == 0) {
        for (int e : parse_elements(s, subset_spec.substr(9))) m.insert(e);
      } else {
        throw std::invalid_argument("unknown subset spec '" + subset_spec + "'");
      }
      marshall::CoherenceReport coh = marshall::is_coherent(s, m);
      if (!coh.report.passed()) {
        inv.result = {{"structure", s.name},
                      {"subset", labels_of(s, m)},
                      {"coherent", false},
                      {"squares_condition", coh.squares_condition}};
        inv.violations = violations_json(&s, coh.report);
        inv.exit_code = 1;
      } else {
        marshall::MarshallQuotient q = marshall::marshall_quotient(s, m);
        json cls = json::object();
        for (int a = 0; a < s.size; ++a)
          cls[s.label_of(a)] = q.quotient.label_of(q.cls[static_cast<size_t>(a)]);
        inv.result = {{"structure", s.name},
                      {"subset", labels_of(s, m)},
                      {"coherent", true},
                      {"squares_condition", coh.squares_condition},
                      {"quotient", structure_json_obj(q.quotient)},
                      {"classes", cls}};
      }
    } else if (app.got_subcommand("poly")) {
      inv.verb = "poly";
      Structure s = load_structure(s_ref, !no_verify);
      poly::Poly f = poly::parse_poly(s, f_text);
      inv.result = {{"structure", s.name}, {"op", poly_op},
                    {"f", poly::poly_to_string(s, f)}};
      if (poly_op == "add" || poly_op == "mul") {
        poly::Poly g = poly::parse_poly(s, g_text);
        poly::BoxPoly box = poly_op == "add" ? poly::box_add(s, f, g)
                                             : poly::box_mul(s, f, g);
        json cells = json::array();
        for (const ElemSet& cell : box.sets) cells.push_back(labels_of(s, cell));
        inv.result["g"] = poly::poly_to_string(s, g);
        inv.result["box"] = cells;
      } else if (poly_op == "eval") {
        int at = s.index_of(at_label);
        if (at < 0) throw std::invalid_argument("unknown element '" + at_label + "'");
        inv.result["at"] = at_label;
        inv.result["values"] = labels_of(s, poly::evaluate(s, f, at));
      } else if (poly_op == "roots") {
        inv.result["roots"] = labels_of(s, poly::roots(s, f));
      } else if (poly_op == "divide") {
        poly::Poly g = poly::parse_poly(s, g_text);
        poly::EuclidResult d = poly::euclid_divide(s, f, g);
        inv.result["g"] = poly::poly_to_string(s, g);
        inv.result["q"] = poly::poly_to_string(s, d.q);
        inv.result["r"] = poly::poly_to_string(s, d.r);
      } else if (poly_op == "irreducible") {
        inv.result["irreducible"] = poly::is_irreducible(s, f);
      } else if (poly_op == "quotient") {
        poly::QuotientSuperfield q = poly::quotient_superfield(s, f);
        // The class of X must be a root of the modulus in the quotient; the
        // base embeds at identical indices, so the lifted modulus reuses f's
        // coefficients.
        poly::Poly lifted;
        for (int ci : f.c) lifted.c.push_back(ci);
        bool root = poly::evaluate(q.s, lifted, q.x_class()).contains(q.s.zero);
        inv.result["quotient"] = structure_json_obj(q.s);
        inv.result["x_is_root"] = root;
      } else {
        throw std::invalid_argument("unknown poly op '" + poly_op + "'");
      }
    } else if (app.got_subcommand("forms")) {
      inv.verb = "forms";
      CLI::App* sub = c_forms->get_subcommands().front();
      Structure s = load_structure(s_ref, !no_verify);
      if (sub == f_iso) {
        forms::QForm lhs = parse_elements(s, lhs_list);
        forms::QForm rhs = parse_elements(s, rhs_list);
        inv.result = {{"structure", s.name},
                      {"lhs", lhs_list},
                      {"rhs", rhs_list},
                      {"isometric", forms::isometric(s, lhs, rhs, bfs_budget)}};
      } else if (sub == f_witt) {
        forms::QForm phi = parse_elements(s, form_list);
        forms::WittDecomposition wd = forms::witt_decompose(s, phi);
        json an = json::array();
        for (int e : wd.anisotropic) an.push_back(s.label_of(e));
        inv.result = {{"structure", s.name},
                      {"form", form_list},
                      {"anisotropic", an},
                      {"hyperbolic_count", wd.hyperbolic_count},
                      {"dim_w", static_cast<int>(wd.anisotropic.size())}};
      } else if (sub == f_value) {
        forms::QForm phi = parse_elements(s, form_list);
        inv.result = {{"structure", s.name},
                      {"form", form_list},
                      {"values", labels_of(s, forms::value_set(s, phi))}};
      } else if (sub == f_pf) {
        forms::QForm pf = forms::pfister(s, parse_elements(s, gens_list));
        json entries = json::array();
        for (int e : pf) entries.push_back(s.label_of(e));
        inv.result = {{"structure", s.name}, {"gens", gens_list}, {"entries", entries}};
      } else {
        forms::HyperfieldClasses c = forms::classify_hyperfield(s);
        inv.result = {{"structure", s.name},
                      {"pre_special", c.pre_special},
                      {"special", c.special},
                      {"formally_real", c.formally_real},
                      {"real_reduced", c.real_reduced},
                      {"rooted", c.rooted}};
      }
    } else if (app.got_subcommand("extend")) {
      inv.verb = "extend";
      Structure base = load_structure(base_ref, !no_verify);
      std::vector<int> alphas = parse_elements(base, alphas_list);
      if (alphas.empty()) throw std::invalid_argument("extend: no scalars given");
      if (alphas.size() == 1) {
        quadext::Extension e = quadext::extend(base, alphas[0]);
        quadext::SQuotient sq = quadext::s_quotient(e, false);
        json cls = json::object();
        for (int i = 0; i < e.carrier.size; ++i)
          cls[e.carrier.label_of(i)] = sq.s.label_of(sq.cls[static_cast<size_t>(i)]);
        inv.result = {{"base", base.name},
                      {"alpha", base.label_of(alphas[0])},
                      {"extension_size", e.carrier.size},
                      {"formally_real_warning", sq.formally_real_warning}};
        if (emit_mode == "summary") {
          inv.result["quotient_size"] = sq.s.size;
        } else {
          inv.result["quotient"] = structure_json_obj(sq.s);
          inv.result["classes"] = cls;
        }
      } else {
        quadext::Tower t = quadext::iterate_tower(base, alphas);
        json stage_sizes = json::array();
        for (const auto& st : t.stages) stage_sizes.push_back(st.hyperfield->size);
        json cls = json::object();
        for (int a = 0; a < base.size; ++a)
          cls[base.label_of(a)] = t.final_stage().label_of(t.push_to_final(a));
        inv.result = {{"base", base.name},
                      {"alphas", alphas_list},
                      {"stage_sizes", stage_sizes},
                      {"classes", cls}};
        if (emit_mode != "summary")
          inv.result["final"] = structure_json_obj(t.final_stage());
      }
    } else if (app.got_subcommand("tower")) {
      inv.verb = "tower";
      Structure base = load_structure(base_ref, !no_verify);
      std::vector<int> alphas = parse_elements(base, alphas_list);
      if (do_swap) {
        if (alphas.size() != 2)
          throw std::invalid_argument("tower --swap needs exactly two scalars");
        quadext::SwapIso sw = quadext::tower_swap_iso(base, alphas[0], alphas[1]);
        json iso = json::object();
        const Structure& a = sw.first.final_stage();
        const Structure& b = sw.second.final_stage();
        for (int i = 0; i < a.size; ++i)
          iso[a.label_of(i)] = b.label_of(sw.iso[static_cast<size_t>(i)]);
        inv.result = {{"base", base.name},
                      {"alphas", alphas_list},
                      {"isomorphic", true},
                      {"isomorphism", iso}};
      } else {
        quadext::Tower t = quadext::iterate_tower(base, alphas);
        inv.result = {{"base", base.name},
                      {"alphas", alphas_list},
                      {"final_size", t.final_stage().size}};
        if (do_freal) inv.result["formally_real"] = quadext::tower_formally_real(t);
        if (!class_eq_pair.empty()) {
          std::vector<int> ab = parse_elements(base, class_eq_pair);
          if (ab.size() != 2)
            throw std::invalid_argument("--class-eq expects two elements");
          inv.result["class_eq"] = quadext::tower_class_eq(t, ab[0], ab[1]);
        }
      }
    } else if (app.got_subcommand("hauptsatz")) {
      inv.verb = "hauptsatz";
      Structure base = load_structure(base_ref, !no_verify);
      hauptsatz::HauptsatzReport rep =
          hauptsatz::check_hauptsatz(base, hn, hterms, gen_budget);
      inv.result = {{"base", base.name},
                    {"n", hn},
                    {"terms", hterms},
                    {"checked", rep.checked},
                    {"violations", static_cast<int>(rep.violations.size())}};
      for (const auto& v : rep.violations) {
        json terms = json::array();
        for (const auto& t : v.rep.terms) {
          json gens = json::array();
          for (int g : t.gens) gens.push_back(base.label_of(g));
          terms.push_back({{"sign", t.sign},
                           {"scalar", base.label_of(t.scalar)},
                           {"gens", gens}});
        }
        inv.violations.push_back(
            {{"axiom", "hauptsatz-bound"}, {"dim_w", v.dim_w}, {"terms", terms}});
      }
      if (with_trace) {
        json traces = json::array();
        long long emitted = 0;
        hauptsatz::for_each_representation(
            base, hn, hterms, hauptsatz::GenMode::Sampled,
            [&](const hauptsatz::InRepresentation& sample) {
              hauptsatz::InRepresentation pos = sample;
              for (auto& t : pos.terms) t.sign = +1;
              try {
                hauptsatz::ProofTrace tr = hauptsatz::trace_proof(base, pos);
                json steps = json::array();
                for (const auto& st : tr.steps)
                  steps.push_back({{"stage", st.stage},
                                   {"case", hauptsatz::case_name(st.case_tag)},
                                   {"dim_w", st.dim_w}});
                traces.push_back({{"steps", steps},
                                  {"monotone", tr.monotone()},
                                  {"certified", tr.certified}});
                ++emitted;
              } catch (const std::invalid_argument&) {
                // first Pfister form isotropic; skip
              }
            },
            gen_budget, seed, 8);
        inv.result["traces"] = traces;
        inv.result["traces_emitted"] = emitted;
      }
      inv.exit_code = rep.passed() ? 0 : 1;
    } else if (app.got_subcommand("catalog-list")) {
      inv.verb = "catalog-list";
      json list = json::array();
      for (const std::string& name : catalog::roster()) {
        Structure s = catalog::make(name);
        list.push_back({{"name", name},
                        {"size", s.size},
                        {"kind", kind_name(s.declared)}});
      }
      inv.result = {{"catalog", list}};
    }
  } catch (const VerificationError& e) {
    inv.result = {{"error", e.what()}};
    inv.violations = violations_json(nullptr, e.report);
    inv.exit_code = 1;
    emit(inv, out, 0.0);
    return 1;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  emit(inv, out, elapsed);
  return inv.exit_code;
}

}  // namespace cli
}  // namespace hyperforge
