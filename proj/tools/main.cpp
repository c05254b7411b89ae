// eqobs: exact Burnside-ring invariants of stratified group actions.
//
// Subcommands: group-info, burnside-eval, germ-eval, germ-verify, tables,
// global-eval, global-verify, fuzz. Exit codes: 0 success/verified,
// 1 verification inequality, 2 input or validation error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqobs/burnside.hpp"
#include "eqobs/cache.hpp"
#include "eqobs/fuzzing.hpp"
#include "eqobs/io.hpp"

using nlohmann::json;
using namespace eqobs;

namespace {

struct CliConfig {
  std::string format = "text";
  std::string cache_dir;
  Bounds bounds;
  uint64_t seed = 1;
  uint64_t count = 100;
};

// Warm a group's class data from the cache directory, or compute and persist.
void prepare_group(const GroupPtr& group, const CliConfig& cfg) {
  if (cfg.cache_dir.empty()) return;
  if (group->order() > cfg.bounds.max_subgroup_enum_order) return;
  if (!load_group_cache(group, cfg.cache_dir, cfg.bounds))
    store_group_cache(group, cfg.cache_dir, cfg.bounds);
}

json element_json(const BurnsideElement& e) {
  json coeffs = json::object();
  const SubgroupClassTable& classes = e.group()->subgroup_classes();
  for (size_t i = 0; i < classes.count(); ++i)
    if (e.coeff(i)) coeffs[classes.name(i)] = e.coeff(i);
  return json{{"render", e.render()}, {"coeffs", std::move(coeffs)},
              {"reduction", e.reduce_count()}};
}

json poset_function_json(const PosetFunction& f) {
  json rows = json::array();
  for (size_t i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < f.size(); ++j) row.push_back(f(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json tables_json(const StratPoset& poset) {
  json strata = json::array();
  for (size_t i = 0; i < poset.count(); ++i) strata.push_back(poset.id(i));
  PosetFunction n = n_from_eu(poset);
  return json{{"strata", std::move(strata)},
              {"zeta", poset_function_json(zeta(poset))},
              {"mobius", poset_function_json(mobius(poset))},
              {"m_tilde", poset_function_json(m_tilde(poset))},
              {"n", poset_function_json(n)}};
}

void print_tables_text(std::ostream& out, const StratPoset& poset) {
  auto print_fn = [&](const char* name, const PosetFunction& f) {
    out << name << ":\n";
    for (size_t i = 0; i < f.size(); ++i) {
      out << poset.id(i) << ":";
      for (size_t j = 0; j < f.size(); ++j) out << " " << f(i, j);
      out << "\n";
    }
  };
  out << "strata =";
  for (size_t i = 0; i < poset.count(); ++i) out << " " << poset.id(i);
  out << "\n";
  print_fn("zeta", zeta(poset));
  print_fn("mobius", mobius(poset));
  print_fn("m_tilde", m_tilde(poset));
  print_fn("n", n_from_eu(poset));
}

void emit(const CliConfig& cfg, const json& doc, const std::string& text) {
  if (cfg.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::optional<size_t> find_point_stratum(const StratGermData& germ) {
  const StratPoset& poset = germ.poset();
  for (size_t i = 0; i < poset.count(); ++i) {
    if (poset.dim(i) != 0) continue;
    if (germ.isotropy(i).order() != germ.group()->order()) continue;
    bool minimal = true;
    for (size_t j = 0; j < poset.count() && minimal; ++j)
      if (!poset.leq(i, j)) minimal = false;
    if (minimal) return i;
  }
  return std::nullopt;
}

int cmd_group_info(const CliConfig& cfg, const std::string& desc) {
  GroupPtr g = generate_group(desc, cfg.bounds);
  prepare_group(g, cfg);
  const SubgroupClassTable& classes = g->subgroup_classes(cfg.bounds);
  const MarksTable& marks = g->table_of_marks(cfg.bounds);

  json jclasses = json::array();
  for (size_t i = 0; i < classes.count(); ++i)
    jclasses.push_back(json{{"name", classes.name(i)},
                            {"order", classes.subgroup_order(i)},
                            {"size", classes.class_size(i)}});
  json doc{{"group", g->description()}, {"degree", g->degree()}, {"order", g->order()},
           {"subgroup_classes", classes.count()}, {"classes", std::move(jclasses)},
           {"marks", marks}};

  std::string text;
  text += "group = " + g->description() + "\n";
  text += "degree = " + std::to_string(g->degree()) + "\n";
  text += "order = " + std::to_string(g->order()) + "\n";
  text += "subgroup_classes = " + std::to_string(classes.count()) + "\n";
  for (size_t i = 0; i < classes.count(); ++i)
    text += "class " + classes.name(i) + ": order " + std::to_string(classes.subgroup_order(i)) +
            ", size " + std::to_string(classes.class_size(i)) + "\n";
  text += "table_of_marks:\n";
  for (size_t h = 0; h < classes.count(); ++h) {
    text += classes.name(h) + ":";
    for (int64_t v : marks[h]) text += " " + std::to_string(v);
    text += "\n";
  }
  emit(cfg, doc, text);
  return 0;
}

int cmd_burnside_eval(const CliConfig& cfg, const std::string& desc, const std::string& expr) {
  GroupPtr g = generate_group(desc, cfg.bounds);
  prepare_group(g, cfg);
  BurnsideElement e = parse_element_expr(expr, g, cfg.bounds);
  json doc{{"group", g->description()}, {"expr", expr}, {"result", element_json(e)}};
  emit(cfg, doc, e.render() + "\n");
  return 0;
}

int cmd_germ_eval(const CliConfig& cfg, const std::string& path) {
  LoadedGerm loaded = load_germ_file(path, cfg.bounds);
  prepare_group(loaded.germ->group(), cfg);
  const StratPoset& poset = loaded.germ->poset();

  json doc{{"group", loaded.germ->group()->description()}, {"tables", tables_json(poset)}};
  std::string text;
  if (loaded.form) {
    BurnsideElement euler = eq_euler_obstruction(*loaded.form, poset.top(), cfg.bounds);
    BurnsideElement radial = eq_radial_index(*loaded.form, poset.top(), cfg.bounds);
    doc["euler_obstruction"] = element_json(euler);
    doc["radial_index"] = element_json(radial);
    text += "euler_obstruction = " + euler.render() + "\n";
    text += "euler_obstruction_reduction = " + std::to_string(euler.reduce_count()) + "\n";
    text += "radial_index = " + radial.render() + "\n";
    text += "radial_index_reduction = " + std::to_string(radial.reduce_count()) + "\n";
  }
  if (auto point = find_point_stratum(*loaded.germ)) {
    BurnsideElement obstruction = germ_obstruction(loaded.germ, *point, cfg.bounds);
    doc["germ_obstruction"] = element_json(obstruction);
    text += "germ_obstruction = " + obstruction.render() + "\n";
    text += "germ_obstruction_reduction = " + std::to_string(obstruction.reduce_count()) + "\n";
  }
  if (!loaded.form && !find_point_stratum(*loaded.germ))
    throw ValidationError(path + ": no form_data and no fixed zero-dimensional minimal stratum; "
                          "nothing to evaluate");
  emit(cfg, doc, text);
  return 0;
}

int cmd_germ_verify(const CliConfig& cfg, const std::string& path) {
  LoadedGerm loaded = load_germ_file(path, cfg.bounds);
  prepare_group(loaded.germ->group(), cfg);
  if (!loaded.form)
    throw ValidationError(path + ": germ file has no form_data to verify");
  TheoremReport report = verify_theorem(*loaded.form, cfg.bounds);

  json terms = json::array();
  for (const auto& t : report.terms)
    terms.push_back(json{{"stratum", t.stratum}, {"weight", t.weight},
                         {"radial", element_json(t.radial)}});
  json doc{{"lhs", element_json(report.lhs)}, {"rhs", element_json(report.rhs)},
           {"verified", report.ok()}, {"top_equal", report.top_equal},
           {"restricted_equal", report.restricted_equal}, {"terms", std::move(terms)},
           {"tables", tables_json(loaded.germ->poset())}};

  std::string text;
  text += "lhs = " + report.lhs.render() + "\n";
  text += "rhs = " + report.rhs.render() + "\n";
  text += std::string("verified = ") + (report.ok() ? "true" : "false") + "\n";
  if (!report.mismatched_strata.empty()) {
    text += "mismatched strata:";
    for (const std::string& s : report.mismatched_strata) text += " " + s;
    text += "\n";
  }
  emit(cfg, doc, text);
  return report.ok() ? 0 : 1;
}

int cmd_tables(const CliConfig& cfg, const std::string& path) {
  std::string content = read_text_file(path);
  json doc;
  std::string text;
  if (looks_like_variety_json(content)) {
    LoadedVariety loaded = load_variety_json(content, cfg.bounds);
    if (loaded.variety->is_empty()) throw ValidationError(path + ": empty variety has no tables");
    doc = tables_json(loaded.variety->poset());
    std::ostringstream ss;
    print_tables_text(ss, loaded.variety->poset());
    text = ss.str();
  } else {
    LoadedGerm loaded = load_germ_json(content, cfg.bounds);
    doc = tables_json(loaded.germ->poset());
    std::ostringstream ss;
    print_tables_text(ss, loaded.germ->poset());
    text = ss.str();
  }
  emit(cfg, doc, text);
  return 0;
}

int cmd_global_eval(const CliConfig& cfg, const std::string& path) {
  LoadedVariety loaded = load_variety_file(path, cfg.bounds);
  prepare_group(loaded.variety->group(), cfg);
  BurnsideElement chi = chi_g(*loaded.variety, cfg.bounds);
  BurnsideElement obstruction = global_obstruction(*loaded.variety, cfg.bounds);
  json doc{{"group", loaded.variety->group()->description()},
           {"kind", loaded.variety->kind() == VarietyKind::compact ? "compact" : "affine"},
           {"chi", element_json(chi)}, {"global_obstruction", element_json(obstruction)}};
  std::string text;
  text += "chi = " + chi.render() + "\n";
  text += "chi_reduction = " + std::to_string(chi.reduce_count()) + "\n";
  text += "global_obstruction = " + obstruction.render() + "\n";
  text += "global_obstruction_reduction = " + std::to_string(obstruction.reduce_count()) + "\n";
  emit(cfg, doc, text);
  return 0;
}

int cmd_global_verify(const CliConfig& cfg, const std::string& path) {
  LoadedVariety loaded = load_variety_file(path, cfg.bounds);
  prepare_group(loaded.variety->group(), cfg);
  GlobalFormData form;
  std::string source = "file";
  if (loaded.form) {
    form = *loaded.form;
  } else {
    form = synthesize_form_data(*loaded.variety, cfg.seed);
    source = "synthesized";
  }
  BurnsideElement orbit_level = orbit_level_obstruction(*loaded.variety, form, false, cfg.bounds);
  BurnsideElement direct = global_obstruction(*loaded.variety, cfg.bounds);
  PoincareHopfReport ph = poincare_hopf_check(*loaded.variety, form, cfg.bounds);
  bool obstruction_match = orbit_level == direct;
  bool verified = obstruction_match && ph.equal;

  json strata = json::array();
  for (const auto& s : ph.strata)
    strata.push_back(json{{"stratum", s.id}, {"index_sum", s.entry_sum},
                          {"quotient_euler", s.quotient_euler}, {"satisfied", s.satisfied}});
  json doc{{"form_source", source},
           {"orbit_level", element_json(orbit_level)},
           {"global_obstruction", element_json(direct)},
           {"obstruction_match", obstruction_match},
           {"ph_sum", element_json(ph.induced_sum)},
           {"chi", element_json(ph.chi)},
           {"poincare_hopf_match", ph.equal},
           {"strata", std::move(strata)},
           {"verified", verified}};

  std::string text;
  text += "orbit_level = " + orbit_level.render() + "\n";
  text += "global_obstruction = " + direct.render() + "\n";
  text += std::string("obstruction_match = ") + (obstruction_match ? "true" : "false") + "\n";
  text += "ph_sum = " + ph.induced_sum.render() + "\n";
  text += "chi = " + ph.chi.render() + "\n";
  text += std::string("poincare_hopf_match = ") + (ph.equal ? "true" : "false") + "\n";
  text += std::string("verified = ") + (verified ? "true" : "false") + "\n";
  emit(cfg, doc, text);
  return verified ? 0 : 1;
}

int cmd_fuzz(const CliConfig& cfg) {
  FuzzConfig fc;
  fc.seed = cfg.seed;
  fc.count = cfg.count;
  fc.bounds = cfg.bounds;
  FuzzSummary summary = run_fuzz(fc);

  json counterexamples = json::array();
  for (const FuzzFailure& f : summary.failures)
    counterexamples.push_back(json{{"case", f.case_index}, {"kind", f.kind},
                                   {"input", json::parse(f.serialized_input)}});
  json doc{{"cases", summary.cases},
           {"failures", summary.total_failures()},
           {"germ_theorem_failures", summary.germ_theorem_failures},
           {"germ_inversion_failures", summary.germ_inversion_failures},
           {"variety_obstruction_failures", summary.variety_obstruction_failures},
           {"variety_ph_failures", summary.variety_ph_failures},
           {"counterexamples", std::move(counterexamples)}};

  std::string text;
  if (summary.cases > 0) {
    text += "germ theorem failures = " + std::to_string(summary.germ_theorem_failures) + "\n";
    text += "germ inversion failures = " + std::to_string(summary.germ_inversion_failures) + "\n";
    text += "variety obstruction failures = " +
            std::to_string(summary.variety_obstruction_failures) + "\n";
    text += "variety poincare-hopf failures = " + std::to_string(summary.variety_ph_failures) +
            "\n";
  }
  text += std::to_string(summary.cases) + " cases, " + std::to_string(summary.total_failures()) +
          " failures\n";
  for (const FuzzFailure& f : summary.failures) {
    text += "counterexample (case " + std::to_string(f.case_index) + ", " + f.kind + "):\n";
    text += f.serialized_input + "\n";
  }
  emit(cfg, doc, text);
  return summary.total_failures() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Burnside-ring invariants of stratified group actions"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for persisted group data")
      ->envname("EQOBS_CACHE_DIR");
  app.add_option("--max-group-order", cfg.bounds.max_group_order, "Group order bound")
      ->capture_default_str();
  app.add_option("--max-subgroup-order", cfg.bounds.max_subgroup_enum_order,
                 "Subgroup enumeration bound on the group order")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for synthesized data and fuzzing")
      ->capture_default_str();
  app.add_option("--count", cfg.count, "Number of fuzz cases")->capture_default_str();

  std::string group_desc, expr, path;

  CLI::App* group_info = app.add_subcommand("group-info", "Group order, subgroup classes, marks");
  group_info->add_option("--group", group_desc, "Group description")->required();

  CLI::App* burnside_eval =
      app.add_subcommand("burnside-eval", "Evaluate a Burnside ring expression");
  burnside_eval->add_option("--group", group_desc, "Group description")->required();
  burnside_eval->add_option("--expr", expr, "Element expression")->required();

  CLI::App* germ_eval = app.add_subcommand("germ-eval", "Invariants of a germ file");
  germ_eval->add_option("file", path, "Germ file")->required();

  CLI::App* germ_verify =
      app.add_subcommand("germ-verify", "Check the obstruction/radial-index identity");
  germ_verify->add_option("file", path, "Germ file")->required();

  CLI::App* tables = app.add_subcommand("tables", "Print zeta, mobius, m~ and n tables");
  tables->add_option("file", path, "Germ or variety file")->required();

  CLI::App* global_eval = app.add_subcommand("global-eval", "Global invariants of a variety file");
  global_eval->add_option("file", path, "Variety file")->required();

  CLI::App* global_verify =
      app.add_subcommand("global-verify", "Check the global obstruction and Poincare-Hopf sums");
  global_verify->add_option("file", path, "Variety file")->required();

  CLI::App* fuzz = app.add_subcommand("fuzz", "Randomized identity checking");

  CLI11_PARSE(app, argc, argv);

  try {
    if (group_info->parsed()) return cmd_group_info(cfg, group_desc);
    if (burnside_eval->parsed()) return cmd_burnside_eval(cfg, group_desc, expr);
    if (germ_eval->parsed()) return cmd_germ_eval(cfg, path);
    if (germ_verify->parsed()) return cmd_germ_verify(cfg, path);
    if (tables->parsed()) return cmd_tables(cfg, path);
    if (global_eval->parsed()) return cmd_global_eval(cfg, path);
    if (global_verify->parsed()) return cmd_global_verify(cfg, path);
    if (fuzz->parsed()) return cmd_fuzz(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
