// Command-line front end: labeled character tables, family Fourier matrices,
// elliptic pair listings, and the verification engine.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellft/catalog.hpp"
#include "ellft/verify.hpp"

namespace {

using namespace ellft;
using nlohmann::json;

std::string default_catalog() {
  if (const char* env = std::getenv("ELLFT_CATALOG_PATH")) return env;
  return "data/catalog.json";
}

int run_chartab(const Catalog& cat, const std::string& group_name,
                const std::string& format) {
  const FinGroup& g = cat.group(group_name);
  const CharTable* t = cat.table(group_name);
  if (!t) throw CatalogError("no character table for group " + group_name);

  std::vector<std::string> classes;
  for (int c = 0; c < g.num_classes(); ++c) classes.push_back(g.class_name(c));

  if (format == "json") {
    json out;
    out["group"] = group_name;
    out["classes"] = classes;
    out["chars"] = json::array();
    for (int r = 0; r < t->num_chars(); ++r) {
      json row;
      row["name"] = t->char_name(r);
      row["degree"] = t->degree(r);
      json vals = json::array();
      for (int c = 0; c < g.num_classes(); ++c)
        vals.push_back(t->value(r, c).to_string());
      row["values"] = std::move(vals);
      out["chars"].push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "character table of " << group_name << " (order " << g.order()
            << ", " << g.num_classes() << " classes)\n";
  std::cout << "  ";
  for (const auto& c : classes) std::cout << "\t" << c;
  std::cout << "\n";
  for (int r = 0; r < t->num_chars(); ++r) {
    std::cout << t->char_name(r);
    for (int c = 0; c < g.num_classes(); ++c)
      std::cout << "\t" << t->value(r, c).to_string();
    std::cout << "\n";
  }
  return 0;
}

int run_ft(const Catalog& cat, const std::string& gamma, bool twisted,
           const std::string& format) {
  auto it = cat.family_specs.find(gamma);
  if (it == cat.family_specs.end())
    throw CatalogError("unknown gamma group: " + gamma);
  FamilySpec spec = it->second;
  spec.delta_twisted = twisted;
  Family f = build_family(gamma + (twisted ? "-twisted" : ""), spec);

  std::vector<std::string> labels;
  for (int i = 0; i < f.size(); ++i) labels.push_back(f.basis_label(i));

  if (format == "json") {
    json out;
    out["gamma"] = gamma;
    out["delta_twisted"] = twisted;
    out["basis"] = labels;
    out["ft"] = json::array();
    for (int r = 0; r < f.size(); ++r) {
      json row = json::array();
      for (int c = 0; c < f.size(); ++c)
        row.push_back(f.ft().at(r, c).to_string());
      out["ft"].push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "Fourier matrix for gamma = " << gamma
            << (twisted ? " (twisted)" : "") << ", basis size " << f.size()
            << "\n";
  for (int i = 0; i < f.size(); ++i)
    std::cout << "  [" << i << "] " << labels[i] << "\n";
  for (int r = 0; r < f.size(); ++r) {
    for (int c = 0; c < f.size(); ++c)
      std::cout << (c ? "\t" : "") << f.ft().at(r, c).to_string();
    std::cout << "\n";
  }
  return 0;
}

int run_pairs(const Catalog& cat, const std::string& group,
              const std::string& unipotent) {
  const UnipotentRecord* rec = cat.find_record(group, unipotent);
  if (!rec)
    throw CatalogError("no record for " + group + " " + unipotent);

  std::cout << group << " " << unipotent << ": " << rec->pair_count
            << " elliptic pairs, family " << rec->family << "\n";
  for (const auto& p : rec->pairs) {
    std::cout << "  (" << p.s << "," << p.h << ")  dual=(" << p.dual_s << ","
              << p.dual_h << ")";
    if (!p.a_su.empty()) std::cout << "  A_su=" << p.a_su;
    std::cout << "  source=" << p.source
              << (p.split_relevant ? "" : "  [not split-relevant]") << "\n";
    if (p.a_su.empty()) continue;
    const CharTable* t = cat.table(p.a_su);
    if (!t) continue;
    const FinGroup& a = cat.group(p.a_su);
    if (a.class_labels.find(p.h) == a.class_labels.end()) continue;
    VirtualCombination vc =
        virtual_combination(*t, p.h, unipotent, p.s);
    std::cout << "    pi(" << unipotent << "," << p.s << "," << p.h << ") =";
    for (size_t i = 0; i < vc.coeffs.size(); ++i) {
      std::cout << (i ? " + " : " ") << "(" << vc.coeffs[i].second.to_string()
                << ")*" << vc.formal_terms[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const Catalog& cat, const std::string& check,
               const Filter& filter, const std::string& format,
               bool allow_partial) {
  VerificationReport report;
  if (check == "counts" || check == "all")
    report.merge(validate_tables(cat, filter));
  if (check == "main" || check == "all")
    report.merge(check_main_theorem(cat, filter));
  if (check == "zeta" || check == "all")
    report.merge(check_zeta(cat, filter));
  if (check == "selfdual" || check == "all")
    report.merge(check_self_dual(cat));
  report.normalize();

  if (format == "json")
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.to_text();

  if (report.has_fail()) return 1;
  if (report.has_partial() && !allow_partial) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptic Fourier transform toolkit"};
  app.require_subcommand(1);
  std::string catalog_path = default_catalog();
  app.add_option("--catalog", catalog_path, "catalog JSON path")
      ->capture_default_str();

  auto* chartab = app.add_subcommand("chartab", "print a labeled character table");
  std::string chartab_group, chartab_format = "table";
  chartab->add_option("group", chartab_group, "group name")->required();
  chartab->add_option("--format", chartab_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* ft = app.add_subcommand("ft", "print a family Fourier matrix");
  std::string ft_gamma, ft_format = "table";
  bool ft_twisted = false;
  ft->add_option("gamma", ft_gamma, "gamma group name")->required();
  ft->add_flag("--twisted", ft_twisted, "twisted Delta variant");
  ft->add_option("--format", ft_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* pairs = app.add_subcommand("pairs", "list elliptic pairs of a record");
  std::string pairs_group, pairs_unipotent;
  pairs->add_option("group", pairs_group, "exceptional group")->required();
  pairs->add_option("unipotent", pairs_unipotent, "unipotent class label")
      ->required();

  auto* verify = app.add_subcommand("verify", "run the verification engine");
  std::string v_check = "all", v_format = "text";
  Filter filter;
  bool allow_partial = true;
  verify->add_option("--check", v_check, "main|zeta|selfdual|counts|all")
      ->check(CLI::IsMember({"main", "zeta", "selfdual", "counts", "all"}));
  verify->add_option("--group", filter.group, "restrict to one group");
  verify->add_option("--unipotent", filter.unipotent,
                     "restrict to one unipotent class");
  verify->add_option("--format", v_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--allow-partial,!--no-allow-partial", allow_partial,
                   "partial results do not fail the run (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Catalog cat = load_catalog(catalog_path);
    if (chartab->parsed())
      return run_chartab(cat, chartab_group, chartab_format);
    if (ft->parsed()) return run_ft(cat, ft_gamma, ft_twisted, ft_format);
    if (pairs->parsed()) return run_pairs(cat, pairs_group, pairs_unipotent);
    return run_verify(cat, v_check, filter, v_format, allow_partial);
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
