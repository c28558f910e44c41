#include "ellft/catalog.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace ellft {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw CatalogError(where + ": " + why);
}

Perm parse_perm(const json& j, int points, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != points)
    fail(where, "permutation must be a 1-based image array of length " +
                    std::to_string(points));
  Perm p(points);
  for (int i = 0; i < points; ++i) {
    int v = j[i].get<int>();
    if (v < 1 || v > points) fail(where, "permutation image out of range");
    p[i] = v - 1;
  }
  return p;
}

CycNum parse_scalar(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "coefficient must be a cyclo-grammar string");
  try {
    return parse_coeff(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, std::string("coefficient parse error: ") + e.what());
  }
}

CharFingerprint parse_fingerprint(const json& j, const std::string& where) {
  CharFingerprint fp;
  if (j.contains("degree")) fp.degree = j["degree"].get<long>();
  if (j.contains("values"))
    for (const auto& [cls, val] : j["values"].items())
      fp.values.emplace_back(cls, parse_scalar(val, where + ".values." + cls));
  return fp;
}

std::vector<CatalogTerm> parse_terms(const json& j, const std::string& where) {
  std::vector<CatalogTerm> terms;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& t = j[i];
    std::string here = where + "[" + std::to_string(i) + "]";
    CatalogTerm term;
    term.family = t.at("family").get<std::string>();
    std::string basis = t.value("basis", "xy");
    if (basis == "xy") {
      term.is_sigma = true;
      term.y_or_rho = t.at("y").get<std::string>();
    } else if (basis == "xrho") {
      term.is_sigma = false;
      term.y_or_rho = t.at("rho").get<std::string>();
    } else {
      fail(here, "basis must be \"xy\" or \"xrho\"");
    }
    term.x = t.at("x").get<std::string>();
    term.coeff = t.contains("coeff") ? parse_scalar(t["coeff"], here + ".coeff")
                                     : CycNum(1);
    terms.push_back(std::move(term));
  }
  return terms;
}

std::vector<SingletonTerm> parse_singletons(const json& j) {
  std::vector<SingletonTerm> out;
  for (const auto& s : j)
    out.push_back({s.at("char").get<std::string>(), s.value("mult", 1L)});
  return out;
}

CycMat parse_matrix(const json& j, int dim, const std::string& where) {
  if (static_cast<int>(j.size()) != dim) fail(where, "matrix row count != dim");
  CycMat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(j[r].size()) != dim)
      fail(where, "matrix column count != dim");
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = parse_scalar(j[r][c], where);
  }
  return m;
}

RestrictionRecord parse_restriction(const json& j, const std::string& where) {
  RestrictionRecord r;
  r.s = j.at("s").get<std::string>();
  r.h = j.at("h").get<std::string>();
  r.parahoric = j.value("parahoric", "K0");
  r.complete = j.value("complete", true);
  r.sbar = j.value("sbar", "");
  r.hbar = j.value("hbar", "");
  if (j.contains("terms")) r.terms = parse_terms(j["terms"], where + ".terms");
  if (j.contains("singletons")) r.singletons = parse_singletons(j["singletons"]);
  if (j.contains("named"))
    for (const auto& n : j["named"]) r.named_gammas.push_back(n.get<std::string>());
  r.note = j.value("note", "");
  return r;
}

}  // namespace

const UnipotentRecord* Catalog::find_record(const std::string& group,
                                            const std::string& label) const {
  for (const auto& r : records)
    if (r.group == group && r.label == label) return &r;
  return nullptr;
}

const Family& Catalog::family(const std::string& name) const {
  auto it = families.find(name);
  if (it == families.end()) throw CatalogError("unknown family: " + name);
  return *it->second;
}

const FinGroup& Catalog::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) throw CatalogError("unknown group: " + name);
  return *it->second;
}

const CharTable* Catalog::table(const std::string& name) const {
  auto it = tables.find(name);
  return it == tables.end() ? nullptr : it->second.get();
}

int resolve_class_in(const FinGroup& g, const FinGroup& z,
                     const std::string& label) {
  auto it = z.class_labels.find(label);
  if (it != z.class_labels.end()) return it->second;
  int gc = g.labeled_class(label);
  int found = -1;
  for (int zc = 0; zc < z.num_classes(); ++zc) {
    int e = g.index_of(z.elements[z.class_rep(zc)]);
    if (g.class_of[e] != gc) continue;
    if (found >= 0)
      throw CatalogError("label '" + label + "' is ambiguous in centralizer");
    found = zc;
  }
  if (found < 0)
    throw CatalogError("label '" + label + "' does not meet centralizer");
  return found;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    throw CatalogError(path + ": JSON parse error: " + std::string(e.what()));
  }

  Catalog cat;
  cat.schema_version = doc.value("schema_version", 0);
  if (!doc.empty() && cat.schema_version != 1)
    throw CatalogError(path + ": unsupported schema_version");

  // Groups (family gammas, centralizers, torsion models).
  std::map<std::string, json> fingerprint_specs;
  const json fg_section = doc.value("family_groups", json::object());
  for (const auto& [name, gj] : fg_section.items()) {
    std::string where = "family_groups." + name;
    int points = gj.at("points").get<int>();
    std::vector<Perm> gens;
    for (const auto& pj : gj.value("generators", json::array()))
      gens.push_back(parse_perm(pj, points, where + ".generators"));
    if (gens.empty()) gens.push_back(perm_identity(points));
    std::shared_ptr<FinGroup> g;
    try {
      g = std::make_shared<FinGroup>(make_group(points, gens));
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    const json cls_section = gj.value("class_labels", json::object());
    for (const auto& [lbl, pj] : cls_section.items()) {
      try {
        g->label_class(lbl, parse_perm(pj, points, where + ".class_labels." + lbl));
      } catch (const std::exception& e) {
        fail(where + ".class_labels." + lbl, e.what());
      }
    }
    g->class_labels.emplace("1", 0);
    cat.groups[name] = g;
    if (gj.contains("char_fingerprints"))
      fingerprint_specs[name] = gj["char_fingerprints"];
  }

  // Character tables with the groups' own labels (fingerprint key "self").
  for (const auto& [name, gptr] : cat.groups) {
    auto t = std::make_shared<CharTable>(character_table(*gptr));
    auto it = fingerprint_specs.find(name);
    if (it != fingerprint_specs.end() && it->second.contains("self")) {
      std::map<std::string, CharFingerprint> fps;
      const json& self = it->second["self"];
      const json self_chars = self.value("chars", json::object());
      for (const auto& [cname, fj] : self_chars.items())
        fps[cname] = parse_fingerprint(
            fj, "family_groups." + name + ".char_fingerprints.self." + cname);
      try {
        resolve_char_labels(*t, fps);
      } catch (const std::exception& e) {
        fail("family_groups." + name, e.what());
      }
    }
    t->char_labels.emplace("1", 0);
    cat.tables[name] = t;
  }

  // Base family specs, one per group (reused by every family on that gamma
  // and by the generic-family CLI path).
  for (const auto& [name, gptr] : cat.groups) {
    FamilySpec spec;
    spec.gamma = gptr;
    auto fit = fingerprint_specs.find(name);
    if (fit != fingerprint_specs.end())
      for (const auto& [xlbl, cj] : fit->second.items()) {
        if (xlbl == "self") continue;
        CentralizerLabels cl;
        const json cj_cls = cj.value("class_labels", json::object());
        for (const auto& [lbl, pj] : cj_cls.items())
          cl.class_labels[lbl] =
              parse_perm(pj, gptr->points,
                         "family_groups." + name + ".char_fingerprints." + xlbl +
                             "." + lbl);
        const json cj_chars = cj.value("chars", json::object());
        for (const auto& [cname, fpj] : cj_chars.items())
          cl.chars[cname] = parse_fingerprint(
              fpj, "family_groups." + name + ".char_fingerprints." + xlbl + "." +
                       cname);
        spec.centralizers[xlbl] = std::move(cl);
      }
    cat.family_specs[name] = std::move(spec);
  }

  // Families.
  const json fam_section = doc.value("families", json::object());
  for (const auto& [name, fj] : fam_section.items()) {
    std::string where = "families." + name;
    std::string gamma_name = fj.at("gamma").get<std::string>();
    auto sit = cat.family_specs.find(gamma_name);
    if (sit == cat.family_specs.end())
      fail(where, "unknown gamma group " + gamma_name);
    FamilySpec spec = sit->second;
    spec.delta_twisted = fj.value("delta_twisted", false);
    try {
      auto fam = std::make_shared<Family>(build_family(name, spec));
      fam->b_f = fj.value("b_F", -1);
      cat.families[name] = fam;
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }

  // Named combinations.
  for (const auto& nj : doc.value("named_combinations", json::array())) {
    NamedCombination nc;
    nc.name = nj.at("name").get<std::string>();
    std::string where = "named_combinations." + nc.name;
    nc.claim = nj.value("claim", "");
    nc.complete = nj.value("complete", true);
    if (nj.contains("terms")) nc.terms = parse_terms(nj["terms"], where + ".terms");
    if (nj.contains("singletons"))
      nc.singletons = parse_singletons(nj["singletons"]);
    nc.note = nj.value("note", "");
    cat.named_combinations[nc.name] = std::move(nc);
  }

  // Exceptional groups and their unipotent records.
  for (const auto& grp : doc.value("groups", json::array())) {
    std::string gname = grp.at("name").get<std::string>();
    for (const auto& uj : grp.value("unipotents", json::array())) {
      UnipotentRecord rec;
      rec.group = gname;
      rec.label = uj.at("label").get<std::string>();
      std::string where = gname + "." + rec.label;

      const json& cj = uj.at("centralizer");
      if (cj.contains("finite")) {
        rec.finite_centralizer = true;
        rec.centralizer_group = cj["finite"].get<std::string>();
      } else {
        rec.finite_centralizer = false;
        rec.centralizer_group = cj.at("model").get<std::string>();
        if (cj.contains("torus_action")) {
          const json& ta = cj["torus_action"];
          TorusActionSpec spec;
          spec.dim = ta.at("dim").get<int>();
          const FinGroup& mg = cat.group(rec.centralizer_group);
          for (const auto& gj2 : ta.value("generators", json::array()))
            spec.generators.emplace_back(
                parse_perm(gj2.at("perm"), mg.points, where + ".torus_action"),
                parse_matrix(gj2.at("matrix"), spec.dim,
                             where + ".torus_action.matrix"));
          rec.torus_action = std::move(spec);
        }
        rec.centralizer_note = cj.value("note", "");
      }
      if (cat.groups.find(rec.centralizer_group) == cat.groups.end())
        fail(where, "unknown centralizer group " + rec.centralizer_group);

      rec.component_group = uj.value("component_group", "");
      rec.component_group_kind = uj.value("component_group_kind", "A_u");
      rec.pair_count = uj.at("pair_count").get<int>();
      rec.family = uj.at("family").get<std::string>();
      rec.family_gamma = uj.value("family_gamma", "");
      rec.delta_twisted = uj.value("delta_twisted", false);
      if (cat.families.find(rec.family) == cat.families.end())
        fail(where, "unknown family " + rec.family);

      for (const auto& pj : uj.value("pairs", json::array())) {
        PairRecord p;
        p.s = pj.at("s").get<std::string>();
        p.h = pj.at("h").get<std::string>();
        p.a_su = pj.value("a_su", "");
        if (pj.contains("dual")) {
          p.dual_s = pj["dual"][0].get<std::string>();
          p.dual_h = pj["dual"][1].get<std::string>();
        } else {
          p.dual_s = p.h;
          p.dual_h = p.s;
        }
        p.source = pj.value("source", "computed");
        p.split_relevant = pj.value("split_relevant", true);
        rec.pairs.push_back(std::move(p));
      }
      for (const auto& rj : uj.value("restrictions", json::array()))
        rec.restrictions.push_back(
            parse_restriction(rj, where + ".restrictions"));
      cat.records.push_back(std::move(rec));
    }
  }

  // Cross-reference checks that need the whole document.
  for (const auto& rec : cat.records) {
    std::string where = rec.group + "." + rec.label;
    const Family& fam = cat.family(rec.family);
    if (!rec.family_gamma.empty()) {
      auto git = cat.groups.find(rec.family_gamma);
      if (git == cat.groups.end() || git->second.get() != &fam.gamma())
        fail(where, "family_gamma does not match the family's gamma group");
    }
    if (rec.delta_twisted != fam.delta_twisted)
      fail(where, "delta_twisted flag disagrees with the family");
    for (const auto& r : rec.restrictions) {
      for (const auto& t : r.terms) cat.family(t.family);
      for (const auto& n : r.named_gammas)
        if (cat.named_combinations.find(n) == cat.named_combinations.end())
          fail(where, "unknown named combination " + n);
      if (r.complete == false && r.named_gammas.empty() && r.note.empty())
        fail(where, "partial restriction must reference a named gamma or note");
    }
  }
  for (const auto& [name, nc] : cat.named_combinations)
    for (const auto& t : nc.terms) cat.family(t.family);

  return cat;
}

Expansion expand_terms(const Catalog& cat, const std::vector<CatalogTerm>& terms,
                       const std::vector<SingletonTerm>& singletons) {
  Expansion ex;
  for (const auto& term : terms) {
    const Family& f = cat.family(term.family);
    auto [it, fresh] = ex.by_family.try_emplace(term.family, zero_vector(f));
    FamilyVector part = term.is_sigma ? sigma_xy(f, term.x, term.y_or_rho)
                                      : basis_vector(f, term.x, term.y_or_rho);
    part.scale(term.coeff);
    it->second += part;
  }
  for (const auto& s : singletons) ex.singletons[s.character] += s.mult;
  std::erase_if(ex.singletons, [](const auto& kv) { return kv.second == 0; });
  return ex;
}

Expansion expand_restriction(const Catalog& cat, const RestrictionRecord& rec) {
  Expansion ex = expand_terms(cat, rec.terms, rec.singletons);
  ex.complete = rec.complete;
  for (const auto& name : rec.named_gammas) {
    auto it = cat.named_combinations.find(name);
    if (it == cat.named_combinations.end())
      throw CatalogError("unknown named combination " + name);
    const NamedCombination& nc = it->second;
    if (!nc.complete) {
      ex.symbolic.push_back(name);
      ex.complete = false;
      continue;
    }
    Expansion sub = expand_terms(cat, nc.terms, nc.singletons);
    for (auto& [fname, vec] : sub.by_family) {
      auto [fit, fresh] =
          ex.by_family.try_emplace(fname, zero_vector(cat.family(fname)));
      fit->second += vec;
    }
    for (const auto& [cname, mult] : sub.singletons) {
      ex.singletons[cname] += mult;
      if (ex.singletons[cname] == 0) ex.singletons.erase(cname);
    }
  }
  std::sort(ex.symbolic.begin(), ex.symbolic.end());
  return ex;
}

}  // namespace ellft
