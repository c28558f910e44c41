#include "ellft/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ellft {

int VerificationReport::count(const std::string& status) const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [&](const CheckResult& c) { return c.status == status; }));
}

void VerificationReport::add(std::string check_id, std::string scope,
                             std::string status, std::string witness) {
  checks.push_back({std::move(check_id), std::move(scope), std::move(status),
                    std::move(witness)});
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

void VerificationReport::normalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.check_id != b.check_id) return a.check_id < b.check_id;
                     return a.scope < b.scope;
                   });
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.status << "  " << c.check_id << "  " << c.scope;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  os << "summary: " << count("pass") << " pass, " << count("partial")
     << " partial, " << count("fail") << " fail\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"check_id", c.check_id}, {"scope", c.scope},
                     {"status", c.status}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  nlohmann::json doc{{"checks", arr},
                     {"summary",
                      {{"pass", count("pass")},
                       {"partial", count("partial")},
                       {"fail", count("fail")}}}};
  return doc.dump(2);
}

bool Filter::matches(const UnipotentRecord& rec) const {
  if (!group.empty() && rec.group != group) return false;
  if (!unipotent.empty() && rec.label != unipotent) return false;
  return true;
}

namespace {

std::string scope_of(const UnipotentRecord& rec) {
  return rec.group + "/" + rec.label;
}

std::string pair_scope(const UnipotentRecord& rec, const std::string& s,
                       const std::string& h) {
  return scope_of(rec) + "/(" + s + "," + h + ")";
}

// Resolves a stored pair (s,h) to concrete commuting elements of the
// centralizer group named `gname`.  h is looked up first among the
// centralizer-level labels of the s-class (these carry concrete
// permutations, e.g. "g3^-1" or "-delta"), then as an ambient class label.
std::pair<int, int> resolve_pair(const Catalog& cat, const std::string& gname,
                                 const std::string& s, const std::string& h) {
  const FinGroup& g = cat.group(gname);
  int s_elem = g.preferred_rep(g.labeled_class(s));
  auto fs = cat.family_specs.find(gname);
  if (fs != cat.family_specs.end()) {
    auto cit = fs->second.centralizers.find(s);
    if (cit != fs->second.centralizers.end()) {
      auto lit = cit->second.class_labels.find(h);
      if (lit != cit->second.class_labels.end()) {
        int h_elem = g.index_of(lit->second);
        if (h_elem < 0)
          throw std::runtime_error("label '" + h +
                                   "' is not an element of " + gname);
        if (g.mul(s_elem, h_elem) != g.mul(h_elem, s_elem))
          throw std::runtime_error("labeled pair (" + s + "," + h +
                                   ") does not commute");
        return {s_elem, h_elem};
      }
    }
  }
  FinGroup z = centralizer(g, s_elem);
  int zc = resolve_class_in(g, z, h);
  int h_elem = g.index_of(z.elements[z.preferred_rep(zc)]);
  return {s_elem, h_elem};
}

const RestrictionRecord* find_restriction(const UnipotentRecord& rec,
                                          const std::string& s,
                                          const std::string& h,
                                          const std::string& parahoric = "K0") {
  for (const auto& r : rec.restrictions)
    if (r.s == s && r.h == h && r.parahoric == parahoric) return &r;
  return nullptr;
}

const PairRecord* find_pair(const UnipotentRecord& rec, const std::string& s,
                            const std::string& h) {
  for (const auto& p : rec.pairs)
    if (p.s == s && p.h == h) return &p;
  return nullptr;
}

// Compares two expansions; on mismatch returns a witness string.
std::string compare_expansions(const Catalog& cat, const Expansion& a,
                               const Expansion& b) {
  std::set<std::string> fams;
  for (const auto& [f, v] : a.by_family) fams.insert(f);
  for (const auto& [f, v] : b.by_family) fams.insert(f);
  for (const auto& fname : fams) {
    const Family& fam = cat.family(fname);
    auto ia = a.by_family.find(fname);
    auto ib = b.by_family.find(fname);
    FamilyVector va = ia != a.by_family.end() ? ia->second : zero_vector(fam);
    const FamilyVector vb =
        ib != b.by_family.end() ? ib->second : zero_vector(fam);
    for (int i = 0; i < fam.size(); ++i)
      if (va.coords[i] != vb.coords[i])
        return "family " + fname + ", coordinate " + fam.basis_label(i) +
               ": " + va.coords[i].to_string() + " vs " +
               vb.coords[i].to_string();
  }
  std::set<std::string> chars;
  for (const auto& [c, m] : a.singletons) chars.insert(c);
  for (const auto& [c, m] : b.singletons) chars.insert(c);
  for (const auto& c : chars) {
    long ma = a.singletons.count(c) ? a.singletons.at(c) : 0;
    long mb = b.singletons.count(c) ? b.singletons.at(c) : 0;
    if (ma != mb)
      return "singleton " + c + ": multiplicity " + std::to_string(ma) +
             " vs " + std::to_string(mb);
  }
  if (a.symbolic != b.symbolic) return "symbolic named-gamma lists differ";
  return "";
}

Expansion apply_ft_expansion(const Catalog& cat, Expansion ex) {
  for (auto& [fname, vec] : ex.by_family)
    vec = apply_ft(cat.family(fname), vec);
  return ex;
}

bool is_root_of_unity(const CycNum& z) {
  // The roots of unity in Q(zeta_60) are exactly the 60th roots.
  CycNum p(1);
  for (int i = 0; i < 60; ++i) p *= z;
  return p == CycNum(1);
}

}  // namespace

VerificationReport validate_tables(const Catalog& cat, const Filter& f) {
  VerificationReport rep;
  for (const auto& rec : cat.records) {
    if (!f.matches(rec)) continue;
    const std::string scope = scope_of(rec);
    const FinGroup& g = cat.group(rec.centralizer_group);

    if (rec.finite_centralizer) {
      auto orbits = commuting_pair_orbits(g);
      if (static_cast<int>(orbits.size()) != rec.pair_count) {
        rep.add("counts", scope, "fail",
                "recomputed " + std::to_string(orbits.size()) +
                    " pair orbits, table says " +
                    std::to_string(rec.pair_count));
        continue;
      }
      // Stored pairs must hit each orbit exactly once, and the dual
      // references must realize the swap involution.
      std::map<int, const PairRecord*> orbit_owner;
      bool ok = true;
      for (const auto& p : rec.pairs) {
        try {
          auto [se, he] = resolve_pair(cat, rec.centralizer_group, p.s, p.h);
          int orb = orbit_of_pair(orbits, se, he);
          if (orbit_owner.count(orb)) {
            rep.add("counts", pair_scope(rec, p.s, p.h), "fail",
                    "duplicate orbit with pair (" + orbit_owner[orb]->s + "," +
                        orbit_owner[orb]->h + ")");
            ok = false;
            continue;
          }
          orbit_owner[orb] = &p;
          const PairRecord* dual = find_pair(rec, p.dual_s, p.dual_h);
          if (!dual || dual->dual_s != p.s || dual->dual_h != p.h) {
            rep.add("counts", pair_scope(rec, p.s, p.h), "fail",
                    "dual reference is not an involution");
            ok = false;
            continue;
          }
          auto [dse, dhe] = resolve_pair(cat, rec.centralizer_group, p.dual_s, p.dual_h);
          if (orbit_of_pair(orbits, dse, dhe) !=
              orbit_of_pair(orbits, he, se)) {
            rep.add("counts", pair_scope(rec, p.s, p.h), "fail",
                    "stored dual pair is not in the orbit of the swap");
            ok = false;
          }
        } catch (const std::exception& e) {
          rep.add("counts", pair_scope(rec, p.s, p.h), "fail", e.what());
          ok = false;
        }
      }
      if (ok && orbit_owner.size() != orbits.size())
        rep.add("counts", scope, "fail",
                "stored pair list covers " +
                    std::to_string(orbit_owner.size()) + " of " +
                    std::to_string(orbits.size()) + " orbits");
      else if (ok)
        rep.add("counts", scope, "pass");
    } else {
      // Torsion model: pair list is transcribed; check commutation, the
      // dual involution, the split-relevant count, and the torus action.
      bool ok = true;
      int relevant = 0;
      for (const auto& p : rec.pairs) {
        try {
          auto [se, he] = resolve_pair(cat, rec.centralizer_group, p.s, p.h);
          if (g.mul(se, he) != g.mul(he, se))
            throw std::runtime_error("pair does not commute in the model");
          const PairRecord* dual = find_pair(rec, p.dual_s, p.dual_h);
          if (!dual || dual->dual_s != p.s || dual->dual_h != p.h)
            throw std::runtime_error("dual reference is not an involution");
        } catch (const std::exception& e) {
          rep.add("counts", pair_scope(rec, p.s, p.h), "fail", e.what());
          ok = false;
        }
        if (p.split_relevant) ++relevant;
      }
      if (relevant != rec.pair_count) {
        rep.add("counts", scope, "fail",
                "split-relevant pairs " + std::to_string(relevant) +
                    " != table count " + std::to_string(rec.pair_count));
        ok = false;
      }
      if (rec.torus_action) {
        try {
          TorusAction act(g, rec.torus_action->dim,
                          rec.torus_action->generators);
        } catch (const std::exception& e) {
          rep.add("counts", scope, "fail",
                  std::string("torus action: ") + e.what());
          ok = false;
        }
      }
      if (ok) rep.add("counts", scope, "pass");
    }

    // Restriction coverage: every restriction's (s,h) is a stored pair, and
    // every pair has a hyperspecial restriction record.
    for (const auto& r : rec.restrictions) {
      if (r.parahoric != "K0") continue;
      if (!find_pair(rec, r.s, r.h))
        rep.add("coverage", pair_scope(rec, r.s, r.h), "fail",
                "restriction for a pair missing from the pair list");
    }
    std::vector<std::string> uncovered;
    for (const auto& p : rec.pairs)
      if (p.split_relevant && !find_restriction(rec, p.s, p.h))
        uncovered.push_back("(" + p.s + "," + p.h + ")");
    if (uncovered.empty()) {
      rep.add("coverage", scope, "pass");
    } else {
      std::string w = "no restriction transcribed for";
      for (const auto& u : uncovered) w += " " + u;
      rep.add("coverage", scope, "partial", w);
    }

    // Subparahoric symmetry: (1,g2) and (g2,1) records agree, and all
    // records involving g3 coincide.
    std::set<std::string> parahorics;
    for (const auto& r : rec.restrictions)
      if (r.parahoric != "K0") parahorics.insert(r.parahoric);
    for (const auto& pa : parahorics) {
      const RestrictionRecord* r1 = find_restriction(rec, "1", "g2", pa);
      const RestrictionRecord* r2 = find_restriction(rec, "g2", "1", pa);
      std::string pscope = scope + "@" + pa;
      bool sym_ok = true;
      if (r1 && r2) {
        std::string w = compare_expansions(cat, expand_restriction(cat, *r1),
                                           expand_restriction(cat, *r2));
        if (!w.empty()) {
          rep.add("subparahoric-symmetry", pscope, "fail",
                  "(1,g2) vs (g2,1): " + w);
          sym_ok = false;
        }
      }
      std::vector<const RestrictionRecord*> g3recs;
      for (const auto& r : rec.restrictions)
        if (r.parahoric == pa && (r.s == "g3" || r.h == "g3"))
          g3recs.push_back(&r);
      for (size_t i = 1; i < g3recs.size(); ++i) {
        std::string w =
            compare_expansions(cat, expand_restriction(cat, *g3recs[0]),
                               expand_restriction(cat, *g3recs[i]));
        if (!w.empty()) {
          rep.add("subparahoric-symmetry", pscope, "fail",
                  "(" + g3recs[i]->s + "," + g3recs[i]->h + ") differs: " + w);
          sym_ok = false;
        }
      }
      if (sym_ok) rep.add("subparahoric-symmetry", pscope, "pass");
    }
  }
  rep.normalize();
  return rep;
}

VerificationReport check_main_theorem(const Catalog& cat, const Filter& f) {
  VerificationReport rep;
  for (const auto& rec : cat.records) {
    if (!f.matches(rec)) continue;
    for (const auto& r : rec.restrictions) {
      if (r.parahoric != "K0") continue;
      const PairRecord* pair = find_pair(rec, r.s, r.h);
      std::string scope = pair_scope(rec, r.s, r.h);
      if (!pair) {
        rep.add("main", scope, "fail", "pair not in pair list");
        continue;
      }
      // Run each dual pair once, from its lexicographically smaller side.
      bool self_dual = pair->dual_s == r.s && pair->dual_h == r.h;
      if (!self_dual &&
          std::make_pair(pair->dual_s, pair->dual_h) <
              std::make_pair(r.s, r.h) &&
          find_restriction(rec, pair->dual_s, pair->dual_h))
        continue;
      const RestrictionRecord* dual_rec =
          self_dual ? &r : find_restriction(rec, pair->dual_s, pair->dual_h);
      if (!dual_rec) {
        rep.add("main", scope, "partial",
                "dual restriction (" + pair->dual_s + "," + pair->dual_h +
                    ") not transcribed");
        continue;
      }
      try {
        Expansion a = expand_restriction(cat, r);
        Expansion b = expand_restriction(cat, *dual_rec);
        std::string w =
            compare_expansions(cat, apply_ft_expansion(cat, a), b);
        if (!w.empty()) {
          rep.add("main", scope, "fail", w);
        } else if (!a.complete || !b.complete) {
          std::string note = "verified modulo incomplete parts:";
          for (const auto& s : a.symbolic) note += " " + s;
          if (a.symbolic.empty()) note += " (partial transcription)";
          rep.add("main", scope, "partial", note);
        } else {
          rep.add("main", scope, "pass");
        }
      } catch (const std::exception& e) {
        rep.add("main", scope, "fail", e.what());
      }
    }
  }
  rep.normalize();
  return rep;
}

VerificationReport check_zeta(const Catalog& cat, const Filter& f) {
  VerificationReport rep;
  auto leading = [&](const UnipotentRecord& rec, const RestrictionRecord& r,
                     CycNum* out) -> std::string {
    if (r.sbar.empty() || r.hbar.empty())
      return "no identified leading term (sbar/hbar missing)";
    const CycNum* found = nullptr;
    for (const auto& t : r.terms) {
      if (t.family != rec.family || !t.is_sigma) continue;
      if (t.x == r.sbar && t.y_or_rho == r.hbar) {
        if (found) return "multiple leading terms on family " + rec.family;
        found = &t.coeff;
      }
    }
    if (!found) return "missing leading term on family " + rec.family;
    *out = *found;
    return "";
  };
  for (const auto& rec : cat.records) {
    if (!f.matches(rec)) continue;
    const Family& fu = cat.family(rec.family);
    for (const auto& r : rec.restrictions) {
      if (r.parahoric != "K0") continue;
      std::string scope = pair_scope(rec, r.s, r.h);
      const PairRecord* pair = find_pair(rec, r.s, r.h);
      if (!pair) {
        rep.add("zeta", scope, "fail", "pair not in pair list");
        continue;
      }
      bool self_dual = pair->dual_s == r.s && pair->dual_h == r.h;
      if (!self_dual &&
          std::make_pair(pair->dual_s, pair->dual_h) <
              std::make_pair(r.s, r.h) &&
          find_restriction(rec, pair->dual_s, pair->dual_h))
        continue;
      CycNum z1;
      std::string err = leading(rec, r, &z1);
      if (!err.empty()) {
        rep.add("zeta", scope, "partial", err);
        continue;
      }
      if (!is_root_of_unity(z1)) {
        rep.add("zeta", scope, "fail",
                "leading coefficient " + z1.to_string() +
                    " is not a root of unity");
        continue;
      }
      const RestrictionRecord* dual_rec =
          self_dual ? &r : find_restriction(rec, pair->dual_s, pair->dual_h);
      if (!dual_rec) {
        rep.add("zeta", scope, "partial", "dual restriction not transcribed");
        continue;
      }
      CycNum z2;
      err = leading(rec, *dual_rec, &z2);
      if (!err.empty()) {
        rep.add("zeta", scope, "partial", "dual: " + err);
        continue;
      }
      // Delta(sbar, hbar): -1 exactly for a twisted family with exactly one
      // nontrivial coordinate.  The trivial class is always labeled "1";
      // sbar/hbar may use centralizer-level labels (e.g. "g3^-1") that are
      // not ambient class labels, so triviality is decided by the label.
      bool s_triv = r.sbar == "1";
      bool h_triv = r.hbar == "1";
      CycNum delta =
          (fu.delta_twisted && (s_triv != h_triv)) ? CycNum(-1) : CycNum(1);
      CycNum prod = z1 * z2.conj();
      if (prod != delta)
        rep.add("zeta", scope, "fail",
                "zeta(s,h) conj(zeta(h,s)) = " + prod.to_string() +
                    " but Delta = " + delta.to_string());
      else
        rep.add("zeta", scope, "pass");
    }
  }
  rep.normalize();
  return rep;
}

VerificationReport check_self_dual(const Catalog& cat,
                                   const std::vector<std::string>& names) {
  VerificationReport rep;
  auto wanted = [&](const std::string& n) {
    return names.empty() ||
           std::find(names.begin(), names.end(), n) != names.end();
  };

  for (const auto& [name, nc] : cat.named_combinations) {
    if (!wanted(name)) continue;
    if (!nc.complete) {
      rep.add("selfdual", name, "partial", "combination is transcribed as partial");
      continue;
    }
    if (nc.claim.empty()) continue;
    try {
      Expansion ex = expand_terms(cat, nc.terms, nc.singletons);
      if (nc.claim == "self_dual") {
        std::string w =
            compare_expansions(cat, apply_ft_expansion(cat, ex), ex);
        rep.add("selfdual", name, w.empty() ? "pass" : "fail", w);
      } else if (nc.claim.rfind("maps_to:", 0) == 0) {
        std::string target = nc.claim.substr(8);
        auto it = cat.named_combinations.find(target);
        if (it == cat.named_combinations.end() || !it->second.complete) {
          rep.add("selfdual", name, "partial",
                  "target " + target + " missing or incomplete");
          continue;
        }
        Expansion tex =
            expand_terms(cat, it->second.terms, it->second.singletons);
        std::string w =
            compare_expansions(cat, apply_ft_expansion(cat, ex), tex);
        rep.add("selfdual", name + "->" + target, w.empty() ? "pass" : "fail",
                w);
      } else {
        rep.add("selfdual", name, "fail", "unknown claim " + nc.claim);
      }
    } catch (const std::exception& e) {
      rep.add("selfdual", name, "fail", e.what());
    }
  }

  // Built-in generic identities per family.
  for (const auto& [fname, famp] : cat.families) {
    const Family& fam = *famp;
    const FinGroup& g = fam.gamma();
    try {
      if (g.order() == 2 && !fam.delta_twisted) {
        if (!wanted("v2/" + fname)) continue;
        FamilyVector v2 = named_combination(
            fam,
            {{false, "1", "1", CycNum(1)}, {false, "g2", "1", CycNum(1)}});
        rep.add("selfdual", "v2/" + fname,
                is_ft_fixed(fam, v2) ? "pass" : "fail",
                is_ft_fixed(fam, v2) ? "" : "C2-stable sum not FT-fixed");
      } else if (g.order() == 6 && g.num_classes() == 3) {
        if (!wanted("s3-lemma/" + fname)) continue;
        CycNum th = CycNum::root_of_unity(3, 1);
        CycNum th2 = CycNum::root_of_unity(3, 2);
        auto c = [&](std::vector<CombinationTerm> t) {
          return named_combination(fam, t);
        };
        std::vector<std::pair<std::string, bool>> results;
        results.emplace_back("fixed:(1,1)+2(g3,1)+(1,eps)",
                             is_ft_fixed(fam, c({{false, "1", "1", CycNum(1)},
                                                 {false, "g3", "1", CycNum(2)},
                                                 {false, "1", "eps", CycNum(1)}})));
        results.emplace_back("fixed:(g2,1)-(g2,eps)",
                             is_ft_fixed(fam, c({{false, "g2", "1", CycNum(1)},
                                                 {false, "g2", "eps", CycNum(-1)}})));
        results.emplace_back("fixed:v3",
                             is_ft_fixed(fam, c({{false, "1", "1", CycNum(1)},
                                                 {false, "g2", "1", CycNum(1)},
                                                 {false, "g3", "1", CycNum(1)}})));
        results.emplace_back("fixed:(1,1)+(g2,1)+(1,r)",
                             is_ft_fixed(fam, c({{false, "1", "1", CycNum(1)},
                                                 {false, "g2", "1", CycNum(1)},
                                                 {false, "1", "r", CycNum(1)}})));
        results.emplace_back(
            "fixed:(1,r)+th2(g3,th)+th(g3,th2)",
            is_ft_fixed(fam, c({{false, "1", "r", CycNum(1)},
                                {false, "g3", "theta", th2},
                                {false, "g3", "theta2", th}})));
        results.emplace_back(
            "fixed:(1,r)+th(g3,th)+th2(g3,th2)",
            is_ft_fixed(fam, c({{false, "1", "r", CycNum(1)},
                                {false, "g3", "theta", th},
                                {false, "g3", "theta2", th2}})));
        results.emplace_back(
            "swap:(1,1)-(g3,1)+(1,eps)",
            apply_ft(fam, c({{false, "1", "1", CycNum(1)},
                             {false, "g3", "1", CycNum(-1)},
                             {false, "1", "eps", CycNum(1)}})) ==
                c({{false, "1", "r", CycNum(1)},
                   {false, "g3", "theta", CycNum(1)},
                   {false, "g3", "theta2", CycNum(1)}}));
        results.emplace_back(
            "swap:(1,1)-(1,eps)",
            apply_ft(fam, c({{false, "1", "1", CycNum(1)},
                             {false, "1", "eps", CycNum(-1)}})) ==
                c({{false, "g2", "1", CycNum(1)},
                   {false, "g2", "eps", CycNum(1)}}));
        for (const auto& [label, ok] : results)
          rep.add("selfdual", "s3-lemma/" + fname + "/" + label,
                  ok ? "pass" : "fail");
      }
    } catch (const std::exception& e) {
      rep.add("selfdual", fname, "fail",
              std::string("builtin identity: ") + e.what());
    }
  }
  rep.normalize();
  return rep;
}

}  // namespace ellft
