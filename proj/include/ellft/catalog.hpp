#pragma once

// The transcribed data layer: group definitions, families, unipotent-class
// records with their elliptic pair lists, parahoric restriction records, and
// named combinations — loaded from a single versioned JSON document, with
// validation of everything recomputable.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellft/elliptic.hpp"
#include "ellft/families.hpp"

namespace ellft {

// One term of a restriction or named combination: coeff * sigma(family,x,y)
// or coeff * e_(x,rho) in the named family.
struct CatalogTerm {
  std::string family;
  bool is_sigma = true;  // basis "xy" vs "xrho"
  std::string x, y_or_rho;
  CycNum coeff;
};

struct SingletonTerm {
  std::string character;
  long mult = 1;
};

struct RestrictionRecord {
  std::string s, h;
  std::string parahoric = "K0";
  bool complete = true;
  // Images of (s, h) in Gamma_{F_u}, identifying the leading term.
  std::string sbar, hbar;
  std::vector<CatalogTerm> terms;
  std::vector<SingletonTerm> singletons;
  std::vector<std::string> named_gammas;
  std::string note;
};

struct PairRecord {
  std::string s, h;
  std::string a_su;             // component-group name (may be empty)
  std::string dual_s, dual_h;   // the dual pair (h,s) up to conjugacy labels
  std::string source = "computed";  // computed | paper
  bool split_relevant = true;
};

struct TorusActionSpec {
  int dim = 0;
  std::vector<std::pair<Perm, CycMat>> generators;
};

struct UnipotentRecord {
  std::string group;  // G2, F4, E6, E7, E8
  std::string label;
  bool finite_centralizer = true;
  std::string centralizer_group;  // finite centralizer, or torsion model
  std::optional<TorusActionSpec> torus_action;
  std::string centralizer_note;
  std::string component_group;
  std::string component_group_kind = "A_u";  // or "A_u^ad"
  int pair_count = 0;
  std::string family;
  std::string family_gamma;
  bool delta_twisted = false;
  std::vector<PairRecord> pairs;
  std::vector<RestrictionRecord> restrictions;
};

struct NamedCombination {
  std::string name;
  std::string claim;  // "self_dual", "maps_to:<name>", or ""
  bool complete = true;
  std::vector<CatalogTerm> terms;
  std::vector<SingletonTerm> singletons;
  std::string note;
};

struct Catalog {
  int schema_version = 0;
  // All finite groups defined in the file (family gammas, centralizer
  // groups, torsion models), fully labeled.
  std::map<std::string, std::shared_ptr<FinGroup>> groups;
  // Per group name, its own character table with resolved labels (built on
  // demand at load for groups that declare "chars").
  std::map<std::string, std::shared_ptr<CharTable>> tables;
  std::map<std::string, std::shared_ptr<Family>> families;
  // Per group name, the label data needed to build a family on that group
  // (used by the families section and by `ellft ft`).
  std::map<std::string, FamilySpec> family_specs;
  std::vector<UnipotentRecord> records;
  std::map<std::string, NamedCombination> named_combinations;

  const UnipotentRecord* find_record(const std::string& group,
                                     const std::string& label) const;
  const Family& family(const std::string& name) const;  // throws if unknown
  const FinGroup& group(const std::string& name) const;
  const CharTable* table(const std::string& name) const;  // null if no chars
};

struct CatalogError : std::runtime_error {
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

Catalog load_catalog(const std::string& path);

// Expansion of one restriction record: exact vectors per family plus the
// singleton multiset; incomplete named gammas stay symbolic.
struct Expansion {
  std::map<std::string, FamilyVector> by_family;
  std::map<std::string, long> singletons;
  std::vector<std::string> symbolic;  // incomplete named gammas, sorted
  bool complete = true;
};

// Expands terms and singletons; named gammas with complete definitions are
// inlined, incomplete ones recorded in `symbolic` and complete=false.
Expansion expand_restriction(const Catalog& cat, const RestrictionRecord& rec);
Expansion expand_terms(const Catalog& cat, const std::vector<CatalogTerm>& terms,
                       const std::vector<SingletonTerm>& singletons);

// Resolves a label to a class of z (a centralizer inside g): first as a
// label of z itself, then as a g-class label meeting a unique z-class.
int resolve_class_in(const FinGroup& g, const FinGroup& z,
                     const std::string& label);

}  // namespace ellft
