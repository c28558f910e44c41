#pragma once

// Verification engine: recomputable table data (pair counts, dual
// involutions, model structure), the main intertwining identity
// res(pi(u,h,s)) = FT(res(pi(u,s,h))), the leading-coefficient identity
// zeta(s,h) conj(zeta(h,s)) = Delta, and all self-duality claims.

#include <string>
#include <vector>

#include "ellft/catalog.hpp"

namespace ellft {

struct CheckResult {
  std::string check_id;
  std::string scope;
  std::string status;  // "pass" | "fail" | "partial"
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  int count(const std::string& status) const;
  bool has_fail() const { return count("fail") > 0; }
  bool has_partial() const { return count("partial") > 0; }
  void add(std::string check_id, std::string scope, std::string status,
           std::string witness = "");
  void merge(VerificationReport other);
  void normalize();  // deterministic order

  std::string to_text() const;
  std::string to_json() const;
};

struct Filter {
  std::string group;      // empty = all
  std::string unipotent;  // empty = all
  bool matches(const UnipotentRecord& rec) const;
};

// Pair counts, dual involutions, model structure, restriction coverage,
// and the subparahoric symmetry relations.
VerificationReport validate_tables(const Catalog& cat, const Filter& f = {});

// For every dual pair of restriction records: FT applied block-wise to the
// (s,h) expansion equals the (h,s) expansion exactly.
VerificationReport check_main_theorem(const Catalog& cat, const Filter& f = {});

// Leading coefficients are roots of unity with
// zeta(s,h) conj(zeta(h,s)) = Delta(sbar,hbar).
VerificationReport check_zeta(const Catalog& cat, const Filter& f = {});

// Self-duality / mapping claims of named combinations, plus the built-in
// generic identities: v2 and the C2-stable sum for untwisted C2 families,
// v3 and the S3-family lemma for S3 families.
VerificationReport check_self_dual(const Catalog& cat,
                                   const std::vector<std::string>& names = {});

}  // namespace ellft
