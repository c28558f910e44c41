#pragma once

// Exact character tables of finite groups via the Dixon-Schneider method:
// split the class algebra over a prime field F_p with p = 1 (mod exponent),
// recover degrees from the orthogonality of central characters, lift values
// to Q(zeta_60) through discrete-log interpolation, and verify the exact
// orthogonality relations on the lifted table.

#include <map>
#include <string>
#include <vector>

#include "ellft/cyclo.hpp"
#include "ellft/groups.hpp"

namespace ellft {

struct CharTable {
  const FinGroup* group = nullptr;  // not owned
  // rows[r][c] = value of the r-th irreducible character on class c (class
  // indices as in the group).  Rows are sorted by degree, then by value
  // vector in descending coefficient-lexicographic order, so the trivial
  // character is always row 0.
  std::vector<std::vector<CycNum>> rows;

  int num_chars() const { return static_cast<int>(rows.size()); }
  long degree(int r) const;
  const CycNum& value(int r, int c) const { return rows[r][c]; }

  // Optional character labels, assigned by callers.  Several labels may
  // alias the same row.
  std::map<std::string, int> char_labels;
  int labeled_char(const std::string& name) const;  // throws if unknown
  std::string char_name(int r) const;               // first label or "chi<i>"
};

// Computes the full table; throws std::runtime_error if the internal
// consistency checks (splitting, lifting, orthogonality) fail.
CharTable character_table(const FinGroup& g);

// Exact first and second orthogonality relations; on failure, appends a
// human-readable witness to *detail if given.
bool check_orthogonality(const CharTable& t, std::string* detail = nullptr);

// Identifies a character row by degree and/or a few values on labeled
// classes.  Matching must be unique; throws std::runtime_error otherwise.
struct CharFingerprint {
  long degree = -1;                                // -1 = unconstrained
  std::vector<std::pair<std::string, CycNum>> values;  // (class label, value)
};

int find_char(const CharTable& t, const CharFingerprint& fp);

// Resolves every fingerprint to a unique row and records it in char_labels;
// throws on ambiguity, naming the offending label.
void resolve_char_labels(CharTable& t,
                         const std::map<std::string, CharFingerprint>& fps);

}  // namespace ellft
