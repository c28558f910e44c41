#pragma once

// Finite permutation groups: closure enumeration, conjugacy classes,
// centralizers, direct products, and orbits of commuting pairs under
// simultaneous conjugation.  All groups appearing here are tiny (order at
// most a few hundred), so everything is stored explicitly.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ellft {

// A permutation on {0..points-1} as its image array.
using Perm = std::vector<int>;

Perm perm_identity(int points);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(p) = a(b(p))
Perm perm_inverse(const Perm& a);

struct FinGroup {
  int points = 0;
  // All elements, sorted lexicographically; index 0 is the identity.
  std::vector<Perm> elements;
  std::vector<int> inverse;               // element index -> inverse index
  std::vector<std::vector<int>> classes;  // conjugacy classes (sorted members),
                                          // ordered by minimal member; class 0
                                          // is the identity class
  std::vector<int> class_of;              // element index -> class index

  int order() const { return static_cast<int>(elements.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int class_rep(int c) const { return classes[c].front(); }
  int class_size(int c) const { return static_cast<int>(classes[c].size()); }

  int index_of(const Perm& p) const;  // -1 if not an element
  int mul(int a, int b) const;
  int power(int a, long k) const;
  int element_order(int a) const;
  long exponent() const;  // lcm of element orders

  // Index of the class containing elements[a]^k; well defined on classes.
  int class_power(int c, long k) const;

  // Centralizer order of a representative of class c: |G| / |class|.
  int centralizer_order(int c) const;

  // Optional class labels, assigned by callers (catalog / builders).
  std::map<std::string, int> class_labels;
  int labeled_class(const std::string& name) const;  // throws if unknown
  std::string class_name(int c) const;  // first label, or "class<i>"

  // Labels the class of `rep` and pins `rep` as the preferred representative
  // (centralizers and pair bases are taken at this element).
  void label_class(const std::string& name, const Perm& rep);
  std::map<int, int> rep_override;  // class -> preferred element index
  int preferred_rep(int c) const;
};

// Closure of the generators; throws std::runtime_error if the closure
// exceeds `cap` elements.
FinGroup make_group(int points, const std::vector<Perm>& generators,
                    size_t cap = 10000);

// Subgroup generated by the given element indices of G, as a standalone
// group on the same points.
FinGroup make_subgroup(const FinGroup& g, const std::vector<int>& generator_indices);

// Centralizer of elements[e] in G, as a standalone group.
FinGroup centralizer(const FinGroup& g, int e);

// Direct product acting on the disjoint union of the two point sets.
FinGroup direct_product(const FinGroup& a, const FinGroup& b);

// Orbits of commuting ordered pairs (x, y) under simultaneous conjugation.
struct PairOrbit {
  std::pair<int, int> rep;                    // lexicographically minimal member
  std::vector<std::pair<int, int>> members;   // sorted
};

// All orbits, sorted by representative.  The number of orbits equals
// sum over class representatives x of the class number of Z(x).
std::vector<PairOrbit> commuting_pair_orbits(const FinGroup& g);

// Index of the orbit containing (a, b); the pair must commute.
int orbit_of_pair(const std::vector<PairOrbit>& orbits, int a, int b);

}  // namespace ellft
