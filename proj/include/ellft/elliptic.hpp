#pragma once

// The elliptic pairing on the representation ring of a finite group acting
// on a torus Lie algebra: det(1 - h) criterion for elliptic elements, the
// twisted hermitian pairing, and the coefficient vectors of virtual
// combinations pi(u,s,h).

#include <string>
#include <vector>

#include "ellft/chartab.hpp"
#include "ellft/cyclo.hpp"
#include "ellft/groups.hpp"
#include "ellft/linalg.hpp"

namespace ellft {

class TorusAction {
public:
  // Generators with their matrices; the action of every group element is
  // derived by composition, and consistency (the generators' relations) is
  // verified exactly during construction.  dim = 0 gives the empty action.
  TorusAction(const FinGroup& group, int dim,
              const std::vector<std::pair<Perm, CycMat>>& generator_matrices);

  const FinGroup& group() const { return *group_; }
  int dim() const { return dim_; }
  const CycMat& matrix(int element) const { return matrices_[element]; }

private:
  const FinGroup* group_;
  int dim_;
  std::vector<CycMat> matrices_;  // per element index
};

// det(I - M(h)); 1 for dim = 0.
CycNum elliptic_det(const TorusAction& act, int element);

// Classes on which elliptic_det is nonzero (all classes when dim = 0).
std::vector<int> elliptic_classes(const TorusAction& act);

// (chi, chi')_el = 1/|A| sum_h conj(chi(h)) chi'(h) det(1 - h).
CycNum elliptic_pairing(const TorusAction& act, const CharTable& t, int chi,
                        int chi_prime);

// Number of elliptic classes; also the rank of the Gram matrix of the
// elliptic pairing (the dimension of the elliptic quotient space).
int elliptic_rank(const TorusAction& act);

// Gram matrix of the elliptic pairing on the rows of t.
CycMat elliptic_gram(const TorusAction& act, const CharTable& t);

// pi(u,s,h) = sum_phi conj(phi(h)) pi(su,phi): one term per irreducible
// character of A_su, with its exact coefficient and an opaque formal symbol.
struct VirtualCombination {
  std::string u, s, h;
  std::vector<std::pair<int, CycNum>> coeffs;  // (char row, conj(phi(h)))
  std::vector<std::string> formal_terms;       // "pi(<s><u>,<char name>)"
};

VirtualCombination virtual_combination(const CharTable& a_su,
                                       const std::string& h_class_label,
                                       const std::string& u, const std::string& s);

}  // namespace ellft
