#include "ellft/elliptic.hpp"

#include <stdexcept>

namespace ellft {

TorusAction::TorusAction(
    const FinGroup& group, int dim,
    const std::vector<std::pair<Perm, CycMat>>& generator_matrices)
    : group_(&group), dim_(dim) {
  const int n = group.order();
  matrices_.assign(n, CycMat());
  std::vector<bool> known(n, false);
  matrices_[0] = CycMat::identity(dim);
  known[0] = true;

  std::vector<std::pair<int, CycMat>> gens;
  for (const auto& [perm, mat] : generator_matrices) {
    int e = group.index_of(perm);
    if (e < 0)
      throw std::invalid_argument("torus action generator not in group");
    if (mat.rows() != dim || mat.cols() != dim)
      throw std::invalid_argument("torus action matrix has wrong shape");
    gens.emplace_back(e, mat);
  }
  if (gens.empty() && n > 1)
    throw std::invalid_argument("torus action needs generators for a "
                                "nontrivial group");

  // BFS over the Cayley graph; reaching an element twice checks that the
  // generator relations hold in the matrix representation.
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (const auto& [g, mat] : gens) {
        int p = group.mul(e, g);
        CycMat m = matrices_[e] * mat;
        if (known[p]) {
          if (!(m == matrices_[p]))
            throw std::invalid_argument(
                "torus action matrices violate the group relations");
        } else {
          matrices_[p] = std::move(m);
          known[p] = true;
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  for (bool k : known)
    if (!k)
      throw std::invalid_argument(
          "torus action generators do not generate the group");
}

CycNum elliptic_det(const TorusAction& act, int element) {
  if (act.dim() == 0) return CycNum(1);
  return (CycMat::identity(act.dim()) - act.matrix(element)).det();
}

std::vector<int> elliptic_classes(const TorusAction& act) {
  std::vector<int> out;
  const FinGroup& g = act.group();
  for (int c = 0; c < g.num_classes(); ++c)
    if (!elliptic_det(act, g.class_rep(c)).is_zero()) out.push_back(c);
  return out;
}

CycNum elliptic_pairing(const TorusAction& act, const CharTable& t, int chi,
                        int chi_prime) {
  const FinGroup& g = act.group();
  if (t.group != &g)
    throw std::invalid_argument("elliptic_pairing: table is for another group");
  CycNum sum;
  for (int c = 0; c < g.num_classes(); ++c) {
    CycNum d = elliptic_det(act, g.class_rep(c));
    if (d.is_zero()) continue;
    sum += CycNum(static_cast<long>(g.class_size(c))) *
           t.value(chi, c).conj() * t.value(chi_prime, c) * d;
  }
  return sum * CycNum(Rational(1, g.order()));
}

int elliptic_rank(const TorusAction& act) {
  return static_cast<int>(elliptic_classes(act).size());
}

CycMat elliptic_gram(const TorusAction& act, const CharTable& t) {
  const int k = t.num_chars();
  CycMat gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram.at(i, j) = elliptic_pairing(act, t, i, j);
  return gram;
}

VirtualCombination virtual_combination(const CharTable& a_su,
                                       const std::string& h_class_label,
                                       const std::string& u,
                                       const std::string& s) {
  VirtualCombination vc;
  vc.u = u;
  vc.s = s;
  vc.h = h_class_label;
  int h = a_su.group->labeled_class(h_class_label);
  for (int r = 0; r < a_su.num_chars(); ++r) {
    vc.coeffs.emplace_back(r, a_su.value(r, h).conj());
    vc.formal_terms.push_back("pi(" + s + u + "," + a_su.char_name(r) + ")");
  }
  return vc;
}

}  // namespace ellft
