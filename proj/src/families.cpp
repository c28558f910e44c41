#include "ellft/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellft {

int Family::basis_index(int x_class, int rho) const {
  return offsets_[x_class] + rho;
}

int Family::sigma_index(int x_class, int z_class) const {
  return offsets_[x_class] + z_class;
}

std::string Family::basis_label(int index) const {
  const BasisEntry& e = m_basis_[index];
  return "(" + gamma_->class_name(e.x_class) + "," +
         cents_[e.x_class]->table.char_name(e.rho) + ")";
}

int Family::resolve_y(int x_class, const std::string& y_label) const {
  const Cent& c = *cents_[x_class];
  auto it = c.group.class_labels.find(y_label);
  if (it != c.group.class_labels.end()) return it->second;
  // Fall back to a gamma class label: the y-class is the unique class of
  // Z(x) whose members lie in that gamma class.
  int gy = gamma_->labeled_class(y_label);
  int found = -1;
  for (int zc = 0; zc < c.group.num_classes(); ++zc) {
    int e = gamma_->index_of(c.group.elements[c.group.class_rep(zc)]);
    if (gamma_->class_of[e] != gy) continue;
    if (found >= 0)
      throw std::runtime_error("family " + name + ": label '" + y_label +
                               "' is ambiguous inside Z(" +
                               gamma_->class_name(x_class) + ")");
    found = zc;
  }
  if (found < 0)
    throw std::runtime_error("family " + name + ": label '" + y_label +
                             "' does not meet Z(" +
                             gamma_->class_name(x_class) + ")");
  return found;
}

Family build_family(const std::string& name, const FamilySpec& spec) {
  Family f;
  f.name = name;
  f.gamma_ = spec.gamma;
  f.delta_twisted = spec.delta_twisted;
  const FinGroup& g = *f.gamma_;

  if (f.delta_twisted &&
      !(g.order() == 2 && g.num_classes() == 2))
    throw std::invalid_argument("family " + name +
                                ": delta twist requires gamma = C2");

  // Build centralizer groups and tables per class, with catalog labels.
  for (int x = 0; x < g.num_classes(); ++x) {
    auto cent_ptr = std::make_unique<Family::Cent>();
    cent_ptr->rep = g.preferred_rep(x);
    cent_ptr->group = centralizer(g, cent_ptr->rep);
    // Locate label data: any label naming this class.
    const CentralizerLabels* labels = nullptr;
    for (const auto& [lbl, cls] : g.class_labels) {
      if (cls != x) continue;
      auto it = spec.centralizers.find(lbl);
      if (it != spec.centralizers.end()) {
        labels = &it->second;
        break;
      }
    }
    if (labels)
      for (const auto& [lname, perm] : labels->class_labels)
        cent_ptr->group.label_class(lname, perm);
    cent_ptr->group.class_labels.emplace("1", 0);
    cent_ptr->table = character_table(cent_ptr->group);
    if (labels) resolve_char_labels(cent_ptr->table, labels->chars);
    cent_ptr->table.char_labels.emplace("1", 0);

    f.offsets_.push_back(static_cast<int>(f.m_basis_.size()));
    for (int rho = 0; rho < cent_ptr->table.num_chars(); ++rho)
      f.m_basis_.push_back({x, rho});
    f.cents_.push_back(std::move(cent_ptr));
  }

  if (f.m_basis_.size() != commuting_pair_orbits(g).size())
    throw std::logic_error("family " + name +
                           ": |M(Gamma)| does not match pair-orbit count");

  const int n = f.size();

  // Change of basis B: column sigma(x, z-class) has entries conj(rho(z)) on
  // the rows (x, rho).
  CycMat b(n, n);
  for (int x = 0; x < g.num_classes(); ++x) {
    const CharTable& t = f.cents_[x]->table;
    for (int zc = 0; zc < t.num_chars(); ++zc)
      for (int rho = 0; rho < t.num_chars(); ++rho)
        b.at(f.offsets_[x] + rho, f.sigma_index(x, zc)) =
            t.value(rho, zc).conj();
  }

  // Swap-with-sign in sigma coordinates: sigma(x,y) -> Delta(x,y) sigma(y,x).
  CycMat p(n, n);
  for (int x = 0; x < g.num_classes(); ++x) {
    const Family::Cent& cx = *f.cents_[x];
    for (int zc = 0; zc < cx.group.num_classes(); ++zc) {
      int u = cx.rep;  // gamma element for x
      int v = g.index_of(cx.group.elements[cx.group.class_rep(zc)]);
      int x2 = g.class_of[v];
      int w = g.preferred_rep(x2);
      // Conjugate (u, v) so the second coordinate becomes the preferred
      // representative of its class.
      int u2 = -1;
      for (int h = 0; h < g.order(); ++h) {
        if (g.mul(g.mul(h, v), g.inverse[h]) != w) continue;
        u2 = g.mul(g.mul(h, u), g.inverse[h]);
        break;
      }
      if (u2 < 0) throw std::logic_error("class representative conjugation failed");
      const Family::Cent& cy = *f.cents_[x2];
      int z2 = cy.group.class_of[cy.group.index_of(g.elements[u2])];
      // Delta = -1 exactly when the twist is on and exactly one of the two
      // coordinates is the nontrivial class.
      bool flip = f.delta_twisted && ((x != 0) != (x2 != 0));
      p.at(f.sigma_index(x2, z2), f.sigma_index(x, zc)) =
          flip ? CycNum(-1) : CycNum(1);
    }
  }

  f.b_ = b;
  f.b_inv_ = b.inverse();  // throws if the sigma vectors are not a basis
  f.ft_ = f.b_ * p * f.b_inv_;

  CycMat id = CycMat::identity(n);
  if (!(f.ft_ * f.ft_ == id))
    throw std::logic_error("family " + name + ": ft is not an involution");
  if (!(f.ft_ * f.ft_.conj_transpose() == id))
    throw std::logic_error("family " + name + ": ft is not unitary");
  return f;
}

bool FamilyVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const CycNum& c) { return c.is_zero(); });
}

namespace {
void check_same_family(const FamilyVector& a, const FamilyVector& b) {
  if (a.family != b.family)
    throw std::invalid_argument("family mismatch in vector arithmetic");
}
}  // namespace

FamilyVector& FamilyVector::operator+=(const FamilyVector& o) {
  check_same_family(*this, o);
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

FamilyVector& FamilyVector::operator-=(const FamilyVector& o) {
  check_same_family(*this, o);
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

FamilyVector& FamilyVector::scale(const CycNum& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

FamilyVector zero_vector(const Family& f) {
  return {&f, CycVec(f.size())};
}

FamilyVector basis_vector(const Family& f, const std::string& x_label,
                          const std::string& rho_label) {
  int x = f.gamma().labeled_class(x_label);
  int rho = f.cent(x).table.labeled_char(rho_label);
  FamilyVector v = zero_vector(f);
  v.coords[f.basis_index(x, rho)] = CycNum(1);
  return v;
}

FamilyVector sigma_xy(const Family& f, const std::string& x_label,
                      const std::string& y_label) {
  int x = f.gamma().labeled_class(x_label);
  int zc = f.resolve_y(x, y_label);
  const CharTable& t = f.cent(x).table;
  FamilyVector v = zero_vector(f);
  for (int rho = 0; rho < t.num_chars(); ++rho)
    v.coords[f.basis_index(x, rho)] = t.value(rho, zc).conj();
  return v;
}

FamilyVector apply_ft(const Family& f, const FamilyVector& v) {
  if (v.family != &f)
    throw std::invalid_argument("apply_ft: vector belongs to another family");
  return {&f, f.ft() * v.coords};
}

bool is_ft_fixed(const Family& f, const FamilyVector& v) {
  return apply_ft(f, v) == v;
}

FamilyVector named_combination(const Family& f,
                               const std::vector<CombinationTerm>& terms) {
  FamilyVector acc = zero_vector(f);
  for (const auto& term : terms) {
    FamilyVector part = term.is_sigma
                            ? sigma_xy(f, term.x, term.y_or_rho)
                            : basis_vector(f, term.x, term.y_or_rho);
    part.scale(term.coeff);
    acc += part;
  }
  return acc;
}

}  // namespace ellft
