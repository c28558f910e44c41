#pragma once

// Lusztig families: the pair basis M(Gamma) of (x-class, rho in Irr(Z(x))),
// the sigma(F,x,y) virtual characters, and the nonabelian Fourier transform,
// constructed as the unique linear involution with
// FT(sigma(F,x,y)) = Delta(x,y) sigma(F,y,x).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ellft/chartab.hpp"
#include "ellft/cyclo.hpp"
#include "ellft/groups.hpp"
#include "ellft/linalg.hpp"

namespace ellft {

// Label data for the centralizer of one x-class: class representatives (as
// permutations inside Z(x)) and character fingerprints against them.
struct CentralizerLabels {
  std::map<std::string, Perm> class_labels;
  std::map<std::string, CharFingerprint> chars;
};

struct FamilySpec {
  std::shared_ptr<const FinGroup> gamma;  // class labels already resolved
  bool delta_twisted = false;
  // Keyed by a class label of gamma; classes without an entry get no extra
  // labels beyond the automatic "1".
  std::map<std::string, CentralizerLabels> centralizers;
};

class Family {
public:
  struct BasisEntry {
    int x_class;  // class index in gamma
    int rho;      // row in the centralizer table of that class
  };

  struct Cent {
    FinGroup group;  // centralizer of the preferred representative
    CharTable table;
    int rep;  // element index in gamma
  };

  std::string name;
  bool delta_twisted = false;
  int b_f = -1;  // informational only

  const FinGroup& gamma() const { return *gamma_; }
  int size() const { return static_cast<int>(m_basis_.size()); }
  const std::vector<BasisEntry>& m_basis() const { return m_basis_; }
  const Cent& cent(int x_class) const { return *cents_[x_class]; }
  const CycMat& ft() const { return ft_; }

  int basis_index(int x_class, int rho) const;
  // Column of sigma(x, y) in the sigma basis (same offsets: within x, the
  // centralizer's class order).
  int sigma_index(int x_class, int z_class) const;

  std::string basis_label(int index) const;  // "(x,rho)" display label

  // Resolves a y-label inside Z(x): first as a labeled class of Z(x), then
  // as a gamma class label (must meet a unique Z(x)-class).
  int resolve_y(int x_class, const std::string& y_label) const;

  const CycMat& sigma_to_rho() const { return b_; }        // columns: sigma vectors
  const CycMat& rho_to_sigma() const { return b_inv_; }

private:
  friend Family build_family(const std::string& name, const FamilySpec& spec);
  std::shared_ptr<const FinGroup> gamma_;
  std::vector<std::unique_ptr<Cent>> cents_;  // per gamma class
  std::vector<BasisEntry> m_basis_;
  std::vector<int> offsets_;  // per gamma class, start index in m_basis
  CycMat b_, b_inv_, ft_;
};

// Builds the family and its Fourier matrix; verifies |m_basis| equals the
// number of commuting-pair orbits of gamma, that the sigma vectors form a
// basis, and that ft is an exact unitary involution.
Family build_family(const std::string& name, const FamilySpec& spec);

struct FamilyVector {
  const Family* family = nullptr;
  CycVec coords;  // over m_basis

  bool operator==(const FamilyVector& o) const = default;
  bool is_zero() const;
  FamilyVector& operator+=(const FamilyVector& o);
  FamilyVector& operator-=(const FamilyVector& o);
  FamilyVector& scale(const CycNum& s);
};

FamilyVector zero_vector(const Family& f);
FamilyVector basis_vector(const Family& f, const std::string& x_label,
                          const std::string& rho_label);
FamilyVector sigma_xy(const Family& f, const std::string& x_label,
                      const std::string& y_label);
FamilyVector apply_ft(const Family& f, const FamilyVector& v);
bool is_ft_fixed(const Family& f, const FamilyVector& v);

// One term of a named combination: coeff * sigma(x,y) ("xy" basis) or
// coeff * e_(x,rho) ("xrho" basis).
struct CombinationTerm {
  bool is_sigma = false;
  std::string x, y_or_rho;
  CycNum coeff;
};

FamilyVector named_combination(const Family& f,
                               const std::vector<CombinationTerm>& terms);

}  // namespace ellft
