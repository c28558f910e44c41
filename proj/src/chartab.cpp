#include "ellft/chartab.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace ellft {
namespace {

// ---- arithmetic in F_p (p < 2^31, so products fit in uint64) ----

using u64 = std::uint64_t;

u64 add_p(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_p(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mul_p(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pow_p(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_p(r, a, p);
    a = mul_p(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_p(u64 a, u64 p) { return pow_p(a % p, p - 2, p); }

using FpVec = std::vector<u64>;
using FpMat = std::vector<FpVec>;  // row major

FpVec mat_apply(const FpMat& m, const FpVec& v, u64 p) {
  FpVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      r[i] = add_p(r[i], mul_p(m[i][j], v[j], p), p);
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(FpMat& m, u64 p) {
  std::vector<int> pivots;
  size_t row = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    u64 iv = inv_p(m[row][col], p);
    for (auto& x : m[row]) x = mul_p(x, iv, p);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      u64 f = m[r][col];
      for (size_t c = 0; c < cols; ++c)
        m[r][c] = sub_p(m[r][c], mul_p(f, m[row][c], p), p);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of the nullspace of m (as row vectors).
FpMat nullspace(FpMat m, u64 p) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  FpMat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVec v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < m.size(); ++r)
      v[pivots[r]] = sub_p(0, m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves x * basis = target (basis rows span a subspace containing target);
// returns coordinates of target in the given basis.
FpVec coords_in_basis(const FpMat& basis, const FpVec& target, u64 p) {
  size_t d = basis.size(), n = target.size();
  FpMat aug(d, FpVec(n + d, 0));
  // Transposed system: columns are basis vectors.  Solve with augmented rref.
  FpMat sys(n, FpVec(d + 1, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < d; ++j) sys[i][j] = basis[j][i];
    sys[i][d] = target[i];
  }
  std::vector<int> pivots = rref(sys, p);
  FpVec x(d, 0);
  for (size_t r = 0; r < sys.size(); ++r) {
    if (pivots[r] == static_cast<int>(d))
      throw std::logic_error("coords_in_basis: inconsistent system");
    x[pivots[r]] = sys[r][d];
  }
  (void)aug;
  return x;
}

u64 find_prime(long exponent, long order) {
  // Smallest p = 1 (mod exponent) with p > 2*order.
  for (u64 p = static_cast<u64>(exponent) + 1;; p += exponent) {
    if (p <= 2 * static_cast<u64>(order)) continue;
    bool prime = p > 1;
    for (u64 d = 2; d * d <= p && prime; ++d)
      if (p % d == 0) prime = false;
    if (prime) return p;
  }
}

u64 primitive_root(u64 p) {
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (pow_p(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

long CharTable::degree(int r) const {
  const CycNum& v = rows[r][0];
  if (!v.is_rational())
    throw std::logic_error("character degree is not rational");
  const Rational& q = v.rational_part();
  if (denominator(q) != 1) throw std::logic_error("character degree not integral");
  return static_cast<long>(numerator(q));
}

int CharTable::labeled_char(const std::string& name) const {
  auto it = char_labels.find(name);
  if (it == char_labels.end())
    throw std::runtime_error("unknown character label: " + name);
  return it->second;
}

std::string CharTable::char_name(int r) const {
  for (const auto& [name, idx] : char_labels)
    if (idx == r) return name;
  return "chi" + std::to_string(r);
}

CharTable character_table(const FinGroup& g) {
  const int k = g.num_classes();
  const long n = g.order();
  const long e = g.exponent();
  const u64 p = find_prime(e, n);

  // Class-algebra structure constants: a[i][j][c] = #{(x,y) in C_i x C_j :
  // x*y = rep(C_c)}.
  std::vector<std::vector<std::vector<long>>> a(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (int c = 0; c < k; ++c) {
    int z = g.class_rep(c);
    for (int x = 0; x < g.order(); ++x) {
      int y = g.mul(g.inverse[x], z);
      ++a[g.class_of[x]][g.class_of[y]][c];
    }
  }

  // Split F_p^k into common eigenspaces of the class matrices M_i.
  std::vector<FpMat> subspaces;
  {
    FpMat full(k, FpVec(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    subspaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    // (M_i omega)_j = sum_k a[i][j][k] omega_k = omega_i * omega_j.
    FpMat mi(k, FpVec(k, 0));
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < k; ++c) mi[j][c] = static_cast<u64>(a[i][j][c]) % p;
    std::vector<FpMat> refined;
    for (const auto& basis : subspaces) {
      if (basis.size() == 1) {
        refined.push_back(basis);
        continue;
      }
      const size_t d = basis.size();
      // Matrix of M_i restricted to the subspace, in the given basis.
      FpMat act(d, FpVec(d, 0));
      for (size_t b = 0; b < d; ++b) {
        FpVec img = mat_apply(mi, basis[b], p);
        FpVec co = coords_in_basis(basis, img, p);
        for (size_t c2 = 0; c2 < d; ++c2) act[c2][b] = co[c2];
      }
      // Eigen-split by scanning candidate eigenvalues.
      size_t found = 0;
      for (u64 lam = 0; lam < p && found < d; ++lam) {
        FpMat shifted = act;
        for (size_t r = 0; r < d; ++r) shifted[r][r] = sub_p(shifted[r][r], lam, p);
        FpMat ns = nullspace(std::move(shifted), p);
        if (ns.empty()) continue;
        FpMat sub;
        for (const auto& co : ns) {
          FpVec v(k, 0);
          for (size_t b = 0; b < d; ++b)
            for (int c2 = 0; c2 < k; ++c2)
              v[c2] = add_p(v[c2], mul_p(co[b], basis[b][c2], p), p);
          sub.push_back(std::move(v));
        }
        found += sub.size();
        refined.push_back(std::move(sub));
      }
      if (found != d)
        throw std::runtime_error("class matrix eigenspaces do not fill subspace");
    }
    subspaces = std::move(refined);
    bool all_one = std::all_of(subspaces.begin(), subspaces.end(),
                               [](const FpMat& s) { return s.size() == 1; });
    if (all_one) break;
  }
  if (static_cast<int>(subspaces.size()) != k)
    throw std::runtime_error("class algebra did not split into " +
                             std::to_string(k) + " eigenspaces");

  // Central characters: normalize each eigenvector so its identity-class
  // entry is 1, i.e. omega_c = |C_c| chi(g_c) / chi(1) mod p.
  std::vector<FpVec> omegas;
  for (auto& s : subspaces) {
    FpVec v = s[0];
    if (v[0] == 0) throw std::runtime_error("eigenvector vanishes on identity class");
    u64 f = inv_p(v[0], p);
    for (auto& x : v) x = mul_p(x, f, p);
    omegas.push_back(std::move(v));
  }

  // Inverse-class map.
  std::vector<int> inv_class(k);
  for (int c = 0; c < k; ++c) inv_class[c] = g.class_power(c, -1);

  // Precompute zeta-power tables for the lift: z has order e in F_p.
  const u64 root = pow_p(primitive_root(p), (p - 1) / static_cast<u64>(e), p);
  std::vector<u64> zpow(e);
  for (long t = 0; t < e; ++t) zpow[t] = pow_p(root, static_cast<u64>(t), p);
  std::vector<CycNum> zeta_e(e);
  for (long t = 0; t < e; ++t)
    zeta_e[t] = CycNum::root_of_unity(static_cast<int>(e), t);

  CharTable table;
  table.group = &g;
  for (const FpVec& omega : omegas) {
    // chi(1)^2 = |G| / sum_c omega_c omega_{c^-1} / |C_c|  (mod p); the true
    // degree is the unique d <= sqrt(|G|) with matching square mod p.
    u64 s = 0;
    for (int c = 0; c < k; ++c)
      s = add_p(s,
                mul_p(mul_p(omega[c], omega[inv_class[c]], p),
                      inv_p(static_cast<u64>(g.class_size(c)), p), p),
                p);
    u64 target = mul_p(static_cast<u64>(n) % p, inv_p(s, p), p);
    long deg = -1;
    for (long d = 1; d * d <= n; ++d)
      if (pow_p(static_cast<u64>(d), 2, p) == target) {
        deg = d;
        break;
      }
    if (deg < 0) throw std::runtime_error("could not recover character degree");

    // theta(c) = chi(g_c) mod p.
    FpVec theta(k);
    for (int c = 0; c < k; ++c)
      theta[c] = mul_p(mul_p(static_cast<u64>(deg) % p, omega[c], p),
                       inv_p(static_cast<u64>(g.class_size(c)), p), p);

    // Lift each value: chi(g_c) = sum_t m_t zeta_e^t with
    // m_t = e^-1 sum_l theta(g_c^l) z^{-tl}, each m_t an eigenvalue
    // multiplicity in [0, deg].
    std::vector<CycNum> row(k);
    const u64 einv = inv_p(static_cast<u64>(e) % p, p);
    for (int c = 0; c < k; ++c) {
      std::vector<u64> theta_pow(e);
      for (long l = 0; l < e; ++l) theta_pow[l] = theta[g.class_power(c, l)];
      CycNum val;
      for (long t = 0; t < e; ++t) {
        u64 m = 0;
        for (long l = 0; l < e; ++l)
          m = add_p(m, mul_p(theta_pow[l], zpow[((e - t) * l) % e], p), p);
        m = mul_p(m, einv, p);
        if (m > static_cast<u64>(deg))
          throw std::runtime_error("lifted multiplicity out of range");
        if (m != 0) val += CycNum(static_cast<long>(m)) * zeta_e[t];
      }
      row[c] = val;
    }
    if (row[0] != CycNum(deg))
      throw std::runtime_error("lifted degree mismatch");
    table.rows.push_back(std::move(row));
  }

  // Canonical row order: degree ascending, then descending
  // coefficient-lexicographic on the value vector (puts the trivial
  // character first among degree-1 rows).
  std::sort(table.rows.begin(), table.rows.end(),
            [](const std::vector<CycNum>& x, const std::vector<CycNum>& y) {
              if (x[0] != y[0]) return x[0] < y[0];
              for (size_t i = 0; i < x.size(); ++i)
                if (x[i] != y[i]) return y[i] < x[i];
              return false;
            });

  std::string detail;
  if (!check_orthogonality(table, &detail))
    throw std::runtime_error("character table fails orthogonality: " + detail);
  return table;
}

bool check_orthogonality(const CharTable& t, std::string* detail) {
  const FinGroup& g = *t.group;
  const int k = g.num_classes();
  if (t.num_chars() != k) {
    if (detail) *detail += "number of characters differs from class number";
    return false;
  }
  bool ok = true;
  CycNum order(static_cast<long>(g.order()));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) {
      CycNum sum;
      for (int c = 0; c < k; ++c)
        sum += CycNum(static_cast<long>(g.class_size(c))) * t.value(r, c) *
               t.value(s, c).conj();
      CycNum expect = (r == s) ? order : CycNum();
      if (sum != expect) {
        ok = false;
        if (detail) {
          std::ostringstream os;
          os << "row orthogonality fails for characters " << r << "," << s
             << ": got " << sum << " expected " << expect << "; ";
          *detail += os.str();
        }
      }
    }
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      CycNum sum;
      for (int r = 0; r < k; ++r) sum += t.value(r, c) * t.value(r, d).conj();
      CycNum expect = (c == d)
                          ? CycNum(static_cast<long>(g.centralizer_order(c)))
                          : CycNum();
      if (sum != expect) {
        ok = false;
        if (detail) {
          std::ostringstream os;
          os << "column orthogonality fails for classes " << c << "," << d
             << ": got " << sum << " expected " << expect << "; ";
          *detail += os.str();
        }
      }
    }
  return ok;
}

int find_char(const CharTable& t, const CharFingerprint& fp) {
  int match = -1;
  for (int r = 0; r < t.num_chars(); ++r) {
    if (fp.degree >= 0 && t.degree(r) != fp.degree) continue;
    bool good = true;
    for (const auto& [label, val] : fp.values)
      if (t.value(r, t.group->labeled_class(label)) != val) {
        good = false;
        break;
      }
    if (!good) continue;
    if (match >= 0)
      throw std::runtime_error("character fingerprint matches several rows");
    match = r;
  }
  if (match < 0) throw std::runtime_error("character fingerprint matches no row");
  return match;
}

void resolve_char_labels(CharTable& t,
                         const std::map<std::string, CharFingerprint>& fps) {
  for (const auto& [name, fp] : fps) {
    try {
      t.char_labels[name] = find_char(t, fp);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("character label '" + name + "': " + e.what());
    }
  }
}

}  // namespace ellft
