#pragma once

#include <map>
#include <string>
#include <vector>

#include "starsep/star.hpp"

namespace starsep {

/// Label of a Fock basis function: a pair of sorted multisets of coordinate
/// indices (the z-side and zbar-side of z^{i1..im} zb^{j1..jn} e^{-Phi/h}).
struct FockIndex {
  std::vector<int> upper, lower;

  FockIndex() = default;
  FockIndex(std::vector<int> up, std::vector<int> lo);

  int m() const { return static_cast<int>(upper.size()); }
  int n() const { return static_cast<int>(lower.size()); }
  auto operator<=>(const FockIndex&) const = default;

  std::string str() const;  // canonical "1,2;1" form
  static FockIndex parse(const std::string& text);
};

/// Exact coefficient r * sqrt(rho) with r, rho in Q(h). The radicand is kept
/// in a canonical squarefree form (squarefree integer content times a
/// squarefree primitive polynomial), so equality is decidable componentwise.
/// Addition across distinct radicands is a hard error, never a silent
/// precision loss.
class Radical {
 public:
  Radical() : r_(Rat(0)), rho_(Rat(1)) {}
  Radical(const RationalH& r) : r_(r), rho_(Rat(1)) {}  // NOLINT
  static Radical sqrt_of(const RationalH& rho);

  const RationalH& rational_part() const { return r_; }
  const RationalH& radicand() const { return rho_; }
  bool is_zero() const { return r_.is_zero(); }
  bool is_rational() const { return rho_ == RationalH(Rat(1)); }

  Radical operator*(const Radical& o) const;
  Radical operator*(const RationalH& c) const;
  Radical operator+(const Radical& o) const;  // radicand clash -> error
  Radical operator-() const;
  bool operator==(const Radical& o) const { return r_ == o.r_ && rho_ == o.rho_; }

  RationalH squared() const { return r_ * r_ * rho_; }
  /// Exact substitution h = h0 followed by re-canonicalization.
  Radical eval_at(const Rat& h0) const;

  std::string str() const;

 private:
  Radical(RationalH r, RationalH rho) : r_(std::move(r)), rho_(std::move(rho)) {
    canonicalize();
  }
  void canonicalize();
  RationalH r_, rho_;
};

/// Finite linear combination of Fock basis labels. C is the coefficient
/// domain: Radical for the normalized basis, RationalH for the unnormalized
/// ground-truth basis.
template <class C>
struct FockVec {
  Space space;
  std::map<FockIndex, C> coeffs;

  explicit FockVec(Space s) : space(s) {}
  static FockVec basis(Space s, FockIndex idx) {
    FockVec v(s);
    v.coeffs.emplace(std::move(idx), C(RationalH(Rat(1))));
    return v;
  }
  void add(const FockIndex& idx, const C& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(idx);
    if (it == coeffs.end()) {
      coeffs.emplace(idx, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const FockVec& o) const {
    return space == o.space && coeffs == o.coeffs;
  }
};

using FockVector = FockVec<Radical>;
using FockVectorU = FockVec<RationalH>;

/// One of the 2N creation/annihilation generators acting from one side.
struct Generator {
  enum class Kind { Z, DPhi, Zbar, DbarPhi };
  enum class Side { Left, Right };
  Kind kind;
  int index = 1;
  Side side = Side::Left;

  std::string str() const;
};

/// Symmetrized delta of two equal-size multisets: (number of position
/// bijections)/n!. Equal multisets give prod(multiplicities!)/n!, disjoint
/// ones give 0.
Rat sym_delta(const std::vector<int>& j, const std::vector<int>& k);

/// Star product on the normalized basis, extended bilinearly:
/// M_{i;j} * M_{k;l} = delta_{|j|,|k|} sym_delta(j,k) M_{i;l}.
FockVector fock_mul(const FockVector& u, const FockVector& v);

/// Same product on the unnormalized basis; the structure constant picks up
/// the factor n! alpha_n (beta_n on CH^N) from the stripped normalizations.
FockVectorU fock_mul_unnormalized(const FockVectorU& u, const FockVectorU& v);

/// Structure constant of the unnormalized algebra for contraction size n.
RationalH unnormalized_pairing(SpaceKind kind, int n);

/// Ladder action of a generator on the normalized basis (radical
/// coefficients, formal h).
FockVector ladder_apply(const Generator& g, const FockVector& u);

/// Ladder action on the unnormalized basis; all coefficients stay in Q(h).
FockVectorU ladder_apply_unnormalized(const Generator& g, const FockVectorU& u);

/// Normalization 1/sqrt(m! n! a_m a_n) of the basis function with m upper
/// and n lower indices (alpha on CP^N, beta on CH^N).
Radical normalization(int m, int n, SpaceKind kind);

/// Normalization evaluated at h = 1/L. Errors when the basis element does
/// not exist in M_L (alpha pole for m or n above L on CP^N).
Radical normalization_at(int m, int n, SpaceKind kind, long long L);

/// Ring representative of the unnormalized basis function
/// z^upper zb^lower e^{-Phi/h}.
RingElem fock_ring_repr(Space s, const FockIndex& idx);

/// All Fock indices with m() <= max_upper, n() <= max_lower.
std::vector<FockIndex> fock_basis(int dim, int max_upper, int max_lower);

/// Matrix representation of the left generator actions on the state basis
/// {M_{i;}, |i| <= L} at h = 1/L (CP^N only). Raising out of the top level
/// leaves the representation space and is compressed to zero.
struct MatrixRep {
  std::vector<FockIndex> basis;
  // (kind, coordinate index) -> row-major matrix, entry[row][col]
  std::map<std::pair<Generator::Kind, int>, std::vector<std::vector<Radical>>> mats;
};
MatrixRep matrix_rep(long long L, int dim, SpaceKind kind);

// Structure-constant cache: versioned JSON, keys "<left>|<right>" with
// canonical index strings, values lists of [index, "p/q"] pairs.
std::string cache_dir();
std::string structure_cache_path(SpaceKind kind, int dim, int max_size,
                                 const std::string& hbar);
std::string write_structure_cache(SpaceKind kind, int dim, int max_size,
                                  const std::string& hbar);
/// Loads a cache file and verifies it against freshly computed constants.
/// Returns an empty string when consistent, otherwise a description of the
/// first mismatch.
std::string check_structure_cache(const std::string& path);

}  // namespace starsep
