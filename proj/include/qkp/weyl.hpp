#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qkp/root_system.hpp"

namespace qkp {

/// Finite Weyl group element.  Canonical form is the matrix of the action
/// on the coroot lattice (columns = images of the simple coroots); words
/// and lengths are derived data.
class WeylElt {
 public:
  static WeylElt identity(RootSystemPtr rs);
  static WeylElt simple_reflection(RootSystemPtr rs, int i);
  /// Reflection in the positive root with the given index.
  static WeylElt reflection(RootSystemPtr rs, int pos_root_index);
  static WeylElt from_word(RootSystemPtr rs, const std::vector<int>& word);

  const RootSystemPtr& root_system() const { return rs_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;

  CorootVec apply(const CorootVec& beta) const;
  WeightVec apply(const WeightVec& lambda) const;

  /// ell(w s_i) < ell(w), i.e. w(alpha_i) is a negative root.
  bool has_right_descent(int i) const;
  /// ell(s_i w) < ell(w), i.e. w^{-1}(alpha_i) is a negative root.
  bool has_left_descent(int i) const;

  /// Lexicographically smallest reduced word (greedy smallest left descent).
  const std::vector<int>& word() const;
  std::string to_word_string() const;

  /// Canonical key for ordered containers.
  const std::vector<Int>& key() const { return m_.a; }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }

 private:
  WeylElt(RootSystemPtr rs, IntMatrix m, IntMatrix minv);
  void check_same(const WeylElt& o) const;

  RootSystemPtr rs_;
  IntMatrix m_;      // action on Q^vee
  IntMatrix minv_;   // action of the inverse on Q^vee
  int length_ = 0;
  mutable std::optional<std::vector<int>> word_;
};

/// Element u t_beta of W x| Q^vee with the group law
/// (u,beta)(v,gamma) = (uv, v^{-1}(beta) + gamma); the normalization
/// t_{-theta^vee} = s_theta s_0 fixes this convention.
class AffineWeylElt {
 public:
  AffineWeylElt(WeylElt finite, CorootVec translation);
  static AffineWeylElt identity(RootSystemPtr rs);
  static AffineWeylElt translation(RootSystemPtr rs, CorootVec beta);
  /// i in 0..r: i = 0 is the affine reflection s_theta t_{-theta^vee}.
  static AffineWeylElt simple_affine(RootSystemPtr rs, int i);

  const RootSystemPtr& root_system() const { return finite_.root_system(); }
  const WeylElt& finite() const { return finite_; }
  const CorootVec& translation() const { return beta_; }
  bool is_translation() const { return finite_.is_identity(); }

  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;

  /// Iwahori-Matsumoto length
  ///   ell(u t_beta) = sum_{alpha > 0} | <beta, alpha> + [u(alpha) < 0] |.
  Int length() const;

  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.finite_ == b.finite_ && a.beta_ == b.beta_;
  }
  friend bool operator!=(const AffineWeylElt& a, const AffineWeylElt& b) {
    return !(a == b);
  }

  std::string to_string() const;  // "<word> * t[c1,...,cr]"

 private:
  WeylElt finite_;
  CorootVec beta_;
};

/// Minimal-length representatives of W / W_J with an id lookup.
class CosetSpace {
 public:
  CosetSpace(RootSystemPtr rs, ParabolicSubset J);

  const RootSystemPtr& root_system() const { return rs_; }
  const ParabolicSubset& parabolic() const { return J_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const WeylElt& rep(int id) const { return reps_[id]; }
  const std::vector<WeylElt>& reps() const { return reps_; }

  /// Id of the representative of u W_J.
  int rep_id(const WeylElt& u) const;
  /// Id lookup for an element that is already a minimal representative.
  std::optional<int> find(const WeylElt& u) const;

 private:
  RootSystemPtr rs_;
  ParabolicSubset J_;
  std::vector<WeylElt> reps_;
  std::map<std::vector<Int>, int> index_;
};

using CosetSpacePtr = std::shared_ptr<const CosetSpace>;

/// Shared per-root-system context: enumeration, longest element, cosets.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystemPtr rs);

  const RootSystemPtr& root_system() const { return rs_; }
  /// All elements sorted by (length, word); rank <= 4 only.
  const std::vector<WeylElt>& elements() const;
  const WeylElt& longest() const;
  CosetSpacePtr coset_space(const ParabolicSubset& J) const;

 private:
  RootSystemPtr rs_;
  mutable std::vector<WeylElt> elements_;
  mutable std::optional<WeylElt> longest_;
  mutable std::map<std::vector<int>, CosetSpacePtr> cosets_;
};

/// The unique u' in u W_J with no right descent in J.
WeylElt min_coset_rep(const WeylElt& u, const ParabolicSubset& J);

/// ([u]_J, [beta]_J).
AffineWeylElt project_affine(const AffineWeylElt& w, const ParabolicSubset& J);

/// w is a minimal-length representative of w W (no finite right descent).
bool is_waf_minus(const AffineWeylElt& w);

/// Permutation of the nodes preserving the Cartan matrix.
class DynkinAutomorphism {
 public:
  DynkinAutomorphism(RootSystemPtr rs, std::vector<int> perm);

  int operator()(int i) const { return perm_[i]; }
  const std::vector<int>& perm() const { return perm_; }

  WeylElt apply(const WeylElt& w) const;
  AffineWeylElt apply(const AffineWeylElt& w) const;
  CorootVec apply(const CorootVec& beta) const;
  WeightVec apply(const WeightVec& lambda) const;

 private:
  RootSystemPtr rs_;
  std::vector<int> perm_;
};

/// Parses the element grammar: words over e, s0..s9, t[c1,...,cr]
/// composed with '*', multiplied left to right.  Whitespace is ignored.
AffineWeylElt parse_affine_word(RootSystemPtr rs, std::string_view text);

/// Parse restricted to the finite group (rejects s0 and t parts).
WeylElt parse_finite_word(RootSystemPtr rs, std::string_view text);

}  // namespace qkp
