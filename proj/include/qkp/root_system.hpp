#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qkp/rational.hpp"

namespace qkp {

/// One of the finite irreducible families A..G with an admissible rank.
struct CartanType {
  char family = 'A';
  int rank = 0;

  CartanType() = default;
  CartanType(char f, int r);

  /// Parses "A2", "B2", "E6", ...
  static CartanType parse(std::string_view text);
  std::string to_string() const { return family + std::to_string(rank); }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Element of the weight lattice P in fundamental-weight coordinates.
struct WeightVec {
  std::vector<Int> coords;

  WeightVec() = default;
  explicit WeightVec(std::vector<Int> c) : coords(std::move(c)) {}
  static WeightVec zero(int rank) { return WeightVec(std::vector<Int>(rank)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool is_dominant() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  WeightVec operator-() const;
  WeightVec operator*(const Int& k) const;
  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec&, const WeightVec&) = default;

  std::string to_string() const;
};

/// Element of the coroot lattice Q^vee in simple-coroot coordinates.
struct CorootVec {
  std::vector<Int> coords;

  CorootVec() = default;
  explicit CorootVec(std::vector<Int> c) : coords(std::move(c)) {}
  static CorootVec zero(int rank) { return CorootVec(std::vector<Int>(rank)); }
  static CorootVec simple(int rank, int i);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  /// All coordinates >= 0.
  bool is_nonnegative() const;

  CorootVec& operator+=(const CorootVec& o);
  CorootVec& operator-=(const CorootVec& o);
  friend CorootVec operator+(CorootVec a, const CorootVec& b) { return a += b; }
  friend CorootVec operator-(CorootVec a, const CorootVec& b) { return a -= b; }
  CorootVec operator-() const;
  CorootVec operator*(const Int& k) const;
  friend bool operator==(const CorootVec&, const CorootVec&) = default;
  friend auto operator<=>(const CorootVec&, const CorootVec&) = default;

  std::string to_string() const;
};

/// Subset J of the node set {0,..,r-1} (0-based internally; the text layer
/// uses 1-based node names).
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  ParabolicSubset(std::vector<int> members, int rank);
  static ParabolicSubset empty(int rank) { return ParabolicSubset({}, rank); }
  static ParabolicSubset full(int rank);

  int rank() const { return rank_; }
  bool contains(int i) const { return mask_[i]; }
  const std::vector<int>& members() const { return members_; }
  std::vector<int> complement() const;
  bool is_subset_of(const ParabolicSubset& other) const;
  ParabolicSubset unite(const ParabolicSubset& other) const;

  friend bool operator==(const ParabolicSubset& a, const ParabolicSubset& b) {
    return a.rank_ == b.rank_ && a.members_ == b.members_;
  }

  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<int> members_;      // sorted
  std::vector<char> mask_;
};

/// Integer matrix acting on lattice coordinates, stored row-major.
struct IntMatrix {
  int n = 0;
  std::vector<Int> a;  // n*n

  static IntMatrix identity(int n);
  const Int& at(int i, int j) const { return a[i * n + j]; }
  Int& at(int i, int j) { return a[i * n + j]; }
  IntMatrix mul(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

/// Cartan data for one irreducible type.
///
/// Convention: cartan(i, j) = <alpha_j^vee, alpha_i>, i.e. row i of the
/// Cartan matrix lists the fundamental-weight coordinates of the simple
/// root alpha_i.  Under this convention the pairing of a CorootVec with a
/// WeightVec is the plain dot product of coordinates.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> make(CartanType type);

  CartanType type() const { return type_; }
  int rank() const { return type_.rank; }
  const Int& cartan(int i, int j) const { return cartan_.at(i, j); }

  struct PosRoot {
    std::vector<Int> root;   // simple-root coordinates
    CorootVec coroot;        // simple-coroot coordinates
    WeightVec weight;        // fundamental-weight coordinates
  };
  const std::vector<PosRoot>& positive_roots() const { return positive_; }
  int highest_root_index() const { return theta_index_; }
  const PosRoot& theta() const { return positive_[theta_index_]; }

  WeightVec fundamental_weight(int i) const;
  CorootVec simple_coroot(int i) const { return CorootVec::simple(rank(), i); }
  /// alpha_i in fundamental-weight coordinates (row i of the Cartan matrix).
  WeightVec simple_root_weight(int i) const;

  /// <beta, lambda>; both sides must belong to this root system's rank.
  Int pairing(const CorootVec& beta, const WeightVec& lambda) const;
  /// <beta, alpha_i> for the simple root alpha_i.
  Int pairing_simple_root(const CorootVec& beta, int i) const;

  /// [beta]_J: zero out the alpha_i^vee-coordinates for i in J.
  CorootVec project_coroot(const CorootVec& beta, const ParabolicSubset& J) const;
  /// lambda restricted to P_J (zero out J-coordinates); used by quotients.
  WeightVec project_weight(const WeightVec& lambda, const ParabolicSubset& J) const;

  /// true iff <beta, alpha_i> < 0 for every simple root.
  bool is_strictly_antidominant(const CorootVec& beta) const;

  /// Matrix of s_i on Q^vee (simple-coroot coordinates).
  const IntMatrix& coroot_reflection(int i) const { return coroot_refl_[i]; }
  /// Matrix of s_i on P (fundamental-weight coordinates).
  const IntMatrix& weight_reflection(int i) const { return weight_refl_[i]; }

  void check_rank(int r, const char* what) const;

 private:
  explicit RootSystem(CartanType type);

  CartanType type_;
  IntMatrix cartan_;
  std::vector<PosRoot> positive_;
  int theta_index_ = -1;
  std::vector<IntMatrix> coroot_refl_;
  std::vector<IntMatrix> weight_refl_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace qkp
