#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkp/root_system.hpp"

namespace qkp {

/// Graded-lexicographic order: total degree first, then lexicographic.
/// Additive, so leading terms are multiplicative.
int graded_lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b);

/// Names of the e^{varpi_i} variables in coefficient text: x, y, z, w.
std::string weight_var_name(int i, int rank);

/// Exact Laurent polynomial in e^{varpi_1},..,e^{varpi_r} (and q when
/// q_mode) with rational coefficients; the group algebra of P.
class GroupAlgElt {
 public:
  struct Key {
    std::vector<Int> wt;
    Int q;  // identically 0 unless q_mode
    bool operator==(const Key& o) const { return wt == o.wt && q == o.q; }
  };
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      int c = graded_lex_cmp(a.wt, b.wt);
      if (c != 0) return c < 0;
      return a.q < b.q;
    }
  };
  using TermMap = std::map<Key, Rat, KeyLess>;

  GroupAlgElt() = default;
  GroupAlgElt(int rank, bool q_mode) : rank_(rank), q_mode_(q_mode) {}

  static GroupAlgElt zero(int rank, bool q_mode = false) { return GroupAlgElt(rank, q_mode); }
  static GroupAlgElt constant(int rank, Rat c, bool q_mode = false);
  static GroupAlgElt one(int rank, bool q_mode = false) {
    return constant(rank, Rat(1), q_mode);
  }
  /// e^{lambda} q^{qexp}.
  static GroupAlgElt monomial(WeightVec lambda, Int qexp = 0, Rat coeff = Rat(1),
                              bool q_mode = false);

  int rank() const { return rank_; }
  bool q_mode() const { return q_mode_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;

  GroupAlgElt& operator+=(const GroupAlgElt& o);
  GroupAlgElt& operator-=(const GroupAlgElt& o);
  friend GroupAlgElt operator+(GroupAlgElt a, const GroupAlgElt& b) { return a += b; }
  friend GroupAlgElt operator-(GroupAlgElt a, const GroupAlgElt& b) { return a -= b; }
  GroupAlgElt operator-() const;
  GroupAlgElt operator*(const GroupAlgElt& o) const;
  GroupAlgElt operator*(const Rat& c) const;

  friend bool operator==(const GroupAlgElt& a, const GroupAlgElt& b) {
    return a.rank_ == b.rank_ && a.q_mode_ == b.q_mode_ && a.terms_ == b.terms_;
  }

  /// Multiply by e^{lambda} q^{k} in place.
  void shift(const WeightVec& lambda, const Int& qexp = 0);

  /// q |-> 1 (drops to q_mode = false).
  GroupAlgElt q_to_one() const;
  /// Lift into the q-ring.
  GroupAlgElt to_q_mode() const;
  /// e^{lambda} |-> e^{sigma(lambda)} for a node permutation.
  GroupAlgElt permute_weights(const std::vector<int>& perm) const;

  /// Fixed-order text: terms "c * x^a * y^b * q^k" joined by " + ".
  std::string render() const;
  static GroupAlgElt parse(int rank, bool q_mode, std::string_view text);

  void add_term(Key key, Rat coeff);

 private:
  void check_compatible(const GroupAlgElt& o) const;

  int rank_ = 0;
  bool q_mode_ = false;
  TermMap terms_;
};

}  // namespace qkp
