#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "qkp/novikov.hpp"
#include "qkp/weyl.hpp"

namespace qkp {

/// Descriptor of a free module with basis (coset rep) x Q^{beta}.  The
/// same data underlies the quantum-K basis [O_{B_J(u)}] Q^beta and the
/// semi-infinite basis [O_{Q_J(u t_beta)}]; `basis` records which reading
/// is active (the dictionary Psi_J toggles it).
struct ModuleSpace {
  enum class Basis { kQuantum, kSemiInfinite };

  RootSystemPtr rs;
  ParabolicSubset J;
  CosetSpacePtr coset;
  bool q_mode = false;
  bool localized = false;
  Basis basis = Basis::kQuantum;

  static std::shared_ptr<const ModuleSpace> make(RootSystemPtr rs, ParabolicSubset J,
                                                 bool q_mode = false, bool localized = false,
                                                 Basis basis = Basis::kQuantum);

  int dim() const { return coset->size(); }
  RingDesc coeff_desc() const { return RingDesc{rs->rank(), J, localized, q_mode}; }
  bool same_space(const ModuleSpace& o) const;
};

using ModuleSpacePtr = std::shared_ptr<const ModuleSpace>;

/// Finite formal sum  sum coeff_{u,beta} [basis(u)] Q^{beta}.
class KClass {
 public:
  struct Key {
    int rep = 0;
    std::vector<Int> nov;
    bool operator==(const Key& o) const { return rep == o.rep && nov == o.nov; }
  };
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.rep != b.rep) return a.rep < b.rep;
      return graded_lex_cmp(a.nov, b.nov) < 0;
    }
  };
  using TermMap = std::map<Key, GroupAlgElt, KeyLess>;

  KClass() = default;
  explicit KClass(ModuleSpacePtr space) : space_(std::move(space)) {}

  /// coeff * [O(rep)] Q^{beta}.
  static KClass basis_class(ModuleSpacePtr space, int rep_id, const CorootVec& beta,
                            GroupAlgElt coeff);
  static KClass basis_class(ModuleSpacePtr space, int rep_id);
  static KClass identity_class(ModuleSpacePtr space);

  const ModuleSpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int rep_id, const CorootVec& beta, const GroupAlgElt& coeff);

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  KClass operator-() const;
  /// Scalar action of the group algebra.
  KClass scale(const GroupAlgElt& c) const;
  KClass scale(const Rat& c) const;
  /// Multiplication by Q^{beta}.
  KClass novikov_shift(const CorootVec& beta) const;

  friend bool operator==(const KClass& a, const KClass& b) {
    return a.terms_ == b.terms_;
  }

  GroupAlgElt coeff(int rep_id, const CorootVec& beta) const;
  /// Terms with Novikov exponent zero (the classical part).
  KClass novikov_zero_part() const;

  /// Coordinate vector over the scalar ring, entry per coset rep.
  std::vector<FracElt> to_vector() const;
  static KClass from_vector(ModuleSpacePtr space, const std::vector<FracElt>& v);
  static KClass from_poly_vector(ModuleSpacePtr space, const std::vector<NovikovPoly>& v);

  /// Semi-infinite reading of the terms as affine Weyl elements.
  std::vector<std::pair<AffineWeylElt, GroupAlgElt>> affine_terms() const;

  std::string render() const;
  nlohmann::ordered_json to_json() const;
  static KClass from_json(const nlohmann::ordered_json& doc, bool q_mode = false);

 private:
  ModuleSpacePtr space_;
  TermMap terms_;
};

/// Psi_J: relabel between [O_{B_J(u)}] Q^beta and [O_{Q_J(u t_beta)}].
/// Coefficients are untouched; the two directions are inverse bijections.
KClass psi_dictionary(const KClass& x, ModuleSpace::Basis direction);

/// phi_J: [O(u)] Q^beta -> [O([u]_{J'})] Q^{[beta]_{J'}}, defined for
/// J subset of J'.
KClass phi_project(const KClass& x, const ParabolicSubset& target_J);

/// Membership in K_i = ker phi_{{i}}.
bool k_i_membership(const KClass& x, int i);

/// q^{Q_i d/d Q_i}: multiplies each (u, beta) term by q^{<beta, varpi_i>}.
KClass q_shift(const KClass& x, int i, bool inverse = false);

/// Mode conversions.
KClass to_q_mode(const KClass& x);
KClass q_to_one(const KClass& x);
KClass to_localized(const KClass& x);

}  // namespace qkp
