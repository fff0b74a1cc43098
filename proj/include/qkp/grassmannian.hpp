#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkp/kmodule.hpp"
#include "qkp/qkring.hpp"

namespace qkp {

/// Formal C[P]-combination of affine-Grassmannian Schubert classes
/// [O_{Gr_w}], indices validated to lie in W_af^-.
class GrClass {
 public:
  GrClass() = default;
  explicit GrClass(RootSystemPtr rs) : rs_(std::move(rs)) {}

  static GrClass basis_class(RootSystemPtr rs, const AffineWeylElt& w);

  const RootSystemPtr& root_system() const { return rs_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  void add_term(const AffineWeylElt& w, const GroupAlgElt& coeff);

  GrClass& operator+=(const GrClass& o);
  GrClass& operator-=(const GrClass& o);
  friend GrClass operator+(GrClass a, const GrClass& b) { return a += b; }
  friend GrClass operator-(GrClass a, const GrClass& b) { return a -= b; }
  GrClass scale(const GroupAlgElt& c) const;

  bool operator==(const GrClass& o) const { return terms_ == o.terms_; }

  /// Term list sorted by (length, word, translation).
  std::vector<std::pair<AffineWeylElt, GroupAlgElt>> sorted_terms() const;

  std::string render() const;

 private:
  struct Key {
    std::vector<Int> mat;
    std::vector<Int> nov;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  RootSystemPtr rs_;
  std::map<Key, std::pair<AffineWeylElt, GroupAlgElt>> terms_;

  friend bool terms_equal(const GrClass& a, const GrClass& b);
};

/// x (.) [O_{Gr_{t_beta}}] for strictly antidominant beta: index-wise right
/// translation, outputs re-validated in W_af^-.
GrClass pontryagin_translate(const GrClass& x, const CorootVec& beta);

/// Class of the localization K_H(Gr)_loc: numerator (.) [O_{Gr_{t_denom}}]^{-1}
/// with denom a certified sum of strictly antidominant coroots.
class LocalizedGrClass {
 public:
  LocalizedGrClass(GrClass numerator, std::vector<CorootVec> denom_chain);
  static LocalizedGrClass from_numerator(GrClass numerator);

  const GrClass& numerator() const { return num_; }
  const CorootVec& denom() const { return denom_; }
  const std::vector<CorootVec>& denom_chain() const { return chain_; }

  /// (x, d) ~ (x (.) t_gamma, d + gamma).
  LocalizedGrClass translated_by(const CorootVec& gamma) const;
  bool equals(const LocalizedGrClass& o) const;

  std::string render() const;

 private:
  GrClass num_;
  CorootVec denom_;
  std::vector<CorootVec> chain_;
};

/// The Peterson isomorphism on the localized basis:
/// [O_{Gr_{u t_{b1}}}] (.) [O_{Gr_{t_{b2}}}]^{-1} |-> [O_{B(u)}] Q^{b1-b2}.
/// The input is auto-translated until every numerator index has a strictly
/// antidominant translation part.
KClass peterson_phi(const LocalizedGrClass& x);

/// eta_J = (parabolic quotient) o Phi.
KClass eta_J(const LocalizedGrClass& x, const ParabolicSubset& J);

/// Phi^{-1}: needs a deep enough common denominator.
LocalizedGrClass peterson_phi_inverse(const KClass& x);

/// Localized Pontryagin product, induced through Phi by the star product
/// of the given ring (which must be a full-flag ring of the same type).
LocalizedGrClass pontryagin_product_loc(const LocalizedGrClass& x, const LocalizedGrClass& y,
                                        const QKRing& ring);

/// -(sum of all positive coroots): the universal strictly antidominant
/// direction used for auto-translation.
CorootVec deep_antidominant(const RootSystem& rs);

}  // namespace qkp
