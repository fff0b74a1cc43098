#pragma once

#include <map>
#include <vector>

#include "qkp/kmodule.hpp"
#include "qkp/linalg.hpp"

namespace qkp {

/// Divisor columns s_i * (basis) and the matrices of the commuting
/// Chevalley operators A_i(1) = ([O(-varpi_i)] *) built from them.
class ChevalleyTable {
 public:
  /// divisor_cols[i][u] = s_i * [O(u)], one column per i in J^c.
  ChevalleyTable(ModuleSpacePtr space, std::map<int, std::vector<KClass>> divisor_cols);

  const ModuleSpacePtr& space() const { return space_; }
  const std::map<int, std::vector<KClass>>& divisor_cols() const { return divisor_cols_; }
  const ExactMatrix& op(int i) const;
  const std::map<int, ExactMatrix>& ops() const { return ops_; }

  /// A_i(1) applied to a class of the same space.
  KClass apply(int i, const KClass& x) const;

  /// -w_0 varpi_i, the weight of the scalar in the divisor identity.
  WeightVec dual_weight(int i) const;

 private:
  ModuleSpacePtr space_;
  std::map<int, std::vector<KClass>> divisor_cols_;
  std::map<int, ExactMatrix> ops_;
};

/// Operator polynomial sum_m c_m A^m expressing a basis class as
/// p(A)(identity); monomials are exponent vectors over J^c.
struct OperatorPoly {
  std::vector<std::pair<std::vector<int>, FracElt>> terms;
  int degree = 0;
};

/// Full multiplication table u * v for the Schubert basis.
class RingTable {
 public:
  RingTable(ModuleSpacePtr space, std::vector<std::vector<KClass>> products);

  const ModuleSpacePtr& space() const { return space_; }
  int dim() const { return static_cast<int>(products_.size()); }
  const KClass& product(int u, int v) const { return products_[u][v]; }

 private:
  ModuleSpacePtr space_;
  std::vector<std::vector<KClass>> products_;
};

/// A quantum K-ring instance: the space, its Chevalley seed, the operator
/// expressions, and the reconstructed table.
class QKRing {
 public:
  /// qK_H(SL_3/B) and its parabolic quotients, seeded from the builtin
  /// divisor data.
  static QKRing build_a2(const ParabolicSubset& J);
  /// Quotient of an already-built ring by the parabolic J.
  static QKRing quotient_ring(const QKRing& base, const ParabolicSubset& J);
  /// Validate divisor columns and reconstruct the table they generate.
  static QKRing from_divisor_columns(ModuleSpacePtr space,
                                     std::map<int, std::vector<KClass>> divisor_cols);
  /// Build from external divisor data (see chevalley_to_json for the schema).
  static QKRing from_chevalley_json(const nlohmann::ordered_json& doc);

  const ModuleSpacePtr& space() const { return space_; }
  const ChevalleyTable& chevalley() const { return *chevalley_; }
  const RingTable& table() const { return *table_; }
  const OperatorPoly& expression(int basis_id) const { return expressions_[basis_id]; }

  /// Bilinear star product of classes over this ring's space (or its
  /// localized variant).
  KClass star(const KClass& x, const KClass& y) const;

  nlohmann::ordered_json chevalley_to_json() const;
  nlohmann::ordered_json table_to_json() const;
  static std::vector<std::vector<KClass>> table_from_json(const nlohmann::ordered_json& doc,
                                                          ModuleSpacePtr space);

 private:
  QKRing(ModuleSpacePtr space, std::shared_ptr<const ChevalleyTable> chevalley);

  ModuleSpacePtr space_;
  std::shared_ptr<const ChevalleyTable> chevalley_;
  std::vector<OperatorPoly> expressions_;
  std::shared_ptr<const RingTable> table_;
};

/// The six s_1-column products of qK_H(SL_3/B).
std::vector<KClass> golden_a2_column(const ModuleSpacePtr& space);
/// Transport of the s_1 column through the diagram flip 1 <-> 2.
std::vector<KClass> derive_s2_column(const ModuleSpacePtr& space,
                                     const std::vector<KClass>& s1_column);

/// p with p(A)(identity) = x, degree escalated from 1 (cap 2 dim).
OperatorPoly reconstruct_expression(int basis_id, const ChevalleyTable& t);

/// Image of a diagram automorphism on a class (indices and coefficients).
KClass apply_diagram_automorphism(const KClass& x, const DynkinAutomorphism& sigma);

/// The q-mode transport A_i(q) = (matrix of A_i(1)) o q_shift_i^{-1}; it
/// restricts to A_i(1) at q = 1 and obeys
/// A_i(q)(Q^beta x) = q^{-<beta, varpi_i>} Q^beta A_i(q)(x).
KClass chevalley_apply_q(const ChevalleyTable& t, int i, const KClass& x);

}  // namespace qkp
