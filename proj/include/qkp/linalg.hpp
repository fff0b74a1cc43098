#pragma once

#include <vector>

#include "qkp/novikov.hpp"

namespace qkp {

/// Dense matrix of fraction-field entries.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols, const RingDesc& desc);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingDesc& desc() const { return desc_; }
  const FracElt& at(int i, int j) const { return entries_[i * cols_ + j]; }
  FracElt& at(int i, int j) { return entries_[i * cols_ + j]; }

  static ExactMatrix identity(int n, const RingDesc& desc);
  ExactMatrix mul(const ExactMatrix& o) const;
  ExactMatrix add(const ExactMatrix& o) const;
  ExactMatrix scale(const FracElt& c) const;
  std::vector<FracElt> apply(const std::vector<FracElt>& v) const;
  bool equals(const ExactMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  RingDesc desc_;
  std::vector<FracElt> entries_;
};

struct SolveResult {
  enum class Status { kUnique, kUnderdetermined, kNoSolution };
  Status status = Status::kNoSolution;
  /// Particular solution (free variables zero); verified exactly unless
  /// kNoSolution.
  std::vector<FracElt> solution;
  /// For kNoSolution: an eliminated row 0 = nonzero witnessing inconsistency.
  int inconsistent_row = -1;
  int rank = 0;
};

/// Exact solve of M x = rhs by fraction-free (Bareiss) elimination with
/// column pivoting.  Solutions are re-verified by multiplication before
/// being returned.
SolveResult solve_linear(const ExactMatrix& m, const std::vector<FracElt>& rhs);

}  // namespace qkp
