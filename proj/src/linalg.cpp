#include "qkp/linalg.hpp"

namespace qkp {

ExactMatrix::ExactMatrix(int rows, int cols, const RingDesc& desc)
    : rows_(rows), cols_(cols), desc_(desc) {
  entries_.assign(static_cast<size_t>(rows) * cols, FracElt::zero(desc));
}

ExactMatrix ExactMatrix::identity(int n, const RingDesc& desc) {
  ExactMatrix m(n, n, desc);
  for (int i = 0; i < n; ++i) m.at(i, i) = FracElt::one(desc);
  return m;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch");
  ExactMatrix out(rows_, o.cols_, desc_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return out;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& o) const {
  if (cols_ != o.cols_ || rows_ != o.rows_) throw DimensionError("matrix shape mismatch");
  ExactMatrix out(rows_, cols_, desc_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
  return out;
}

ExactMatrix ExactMatrix::scale(const FracElt& c) const {
  ExactMatrix out(rows_, cols_, desc_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * c;
  return out;
}

std::vector<FracElt> ExactMatrix::apply(const std::vector<FracElt>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionError("vector length mismatch");
  std::vector<FracElt> out(rows_, FracElt::zero(desc_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = out[i] + at(i, j) * v[j];
    }
  return out;
}

bool ExactMatrix::equals(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).equals(o.at(i, j))) return false;
  return true;
}

namespace {

// Fraction-free (Bareiss) determinant; the matrix is consumed.
NovikovPoly bareiss_det(std::vector<std::vector<NovikovPoly>> a, const RingDesc& desc) {
  const int n = static_cast<int>(a.size());
  NovikovPoly prev = NovikovPoly::one(desc);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return NovikovPoly::zero(desc);
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        NovikovPoly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = t.exact_div(prev);
        if (!q) throw Error("fraction-free elimination: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = NovikovPoly::zero(desc);
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

SolveResult solve_linear(const ExactMatrix& m, const std::vector<FracElt>& rhs) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionError("empty system");
  if (static_cast<int>(rhs.size()) != m.rows()) throw DimensionError("rhs length mismatch");
  const int rows = m.rows(), cols = m.cols();
  RingDesc desc = m.desc();
  desc.localized = true;

  // Clear denominators row by row; a[i] holds the augmented polynomial row.
  std::vector<std::vector<NovikovPoly>> scaled(rows);
  for (int i = 0; i < rows; ++i) {
    NovikovPoly scale = NovikovPoly::one(desc);
    for (int j = 0; j < cols; ++j) scale = scale * m.at(i, j).den();
    scale = scale * rhs[i].den();
    scaled[i].reserve(cols + 1);
    for (int j = 0; j < cols; ++j) {
      auto q = scale.exact_div(m.at(i, j).den());
      scaled[i].push_back(m.at(i, j).num() * *q);
    }
    auto q = scale.exact_div(rhs[i].den());
    scaled[i].push_back(rhs[i].num() * *q);
  }

  // Fraction-free elimination with column pivoting to find the pivot
  // profile and certify consistency.
  std::vector<std::vector<NovikovPoly>> a = scaled;
  NovikovPoly prev_pivot = NovikovPoly::one(desc);
  std::vector<int> pivot_rows, pivot_cols;
  std::vector<int> row_origin(rows);
  for (int i = 0; i < rows; ++i) row_origin[i] = i;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (!a[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[row]);
    std::swap(row_origin[pr], row_origin[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j <= cols; ++j) {
        NovikovPoly t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        auto q = t.exact_div(prev_pivot);
        if (!q) throw Error("fraction-free elimination: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][col] = NovikovPoly::zero(desc);
    }
    prev_pivot = a[row][col];
    pivot_rows.push_back(row_origin[row]);
    pivot_cols.push_back(col);
    ++row;
  }

  SolveResult result;
  result.rank = static_cast<int>(pivot_cols.size());

  for (int i = row; i < rows; ++i)
    if (!a[i][cols].is_zero()) {
      result.status = SolveResult::Status::kNoSolution;
      result.inconsistent_row = row_origin[i];
      return result;
    }

  // Cramer on the pivot submatrix: every solution coordinate is a ratio of
  // two determinants, so no intermediate ever exceeds minor size.
  const int k = result.rank;
  auto submatrix = [&](int replace_col_with_rhs) {
    std::vector<std::vector<NovikovPoly>> s(k, std::vector<NovikovPoly>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        s[i][j] = (j == replace_col_with_rhs) ? scaled[pivot_rows[i]][cols]
                                              : scaled[pivot_rows[i]][pivot_cols[j]];
    return s;
  };
  NovikovPoly det = bareiss_det(submatrix(-1), desc);
  if (det.is_zero()) throw Error("pivot submatrix is singular");
  std::vector<FracElt> x(cols, FracElt::zero(desc));
  for (int j = 0; j < k; ++j)
    x[pivot_cols[j]] = FracElt(bareiss_det(submatrix(j), desc), det);

  // Certify.
  std::vector<FracElt> check = m.apply(x);
  for (int i = 0; i < rows; ++i)
    if (!check[i].equals(rhs[i])) throw Error("solver verification failed");

  result.solution = std::move(x);
  result.status = result.rank == cols ? SolveResult::Status::kUnique
                                      : SolveResult::Status::kUnderdetermined;
  return result;
}

}  // namespace qkp
