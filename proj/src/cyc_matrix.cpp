#include "qcomb/cyc_matrix.hpp"

#include "qcomb/errors.hpp"

namespace qcomb {

CycMatrix cyc_zero_matrix(int rows, int cols) {
  return CycMatrix(rows, CycVector(cols, Cyclotomic()));
}

CycMatrix cyc_identity_matrix(int n) {
  CycMatrix m = cyc_zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Cyclotomic::from_rational(Rational(1));
  return m;
}

CycMatrix cyc_mat_add(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size() || (a.size() && a[0].size() != b[0].size()))
    throw DimensionMismatchError("matrix addition shape mismatch");
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

CycMatrix cyc_mat_mul(const CycMatrix& a, const CycMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw DimensionMismatchError("matrix product shape mismatch");
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  CycMatrix out = cyc_zero_matrix(static_cast<int>(n), static_cast<int>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[l][j].is_zero()) continue;
        out[i][j] += a[i][l] * b[l][j];
      }
    }
  return out;
}

CycMatrix cyc_mat_scale(const CycMatrix& a, const Cyclotomic& s) {
  CycMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x *= s;
  return out;
}

CycMatrix cyc_mat_conj_transpose(const CycMatrix& a) {
  if (a.empty()) return a;
  CycMatrix out = cyc_zero_matrix(static_cast<int>(a[0].size()),
                                  static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j].conjugate();
  return out;
}

CycVector cyc_mat_apply(const CycMatrix& a, const CycVector& v) {
  if (a.empty() || a[0].size() != v.size())
    throw DimensionMismatchError("matrix-vector shape mismatch");
  CycVector out(a.size(), Cyclotomic());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (a[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += a[i][j] * v[j];
    }
  return out;
}

bool cyc_mat_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

Cyclotomic cyc_mat_trace(const CycMatrix& a) {
  Cyclotomic t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Cyclotomic cyc_inner(const CycVector& a, const CycVector& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("inner product length mismatch");
  Cyclotomic acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].conjugate() * b[i];
  }
  return acc;
}

}  // namespace qcomb
