#pragma once

#include <vector>

#include "qcomb/cyclotomic.hpp"

namespace qcomb {

/// Dense matrix over a cyclotomic field; row-major vector of rows.
using CycMatrix = std::vector<std::vector<Cyclotomic>>;
using CycVector = std::vector<Cyclotomic>;

CycMatrix cyc_zero_matrix(int rows, int cols);
CycMatrix cyc_identity_matrix(int n);
CycMatrix cyc_mat_add(const CycMatrix& a, const CycMatrix& b);
CycMatrix cyc_mat_mul(const CycMatrix& a, const CycMatrix& b);
CycMatrix cyc_mat_scale(const CycMatrix& a, const Cyclotomic& s);
CycMatrix cyc_mat_conj_transpose(const CycMatrix& a);
CycVector cyc_mat_apply(const CycMatrix& a, const CycVector& v);
bool cyc_mat_equal(const CycMatrix& a, const CycMatrix& b);
Cyclotomic cyc_mat_trace(const CycMatrix& a);

/// Conjugate-symmetric inner product sum_i conj(a_i) * b_i.
Cyclotomic cyc_inner(const CycVector& a, const CycVector& b);

}  // namespace qcomb
