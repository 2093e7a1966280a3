// autodiff/ops.h

// Copyright 2026  The dsd Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DSD_AUTODIFF_OPS_H_
#define DSD_AUTODIFF_OPS_H_

#include <vector>

#include "autodiff/tape.h"
#include "autodiff/tensor.h"

namespace dsd {

// Inputs on a tape produce outputs on the same tape; mixing two live tapes in
// one op is a contract error. Binary elementwise ops require equal shapes —
// there is no implicit broadcasting. Explicit broadcast/expansion ops
// (AddRowVec, TileRows, RepeatRows) cover the shapes the models need.

// [m x k] * [k x n] -> [m x n]; rank-1 operands are treated as a single row
// (lhs) or a single column (rhs) and the unit dimension is dropped.
Tensor MatMul(const Tensor& a, const Tensor& b);

Tensor Add(const Tensor& a, const Tensor& b);
Tensor Sub(const Tensor& a, const Tensor& b);
Tensor Mul(const Tensor& a, const Tensor& b);
Tensor Neg(const Tensor& a);
Tensor Scale(const Tensor& a, double c);

// out[r, :] = x[r, :] + v for every row r.
Tensor AddRowVec(const Tensor& x, const Tensor& v);

Tensor Sigmoid(const Tensor& a);
Tensor Tanh(const Tensor& a);
Tensor Exp(const Tensor& a);
// Input is clamped to >= 1e-12 before the logarithm; clamped entries get a
// zero gradient, consistent with the clamped forward value.
Tensor Log(const Tensor& a);

// Max-subtracted stable softmax over a rank-1 tensor.
Tensor Softmax(const Tensor& v);

// axis = -1 reduces over all elements to a scalar. For rank-2 input, axis 0
// reduces over rows (-> [cols]) and axis 1 over columns (-> [rows]).
Tensor ReduceSum(const Tensor& t, int axis = -1);
Tensor ReduceMean(const Tensor& t, int axis = -1);

// Identity forward (bit-exact, shared storage); backward maps the upstream
// gradient g to -scale * g exactly.
Tensor GradReverse(const Tensor& x, double scale);

Tensor Row(const Tensor& x, size_t r);               // [R x C] -> [C]
Tensor Slice(const Tensor& v, size_t b, size_t e);   // rank-1 [b, e)
Tensor Reshape(const Tensor& t, Shape shape);

Tensor StackRows(const std::vector<Tensor>& rows);   // R x [C] -> [R x C]
Tensor ConcatCols(const std::vector<Tensor>& mats);  // [R x Ci] -> [R x sum(Ci)]

// Sliding-window unfold along time with zero padding: row t of the output is
// the concatenation of rows t - pad_left .. t - pad_left + k - 1 of x.
Tensor UnfoldTime(const Tensor& x, size_t k, size_t pad_left);

// Block-repeat: [x; x; ...] (times blocks).
Tensor TileRows(const Tensor& x, size_t times);
// Row-repeat: each row repeated `times` times consecutively.
Tensor RepeatRows(const Tensor& x, size_t times);

}  // namespace dsd

#endif  // DSD_AUTODIFF_OPS_H_
