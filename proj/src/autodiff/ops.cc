// autodiff/ops.cc

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

#include "autodiff/ops.h"

#include <algorithm>
#include <cmath>

namespace dsd {

namespace {

constexpr double kLogClamp = 1e-12;

Tape* JoinTapes(std::initializer_list<const Tensor*> ts) {
  Tape* tape = nullptr;
  for (const Tensor* t : ts) {
    if (!t->on_tape()) continue;
    if (tape == nullptr) {
      tape = t->tape();
    } else {
      DSD_REQUIRE(tape == t->tape(), "operands belong to different tapes");
    }
  }
  return tape;
}

void RequireSameShape(const Tensor& a, const Tensor& b, const char* op) {
  DSD_REQUIRE(a.shape() == b.shape(), op, ": shape mismatch ",
              ShapeStr(a.shape()), " vs ", ShapeStr(b.shape()));
}

double StableSigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Tensor MatMul(const Tensor& a, const Tensor& b) {
  DSD_REQUIRE(a.rank() >= 1 && a.rank() <= 2 && b.rank() >= 1 && b.rank() <= 2,
              "matmul: operands must be rank 1 or 2, got ",
              ShapeStr(a.shape()), " and ", ShapeStr(b.shape()));
  const size_t m = a.rank() == 2 ? a.dim(0) : 1;
  const size_t k = a.rank() == 2 ? a.dim(1) : a.dim(0);
  const size_t kb = b.rank() == 2 ? b.dim(0) : b.dim(0);
  const size_t n = b.rank() == 2 ? b.dim(1) : 1;
  DSD_REQUIRE(k == kb, "matmul: inner dimensions disagree: ",
              ShapeStr(a.shape()), " vs ", ShapeStr(b.shape()));

  Shape out_shape;
  if (a.rank() == 2 && b.rank() == 2) {
    out_shape = {m, n};
  } else if (a.rank() == 1 && b.rank() == 2) {
    out_shape = {n};
  } else if (a.rank() == 2 && b.rank() == 1) {
    out_shape = {m};
  } else {
    out_shape = {1};
  }

  Tensor out(std::move(out_shape));
  {
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = out.mutable_data();
    for (size_t i = 0; i < m; ++i) {
      const double* arow = pa + i * k;
      double* crow = pc + i * n;
      for (size_t l = 0; l < k; ++l) {
        const double av = arow[l];
        if (av == 0.0) continue;
        const double* brow = pb + l * n;
        for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
      }
    }
  }

  if (Tape* tape = JoinTapes({&a, &b})) {
    auto sa = a.storage();
    auto sb = b.storage();
    int node = tape->AddNode(
        out.numel(), {a.node(), b.node()},
        [sa, sb, m, k, n](const double* g, double* const* pg) {
          if (pg[0] != nullptr) {  // dA[i,l] += sum_j g[i,j] * B[l,j]
            const double* pb = sb->data();
            for (size_t i = 0; i < m; ++i) {
              const double* grow = g + i * n;
              double* da = pg[0] + i * k;
              for (size_t l = 0; l < k; ++l) {
                const double* brow = pb + l * n;
                double acc = 0.0;
                for (size_t j = 0; j < n; ++j) acc += grow[j] * brow[j];
                da[l] += acc;
              }
            }
          }
          if (pg[1] != nullptr) {  // dB[l,j] += sum_i A[i,l] * g[i,j]
            const double* pa = sa->data();
            for (size_t i = 0; i < m; ++i) {
              const double* arow = pa + i * k;
              const double* grow = g + i * n;
              for (size_t l = 0; l < k; ++l) {
                const double av = arow[l];
                if (av == 0.0) continue;
                double* db = pg[1] + l * n;
                for (size_t j = 0; j < n; ++j) db[j] += av * grow[j];
              }
            }
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Add(const Tensor& a, const Tensor& b) {
  RequireSameShape(a, b, "add");
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = pa[i] + pb[i];
  if (Tape* tape = JoinTapes({&a, &b})) {
    int node = tape->AddNode(n, {a.node(), b.node()},
                             [n](const double* g, double* const* pg) {
                               if (pg[0])
                                 for (size_t i = 0; i < n; ++i) pg[0][i] += g[i];
                               if (pg[1])
                                 for (size_t i = 0; i < n; ++i) pg[1][i] += g[i];
                             });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Sub(const Tensor& a, const Tensor& b) {
  RequireSameShape(a, b, "sub");
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = pa[i] - pb[i];
  if (Tape* tape = JoinTapes({&a, &b})) {
    int node = tape->AddNode(n, {a.node(), b.node()},
                             [n](const double* g, double* const* pg) {
                               if (pg[0])
                                 for (size_t i = 0; i < n; ++i) pg[0][i] += g[i];
                               if (pg[1])
                                 for (size_t i = 0; i < n; ++i) pg[1][i] -= g[i];
                             });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Mul(const Tensor& a, const Tensor& b) {
  RequireSameShape(a, b, "mul");
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = pa[i] * pb[i];
  if (Tape* tape = JoinTapes({&a, &b})) {
    auto sa = a.storage();
    auto sb = b.storage();
    int node = tape->AddNode(
        n, {a.node(), b.node()},
        [sa, sb, n](const double* g, double* const* pg) {
          if (pg[0]) {
            const double* pb2 = sb->data();
            for (size_t i = 0; i < n; ++i) pg[0][i] += g[i] * pb2[i];
          }
          if (pg[1]) {
            const double* pa2 = sa->data();
            for (size_t i = 0; i < n; ++i) pg[1][i] += g[i] * pa2[i];
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Neg(const Tensor& a) {
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = -pa[i];
  if (Tape* tape = JoinTapes({&a})) {
    int node = tape->AddNode(n, {a.node()},
                             [n](const double* g, double* const* pg) {
                               for (size_t i = 0; i < n; ++i) pg[0][i] -= g[i];
                             });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Scale(const Tensor& a, double c) {
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = c * pa[i];
  if (Tape* tape = JoinTapes({&a})) {
    int node = tape->AddNode(
        n, {a.node()}, [n, c](const double* g, double* const* pg) {
          for (size_t i = 0; i < n; ++i) pg[0][i] += c * g[i];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor AddRowVec(const Tensor& x, const Tensor& v) {
  DSD_REQUIRE(x.rank() == 2 && v.rank() == 1 && x.dim(1) == v.dim(0),
              "add_rowvec: incompatible shapes ", ShapeStr(x.shape()), " and ",
              ShapeStr(v.shape()));
  const size_t rows = x.dim(0), cols = x.dim(1);
  Tensor out(x.shape());
  const double* px = x.data();
  const double* pv = v.data();
  double* po = out.mutable_data();
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) po[r * cols + c] = px[r * cols + c] + pv[c];
  if (Tape* tape = JoinTapes({&x, &v})) {
    int node = tape->AddNode(
        out.numel(), {x.node(), v.node()},
        [rows, cols](const double* g, double* const* pg) {
          if (pg[0])
            for (size_t i = 0; i < rows * cols; ++i) pg[0][i] += g[i];
          if (pg[1])
            for (size_t r = 0; r < rows; ++r)
              for (size_t c = 0; c < cols; ++c) pg[1][c] += g[r * cols + c];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Sigmoid(const Tensor& a) {
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = StableSigmoid(pa[i]);
  if (Tape* tape = JoinTapes({&a})) {
    auto sy = out.storage();
    int node = tape->AddNode(
        n, {a.node()}, [sy, n](const double* g, double* const* pg) {
          const double* y = sy->data();
          for (size_t i = 0; i < n; ++i) pg[0][i] += g[i] * y[i] * (1.0 - y[i]);
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Tanh(const Tensor& a) {
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = std::tanh(pa[i]);
  if (Tape* tape = JoinTapes({&a})) {
    auto sy = out.storage();
    int node = tape->AddNode(
        n, {a.node()}, [sy, n](const double* g, double* const* pg) {
          const double* y = sy->data();
          for (size_t i = 0; i < n; ++i) pg[0][i] += g[i] * (1.0 - y[i] * y[i]);
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Exp(const Tensor& a) {
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = std::exp(pa[i]);
  if (Tape* tape = JoinTapes({&a})) {
    auto sy = out.storage();
    int node = tape->AddNode(
        n, {a.node()}, [sy, n](const double* g, double* const* pg) {
          const double* y = sy->data();
          for (size_t i = 0; i < n; ++i) pg[0][i] += g[i] * y[i];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Log(const Tensor& a) {
  Tensor out(a.shape());
  const size_t n = a.numel();
  const double* pa = a.data();
  double* po = out.mutable_data();
  for (size_t i = 0; i < n; ++i) po[i] = std::log(std::max(pa[i], kLogClamp));
  if (Tape* tape = JoinTapes({&a})) {
    auto sx = a.storage();
    int node = tape->AddNode(
        n, {a.node()}, [sx, n](const double* g, double* const* pg) {
          const double* x = sx->data();
          for (size_t i = 0; i < n; ++i)
            if (x[i] >= kLogClamp) pg[0][i] += g[i] / x[i];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Softmax(const Tensor& v) {
  DSD_REQUIRE(v.rank() == 1 && v.numel() >= 1,
              "softmax expects a non-empty rank-1 tensor, got ",
              ShapeStr(v.shape()));
  const size_t n = v.numel();
  Tensor out(v.shape());
  const double* pv = v.data();
  double* po = out.mutable_data();
  double mx = pv[0];
  for (size_t i = 1; i < n; ++i) mx = std::max(mx, pv[i]);
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    po[i] = std::exp(pv[i] - mx);
    sum += po[i];
  }
  for (size_t i = 0; i < n; ++i) po[i] /= sum;
  if (Tape* tape = JoinTapes({&v})) {
    auto sy = out.storage();
    int node = tape->AddNode(
        n, {v.node()}, [sy, n](const double* g, double* const* pg) {
          const double* y = sy->data();
          double dot = 0.0;
          for (size_t i = 0; i < n; ++i) dot += g[i] * y[i];
          for (size_t i = 0; i < n; ++i) pg[0][i] += y[i] * (g[i] - dot);
        });
    out.BindNode(tape, node);
  }
  return out;
}

namespace {

Tensor ReduceImpl(const Tensor& t, int axis, bool mean) {
  const char* name = mean ? "reduce_mean" : "reduce_sum";
  DSD_REQUIRE(t.numel() > 0, name, ": cannot reduce an empty tensor");
  if (axis < 0) {
    const size_t n = t.numel();
    double acc = 0.0;
    const double* p = t.data();
    for (size_t i = 0; i < n; ++i) acc += p[i];
    const double scale = mean ? 1.0 / static_cast<double>(n) : 1.0;
    Tensor out = Tensor::Scalar(acc * scale);
    if (Tape* tape = JoinTapes({&t})) {
      int node = tape->AddNode(
          1, {t.node()}, [n, scale](const double* g, double* const* pg) {
            const double gv = g[0] * scale;
            for (size_t i = 0; i < n; ++i) pg[0][i] += gv;
          });
      out.BindNode(tape, node);
    }
    return out;
  }

  DSD_REQUIRE(t.rank() >= 1 && t.rank() <= 2, name,
              ": axis reduction supports rank 1 or 2, got ",
              ShapeStr(t.shape()));
  DSD_REQUIRE(static_cast<size_t>(axis) < t.rank(), name, ": axis ", axis,
              " invalid for shape ", ShapeStr(t.shape()));
  if (t.rank() == 1) return ReduceImpl(t, -1, mean);

  const size_t rows = t.dim(0), cols = t.dim(1);
  DSD_REQUIRE(rows > 0 && cols > 0, name, ": empty axis extent in shape ",
              ShapeStr(t.shape()));
  const size_t extent = axis == 0 ? rows : cols;
  const double scale = mean ? 1.0 / static_cast<double>(extent) : 1.0;
  Tensor out(axis == 0 ? Shape{cols} : Shape{rows});
  const double* p = t.data();
  double* po = out.mutable_data();
  if (axis == 0) {
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) po[c] += p[r * cols + c];
    for (size_t c = 0; c < cols; ++c) po[c] *= scale;
  } else {
    for (size_t r = 0; r < rows; ++r) {
      double acc = 0.0;
      for (size_t c = 0; c < cols; ++c) acc += p[r * cols + c];
      po[r] = acc * scale;
    }
  }
  if (Tape* tape = JoinTapes({&t})) {
    int node = tape->AddNode(
        out.numel(), {t.node()},
        [rows, cols, axis, scale](const double* g, double* const* pg) {
          if (axis == 0) {
            for (size_t r = 0; r < rows; ++r)
              for (size_t c = 0; c < cols; ++c)
                pg[0][r * cols + c] += g[c] * scale;
          } else {
            for (size_t r = 0; r < rows; ++r) {
              const double gv = g[r] * scale;
              for (size_t c = 0; c < cols; ++c) pg[0][r * cols + c] += gv;
            }
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

}  // namespace

Tensor ReduceSum(const Tensor& t, int axis) { return ReduceImpl(t, axis, false); }
Tensor ReduceMean(const Tensor& t, int axis) { return ReduceImpl(t, axis, true); }

Tensor GradReverse(const Tensor& x, double scale) {
  DSD_REQUIRE(scale > 0.0, "grad_reverse: scale must be positive, got ", scale);
  // Shares the input storage: the forward pass is bit-identical by
  // construction.
  Tensor out = x.Detached();
  if (Tape* tape = JoinTapes({&x})) {
    const size_t n = x.numel();
    int node = tape->AddNode(
        n, {x.node()}, [n, scale](const double* g, double* const* pg) {
          for (size_t i = 0; i < n; ++i) pg[0][i] -= scale * g[i];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Row(const Tensor& x, size_t r) {
  DSD_REQUIRE(x.rank() == 2, "row: expected rank-2 tensor, got ",
              ShapeStr(x.shape()));
  DSD_REQUIRE(r < x.dim(0), "row: index ", r, " out of range for shape ",
              ShapeStr(x.shape()));
  const size_t cols = x.dim(1);
  Tensor out({cols});
  std::copy(x.data() + r * cols, x.data() + (r + 1) * cols, out.mutable_data());
  if (Tape* tape = JoinTapes({&x})) {
    int node = tape->AddNode(
        cols, {x.node()}, [r, cols](const double* g, double* const* pg) {
          for (size_t c = 0; c < cols; ++c) pg[0][r * cols + c] += g[c];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Slice(const Tensor& v, size_t b, size_t e) {
  DSD_REQUIRE(v.rank() == 1, "slice: expected rank-1 tensor, got ",
              ShapeStr(v.shape()));
  DSD_REQUIRE(b < e && e <= v.numel(), "slice: range [", b, ", ", e,
              ") invalid for length ", v.numel());
  Tensor out({e - b});
  std::copy(v.data() + b, v.data() + e, out.mutable_data());
  if (Tape* tape = JoinTapes({&v})) {
    int node = tape->AddNode(
        e - b, {v.node()}, [b, e](const double* g, double* const* pg) {
          for (size_t i = 0; i < e - b; ++i) pg[0][b + i] += g[i];
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor Reshape(const Tensor& t, Shape shape) {
  DSD_REQUIRE(ShapeNumel(shape) == t.numel(), "reshape: cannot view ",
              ShapeStr(t.shape()), " as ", ShapeStr(shape));
  Tensor out(std::move(shape),
             std::vector<double>(t.data(), t.data() + t.numel()));
  if (Tape* tape = JoinTapes({&t})) {
    const size_t n = t.numel();
    int node = tape->AddNode(n, {t.node()},
                             [n](const double* g, double* const* pg) {
                               for (size_t i = 0; i < n; ++i) pg[0][i] += g[i];
                             });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor StackRows(const std::vector<Tensor>& rows) {
  DSD_REQUIRE(!rows.empty(), "stack_rows: empty input");
  const size_t cols = rows[0].numel();
  Tape* tape = nullptr;
  std::vector<int> parents(rows.size(), -1);
  for (size_t i = 0; i < rows.size(); ++i) {
    DSD_REQUIRE(rows[i].rank() == 1 && rows[i].numel() == cols,
                "stack_rows: row ", i, " has shape ", ShapeStr(rows[i].shape()),
                ", expected [", cols, "]");
    if (rows[i].on_tape()) {
      DSD_REQUIRE(tape == nullptr || tape == rows[i].tape(),
                  "stack_rows: rows belong to different tapes");
      tape = rows[i].tape();
      parents[i] = rows[i].node();
    }
  }
  Tensor out({rows.size(), cols});
  double* po = out.mutable_data();
  for (size_t i = 0; i < rows.size(); ++i)
    std::copy(rows[i].data(), rows[i].data() + cols, po + i * cols);
  if (tape != nullptr) {
    const size_t nrows = rows.size();
    int node = tape->AddNode(
        out.numel(), std::move(parents),
        [nrows, cols](const double* g, double* const* pg) {
          for (size_t i = 0; i < nrows; ++i) {
            if (pg[i] == nullptr) continue;
            const double* grow = g + i * cols;
            for (size_t c = 0; c < cols; ++c) pg[i][c] += grow[c];
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor ConcatCols(const std::vector<Tensor>& mats) {
  DSD_REQUIRE(!mats.empty(), "concat_cols: empty input");
  const size_t rows = mats[0].rank() == 2 ? mats[0].dim(0) : 0;
  DSD_REQUIRE(rows > 0, "concat_cols: expected rank-2 inputs");
  size_t total_cols = 0;
  Tape* tape = nullptr;
  std::vector<int> parents(mats.size(), -1);
  std::vector<size_t> widths(mats.size());
  for (size_t i = 0; i < mats.size(); ++i) {
    DSD_REQUIRE(mats[i].rank() == 2 && mats[i].dim(0) == rows,
                "concat_cols: input ", i, " has shape ",
                ShapeStr(mats[i].shape()), ", expected ", rows, " rows");
    widths[i] = mats[i].dim(1);
    total_cols += widths[i];
    if (mats[i].on_tape()) {
      DSD_REQUIRE(tape == nullptr || tape == mats[i].tape(),
                  "concat_cols: inputs belong to different tapes");
      tape = mats[i].tape();
      parents[i] = mats[i].node();
    }
  }
  Tensor out({rows, total_cols});
  double* po = out.mutable_data();
  size_t off = 0;
  for (size_t i = 0; i < mats.size(); ++i) {
    const double* pm = mats[i].data();
    for (size_t r = 0; r < rows; ++r)
      std::copy(pm + r * widths[i], pm + (r + 1) * widths[i],
                po + r * total_cols + off);
    off += widths[i];
  }
  if (tape != nullptr) {
    int node = tape->AddNode(
        out.numel(), std::move(parents),
        [rows, total_cols, widths](const double* g, double* const* pg) {
          size_t off2 = 0;
          for (size_t i = 0; i < widths.size(); ++i) {
            if (pg[i] != nullptr) {
              for (size_t r = 0; r < rows; ++r) {
                const double* grow = g + r * total_cols + off2;
                double* drow = pg[i] + r * widths[i];
                for (size_t c = 0; c < widths[i]; ++c) drow[c] += grow[c];
              }
            }
            off2 += widths[i];
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor UnfoldTime(const Tensor& x, size_t k, size_t pad_left) {
  DSD_REQUIRE(x.rank() == 2, "unfold_time: expected rank-2 tensor, got ",
              ShapeStr(x.shape()));
  DSD_REQUIRE(k >= 1 && pad_left < k, "unfold_time: invalid window ", k,
              " / pad ", pad_left);
  const size_t t_len = x.dim(0), d = x.dim(1);
  Tensor out({t_len, k * d});
  const double* px = x.data();
  double* po = out.mutable_data();
  for (size_t t = 0; t < t_len; ++t) {
    for (size_t j = 0; j < k; ++j) {
      const long long src = static_cast<long long>(t) -
                            static_cast<long long>(pad_left) +
                            static_cast<long long>(j);
      if (src < 0 || src >= static_cast<long long>(t_len)) continue;
      std::copy(px + src * d, px + (src + 1) * d, po + t * k * d + j * d);
    }
  }
  if (Tape* tape = JoinTapes({&x})) {
    int node = tape->AddNode(
        out.numel(), {x.node()},
        [t_len, d, k, pad_left](const double* g, double* const* pg) {
          for (size_t t = 0; t < t_len; ++t) {
            for (size_t j = 0; j < k; ++j) {
              const long long src = static_cast<long long>(t) -
                                    static_cast<long long>(pad_left) +
                                    static_cast<long long>(j);
              if (src < 0 || src >= static_cast<long long>(t_len)) continue;
              const double* grow = g + t * k * d + j * d;
              double* drow = pg[0] + src * d;
              for (size_t c = 0; c < d; ++c) drow[c] += grow[c];
            }
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor TileRows(const Tensor& x, size_t times) {
  DSD_REQUIRE(x.rank() == 2 && times >= 1, "tile_rows: bad arguments");
  const size_t rows = x.dim(0), cols = x.dim(1);
  Tensor out({rows * times, cols});
  double* po = out.mutable_data();
  for (size_t i = 0; i < times; ++i)
    std::copy(x.data(), x.data() + rows * cols, po + i * rows * cols);
  if (Tape* tape = JoinTapes({&x})) {
    int node = tape->AddNode(
        out.numel(), {x.node()},
        [rows, cols, times](const double* g, double* const* pg) {
          for (size_t i = 0; i < times; ++i) {
            const double* gb = g + i * rows * cols;
            for (size_t j = 0; j < rows * cols; ++j) pg[0][j] += gb[j];
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

Tensor RepeatRows(const Tensor& x, size_t times) {
  DSD_REQUIRE(x.rank() == 2 && times >= 1, "repeat_rows: bad arguments");
  const size_t rows = x.dim(0), cols = x.dim(1);
  Tensor out({rows * times, cols});
  double* po = out.mutable_data();
  for (size_t r = 0; r < rows; ++r)
    for (size_t i = 0; i < times; ++i)
      std::copy(x.data() + r * cols, x.data() + (r + 1) * cols,
                po + (r * times + i) * cols);
  if (Tape* tape = JoinTapes({&x})) {
    int node = tape->AddNode(
        out.numel(), {x.node()},
        [rows, cols, times](const double* g, double* const* pg) {
          for (size_t r = 0; r < rows; ++r) {
            double* drow = pg[0] + r * cols;
            for (size_t i = 0; i < times; ++i) {
              const double* grow = g + (r * times + i) * cols;
              for (size_t c = 0; c < cols; ++c) drow[c] += grow[c];
            }
          }
        });
    out.BindNode(tape, node);
  }
  return out;
}

}  // namespace dsd
