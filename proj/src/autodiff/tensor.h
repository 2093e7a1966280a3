// autodiff/tensor.h

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

#ifndef DSD_AUTODIFF_TENSOR_H_
#define DSD_AUTODIFF_TENSOR_H_

#include <memory>
#include <string>
#include <vector>

#include "util/common.h"

namespace dsd {

class Tape;

using Shape = std::vector<size_t>;

inline size_t ShapeNumel(const Shape& s) {
  size_t n = 1;
  for (size_t d : s) n *= d;
  return n;
}

std::string ShapeStr(const Shape& s);

// Dense 64-bit tensor. Copies are cheap (storage is shared); ops never mutate
// their inputs. A tensor is either a constant (node() < 0) or the output of a
// tape node, in which case gradients flow to it during Tape::Backward.
class Tensor {
 public:
  Tensor() : data_(std::make_shared<std::vector<double>>()) {}

  explicit Tensor(Shape shape)
      : shape_(std::move(shape)),
        data_(std::make_shared<std::vector<double>>(ShapeNumel(shape_), 0.0)) {}

  Tensor(Shape shape, std::vector<double> data)
      : shape_(std::move(shape)),
        data_(std::make_shared<std::vector<double>>(std::move(data))) {
    DSD_REQUIRE(ShapeNumel(shape_) == data_->size(),
                "tensor data length ", data_->size(),
                " does not match shape ", ShapeStr(shape_));
  }

  static Tensor Scalar(double v) { return Tensor({1}, {v}); }

  static Tensor Full(Shape shape, double v) {
    Tensor t(std::move(shape));
    for (double& x : *t.data_) x = v;
    return t;
  }

  const Shape& shape() const { return shape_; }
  size_t rank() const { return shape_.size(); }
  size_t numel() const { return data_->size(); }
  size_t dim(size_t i) const { return shape_[i]; }

  const double* data() const { return data_->data(); }
  double* mutable_data() { return data_->data(); }
  const std::shared_ptr<std::vector<double>>& storage() const { return data_; }

  double operator[](size_t i) const { return (*data_)[i]; }

  double ScalarValue() const {
    DSD_REQUIRE(numel() == 1, "expected scalar tensor, got shape ",
                ShapeStr(shape_));
    return (*data_)[0];
  }

  Tape* tape() const { return tape_; }
  int node() const { return node_; }
  bool on_tape() const { return node_ >= 0; }

  // Used by ops and parameters when registering nodes.
  void BindNode(Tape* tape, int node) {
    tape_ = tape;
    node_ = node;
  }

  // Same storage, no tape node.
  Tensor Detached() const {
    Tensor t;
    t.shape_ = shape_;
    t.data_ = data_;
    return t;
  }

 private:
  Shape shape_;
  std::shared_ptr<std::vector<double>> data_;
  Tape* tape_ = nullptr;
  int node_ = -1;
};

}  // namespace dsd

#endif  // DSD_AUTODIFF_TENSOR_H_
