// autodiff/parameter.h

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

#ifndef DSD_AUTODIFF_PARAMETER_H_
#define DSD_AUTODIFF_PARAMETER_H_

#include <string>
#include <vector>

#include "autodiff/tape.h"
#include "autodiff/tensor.h"

namespace dsd {

// A trainable tensor with its gradient accumulator and Adam state. Backward
// passes add into the accumulator; AdamStep consumes and zeroes it.
class Parameter {
 public:
  Parameter() = default;
  Parameter(std::string name, Tensor init)
      : name_(std::move(name)),
        value_(init.Detached()),
        grad_(init.numel(), 0.0),
        m_(init.numel(), 0.0),
        v_(init.numel(), 0.0) {}

  const std::string& name() const { return name_; }
  const Shape& shape() const { return value_.shape(); }
  size_t numel() const { return value_.numel(); }

  // Constant view (no gradient flows); shares storage.
  const Tensor& value() const { return value_; }

  // Leaf tensor on the tape: backward accumulates d(loss)/d(this) into the
  // gradient buffer. With tape == nullptr this is a frozen constant view.
  Tensor Use(Tape* tape) {
    if (tape == nullptr) return value_;
    Tensor leaf = value_.Detached();
    Parameter* self = this;
    int node = tape->AddNode(numel(), {},
                             [self](const double* g, double* const*) {
                               double* acc = self->grad_.data();
                               for (size_t i = 0; i < self->grad_.size(); ++i)
                                 acc[i] += g[i];
                             });
    leaf.BindNode(tape, node);
    return leaf;
  }

  std::vector<double>& grad() { return grad_; }
  const std::vector<double>& grad() const { return grad_; }

  void ZeroGrad() { std::fill(grad_.begin(), grad_.end(), 0.0); }

  // One Adam update (beta1=0.9, beta2=0.999, eps=1e-8, bias-corrected);
  // zeroes the gradient accumulator afterwards.
  void AdamStep(double lr);

  // Direct access for initialization and checkpoint IO.
  double* mutable_values() { return value_.storage()->data(); }
  const double* values() const { return value_.data(); }

  int64_t step_count() const { return step_; }

 private:
  std::string name_;
  Tensor value_;
  std::vector<double> grad_, m_, v_;
  int64_t step_ = 0;
};

}  // namespace dsd

#endif  // DSD_AUTODIFF_PARAMETER_H_
