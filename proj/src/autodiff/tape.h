// autodiff/tape.h

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

#ifndef DSD_AUTODIFF_TAPE_H_
#define DSD_AUTODIFF_TAPE_H_

#include <functional>
#include <vector>

#include "autodiff/tensor.h"

namespace dsd {

// Reverse-mode tape. Nodes are appended in forward order, so every node's
// parents precede it and a single reverse sweep visits each node once.
//
// A node's backward function receives the upstream gradient (length = node
// output numel) and one gradient buffer per parent, aligned with the parents
// list; a null entry marks a constant parent that receives no gradient.
class Tape {
 public:
  using BackwardFn = std::function<void(const double* g, double* const* pg)>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  int AddNode(size_t out_numel, std::vector<int> parents, BackwardFn fn) {
    nodes_.push_back(Node{out_numel, std::move(parents), std::move(fn)});
    return static_cast<int>(nodes_.size()) - 1;
  }

  // Accumulates d(loss)/d(parameter) into every reachable Parameter's
  // gradient buffer. May be called repeatedly; contributions add up.
  void Backward(const Tensor& loss);

  // Drops all nodes. Tensors bound to dropped nodes must not be used in new
  // graph construction afterwards.
  void Clear() {
    nodes_.clear();
    grads_.clear();
  }

  size_t NumNodes() const { return nodes_.size(); }

 private:
  struct Node {
    size_t numel;
    std::vector<int> parents;
    BackwardFn fn;
  };

  std::vector<Node> nodes_;
  std::vector<std::vector<double>> grads_;
};

}  // namespace dsd

#endif  // DSD_AUTODIFF_TAPE_H_
