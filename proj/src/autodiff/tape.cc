// autodiff/tape.cc

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

#include "autodiff/tape.h"

namespace dsd {

std::string ShapeStr(const Shape& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(s[i]);
  }
  out += "]";
  return out;
}

void Tape::Backward(const Tensor& loss) {
  DSD_REQUIRE(loss.on_tape() && loss.tape() == this,
              "backward requires a loss on this tape");
  DSD_REQUIRE(loss.numel() == 1, "backward requires a scalar loss, got shape ",
              ShapeStr(loss.shape()));

  grads_.assign(nodes_.size(), {});
  grads_[loss.node()] = {1.0};

  std::vector<double*> pg;
  for (int i = loss.node(); i >= 0; --i) {
    if (grads_[i].empty()) continue;  // unreachable from the loss
    const Node& nd = nodes_[i];
    pg.clear();
    pg.reserve(nd.parents.size());
    for (int p : nd.parents) {
      if (p < 0) {
        pg.push_back(nullptr);
      } else {
        if (grads_[p].empty()) grads_[p].assign(nodes_[p].numel, 0.0);
        pg.push_back(grads_[p].data());
      }
    }
    nd.fn(grads_[i].data(), pg.data());
    // This node's gradient is final once visited; release it eagerly.
    std::vector<double>().swap(grads_[i]);
  }
  grads_.clear();
}

}  // namespace dsd
