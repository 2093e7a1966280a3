// util/common.h

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

#ifndef DSD_UTIL_COMMON_H_
#define DSD_UTIL_COMMON_H_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dsd {

// Raised on contract violations (bad shapes, invalid arguments, malformed
// configs). The C API maps it to DSD_ERR_VALIDATION.
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Raised on IO / runtime failures. The C API maps it to DSD_ERR_RUNTIME.
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename... Args>
std::string StrCat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

template <typename... Args>
[[noreturn]] void ContractFail(Args&&... args) {
  throw ContractError(StrCat(std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void RuntimeFail(Args&&... args) {
  throw RuntimeError(StrCat(std::forward<Args>(args)...));
}

#define DSD_REQUIRE(cond, ...)            \
  do {                                    \
    if (!(cond)) ::dsd::ContractFail(__VA_ARGS__); \
  } while (0)

}  // namespace dsd

#endif  // DSD_UTIL_COMMON_H_
