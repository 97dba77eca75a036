//
// Copyright 2026 The dpnewton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPNEWTON_BASE_STATUS_MACROS_H_
#define DPNEWTON_BASE_STATUS_MACROS_H_

#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define DPNEWTON_STATUS_CONCAT_INNER_(x, y) x##y
#define DPNEWTON_STATUS_CONCAT_(x, y) DPNEWTON_STATUS_CONCAT_INNER_(x, y)

// Evaluates `expr` (an absl::Status) and returns it from the enclosing
// function when it is not OK.
#define DPNEWTON_RETURN_IF_ERROR(expr)             \
  do {                                             \
    const absl::Status _dpnewton_status = (expr);  \
    if (!_dpnewton_status.ok()) {                  \
      return _dpnewton_status;                     \
    }                                              \
  } while (0)

#define DPNEWTON_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                   \
  if (!statusor.ok()) {                                      \
    return std::move(statusor).status();                     \
  }                                                          \
  lhs = *std::move(statusor)

// Evaluates `rexpr` (an absl::StatusOr<T>); on success assigns the value to
// `lhs`, otherwise returns the error status.
#define DPNEWTON_ASSIGN_OR_RETURN(lhs, rexpr)                                \
  DPNEWTON_ASSIGN_OR_RETURN_IMPL_(                                           \
      DPNEWTON_STATUS_CONCAT_(_dpnewton_statusor_, __LINE__), lhs, rexpr)

#endif  // DPNEWTON_BASE_STATUS_MACROS_H_
