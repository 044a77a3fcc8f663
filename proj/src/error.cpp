// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torus_riesz/error.hpp"

namespace torus_riesz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::BadGramFile: return "BadGramFile";
    case ErrorCode::BadLatticeFile: return "BadLatticeFile";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PoleArgument: return "PoleArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DivergentSeries: return "DivergentSeries";
    case ErrorCode::NearSingularity: return "NearSingularity";
    case ErrorCode::EmptyShell: return "EmptyShell";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::VolumeMismatch: return "VolumeMismatch";
    case ErrorCode::PoolTooSmall: return "PoolTooSmall";
  }
  return "Unknown";
}

bool is_numerical_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::QuadratureFailure:
    case ErrorCode::RejectionBudgetExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace torus_riesz
