// Copyright 2026 The qsched Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qsched {

enum class ErrorKind {
    InvalidArgument,
    OutOfRange,
    InconsistentTimeField,
    CapacityExceeded,
    NonZeroTarget,
    NonScheduleState,
    ZeroCount,
    NoSolution,
    AdaptiveCutoffExceeded,
    NoScheduleInRange,
    InputFormat,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InconsistentTimeField: return "InconsistentTimeField";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::NonZeroTarget: return "NonZeroTarget";
        case ErrorKind::NonScheduleState: return "NonScheduleState";
        case ErrorKind::ZeroCount: return "ZeroCount";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::AdaptiveCutoffExceeded: return "AdaptiveCutoffExceeded";
        case ErrorKind::NoScheduleInRange: return "NoScheduleInRange";
        case ErrorKind::InputFormat: return "InputFormat";
    }
    return "Unknown";
}

}  // namespace qsched
