// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace docdeg {
inline constexpr const char* kToolName = "docdeg";
inline constexpr const char* kVersion = "0.3.0";
}  // namespace docdeg
