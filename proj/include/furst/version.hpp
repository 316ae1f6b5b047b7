// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#define FURST_VERSION "0.1.0"

namespace furst {

inline constexpr const char* version() { return FURST_VERSION; }

}  // namespace furst
