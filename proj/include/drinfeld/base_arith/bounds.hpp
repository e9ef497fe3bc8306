// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace drinfeld {

// Desk-scale limits. Every enumeration or extension search checks one of
// these and raises BoundExceeded naming it.
struct DeskBounds {
  unsigned max_field_order = 16;             // r
  std::uint64_t max_enumeration = 1u << 16;  // elements visited by brute force
  int max_extension_degree = 64;             // [F_{r^N} : F_r]
  int laurent_precision = 32;                // default working precision
};

}  // namespace drinfeld
