// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "drinfeld/base_arith/ext_field.hpp"
#include "drinfeld/base_arith/ratfunc.hpp"

// Coefficient-domain hooks used by OrePoly: zero/one/scalars shaped like a
// prototype element, and the r-power Frobenius.
namespace drinfeld {

inline bool is_zero(const RatFunc& c) { return c.is_zero(); }
inline RatFunc zero_like(const RatFunc& c) { return RatFunc::zero(c.field()); }
inline RatFunc scalar_like(const RatFunc& c, Fq s) { return RatFunc::constant(c.field(), s); }
inline RatFunc frobenius(const RatFunc& c) { return c.frobenius(); }

inline bool is_zero(const GfElem& c) { return c.is_zero(); }
inline GfElem zero_like(const GfElem& c) { return c.field()->zero(); }
inline GfElem scalar_like(const GfElem& c, Fq s) { return c.field()->scalar(s); }
inline GfElem frobenius(const GfElem& c) { return c.frobenius(); }

}  // namespace drinfeld
