// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::zero_input: return "ZeroInput";
    case Errc::not_one_unit: return "NotOneUnit";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::bad_prime: return "BadPrime";
    case Errc::not_a_unit_mod_v: return "NotAUnitModV";
    case Errc::not_cyclic: return "NotCyclic";
    case Errc::inconsistent_crt: return "InconsistentCRT";
    case Errc::singular_recursion: return "SingularRecursion";
    case Errc::non_convergent: return "NonConvergent";
    case Errc::unsupported: return "Unsupported";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace drinfeld
