// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

enum class Errc {
  not_prime,
  bound_exceeded,
  zero_input,
  not_one_unit,
  domain_mismatch,
  bad_prime,
  not_a_unit_mod_v,
  not_cyclic,
  inconsistent_crt,
  singular_recursion,
  non_convergent,
  unsupported,
  insufficient_data,
  parse_error,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace drinfeld
