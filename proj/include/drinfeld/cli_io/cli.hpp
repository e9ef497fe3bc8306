// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/base_arith/bounds.hpp"
#include "drinfeld/goss_lseries/classify.hpp"
#include "drinfeld/goss_lseries/lfactors.hpp"

namespace drinfeld {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string command;
  std::string r_text;
  FieldPtr field;
  DeskBounds bounds;
  OutputFormat format = OutputFormat::csv;
  std::string cache;  // empty: no on-disk cache
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;

// "a..b" or "a"; b < a gives an empty range.
std::pair<int, int> parse_index_range(const std::string& text);
// carlitz | cbeta:<rational> | tensorpower:<n> | rank2:<a1>,<a2>
LObject parse_object(const FieldPtr& field, const std::string& object_text);
// Lines "prime,value"; blank lines, '#' comments and a "prime,value" header are skipped.
EigenSystem parse_eigen_file(const FieldPtr& field, const std::string& text);

// The command-line surface; args exclude the program name.
//   special   --r R --kind zeta|carlitz --i A..B
//   lfactors  OBJECT --r R --dmax D
//   classify  FILE --r R
//   eigen     power:<j> | chi:<beta> --r R --dmax D
// Common: --format csv|json, --out PATH, --cache DIR, --prec, --max-enum, --max-ext.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drinfeld
