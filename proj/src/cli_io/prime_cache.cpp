// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/cli_io/prime_cache.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "drinfeld/base_arith/error.hpp"
#include "drinfeld/base_arith/expr.hpp"
#include "drinfeld/base_arith/irreducible.hpp"

namespace drinfeld {

namespace {

std::string crc_hex(const std::string& body) {
  const uLong crc = crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(body.data()),
                          static_cast<uInt>(body.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

std::string body_of(const std::vector<Poly>& primes) {
  std::string body;
  for (const Poly& f : primes) body += f.to_string() + "\n";
  return body;
}

std::string r_line(const FiniteField& F) {
  return "r " + std::to_string(F.r()) + " = " + std::to_string(F.p()) + "^" + std::to_string(F.m());
}

}  // namespace

PrimeCache::PrimeCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

std::filesystem::path PrimeCache::table_path(const FiniteField& field, int d) const {
  const std::string name = "primes_p" + std::to_string(field.p()) + "_m" + std::to_string(field.m()) + "_d" +
                           std::to_string(d) + ".txt";
  return dir_ ? *dir_ / name : std::filesystem::path(name);
}

std::string PrimeCache::render(const FiniteField& field, int d, const std::vector<Poly>& primes) {
  const std::string body = body_of(primes);
  return "# drinfeld prime table\n" + r_line(field) + "\nd " + std::to_string(d) + "\ncount " +
         std::to_string(primes.size()) + "\ncrc32 " + crc_hex(body) + "\n" + body;
}

std::optional<std::vector<Poly>> PrimeCache::parse(const FieldPtr& field, int d, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next = [&]() { return static_cast<bool>(std::getline(in, line)); };
  if (!next() || line != "# drinfeld prime table") return std::nullopt;
  if (!next() || line != r_line(*field)) return std::nullopt;
  if (!next() || line != "d " + std::to_string(d)) return std::nullopt;
  if (!next() || line.rfind("count ", 0) != 0) return std::nullopt;
  std::size_t count = 0;
  try {
    count = std::stoul(line.substr(6));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!next() || line.rfind("crc32 ", 0) != 0) return std::nullopt;
  const std::string crc = line.substr(6);
  std::vector<Poly> primes;
  std::string body;
  while (next()) {
    body += line + "\n";
    try {
      Poly f = parse_poly(field, line);
      if (f.degree() != d || !f.is_monic()) return std::nullopt;
      primes.push_back(std::move(f));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  if (primes.size() != count || crc_hex(body) != crc) return std::nullopt;
  return primes;
}

std::vector<Poly> PrimeCache::primes_of_degree(const FieldPtr& field, int d, const DeskBounds& bounds) {
  if (!dir_) return monic_irreducibles_of_degree(field, d, bounds);
  const std::filesystem::path path = table_path(*field, d);
  bool existed = false;
  {
    std::ifstream in(path);
    if (in) {
      existed = true;
      std::ostringstream text;
      text << in.rdbuf();
      if (auto primes = parse(field, d, text.str())) {
        ++hits_;
        return *primes;
      }
    }
  }
  std::vector<Poly> primes = monic_irreducibles_of_degree(field, d, bounds);
  if (existed) {
    ++repairs_;
  } else {
    ++misses_;
  }
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::invalid_argument, "cannot write prime table " + tmp.string());
    out << render(*field, d, primes);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::invalid_argument, "cannot install prime table " + path.string() + ": " + ec.message());
  return primes;
}

std::vector<Poly> PrimeCache::primes_up_to(const FieldPtr& field, int d_max, const DeskBounds& bounds) {
  std::vector<Poly> out;
  for (int d = 1; d <= d_max; ++d) {
    std::vector<Poly> layer = primes_of_degree(field, d, bounds);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace drinfeld
