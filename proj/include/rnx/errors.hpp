// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rnx {

// Error categories surfaced through both the C++ and the C interfaces.
enum class errc {
  io,
  syntax,
  autocatalysis,
  duplicate_label,
  empty_reaction,
  constraint_infeasible,
  dimension_mismatch,
  too_large,
  combinatorial_blowup,
  domain_mismatch,
  witness_not_found,
  invalid_argument,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, int line = 0)
      : std::runtime_error(std::move(message)), code_(code), line_(line) {}

  errc code() const { return code_; }

  // 1-based input line for parse diagnostics, 0 when not applicable.
  int line() const { return line_; }

 private:
  errc code_;
  int line_;
};

[[noreturn]] inline void fail(errc code, std::string message, int line = 0) {
  throw Error(code, std::move(message), line);
}

}  // namespace rnx
