#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "rolecheck/cgs.hpp"
#include "rolecheck/model.hpp"

namespace rolecheck {

// Result of parsing a model file, which declares its own kind in the header.
struct ParsedModel {
  std::variant<Rcgs, Cgs> model;

  bool is_rcgs() const { return std::holds_alternative<Rcgs>(model); }
  Rcgs& rcgs() { return std::get<Rcgs>(model); }
  const Rcgs& rcgs() const { return std::get<Rcgs>(model); }
  Cgs& cgs() { return std::get<Cgs>(model); }
  const Cgs& cgs() const { return std::get<Cgs>(model); }
};

// Strict parse: syntax, reference resolution, arity/sum checks, then full
// validation and dense-table compilation. Throws parse_error (with input
// coordinates) or error (validation summary).
ParsedModel parse_model_any(std::string_view text,
                            std::int64_t compile_cap = Rcgs::default_compile_cap);

// Parse without validation or compilation; used to inspect invalid models.
// Still performs syntax and local semantic checks that need line positions.
ParsedModel parse_model_any_raw(std::string_view text);

// Kind-fixed conveniences; throw error when the file declares the other kind.
Rcgs parse_model(std::string_view text,
                 std::int64_t compile_cap = Rcgs::default_compile_cap);
Cgs parse_cgs(std::string_view text,
              std::int64_t compile_cap = Cgs::default_compile_cap);

// Canonical text form: header, then state blocks in declaration order with
// every transition spelled out in profile enumeration order (no default
// clause). Requires a compiled model; parse(serialize(m)) == m.
std::string serialize_model(const Rcgs& m);
std::string serialize_model(const Cgs& m);

}  // namespace rolecheck
