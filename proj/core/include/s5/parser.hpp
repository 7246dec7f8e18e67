// Text formats for S5 formulas.
//
// Native grammar, loosest to tightest binding:
//
//   formula := implication ( "<->" implication )*
//   implication := disjunction ( "->" implication )?
//   disjunction := conjunction ( "|" conjunction )*
//   conjunction := unary ( "&" unary )*
//   unary := "~" unary | ("box" | "[]") unary | ("dia" | "<>") unary | primary
//   primary := IDENT | "(" formula ")"
//
// The intohylo reader accepts the "begin ... end" wrapper used by modal logic
// benchmark collections, with "[r1]"/"<r1>" modalities, "true"/"false",
// "-->"/"<-->", "%" comments and ";" separating conjoined formulas.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "s5/formula.hpp"

namespace s5 {

enum class SourceFormat { native, intohylo };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  SourceFormat format = SourceFormat::native;
  // Accept identifiers with the reserved prefix; only used to read back
  // rendered normal forms.
  bool allow_reserved = false;
};

Formula parse(std::string_view text, SourceFormat format = SourceFormat::native);
Formula parse(std::string_view text, const ParseOptions& options);

/// Guesses the format from the file extension (".intohylo" or ".s5").
SourceFormat format_for_path(const std::filesystem::path& path);

/// Native syntax with the parentheses needed to re-parse the same tree:
/// parse(render(f)) == f.
std::string render(const Formula& f);

/// Rewrites implication and equivalence into negation, conjunction and
/// disjunction.
Formula desugar(const Formula& f);

}  // namespace s5
