#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carnot/error.hpp"
#include "carnot/lie_algebra.hpp"

namespace carnot {

/// 1-based inclusive basis index ranges, one per layer.
using LayerRanges = std::vector<std::pair<std::size_t, std::size_t>>;

enum class ParseErrorKind { Syntax, Range, DuplicatePair, BadFraction };

const char* to_string(ParseErrorKind k);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }  ///< 1-based, 0 for whole-file errors

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Contents of an algebra file:
///
///   # comment
///   dim 3
///   layers 1..2; 3
///   bracket 1 2 = 3
///   bracket 1 3 = 1/2*2 - 3*3
///
/// The algebra is returned unvalidated so the Jacobi checker can report on
/// broken tables.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<LayerRanges> layers;
};

AlgebraFile parse_algebra(std::string_view text);

/// Canonical text: optional comment lines, `dim`, optional `layers`, then one
/// `bracket` line per stored pair in index order.
std::string emit_algebra(const LieAlgebra& L, const std::optional<LayerRanges>& layers = std::nullopt,
                         std::string_view comment = {});

/// Parses "1..10" (or a single index "17") as a 1-based inclusive range.
std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

std::string format_ranges(const LayerRanges& ranges);

}  // namespace carnot
