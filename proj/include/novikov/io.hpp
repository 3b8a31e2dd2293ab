#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "novikov/algebra.hpp"
#include "novikov/forms.hpp"

namespace novikov {

/// Contents of an algebra file (see docs/algebra-file.md). Indices in the file are 1-based.
struct AlgebraFile {
  Algebra algebra;
  std::optional<SymForm> form;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

/// Throws ParseError, IndexOutOfRange, NonSymmetricForm or ZeroDenominator.
AlgebraFile parse_algebra_file(std::string_view text);

/// Canonical text: products sorted by (left, right), terms by basis index, zero
/// coefficients omitted, rationals as "p/q" strings.
std::string serialize_algebra_file(const AlgebraFile& file);

}  // namespace novikov
