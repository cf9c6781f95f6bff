#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/stratified.hpp"

namespace witt {

/// Contents of a `.scx` space file.
///
///     dim 2
///     facets
///     0 1 2
///     ...
///     end
///     filtration          # optional
///     X0: 7; 8
///     end
///     orientation         # optional: <facet line> <+|->
///     1 +
///     end
struct SpaceFile {
  SimplicialComplex complex;
  /// Declared skeleta X_d; nullopt when the file has no filtration block.
  /// An empty block declares the trivial stratification.
  std::optional<std::map<int, SimplicialComplex>> filtration;
  /// Sign per facet of `complex` (facets() order, sorted vertex order).
  std::optional<Orientation> orientation;

  bool has_filtration() const { return filtration.has_value(); }
  /// The declared stratification, validated.
  StratifiedSpace declared_space() const;
};

/// Throws ParseError (with line and column) on malformed text and
/// ValidationError when the content violates an invariant.
SpaceFile parse_space(const std::string& text);
SpaceFile read_space_file(const std::filesystem::path& path);
/// Canonical text: facets sorted, declared skeleta listed by their facets.
std::string serialize_space(const SpaceFile& file);

SpaceFile space_file_of(const SimplicialComplex& x);
/// Declares X_d only where the filtration changes.
SpaceFile space_file_of(const StratifiedSpace& s);

}  // namespace witt
