#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carnot/algebra_file.hpp"

namespace carnot::catalog {

/// Verdicts an entry is expected to produce. Unset fields are not asserted.
struct Expected {
  std::size_t step = 0;
  std::vector<std::size_t> layer_dims;
  std::optional<std::size_t> g0_dim;
  std::optional<bool> ultrarigid;
  std::optional<bool> stratifiable;
};

struct Entry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  std::optional<LayerRanges> declared_layers;
  Expected expected;
  std::string provenance;
};

struct Listing {
  std::string name;
  std::string description;
};

/// Names: example1_16, example2_17, deformed_h_16, heisenberg_3,
/// heisenberg_2n1(n), abelian(n), free_step2_rank3. Throws
/// UnknownCatalogEntry.
Entry get(std::string_view name);

/// Stable order; parametric families appear with a representative parameter.
std::vector<Listing> list();

/// Raw text of a bundled algebra file, or nothing for generated entries.
std::optional<std::string_view> source_text(std::string_view name);

}  // namespace carnot::catalog
