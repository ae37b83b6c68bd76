#include "carnot/catalog.hpp"

#include <charconv>

namespace carnot::catalog {

namespace detail {
extern const std::string_view example1_16_text;
extern const std::string_view example2_17_text;
extern const std::string_view deformed_h_16_text;
}  // namespace detail

namespace {

Entry from_text(std::string name, std::string description, std::string_view text, Expected expected,
                std::string provenance) {
  AlgebraFile file = parse_algebra(text);
  const auto& L = file.algebra;
  return {std::move(name), std::move(description), LieAlgebra::validated(L.dim(), L.table(), L.labels()),
          std::move(file.layers), std::move(expected), std::move(provenance)};
}

LieAlgebra heisenberg(std::size_t n) {
  LieAlgebra::Table t;
  for (std::size_t i = 0; i < n; ++i) t[{i, n + i}] = unit_vector(2 * n + 1, 2 * n);
  return LieAlgebra::validated(2 * n + 1, t);
}

Entry heisenberg_entry(std::string name, std::size_t n) {
  const std::size_t dim = 2 * n + 1;
  Expected e{2, {2 * n, 1}, n * (2 * n + 1) + 1, false, true};
  return {std::move(name),
          "Heisenberg algebra of dimension " + std::to_string(dim) + ", [e_i, e_{n+i}] = e_{2n+1}",
          heisenberg(n),
          LayerRanges{{1, 2 * n}, {dim, dim}},
          e,
          "classical control; dim g0 = dim csp(2n)"};
}

Entry abelian_entry(std::string name, std::size_t n) {
  Expected e{1, {n}, n * n, false, true};
  std::optional<LayerRanges> layers;
  if (n >= 2) layers = LayerRanges{{1, n}};
  else e.layer_dims.clear();
  return {std::move(name), "abelian algebra of dimension " + std::to_string(n), LieAlgebra::abelian(n),
          layers, e, "classical control; infinite prolongation"};
}

Entry free_step2_rank3() {
  LieAlgebra::Table t;
  t[{0, 1}] = unit_vector(6, 3);
  t[{0, 2}] = unit_vector(6, 4);
  t[{1, 2}] = unit_vector(6, 5);
  Expected e{2, {3, 3}, std::nullopt, false, true};
  return {"free_step2_rank3", "free 2-step nilpotent algebra on 3 generators", LieAlgebra::validated(6, t),
          LayerRanges{{1, 3}, {4, 6}}, e, "classical control; large g0"};
}

// "family(n)" -> n
std::optional<std::size_t> parameter(std::string_view name, std::string_view family) {
  if (name.size() < family.size() + 3 || name.substr(0, family.size()) != family) return std::nullopt;
  auto rest = name.substr(family.size());
  if (rest.front() != '(' || rest.back() != ')') return std::nullopt;
  rest = rest.substr(1, rest.size() - 2);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || n == 0) return std::nullopt;
  return n;
}

}  // namespace

std::optional<std::string_view> source_text(std::string_view name) {
  if (name == "example1_16") return detail::example1_16_text;
  if (name == "example2_17") return detail::example2_17_text;
  if (name == "deformed_h_16") return detail::deformed_h_16_text;
  return std::nullopt;
}

Entry get(std::string_view name) {
  if (name == "example1_16")
    return from_text("example1_16", "16-dim 2-step Carnot algebra with 26 brackets; ultrarigid",
                     detail::example1_16_text, Expected{2, {10, 6}, 1, true, true},
                     "published 16-dimensional ultrarigid example");
  if (name == "example2_17")
    return from_text("example2_17", "17-dim 3-step extension of example1_16 by [e1,e11] = e17; ultrarigid",
                     detail::example2_17_text, Expected{3, {10, 6, 1}, 1, true, true},
                     "published 17-dimensional ultrarigid example");
  if (name == "deformed_h_16")
    return from_text("deformed_h_16", "example1_16 deformed by [e1,e11] = e14; nilpotent, not stratifiable",
                     detail::deformed_h_16_text, Expected{3, {}, std::nullopt, std::nullopt, false},
                     "published non-stratifiable deformation");
  if (name == "heisenberg_3") return heisenberg_entry("heisenberg_3", 1);
  if (name == "free_step2_rank3") return free_step2_rank3();
  if (auto n = parameter(name, "heisenberg_2n1"))
    return heisenberg_entry("heisenberg_2n1(" + std::to_string(*n) + ")", *n);
  if (auto n = parameter(name, "abelian")) return abelian_entry("abelian(" + std::to_string(*n) + ")", *n);
  throw UnknownCatalogEntry("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<Listing> list() {
  std::vector<Listing> out;
  for (const char* name : {"example1_16", "example2_17", "deformed_h_16", "heisenberg_3", "heisenberg_2n1(2)",
                           "abelian(2)", "free_step2_rank3"})
    out.push_back({name, get(name).description});
  return out;
}

}  // namespace carnot::catalog
