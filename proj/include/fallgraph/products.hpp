#pragma once

#include <optional>
#include <utility>

#include "fallgraph/coloring.hpp"
#include "fallgraph/graph.hpp"

namespace fallgraph {

struct ProductColoring {
    Graph product;
    Coloring coloring;
};

/// Colors vertex (g,h) of G box H with (fG(g) + fH(h)) mod k. Both inputs must
/// be total, proper, and share the palette size. If fG is distance-d fall the
/// product coloring is too; pass fall_distance to have that claim checked
/// (ProofViolation on failure, with the instance serialized for archiving).
ProductColoring sum_product_coloring(const Graph& g, const Coloring& fg, const Graph& h,
                                     const Coloring& fh,
                                     std::optional<int> fall_distance = std::nullopt,
                                     int size_cap = kDefaultSizeCap);

/// Colors vertex (g,h) of G box H with the flattened pair fG(g)*kH + fH(h),
/// palette kG*kH. If fG is distance-dG fall and fH distance-dH fall, the
/// result is distance-(dG+dH) fall; pass fall_distances = (dG, dH) to have
/// that claim checked.
ProductColoring pair_product_coloring(const Graph& g, const Coloring& fg, const Graph& h,
                                      const Coloring& fh,
                                      std::optional<std::pair<int, int>> fall_distances = std::nullopt,
                                      int size_cap = kDefaultSizeCap);

} // namespace fallgraph
