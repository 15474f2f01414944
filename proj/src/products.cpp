#include "fallgraph/products.hpp"

#include <sstream>

#include "fallgraph/errors.hpp"
#include "fallgraph/io.hpp"

namespace fallgraph {

namespace {

void check_factor(const Graph& g, const Coloring& c, const char* which) {
    if (c.size() != g.order()) {
        std::ostringstream msg;
        msg << "product: coloring of " << which << " has wrong size";
        throw InputError(msg.str());
    }
    if (!c.total()) {
        std::ostringstream msg;
        msg << "product: IMPROPER_INPUT (coloring of " << which << " is not total)";
        throw InputError(msg.str());
    }
    if (!is_proper(g, c)) {
        std::ostringstream msg;
        msg << "product: IMPROPER_INPUT (coloring of " << which << " is not proper)";
        throw InputError(msg.str());
    }
}

[[noreturn]] void archive_failure(const char* which, int d, const Graph& g, const Coloring& fg,
                                  const Graph& h, const Coloring& fh) {
    // A failure here contradicts the product construction's contract; dump
    // the whole instance so it can be archived and replayed.
    std::ostringstream msg;
    msg << "PROOF_VIOLATION: " << which << " product coloring is not distance-" << d
        << " fall\nG:\n"
        << serialize_graph(g) << "fG:\n"
        << serialize_coloring(fg) << "H:\n"
        << serialize_graph(h) << "fH:\n"
        << serialize_coloring(fh);
    throw ProofViolation(msg.str());
}

} // namespace

ProductColoring sum_product_coloring(const Graph& g, const Coloring& fg, const Graph& h,
                                     const Coloring& fh, std::optional<int> fall_distance,
                                     int size_cap) {
    check_factor(g, fg, "G");
    check_factor(h, fh, "H");
    if (fg.k != fh.k)
        throw InputError("sum_product_coloring: PALETTE_MISMATCH");
    int k = fg.k;
    Graph product = cartesian_product(g, h, size_cap);
    std::vector<int> assignment(product.order());
    for (int gv = 0; gv < g.order(); ++gv)
        for (int hv = 0; hv < h.order(); ++hv)
            assignment[gv * h.order() + hv] = (fg.assignment[gv] + fh.assignment[hv]) % k;
    Coloring c(k, std::move(assignment));
    if (fall_distance && !is_distance_fall(product, c, *fall_distance))
        archive_failure("sum", *fall_distance, g, fg, h, fh);
    return {std::move(product), std::move(c)};
}

ProductColoring pair_product_coloring(const Graph& g, const Coloring& fg, const Graph& h,
                                      const Coloring& fh,
                                      std::optional<std::pair<int, int>> fall_distances,
                                      int size_cap) {
    check_factor(g, fg, "G");
    check_factor(h, fh, "H");
    int k = fg.k * fh.k;
    Graph product = cartesian_product(g, h, size_cap);
    std::vector<int> assignment(product.order());
    for (int gv = 0; gv < g.order(); ++gv)
        for (int hv = 0; hv < h.order(); ++hv)
            assignment[gv * h.order() + hv] = fg.assignment[gv] * fh.k + fh.assignment[hv];
    Coloring c(k, std::move(assignment));
    if (fall_distances) {
        int d = fall_distances->first + fall_distances->second;
        if (!is_distance_fall(product, c, d))
            archive_failure("pair", d, g, fg, h, fh);
    }
    return {std::move(product), std::move(c)};
}

} // namespace fallgraph
