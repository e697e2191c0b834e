#pragma once

#include "gridpath/chain.hpp"
#include "gridpath/grid.hpp"

#include <string>
#include <vector>

namespace gridpath {

enum class CycleClass { not_cycle, regular, smart };

struct CrossingWitness {
    std::size_t edge_i = 0;
    std::size_t edge_j = 0;
    PointK point;
};

struct VerificationReport {
    bool covers_all = false;
    // grid point (lexicographic) -> number of maximal contact intervals
    std::vector<std::pair<std::vector<int>, int>> visit_counts;
    bool repeated_edges = false;
    bool noncollinear_ok = false;
    bool uncrossing = false;
    std::vector<CrossingWitness> crossing_witnesses;
    bool containment_ok = false;
    std::size_t link_length_h = 0;
    std::vector<double> length_classes; // ascending, eps-clustered
    double total_length_lambda = 0.0;
    CycleClass cycle_class = CycleClass::not_cycle;
};

/// Number of maximal contact intervals between p and the chain, in traversal
/// order: interior incidence counts 1, incidence at a vertex shared by two
/// consecutive edges merges into 1, and for cycles the wrap-around vertex
/// merges once.
int visit_count(const PointK& p, const Chain& c, double eps = geometry_epsilon());

/// Full verification of a chain against a grid and a bounding box:
/// exact-once coverage (at-least-once for trails), repeated edges (unordered
/// endpoint pairs), non-collinearity of consecutive edges, pairwise
/// uncrossing (non-adjacent edges disjoint, adjacent edges meeting only at
/// the shared vertex), containment, link length, eps-clustered length
/// classes, total length, and regular/smart cycle classification.
VerificationReport verify(const Chain& c, const GridSpec& g, const Box& box,
                          double eps = geometry_epsilon());

/// The predicate set the chain kind demands: coverage, no repeated edges,
/// non-collinearity and containment always; uncrossing only for paths.
bool report_passes(const VerificationReport& r, ChainKind kind);

std::string to_string(CycleClass c);
std::string format_report(const VerificationReport& r);

} // namespace gridpath
