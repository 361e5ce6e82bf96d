#include "hullsum/partition.hpp"

#include <algorithm>

#include "hullsum/geometry.hpp"
#include "hullsum/sumset.hpp"

namespace hullsum {

PointSet simplex_points(const Decomposition& d, std::size_t i) {
    std::vector<LatticePoint> pts;
    for (std::size_t v : d.simplices.at(i).vertices) pts.push_back(d.ground[v]);
    return PointSet(d.ground.dim(), std::move(pts));
}

InducedPartition induce_partition(const PointSet& a, const Decomposition& d) {
    validate(d);
    if (a.dim() != d.ground.dim()) throw HypothesisError("A and B have different dimensions");
    const auto rational = d.ground.to_rational();
    const auto frame = linalg::AffineFrame::of(rational);
    const auto coords = frame.coordinates_all(rational);
    std::vector<std::vector<linalg::Vec>> simplex_coords;
    for (const auto& s : d.simplices) {
        auto& local = simplex_coords.emplace_back();
        for (std::size_t v : s.vertices) local.push_back(coords[v]);
    }

    std::vector<std::vector<LatticePoint>> cells(d.simplices.size());
    for (const auto& p : a) {
        const auto local = frame.coordinates(p.to_rational());
        std::size_t owner = d.simplices.size();
        if (local) {
            for (std::size_t s = 0; s < simplex_coords.size(); ++s) {
                if (barycentric(simplex_coords[s], *local)) {
                    owner = s;
                    break;
                }
            }
        }
        if (owner == d.simplices.size()) throw HypothesisError("A ⊄ conv B (point " + p.to_string() + ")");
        cells[owner].push_back(p);
    }

    InducedPartition out{d, {}};
    for (auto& c : cells) out.cells.emplace_back(a.dim(), std::move(c));
    return out;
}

DisjointSumsReport check_disjoint_sums(const InducedPartition& p, std::size_t k) {
    const auto& d = p.decomposition;
    if (p.cells.size() != d.simplices.size()) throw Error("partition has a cell count different from its simplex count");
    DisjointSumsReport report;
    std::vector<std::pair<LatticePoint, std::size_t>> tagged;
    std::vector<LatticePoint> all_points;

    for (std::size_t i = 0; i < p.cells.size(); ++i) {
        const PointSet& cell = p.cells[i];
        const PointSet vertices = simplex_points(d, i);
        if (i > 0 && intersection_size(cell, vertices) > 1) report.later_cells_meet_vertices_at_most_once = false;
        if (cell.empty()) {
            report.cell_sum_sizes.push_back(0);
            continue;
        }
        all_points.insert(all_points.end(), cell.begin(), cell.end());
        auto sums = a_plus_kb(cell, vertices, k);
        report.cell_sum_sizes.push_back(sums.cardinality());
        report.cell_sum_total += sums.cardinality();
        for (const auto& s : sums.points) tagged.emplace_back(s, i);
    }

    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 1; i < tagged.size(); ++i) {
        if (tagged[i].first == tagged[i - 1].first) {
            report.pairwise_disjoint = false;
            report.intersecting_cells = {tagged[i - 1].second, tagged[i].second};
            break;
        }
    }

    if (!all_points.empty()) {
        std::sort(all_points.begin(), all_points.end());
        all_points.erase(std::unique(all_points.begin(), all_points.end()), all_points.end());
        const PointSet a(d.ground.dim(), std::move(all_points));
        report.full_sum_size = a_plus_kb(a, d.ground, k).cardinality();
    }
    report.sum_within_total = report.cell_sum_total <= report.full_sum_size;
    report.passed = report.pairwise_disjoint && report.sum_within_total;
    return report;
}

}  // namespace hullsum
