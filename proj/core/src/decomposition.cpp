#include "hullsum/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

#include "hullsum/combinations.hpp"
#include "hullsum/geometry.hpp"

namespace hullsum {

using linalg::Vec;

namespace {

using IndexSimplices = std::vector<std::vector<std::size_t>>;

/// Hyperplane through all vertices but `drop`, oriented so vertex `drop` is
/// strictly negative.
Hyperplane facet_plane(const std::vector<Vec>& vertices, std::size_t drop) {
    std::vector<Vec> facet;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i != drop) facet.push_back(vertices[i]);
    }
    auto plane = Hyperplane::through(facet);
    if (!plane) throw Error("degenerate simplex");
    return plane->evaluate(vertices[drop]) > 0 ? plane->flipped() : *plane;
}

std::size_t shared_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

std::vector<std::size_t> shared_vertices(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains_all(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::vector<Vec> gather(const std::vector<Vec>& coords, const std::vector<std::size_t>& idx) {
    std::vector<Vec> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(coords[i]);
    return out;
}

/// Boundary facets of `simplices` strictly visible from `apex`. `coords` is
/// indexed by ground index and holds full-dimensional intrinsic coordinates.
std::vector<Face> visible_faces(const IndexSimplices& simplices, const std::vector<Vec>& coords,
                                const Vec& apex) {
    std::vector<Face> out;
    for (std::size_t s = 0; s < simplices.size(); ++s) {
        const auto& verts = simplices[s];
        const auto local = gather(coords, verts);
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                if (i != drop) facet.push_back(verts[i]);
            }
            std::size_t owners = 0;
            for (const auto& other : simplices) owners += contains_all(other, facet) ? 1 : 0;
            if (owners != 1) continue;
            if (facet_plane(local, drop).evaluate(apex) > 0) out.push_back(Face{std::move(facet), s});
        }
    }
    return out;
}

/// `idx` are ground indices; `local` their coordinates, spanning R^r.
IndexSimplices place(std::vector<std::size_t> idx, std::vector<Vec> local, const PointSet& ground) {
    const std::size_t r = local.front().size();
    if (idx.size() == r + 1) {
        std::sort(idx.begin(), idx.end());
        return {idx};
    }

    // The lexicographic maximum of a finite set is always one of its vertices.
    std::size_t top = 0;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (ground[idx[i]] > ground[idx[top]]) top = i;
    }
    const std::size_t apex_index = idx[top];
    const Vec apex = local[top];
    idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(top));
    local.erase(local.begin() + static_cast<std::ptrdiff_t>(top));

    if (affine_dimension(local) == r) {
        IndexSimplices result = place(idx, local, ground);
        std::vector<Vec> by_ground(ground.size());
        for (std::size_t i = 0; i < idx.size(); ++i) by_ground[idx[i]] = local[i];
        const auto faces = visible_faces(result, by_ground, apex);
        for (const auto& face : faces) {
            auto verts = face.vertices;
            verts.push_back(apex_index);
            std::sort(verts.begin(), verts.end());
            result.push_back(std::move(verts));
        }
        return result;
    }

    // The remaining points lie in a hyperplane: decompose it and cone.
    const auto frame = linalg::AffineFrame::of(local);
    IndexSimplices result = place(idx, frame.coordinates_all(local), ground);
    for (auto& verts : result) {
        verts.push_back(apex_index);
        std::sort(verts.begin(), verts.end());
    }
    return result;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> facet_adjacency(const std::vector<Simplex>& simplices,
                                                                 std::size_t intrinsic_dim) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        for (std::size_t j = i + 1; j < simplices.size(); ++j) {
            if (shared_count(simplices[i].vertices, simplices[j].vertices) == intrinsic_dim) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

std::size_t intrinsic_dimension(const Decomposition& d) { return affine_dimension(d.ground); }

std::vector<Vec> intrinsic_coordinates(const Decomposition& d) {
    const auto rational = d.ground.to_rational();
    return linalg::AffineFrame::of(rational).coordinates_all(rational);
}

Decomposition decompose(const PointSet& b) {
    if (b.size() < 2) throw Error("decomposition needs at least 2 points");
    Decomposition d;
    d.ground = b;
    std::vector<std::size_t> idx(b.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (auto& verts : place(idx, intrinsic_coordinates(d), b)) d.simplices.push_back(Simplex{std::move(verts)});
    d.adjacency = facet_adjacency(d.simplices, intrinsic_dimension(d));
    return d;
}

void validate(const Decomposition& d) {
    if (d.ground.size() < 2) throw Error("decomposition ground set needs at least 2 points");
    const std::size_t r = intrinsic_dimension(d);
    const auto coords = intrinsic_coordinates(d);
    for (std::size_t s = 0; s < d.simplices.size(); ++s) {
        const auto& v = d.simplices[s].vertices;
        const std::string name = "simplex " + std::to_string(s);
        if (v.size() != r + 1) throw Error(name + " has " + std::to_string(v.size()) + " vertices, expected " + std::to_string(r + 1));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] >= d.ground.size()) throw Error(name + " references invalid index " + std::to_string(v[i]));
            if (i > 0 && v[i] <= v[i - 1]) throw Error(name + " indices must be strictly ascending");
        }
        if (affine_dimension(gather(coords, v)) != r) throw Error(name + " is degenerate");
        for (std::size_t t = 0; t < s; ++t) {
            if (d.simplices[t] == d.simplices[s]) throw Error(name + " duplicates simplex " + std::to_string(t));
        }
    }
}

std::vector<Face> visible_boundary_faces(const Decomposition& d, const LatticePoint& apex) {
    validate(d);
    if (apex.dim() != d.ground.dim()) throw Error("dimension mismatch between apex and ground set");
    const auto rational = d.ground.to_rational();
    const auto frame = linalg::AffineFrame::of(rational);
    const auto apex_local = frame.coordinates(apex.to_rational());
    if (!apex_local) throw Error("apex not in the affine hull of the ground set");
    if (conv_contains(rational, apex.to_rational())) throw Error("apex not exterior");
    IndexSimplices simplices;
    for (const auto& s : d.simplices) simplices.push_back(s.vertices);
    return visible_faces(simplices, frame.coordinates_all(rational), *apex_local);
}

std::vector<Vec> intersection_vertices(const std::vector<Vec>& s, const std::vector<Vec>& t) {
    const std::size_t r = s.front().size();
    std::vector<Hyperplane> planes;
    for (std::size_t drop = 0; drop < s.size(); ++drop) planes.push_back(facet_plane(s, drop));
    const std::size_t s_planes = planes.size();
    for (std::size_t drop = 0; drop < t.size(); ++drop) planes.push_back(facet_plane(t, drop));

    // Fast reject: a facet plane of one simplex with the other strictly outside.
    for (std::size_t p = 0; p < planes.size(); ++p) {
        const auto& other = p < s_planes ? t : s;
        if (std::all_of(other.begin(), other.end(), [&](const Vec& v) { return planes[p].evaluate(v) > 0; })) {
            return {};
        }
    }

    std::vector<Vec> out;
    linalg::Matrix a(r);
    Vec rhs(r);
    for_each_combination(planes.size(), r, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < r; ++i) {
            a[i] = planes[idx[i]].normal();
            rhs[i] = planes[idx[i]].offset();
        }
        auto res = linalg::solve(a, rhs);
        if (res.status != linalg::SolveStatus::unique) return true;
        for (const auto& p : planes) {
            if (p.evaluate(res.x) > 0) return true;
        }
        out.push_back(std::move(res.x));
        return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RegularPositionReport verify_regular_position(const Decomposition& d) {
    validate(d);
    const auto coords = intrinsic_coordinates(d);
    RegularPositionReport report;
    for (std::size_t i = 0; i < d.simplices.size(); ++i) {
        const auto& vi = d.simplices[i].vertices;
        for (std::size_t j = i + 1; j < d.simplices.size(); ++j) {
            const auto& vj = d.simplices[j].vertices;
            const auto shared = gather(coords, shared_vertices(vi, vj));
            for (const auto& v : intersection_vertices(gather(coords, vi), gather(coords, vj))) {
                if (!conv_contains(shared, v)) {
                    report.passed = false;
                    report.offending_pair = {i, j};
                    report.offending_vertex = v;
                    return report;
                }
            }
        }
    }
    return report;
}

CoverReport verify_cover(const Decomposition& d) {
    validate(d);
    const std::size_t r = intrinsic_dimension(d);
    const auto coords = intrinsic_coordinates(d);
    CoverReport report;
    report.simplex_volume_sum = 0;
    for (const auto& s : d.simplices) report.simplex_volume_sum += simplex_volume(gather(coords, s.vertices));
    report.hull_volume = hull_volume(coords);
    for (std::size_t i = 0; i < d.simplices.size() && !report.overlapping_pair; ++i) {
        for (std::size_t j = i + 1; j < d.simplices.size(); ++j) {
            const auto verts =
                intersection_vertices(gather(coords, d.simplices[i].vertices), gather(coords, d.simplices[j].vertices));
            if (!verts.empty() && affine_dimension(verts) == r) {
                report.overlapping_pair = {i, j};
                break;
            }
        }
    }
    report.passed = !report.overlapping_pair && report.simplex_volume_sum == report.hull_volume;
    return report;
}

AdjacencyReport verify_adjacency_chain(const Decomposition& d) {
    validate(d);
    const std::size_t n = d.simplices.size();
    const auto computed = facet_adjacency(d.simplices, intrinsic_dimension(d));
    AdjacencyReport report;
    report.adjacency_consistent = computed == d.adjacency;

    std::vector<std::vector<std::size_t>> graph(n);
    for (const auto& [i, j] : computed) {
        graph[i].push_back(j);
        graph[j].push_back(i);
    }
    for (std::size_t i = 1; i < n; ++i) {
        const bool linked = std::any_of(graph[i].begin(), graph[i].end(), [i](std::size_t j) { return j < i; });
        if (!linked) {
            report.order_ok = false;
            break;
        }
    }

    std::vector<std::size_t> order;
    if (n > 0) {
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            order.push_back(cur);
            for (std::size_t next : graph[cur]) {
                if (!seen[next]) {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    report.connected = order.size() == n;
    if (report.connected && !report.order_ok) report.reordering = std::move(order);
    report.passed = report.connected && report.order_ok && report.adjacency_consistent;
    return report;
}

VertexPropertyReport verify_vertex_property(const Decomposition& d) {
    validate(d);
    const auto coords = intrinsic_coordinates(d);
    VertexPropertyReport report;
    for (std::size_t s = 0; s < d.simplices.size(); ++s) {
        const auto& verts = d.simplices[s].vertices;
        const auto local = gather(coords, verts);
        for (std::size_t p = 0; p < coords.size(); ++p) {
            if (std::binary_search(verts.begin(), verts.end(), p)) continue;
            if (barycentric(local, coords[p])) {
                report.passed = false;
                report.offending = {s, p};
                return report;
            }
        }
    }
    return report;
}

DecompositionCheck check_decomposition(const Decomposition& d) {
    return {verify_regular_position(d), verify_cover(d), verify_adjacency_chain(d), verify_vertex_property(d)};
}

}  // namespace hullsum
