#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hullsum/linalg.hpp"
#include "hullsum/types.hpp"

namespace hullsum {

/// Simplex given by ascending indices into the ground set.
struct Simplex {
    std::vector<std::size_t> vertices;
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// A facet of simplex `owner`, as ascending ground indices.
struct Face {
    std::vector<std::size_t> vertices;
    std::size_t owner = 0;
    friend bool operator==(const Face&, const Face&) = default;
};

/// Simplicial decomposition of conv(ground). Simplices live in the affine
/// hull of the ground set, so a simplex has intrinsic dimension + 1 vertices.
struct Decomposition {
    PointSet ground;
    std::vector<Simplex> simplices;
    std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // i < j, sorted

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Placing construction: repeatedly removes the lexicographically largest
/// point (always a vertex), decomposes the rest, then cones the boundary
/// facets visible from the removed point, or cones everything when the rest
/// drops a dimension.
Decomposition decompose(const PointSet& b);

/// Pairs of simplices sharing a facet, i.e. intrinsic-dimension many vertices.
std::vector<std::pair<std::size_t, std::size_t>> facet_adjacency(const std::vector<Simplex>& simplices,
                                                                 std::size_t intrinsic_dim);

/// Throws Error unless every index is valid, simplices are distinct and each
/// one is a nondegenerate simplex of full intrinsic dimension.
void validate(const Decomposition& d);

std::size_t intrinsic_dimension(const Decomposition& d);

/// Ground points in the intrinsic frame of the ground's affine hull.
std::vector<linalg::Vec> intrinsic_coordinates(const Decomposition& d);

/// Boundary facets (owned by exactly one simplex) whose hyperplane strictly
/// separates `apex` from the owning simplex. Throws Error("apex not exterior")
/// when apex lies in conv(ground).
std::vector<Face> visible_boundary_faces(const Decomposition& d, const LatticePoint& apex);

/// Vertices of the polytope conv(s) ∩ conv(t) for two full-dimensional
/// simplices in R^r, by enumerating r-subsets of their combined facet
/// equalities. Sorted and deduplicated.
std::vector<linalg::Vec> intersection_vertices(const std::vector<linalg::Vec>& s,
                                               const std::vector<linalg::Vec>& t);

struct RegularPositionReport {
    bool passed = true;
    std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
    std::optional<linalg::Vec> offending_vertex;  // intrinsic coordinates
};

struct CoverReport {
    bool passed = true;
    Rational simplex_volume_sum;
    Rational hull_volume;
    std::optional<std::pair<std::size_t, std::size_t>> overlapping_pair;
};

struct AdjacencyReport {
    bool passed = true;
    bool connected = true;
    bool order_ok = true;
    bool adjacency_consistent = true;
    /// A simplex order satisfying the chain property, when the stored order
    /// fails it but the facet graph is connected.
    std::optional<std::vector<std::size_t>> reordering;
};

struct VertexPropertyReport {
    bool passed = true;
    std::optional<std::pair<std::size_t, std::size_t>> offending;  // (simplex, ground point)
};

RegularPositionReport verify_regular_position(const Decomposition& d);
CoverReport verify_cover(const Decomposition& d);
AdjacencyReport verify_adjacency_chain(const Decomposition& d);
/// Each ground point lying in a simplex must be one of its vertices.
VertexPropertyReport verify_vertex_property(const Decomposition& d);

struct DecompositionCheck {
    RegularPositionReport regular;
    CoverReport cover;
    AdjacencyReport adjacency;
    VertexPropertyReport vertex_property;
    bool passed() const {
        return regular.passed && cover.passed && adjacency.passed && vertex_property.passed;
    }
};

DecompositionCheck check_decomposition(const Decomposition& d);

}  // namespace hullsum
