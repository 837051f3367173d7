#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace srkit {

using Vertex = int;

/// A face of a simplicial complex: a strictly increasing list of vertex
/// indices. The empty face is a valid value.
class Face {
public:
    Face() = default;
    Face(std::initializer_list<Vertex> vertices);
    explicit Face(std::vector<Vertex> vertices);

    [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] bool empty() const { return vertices_.empty(); }
    [[nodiscard]] int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i]; }
    [[nodiscard]] auto begin() const { return vertices_.begin(); }
    [[nodiscard]] auto end() const { return vertices_.end(); }

    [[nodiscard]] bool contains(Vertex v) const;
    [[nodiscard]] bool is_subset_of(const Face& other) const;
    [[nodiscard]] bool is_disjoint_from(const Face& other) const;
    [[nodiscard]] Face union_with(const Face& other) const;
    [[nodiscard]] Face intersection_with(const Face& other) const;
    [[nodiscard]] Face minus(const Face& other) const;
    /// The face with the vertex at `position` removed.
    [[nodiscard]] Face without_position(std::size_t position) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Face&, const Face&) = default;
    /// Graded lexicographic order: by size, then lexicographically.
    friend std::strong_ordering operator<=>(const Face& a, const Face& b);

private:
    std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Face& face);

inline constexpr int kVoidDimension = -2;

/// A finite abstract simplicial complex stored by its facets.
///
/// Facets are kept sorted (graded lexicographic) and pairwise
/// inclusion-incomparable. The void complex has no facets; the irrelevant
/// complex has the single facet {} and is distinct from it.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    [[nodiscard]] int n_vertices() const { return n_vertices_; }
    [[nodiscard]] const std::vector<Face>& facets() const { return facets_; }

    [[nodiscard]] bool is_void() const { return facets_.empty(); }
    [[nodiscard]] bool is_irrelevant() const {
        return facets_.size() == 1 && facets_.front().empty();
    }
    /// Largest facet dimension; -1 for the irrelevant complex and
    /// kVoidDimension for the void complex.
    [[nodiscard]] int dimension() const;
    [[nodiscard]] bool is_pure() const;
    [[nodiscard]] bool contains(const Face& face) const;

    /// Faces of dimension `dim` in graded lexicographic order.
    [[nodiscard]] std::vector<Face> faces_of_dimension(int dim) const;
    /// f_{-1}, f_0, ..., f_dim. Empty for the void complex.
    [[nodiscard]] std::vector<std::size_t> f_vector() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    friend SimplicialComplex from_facets(int, std::vector<Face>);
    int n_vertices_ = 0;
    std::vector<Face> facets_;
};

/// Builds a complex from candidate facets, dropping duplicates and
/// non-maximal candidates. Throws InputError on an out-of-range vertex.
SimplicialComplex from_facets(int n_vertices, std::vector<Face> candidate_facets);

SimplicialComplex void_complex(int n_vertices = 0);
SimplicialComplex irrelevant_complex(int n_vertices = 0);

/// Every face of the complex exactly once, graded lexicographically. The
/// empty face is included whenever the complex is nonvoid.
std::vector<Face> all_faces(const SimplicialComplex& complex);

/// lk(F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }, on the same vertex index space.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// Staircase triangulation of |Δ| × |Γ|. Vertex (a, b) is indexed
/// a * n_vertices(Γ) + b.
SimplicialComplex product(const SimplicialComplex& lhs, const SimplicialComplex& rhs);

/// Γ's vertices are shifted past Δ's.
SimplicialComplex disjoint_union(const SimplicialComplex& lhs, const SimplicialComplex& rhs);

/// One-point union identifying `lhs_vertex` of Δ with `rhs_vertex` of Γ.
/// The identified vertex keeps its Δ index; the remaining vertices of Γ
/// follow Δ's in their original order.
SimplicialComplex wedge(const SimplicialComplex& lhs, const SimplicialComplex& rhs,
                        Vertex lhs_vertex, Vertex rhs_vertex);

/// Adds a new apex vertex (index n_vertices) to every facet.
SimplicialComplex cone(const SimplicialComplex& complex);

/// The subcomplex generated by the facets of maximal dimension.
SimplicialComplex top_subcomplex(const SimplicialComplex& complex);

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& complex);

}  // namespace srkit
