#pragma once

#include <cstddef>
#include <vector>

#include "srkit/complex.hpp"
#include "srkit/homology.hpp"
#include "srkit/monomial.hpp"

namespace srkit {

/// The irreducible components V(P_i) of a closed subset of affine n-space
/// cut out by monomial primes.
class ComponentSpace {
public:
    /// Throws InputError if `components` is empty or a prime lives in a
    /// different ambient ring.
    ComponentSpace(int n_vars, std::vector<MonomialPrime> components);

    [[nodiscard]] int n_vars() const { return n_vars_; }
    [[nodiscard]] const std::vector<MonomialPrime>& components() const { return components_; }
    [[nodiscard]] int dimension() const;
    [[nodiscard]] bool is_equidimensional() const;
    /// dim V(P_i + P_j) = n − |vars(P_i) ∪ vars(P_j)|.
    [[nodiscard]] int intersection_dimension(std::size_t i, std::size_t j) const;

private:
    int n_vars_;
    std::vector<MonomialPrime> components_;
};

struct Codim1Edge {
    std::size_t lhs;
    std::size_t rhs;
    int intersection_dimension;

    friend bool operator==(const Codim1Edge&, const Codim1Edge&) = default;
};

/// Components chained through intersections of codimension <= 1.
/// Codimension is measured as dim X − dim Z.
struct Codim1Partition {
    /// Blocks of component indices, each sorted, ordered by least member.
    std::vector<std::vector<std::size_t>> blocks;
    /// Pairs (i < j) with codim_X(X_i ∩ X_j) <= 1.
    std::vector<Codim1Edge> adjacency;
    bool equidimensional = true;

    [[nodiscard]] std::size_t block_count() const { return blocks.size(); }
    [[nodiscard]] bool connected() const { return blocks.size() == 1; }
};

Codim1Partition codim1_partition(const ComponentSpace& space);

/// The component space of Spec K[Δ]: one facet prime per facet.
ComponentSpace component_space(const SimplicialComplex& complex);

/// codim1_partition over the facet primes; facets F, G are adjacent iff
/// dim Δ + 1 − |F ∩ G| <= 1.
Codim1Partition complex_codim1(const SimplicialComplex& complex);

struct SummandReport {
    /// Predicted number of indecomposable summands of ω, i.e. the number
    /// of codimension-one components of the top-dimensional part.
    std::size_t summands;
    /// Facets of top_subcomplex(Δ) grouped by block.
    std::vector<std::vector<Face>> block_facets;
    /// dim H̃_top(top_subcomplex(Δ)), the ∅ entry of the highest Hochster row.
    std::size_t degree0_check;
};

SummandReport summand_report(const SimplicialComplex& complex, Field field = Field::rationals());

/// The three equivalent predictions for a Stanley–Reisner ring: connected
/// in codimension one, ω indecomposable, End(ω) connected.
struct HochsterHunekeReport {
    std::size_t summands;
    bool connected_in_codim1;
    bool omega_indecomposable;
    bool endomorphism_ring_connected;
    bool equidimensional;
};

HochsterHunekeReport hochster_huneke_report(const SimplicialComplex& complex,
                                            Field field = Field::rationals());

}  // namespace srkit
