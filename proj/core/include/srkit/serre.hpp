#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "srkit/complex.hpp"
#include "srkit/homology.hpp"

namespace srkit {

/// Link homology data of every face of a complex, in graded lexicographic
/// face order. Everything in this header is derived from it, so callers
/// that ask several questions of one complex can build it once.
class LinkAtlas {
public:
    struct Entry {
        Face face;
        int link_dimension;
        ChainSpectrum spectrum;
    };

    /// Throws InputError for the void complex.
    explicit LinkAtlas(const SimplicialComplex& complex);

    [[nodiscard]] int complex_dimension() const { return dimension_; }
    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    /// dim H̃_degree(lk face; field); zero for faces not in the complex.
    [[nodiscard]] std::size_t link_betti(const Face& face, int degree, Field field) const;

private:
    int dimension_;
    std::vector<Entry> entries_;
};

struct SerreWitness {
    Face face;
    int degree;          // i with H̃_i(lk face) != 0
    int link_dimension;
    std::size_t betti;   // dim H̃_i(lk face)

    friend bool operator==(const SerreWitness&, const SerreWitness&) = default;
};

struct SerreReport {
    int r_checked;
    Field field;
    bool holds;
    /// First failure in (|F|, F, i) order; present iff !holds.
    std::optional<SerreWitness> witness;
};

/// K[Δ] satisfies S_r iff H̃_i(lk F) = 0 for every face F and every
/// i < min(r - 1, dim lk F). Stops at the first failing face. Throws
/// InputError for r < 1 or a void complex.
SerreReport check_serre(const SimplicialComplex& complex, int r, Field field = Field::rationals());
SerreReport check_serre(const LinkAtlas& atlas, int r, Field field = Field::rationals());

struct SerreLevel {
    /// Largest r for which S_r holds; empty when S_r holds for every r
    /// (the Cohen–Macaulay case).
    std::optional<int> max_r;
    [[nodiscard]] bool cohen_macaulay() const { return !max_r.has_value(); }
};

SerreLevel max_serre(const SimplicialComplex& complex, Field field = Field::rationals());
SerreLevel max_serre(const LinkAtlas& atlas, Field field = Field::rationals());

/// Reisner's criterion: H̃_i(lk F) = 0 for all i < dim lk F, for all F.
bool is_cohen_macaulay(const SimplicialComplex& complex, Field field = Field::rationals());

/// Hochster's formula, face by face: the entry at (i, G) is
/// dim H̃_{i-|G|-1}(lk G), the dimension of each Z^n-graded piece of
/// H^i_m(K[Δ]) in a degree a with negative support G.
class HochsterTable {
public:
    HochsterTable(const LinkAtlas& atlas, Field field);

    [[nodiscard]] Field field() const { return field_; }
    /// Cohomological degrees run over 0..max_degree() = dim Δ + 1.
    [[nodiscard]] int max_degree() const { return dimension_ + 1; }
    [[nodiscard]] const std::vector<Face>& faces() const { return faces_; }
    [[nodiscard]] std::size_t entry(int degree, const Face& face) const;
    /// Nonzero entries of row `degree`, in face order.
    [[nodiscard]] std::vector<std::pair<Face, std::size_t>> row(int degree) const;
    /// The entry at G = ∅, i.e. dim H̃_{degree-1}(Δ).
    [[nodiscard]] std::size_t degree_zero(int degree) const;
    [[nodiscard]] bool row_vanishes(int degree) const;

    friend bool operator==(const HochsterTable&, const HochsterTable&) = default;

private:
    Field field_;
    int dimension_;
    std::vector<Face> faces_;
    std::vector<std::vector<std::size_t>> values_;  // [face][degree]
};

HochsterTable hochster_table(const SimplicialComplex& complex, Field field = Field::rationals());

/// Least i with H^i_m(K[Δ]) != 0.
int depth(const SimplicialComplex& complex, Field field = Field::rationals());
int depth(const HochsterTable& table);

/// Z-graded Hilbert series of a local cohomology module, kept as the
/// face contributions h · Π_{j∈G} t⁻¹/(1 − t⁻¹). With `inverted` set the
/// series is read with t ↦ t⁻¹ (the graded dual, used for ω).
struct GradedHilbert {
    Field field;
    int cohomological_degree;
    bool inverted;
    std::vector<std::pair<Face, std::size_t>> contributions;

    /// Hilbert function value in internal degree `t_degree`.
    [[nodiscard]] mpz_class coefficient(int t_degree) const;
    [[nodiscard]] bool is_zero() const { return contributions.empty(); }
};

/// Throws InputError unless 0 <= degree <= dim Δ + 1.
GradedHilbert lc_hilbert(const SimplicialComplex& complex, int degree,
                         Field field = Field::rationals());
GradedHilbert lc_hilbert(const HochsterTable& table, int degree);
GradedHilbert canonical_hilbert(const SimplicialComplex& complex, Field field = Field::rationals());

}  // namespace srkit
