#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srkit/codim1.hpp"
#include "srkit/monomial.hpp"

namespace srkit {

/// The four monomials x^s, x^t, x^r, x^p forming the column of d_3 in the
/// resolution of a codimension-two lattice ideal with four generators.
/// Signs are irrelevant here and are not stored.
struct QuadrangleData {
    int n_vars = 0;
    std::array<Monomial, 4> monomials;
};

struct QuadrangleValidation {
    bool ok = true;
    /// 1-based index pairs whose supports meet.
    std::vector<std::pair<int, int>> overlapping_pairs;
    /// 1-based indices of constant monomials.
    std::vector<int> constant_monomials;
    std::vector<std::string> diagnostics;
};

/// Checks that the four supports are nonempty and pairwise disjoint, which
/// makes the monomials a regular sequence. Throws InputError when a
/// monomial has the wrong number of exponents.
QuadrangleValidation validate_quadrangle(const QuadrangleData& quad);

struct DeficiencySupport {
    MonomialIdeal ideal;                  // (x^s, x^t, x^r, x^p)
    std::vector<MonomialPrime> primes;    // minimal primes, all of height 4
    int dim_ring;                         // dim A = n − 2
    int support_dimension;                // n − 4
    bool equidimensional;
};

/// The support of K^{d-1}(A) = S/(x^s, x^t, x^r, x^p). Throws InputError
/// when validation fails.
DeficiencySupport deficiency_support(const QuadrangleData& quad);

struct NonS2Report {
    int dim_ring;
    int non_s2_dimension;
    Codim1Partition partition;
    bool connected;
    /// S/I is positively graded with degree-zero part K (every generator
    /// has positive degree), which forces connectedness of its spectrum.
    bool graded_connected;
};

NonS2Report non_s2_top_report(const QuadrangleData& quad);

/// Quadrangles of a Peeva–Sturmfels resolution in tree order, each listing
/// the identifiers of its four triangles.
struct PSIncidence {
    std::vector<std::array<std::string, 4>> quadrangles;
};

struct IncidenceTreeEdge {
    std::size_t quadrangle;  // 1-based
    std::string triangle;

    friend bool operator==(const IncidenceTreeEdge&, const IncidenceTreeEdge&) = default;
};

struct PSViolation {
    std::size_t quadrangle;  // 1-based
    std::string message;
};

struct PSCertificate {
    bool ok = false;
    std::size_t generators = 0;   // m = #quadrangles + 3
    std::size_t triangles = 0;
    /// Spanning tree of the bipartite quadrangle–triangle graph.
    std::vector<IncidenceTreeEdge> spanning_tree;
    std::optional<PSViolation> violation;
};

/// Verifies the gluing pattern (the first quadrangle brings 4 new
/// triangles; every later one shares exactly 2 with its predecessors and
/// brings 2 new) and connectivity of the bipartite incidence graph.
PSCertificate ps_connectivity_certificate(const PSIncidence& incidence);

}  // namespace srkit
