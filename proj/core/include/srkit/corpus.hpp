#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srkit/complex.hpp"

namespace srkit {

/// Boundary of the n-simplex on n+1 vertices, a triangulated S^{n-1}.
SimplicialComplex boundary_simplex(int n);
/// The m-gon, m >= 3.
SimplicialComplex cycle(int m);
/// The 6-vertex real projective plane (hemi-icosahedron).
SimplicialComplex rp2_6();
/// The 7-vertex (Möbius) torus.
SimplicialComplex torus_7();
/// product(boundary_simplex(k), boundary_simplex(k)), a triangulation of
/// S^{k-1} x S^{k-1}. Requires k >= 2.
SimplicialComplex sphere_product(int k);

/// Resolves a builtin by name and integer parameters, e.g.
/// builtin("cycle", {5}). Throws InputError on unknown names or bad params.
SimplicialComplex builtin(std::string_view name, const std::vector<int>& params = {});

/// Parses "name", "name:3" or "name(3)" and resolves it.
SimplicialComplex builtin_from_spec(std::string_view spec);

struct BuiltinEntry {
    std::string spec;
    std::string description;
};

/// The named examples the test suites and `srkit corpus` iterate over.
std::vector<BuiltinEntry> builtin_corpus();

}  // namespace srkit
