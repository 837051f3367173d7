#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "srkit/complex.hpp"
#include "srkit/lattice.hpp"
#include "srkit/monomial.hpp"

namespace srkit::io {

/// Text complex format:
///
///     # comment
///     n 7
///     0 1 3
///     1 2 4
///
/// One facet per line as space-separated vertex indices after the `n`
/// header. A line holding only `{}` is the empty facet (so the irrelevant
/// complex is `n 0` followed by `{}`). Blank lines are ignored.
SimplicialComplex parse_complex_text(std::string_view text);
/// {"n_vertices": N, "facets": [[...], ...]}
SimplicialComplex parse_complex_json(std::string_view text);
/// Dispatches on the first non-blank character: `{` means JSON.
SimplicialComplex parse_complex(std::string_view text);

std::string to_text(const SimplicialComplex& complex);
std::string to_json(const SimplicialComplex& complex);

/// {"n_vars": n, "generators": [[e_0, ..., e_{n-1}], ...]}
MonomialIdeal parse_monomial_ideal(std::string_view text);
/// {"n_vars": n, "monomials": [[...], [...], [...], [...]]}
QuadrangleData parse_quadrangle(std::string_view text);
/// {"quadrangles": [["t1", "t2", "t3", "t4"], ...]} in tree order.
PSIncidence parse_incidence(std::string_view text);

/// Throws InputError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace srkit::io
