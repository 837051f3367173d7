#pragma once

// Random valid inputs for the lattice module.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "srkit/lattice.hpp"

namespace gen {

using srkit::Monomial;
using srkit::PSIncidence;
using srkit::QuadrangleData;

// Splits a random subset of variables into four nonempty blocks with
// random exponents. Covers all-variables, mixed-support and power cases.
inline QuadrangleData random_quadrangle(std::mt19937_64& rng) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 11)(rng);
    const std::size_t used = std::uniform_int_distribution<std::size_t>(4, n)(rng);
    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::uniform_int_distribution<std::size_t> block(0, 3);
    std::uniform_int_distribution<int> power(1, 3);
    std::vector<std::vector<int>> exps(4, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < used; ++i) exps[i < 4 ? i : block(rng)][vars[i]] = power(rng);
    QuadrangleData q;
    q.n_vars = static_cast<int>(n);
    for (std::size_t k = 0; k < 4; ++k) q.monomials[k] = Monomial(exps[k]);
    return q;
}

// Grows a valid incidence: each new quadrangle reuses 2 known triangles.
inline PSIncidence random_incidence(std::mt19937_64& rng, std::size_t quadrangles) {
    PSIncidence inc;
    int next = 0;
    auto fresh = [&] { return "t" + std::to_string(next++); };
    std::vector<std::string> known;
    inc.quadrangles.push_back({fresh(), fresh(), fresh(), fresh()});
    known.assign(inc.quadrangles[0].begin(), inc.quadrangles[0].end());
    while (inc.quadrangles.size() < quadrangles) {
        std::vector<std::string> pick = known;
        std::shuffle(pick.begin(), pick.end(), rng);
        std::array<std::string, 4> q{pick[0], pick[1], fresh(), fresh()};
        known.push_back(q[2]);
        known.push_back(q[3]);
        std::shuffle(q.begin(), q.end(), rng);
        inc.quadrangles.push_back(q);
    }
    return inc;
}

}  // namespace gen
