#include "srkit/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "srkit/error.hpp"

namespace srkit {

QuadrangleValidation validate_quadrangle(const QuadrangleData& quad) {
    QuadrangleValidation out;
    std::array<std::vector<int>, 4> supports;
    for (int i = 0; i < 4; ++i) {
        const Monomial& m = quad.monomials[static_cast<std::size_t>(i)];
        if (m.n_vars() != quad.n_vars)
            throw InputError("quadrangle monomial " + std::to_string(i + 1) + " has " +
                             std::to_string(m.n_vars()) + " exponents, expected " +
                             std::to_string(quad.n_vars));
        supports[static_cast<std::size_t>(i)] = m.support();
        if (m.is_constant()) {
            out.ok = false;
            out.constant_monomials.push_back(i + 1);
            out.diagnostics.push_back("monomial " + std::to_string(i + 1) + " is constant");
        }
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            std::vector<int> common;
            std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                                  supports[j].end(), std::back_inserter(common));
            if (common.empty()) continue;
            out.ok = false;
            out.overlapping_pairs.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
            out.diagnostics.push_back("monomials " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " share variable x" +
                                      std::to_string(common.front()));
        }
    return out;
}

namespace {

void require_valid(const QuadrangleData& quad) {
    const QuadrangleValidation v = validate_quadrangle(quad);
    if (v.ok) return;
    std::string msg = "quadrangle data is not a regular-sequence certificate:";
    for (const auto& d : v.diagnostics) msg += " " + d + ";";
    throw InputError(msg);
}

}  // namespace

DeficiencySupport deficiency_support(const QuadrangleData& quad) {
    require_valid(quad);
    MonomialIdeal ideal(quad.n_vars, {quad.monomials.begin(), quad.monomials.end()});
    std::vector<MonomialPrime> primes = minimal_primes(ideal);
    const bool equidimensional = std::all_of(primes.begin(), primes.end(),
                                             [](const MonomialPrime& p) { return p.height() == 4; });
    return {std::move(ideal), std::move(primes), quad.n_vars - 2, quad.n_vars - 4, equidimensional};
}

NonS2Report non_s2_top_report(const QuadrangleData& quad) {
    DeficiencySupport support = deficiency_support(quad);
    const ComponentSpace space(quad.n_vars, support.primes);
    Codim1Partition partition = codim1_partition(space);
    const bool graded = std::none_of(quad.monomials.begin(), quad.monomials.end(),
                                     [](const Monomial& m) { return m.degree() == 0; });
    const bool connected = partition.connected();
    return {support.dim_ring, space.dimension(), std::move(partition), connected, graded};
}

PSCertificate ps_connectivity_certificate(const PSIncidence& incidence) {
    PSCertificate out;
    out.generators = incidence.quadrangles.size() + 3;
    if (incidence.quadrangles.empty()) {
        out.violation = PSViolation{0, "incidence has no quadrangles"};
        return out;
    }

    std::set<std::string> seen;
    for (std::size_t q = 0; q < incidence.quadrangles.size(); ++q) {
        const auto& quad = incidence.quadrangles[q];
        const std::set<std::string> own(quad.begin(), quad.end());
        if (own.size() != 4) {
            out.violation = PSViolation{q + 1, "quadrangle " + std::to_string(q + 1) +
                                                   " repeats a triangle"};
            return out;
        }
        std::size_t shared = 0;
        for (const auto& t : own) shared += seen.count(t);
        const std::size_t expected_shared = q == 0 ? 0 : 2;
        if (shared != expected_shared) {
            out.violation = PSViolation{
                q + 1, "quadrangle " + std::to_string(q + 1) + " shares " + std::to_string(shared) +
                           " triangles with earlier quadrangles, expected " +
                           std::to_string(expected_shared)};
            return out;
        }
        seen.insert(own.begin(), own.end());
    }
    out.triangles = seen.size();

    // BFS over the bipartite graph, recording discovery edges.
    std::map<std::string, std::vector<std::size_t>> quads_of;
    for (std::size_t q = 0; q < incidence.quadrangles.size(); ++q)
        for (const auto& t : incidence.quadrangles[q]) quads_of[t].push_back(q);
    std::vector<bool> quad_seen(incidence.quadrangles.size(), false);
    std::set<std::string> tri_seen;
    std::queue<std::size_t> frontier;
    frontier.push(0);
    quad_seen[0] = true;
    while (!frontier.empty()) {
        const std::size_t q = frontier.front();
        frontier.pop();
        for (const auto& t : incidence.quadrangles[q]) {
            if (!tri_seen.insert(t).second) continue;
            out.spanning_tree.push_back({q + 1, t});
            for (std::size_t next : quads_of[t])
                if (!quad_seen[next]) {
                    quad_seen[next] = true;
                    out.spanning_tree.push_back({next + 1, t});
                    frontier.push(next);
                }
        }
    }
    const auto missing = std::find(quad_seen.begin(), quad_seen.end(), false);
    if (missing != quad_seen.end()) {
        const std::size_t q = static_cast<std::size_t>(missing - quad_seen.begin()) + 1;
        out.violation = PSViolation{q, "quadrangle " + std::to_string(q) + " is not connected"};
        out.spanning_tree.clear();
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace srkit
