#include "srkit/codim1.hpp"

#include <algorithm>
#include <queue>

#include "srkit/error.hpp"

namespace srkit {

ComponentSpace::ComponentSpace(int n_vars, std::vector<MonomialPrime> components)
    : n_vars_(n_vars), components_(std::move(components)) {
    if (components_.empty()) throw InputError("component space needs at least one component");
    for (const MonomialPrime& p : components_)
        if (p.n_vars() != n_vars_) throw InputError("component prime has the wrong ambient ring");
}

int ComponentSpace::dimension() const {
    int dim = 0;
    for (const MonomialPrime& p : components_) dim = std::max(dim, p.dimension());
    return dim;
}

bool ComponentSpace::is_equidimensional() const {
    return std::all_of(components_.begin(), components_.end(), [&](const MonomialPrime& p) {
        return p.dimension() == components_.front().dimension();
    });
}

int ComponentSpace::intersection_dimension(std::size_t i, std::size_t j) const {
    std::vector<int> both;
    const auto& a = components_.at(i).vars();
    const auto& b = components_.at(j).vars();
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return n_vars_ - static_cast<int>(both.size());
}

Codim1Partition codim1_partition(const ComponentSpace& space) {
    Codim1Partition out;
    out.equidimensional = space.is_equidimensional();
    const std::size_t n = space.components().size();
    const int dim = space.dimension();
    std::vector<std::vector<std::size_t>> neighbours(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int z = space.intersection_dimension(i, j);
            if (dim - z <= 1) {
                out.adjacency.push_back({i, j, z});
                neighbours[i].push_back(j);
                neighbours[j].push_back(i);
            }
        }

    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> block;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        seen[start] = true;
        while (!frontier.empty()) {
            const std::size_t v = frontier.front();
            frontier.pop();
            block.push_back(v);
            for (std::size_t w : neighbours[v])
                if (!seen[w]) {
                    seen[w] = true;
                    frontier.push(w);
                }
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    return out;
}

ComponentSpace component_space(const SimplicialComplex& complex) {
    std::vector<MonomialPrime> primes;
    for (auto& [prime, facet] : stanley_reisner_components(complex)) primes.push_back(std::move(prime));
    return ComponentSpace(complex.n_vertices(), std::move(primes));
}

Codim1Partition complex_codim1(const SimplicialComplex& complex) {
    return codim1_partition(component_space(complex));
}

SummandReport summand_report(const SimplicialComplex& complex, Field field) {
    const SimplicialComplex top = top_subcomplex(complex);
    if (top.is_void()) throw InputError("summand report needs a nonvoid complex");
    const Codim1Partition partition = complex_codim1(top);
    SummandReport out;
    out.summands = partition.block_count();
    for (const auto& block : partition.blocks) {
        std::vector<Face> facets;
        for (std::size_t idx : block) facets.push_back(top.facets()[idx]);
        out.block_facets.push_back(std::move(facets));
    }
    out.degree0_check = reduced_betti(top, field).at(top.dimension());
    return out;
}

HochsterHunekeReport hochster_huneke_report(const SimplicialComplex& complex, Field field) {
    const SummandReport summands = summand_report(complex, field);
    const bool connected = summands.summands == 1;
    return {summands.summands, connected, connected, connected, complex.is_pure()};
}

}  // namespace srkit
