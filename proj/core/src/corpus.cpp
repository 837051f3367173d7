#include "srkit/corpus.hpp"

#include <charconv>

#include "srkit/error.hpp"

namespace srkit {

SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw InputError("boundary_simplex needs n >= 1");
    std::vector<Face> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<Vertex> vs;
        for (int v = 0; v <= n; ++v)
            if (v != skip) vs.push_back(v);
        facets.emplace_back(std::move(vs));
    }
    return from_facets(n + 1, std::move(facets));
}

SimplicialComplex cycle(int m) {
    if (m < 3) throw InputError("cycle needs m >= 3");
    std::vector<Face> facets;
    for (int v = 0; v < m; ++v) facets.push_back(Face{v, (v + 1) % m});
    return from_facets(m, std::move(facets));
}

SimplicialComplex rp2_6() {
    return from_facets(6, {
                              {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
                          });
}

SimplicialComplex torus_7() {
    std::vector<Face> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back(Face{i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back(Face{i, (i + 2) % 7, (i + 3) % 7});
    }
    return from_facets(7, std::move(facets));
}

SimplicialComplex sphere_product(int k) {
    if (k < 2) throw InputError("sphere_product needs k >= 2");
    const SimplicialComplex sphere = boundary_simplex(k);
    return product(sphere, sphere);
}

namespace {

void expect_params(std::string_view name, const std::vector<int>& params, std::size_t count) {
    if (params.size() != count)
        throw InputError("builtin " + std::string(name) + " takes " + std::to_string(count) +
                         " parameter(s)");
}

}  // namespace

SimplicialComplex builtin(std::string_view name, const std::vector<int>& params) {
    if (name == "boundary_simplex") {
        expect_params(name, params, 1);
        return boundary_simplex(params[0]);
    }
    if (name == "cycle") {
        expect_params(name, params, 1);
        return cycle(params[0]);
    }
    if (name == "sphere_product") {
        expect_params(name, params, 1);
        return sphere_product(params[0]);
    }
    if (name == "rp2_6") {
        expect_params(name, params, 0);
        return rp2_6();
    }
    if (name == "torus_7") {
        expect_params(name, params, 0);
        return torus_7();
    }
    throw InputError("unknown builtin '" + std::string(name) + "'");
}

SimplicialComplex builtin_from_spec(std::string_view spec) {
    std::string_view name = spec;
    std::string_view args;
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    } else if (auto paren = spec.find('('); paren != std::string_view::npos) {
        if (spec.back() != ')') throw InputError("unbalanced builtin spec '" + std::string(spec) + "'");
        name = spec.substr(0, paren);
        args = spec.substr(paren + 1, spec.size() - paren - 2);
    }
    std::vector<int> params;
    while (!args.empty()) {
        auto comma = args.find(',');
        std::string_view tok = args.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InputError("bad builtin parameter '" + std::string(tok) + "'");
        params.push_back(value);
        args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
    }
    return builtin(name, params);
}

std::vector<BuiltinEntry> builtin_corpus() {
    return {
        {"boundary_simplex:2", "triangle boundary, S^1"},
        {"boundary_simplex:3", "tetrahedron boundary, S^2"},
        {"boundary_simplex:4", "4-simplex boundary, S^3"},
        {"cycle:5", "pentagon"},
        {"rp2_6", "6-vertex real projective plane"},
        {"torus_7", "7-vertex torus"},
        {"sphere_product:2", "staircase S^1 x S^1"},
        {"sphere_product:3", "staircase S^2 x S^2"},
    };
}

}  // namespace srkit
