#include "srkit/complex.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "srkit/error.hpp"

namespace srkit {

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw InputError("face has a repeated vertex");
    if (!vertices_.empty() && vertices_.front() < 0)
        throw InputError("face has a negative vertex index");
}

bool Face::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Face::is_disjoint_from(const Face& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

Face Face::union_with(const Face& other) const {
    Face out;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Face Face::intersection_with(const Face& other) const {
    Face out;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                          other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Face Face::minus(const Face& other) const {
    Face out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Face Face::without_position(std::size_t position) const {
    Face out;
    out.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (i != position) out.vertices_.push_back(vertices_[i]);
    return out;
}

std::string Face::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
}

std::ostream& operator<<(std::ostream& os, const Face& face) {
    os << '{';
    for (std::size_t i = 0; i < face.size(); ++i) os << (i ? "," : "") << face[i];
    return os << '}';
}

// ---------------------------------------------------------------------------

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return kVoidDimension;
    // facets are sorted by size first
    return facets_.back().dimension();
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    return facets_.front().size() == facets_.back().size();
}

bool SimplicialComplex::contains(const Face& face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return face.is_subset_of(f); });
}

namespace {

// Appends every subset of `facet` with exactly `size` vertices.
void append_subsets(const Face& facet, std::size_t size, std::vector<Face>& out) {
    const std::size_t n = facet.size();
    if (size > n) return;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> vs(size);
        for (std::size_t i = 0; i < size; ++i) vs[i] = facet[idx[i]];
        out.emplace_back(std::move(vs));
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void sort_unique(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

std::vector<Face> SimplicialComplex::faces_of_dimension(int dim) const {
    std::vector<Face> out;
    if (dim < -1) return out;
    for (const Face& f : facets_) append_subsets(f, static_cast<std::size_t>(dim + 1), out);
    sort_unique(out);
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (int d = -1; d <= dimension(); ++d) out.push_back(faces_of_dimension(d).size());
    return out;
}

SimplicialComplex from_facets(int n_vertices, std::vector<Face> candidate_facets) {
    if (n_vertices < 0) throw InputError("negative vertex count");
    for (const Face& f : candidate_facets)
        if (!f.empty() && f.vertices().back() >= n_vertices)
            throw InputError("vertex " + std::to_string(f.vertices().back()) +
                             " out of range for " + std::to_string(n_vertices) + " vertices");
    sort_unique(candidate_facets);
    SimplicialComplex out;
    out.n_vertices_ = n_vertices;
    // Larger faces come later in graded order, so a face is maximal iff no
    // later candidate contains it.
    for (std::size_t i = 0; i < candidate_facets.size(); ++i) {
        const Face& f = candidate_facets[i];
        bool maximal = true;
        for (std::size_t j = i + 1; j < candidate_facets.size() && maximal; ++j)
            if (candidate_facets[j].size() > f.size() && f.is_subset_of(candidate_facets[j]))
                maximal = false;
        if (maximal) out.facets_.push_back(f);
    }
    return out;
}

SimplicialComplex void_complex(int n_vertices) { return from_facets(n_vertices, {}); }

SimplicialComplex irrelevant_complex(int n_vertices) {
    return from_facets(n_vertices, {Face{}});
}

std::vector<Face> all_faces(const SimplicialComplex& complex) {
    std::vector<Face> out;
    for (const Face& f : complex.facets())
        for (std::size_t s = 0; s <= f.size(); ++s) append_subsets(f, s, out);
    sort_unique(out);
    return out;
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
    std::vector<Face> candidates;
    for (const Face& f : complex.facets())
        if (face.is_subset_of(f)) candidates.push_back(f.minus(face));
    if (candidates.empty())
        throw InputError("face " + face.to_string() + " is not in the complex");
    return from_facets(complex.n_vertices(), std::move(candidates));
}

SimplicialComplex product(const SimplicialComplex& lhs, const SimplicialComplex& rhs) {
    if (lhs.is_void() || rhs.is_void()) throw InputError("product of a void complex");
    const int width = rhs.n_vertices();
    std::vector<Face> candidates;
    for (const Face& f : lhs.facets()) {
        for (const Face& g : rhs.facets()) {
            if (f.empty() || g.empty()) {
                candidates.emplace_back();
                continue;
            }
            // Monotone lattice paths from (0,0) to (|F|-1, |G|-1): choose
            // which of the steps move along F.
            const std::size_t rows = f.size() - 1;
            const std::size_t steps = rows + g.size() - 1;
            for (unsigned long mask = 0; mask < (1UL << steps); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountl(mask)) != rows) continue;
                std::vector<Vertex> vs;
                std::size_t a = 0, b = 0;
                vs.push_back(f[a] * width + g[b]);
                for (std::size_t s = 0; s < steps; ++s) {
                    if (mask & (1UL << s))
                        ++a;
                    else
                        ++b;
                    vs.push_back(f[a] * width + g[b]);
                }
                candidates.emplace_back(std::move(vs));
            }
        }
    }
    return from_facets(lhs.n_vertices() * width, std::move(candidates));
}

namespace {

SimplicialComplex relabel_union(const SimplicialComplex& lhs, const SimplicialComplex& rhs,
                                const std::vector<Vertex>& rhs_map, int n_vertices) {
    std::vector<Face> candidates = lhs.facets();
    for (const Face& g : rhs.facets()) {
        std::vector<Vertex> vs;
        for (Vertex v : g) vs.push_back(rhs_map[static_cast<std::size_t>(v)]);
        candidates.emplace_back(std::move(vs));
    }
    return from_facets(n_vertices, std::move(candidates));
}

}  // namespace

SimplicialComplex disjoint_union(const SimplicialComplex& lhs, const SimplicialComplex& rhs) {
    std::vector<Vertex> map(static_cast<std::size_t>(rhs.n_vertices()));
    for (int v = 0; v < rhs.n_vertices(); ++v) map[static_cast<std::size_t>(v)] = lhs.n_vertices() + v;
    return relabel_union(lhs, rhs, map, lhs.n_vertices() + rhs.n_vertices());
}

SimplicialComplex wedge(const SimplicialComplex& lhs, const SimplicialComplex& rhs,
                        Vertex lhs_vertex, Vertex rhs_vertex) {
    if (lhs_vertex < 0 || lhs_vertex >= lhs.n_vertices() || rhs_vertex < 0 ||
        rhs_vertex >= rhs.n_vertices())
        throw InputError("wedge vertex out of range");
    std::vector<Vertex> map(static_cast<std::size_t>(rhs.n_vertices()));
    Vertex next = lhs.n_vertices();
    for (int v = 0; v < rhs.n_vertices(); ++v)
        map[static_cast<std::size_t>(v)] = v == rhs_vertex ? lhs_vertex : next++;
    return relabel_union(lhs, rhs, map, lhs.n_vertices() + rhs.n_vertices() - 1);
}

SimplicialComplex cone(const SimplicialComplex& complex) {
    const Vertex apex = complex.n_vertices();
    std::vector<Face> candidates;
    for (const Face& f : complex.facets()) candidates.push_back(f.union_with(Face{apex}));
    return from_facets(complex.n_vertices() + 1, std::move(candidates));
}

SimplicialComplex top_subcomplex(const SimplicialComplex& complex) {
    std::vector<Face> top;
    for (const Face& f : complex.facets())
        if (f.dimension() == complex.dimension()) top.push_back(f);
    return from_facets(complex.n_vertices(), std::move(top));
}

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& complex) {
    os << "n " << complex.n_vertices() << " facets [";
    for (std::size_t i = 0; i < complex.facets().size(); ++i)
        os << (i ? " " : "") << complex.facets()[i];
    return os << ']';
}

}  // namespace srkit
