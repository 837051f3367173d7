#include "srkit/homology.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "srkit/error.hpp"

namespace srkit {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31)) throw InputError("field characteristic must be below 2^31");
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() > 2 && (text[0] == 'f' || text[0] == 'F') && text[1] == ':') {
        std::uint64_t p = 0;
        const char* first = text.data() + 2;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec == std::errc{} && ptr == last) return prime(p);
    }
    throw InputError("bad field '" + std::string(text) + "' (expected q or f:<p>)");
}

std::string Field::name() const {
    return is_rational() ? "Q" : "F_" + std::to_string(characteristic_);
}

std::size_t BettiVector::at(int degree) const {
    const int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<std::size_t>(idx)];
}

bool BettiVector::is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int degree) {
    const std::vector<Face> cols = complex.faces_of_dimension(degree);
    const std::vector<Face> rows = complex.faces_of_dimension(degree - 1);
    IntegerMatrix m(rows.size(), cols.size());
    if (degree < 0) return m;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t j = 0; j < cols[c].size(); ++j) {
            const Face facet = cols[c].without_position(j);
            auto it = std::lower_bound(rows.begin(), rows.end(), facet);
            m.set(static_cast<std::size_t>(it - rows.begin()), c, j % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

std::size_t ChainSpectrum::boundary_rank(int degree, Field field) const {
    if (degree < 0 || degree >= static_cast<int>(boundary_snf.size())) return 0;
    const SNFResult& snf = boundary_snf[static_cast<std::size_t>(degree)];
    return field.is_rational() ? snf.rank() : snf.rank_mod(field.characteristic());
}

ChainSpectrum chain_spectrum(const SimplicialComplex& complex) {
    ChainSpectrum out;
    const int dim = complex.dimension();
    for (int d = -1; d <= dim; ++d) out.face_counts.push_back(complex.faces_of_dimension(d).size());
    for (int d = 0; d <= dim; ++d) out.boundary_snf.push_back(smith_normal_form(boundary_matrix(complex, d)));
    return out;
}

BettiVector reduced_betti(const ChainSpectrum& spectrum, Field field) {
    std::vector<std::size_t> dims;
    for (int d = -1; d <= spectrum.top_degree(); ++d) {
        const std::size_t faces = spectrum.face_counts[static_cast<std::size_t>(d + 1)];
        dims.push_back(faces - spectrum.boundary_rank(d, field) - spectrum.boundary_rank(d + 1, field));
    }
    return BettiVector(field, std::move(dims));
}

BettiVector reduced_betti(const SimplicialComplex& complex, Field field) {
    return reduced_betti(chain_spectrum(complex), field);
}

std::vector<IntegralHomologyGroup> homology_over_Z(const ChainSpectrum& spectrum) {
    std::vector<IntegralHomologyGroup> out;
    const Field q = Field::rationals();
    for (int d = -1; d <= spectrum.top_degree(); ++d) {
        IntegralHomologyGroup group;
        group.degree = d;
        group.free_rank = spectrum.face_counts[static_cast<std::size_t>(d + 1)] -
                          spectrum.boundary_rank(d, q) - spectrum.boundary_rank(d + 1, q);
        if (d + 1 < static_cast<int>(spectrum.boundary_snf.size()) && d + 1 >= 0)
            group.torsion = spectrum.boundary_snf[static_cast<std::size_t>(d + 1)].torsion();
        out.push_back(std::move(group));
    }
    return out;
}

std::vector<IntegralHomologyGroup> homology_over_Z(const SimplicialComplex& complex) {
    return homology_over_Z(chain_spectrum(complex));
}

long reduced_euler_characteristic(const SimplicialComplex& complex) {
    long chi = 0;
    const auto f = complex.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i)
        chi += (i % 2 == 1 ? 1 : -1) * static_cast<long>(f[i]);  // index 0 is degree -1
    return chi;
}

}  // namespace srkit
