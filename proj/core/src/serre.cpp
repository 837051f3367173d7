#include "srkit/serre.hpp"

#include <algorithm>

#include "srkit/error.hpp"

namespace srkit {

namespace {

void require_nonvoid(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("operation requires a nonvoid complex");
}

LinkAtlas::Entry make_entry(const SimplicialComplex& complex, const Face& face) {
    SimplicialComplex lk = link(complex, face);
    return {face, lk.dimension(), chain_spectrum(lk)};
}

// First (i, betti) with i < bound and H̃_i != 0.
std::optional<std::pair<int, std::size_t>> first_nonvanishing(const ChainSpectrum& spectrum,
                                                               int bound, Field field) {
    const BettiVector betti = reduced_betti(spectrum, field);
    for (int i = -1; i < bound; ++i)
        if (betti.at(i) != 0) return std::pair{i, betti.at(i)};
    return std::nullopt;
}

}  // namespace

LinkAtlas::LinkAtlas(const SimplicialComplex& complex) : dimension_(complex.dimension()) {
    require_nonvoid(complex);
    for (const Face& face : all_faces(complex)) entries_.push_back(make_entry(complex, face));
}

std::size_t LinkAtlas::link_betti(const Face& face, int degree, Field field) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), face,
                               [](const Entry& e, const Face& f) { return e.face < f; });
    if (it == entries_.end() || it->face != face) return 0;
    return reduced_betti(it->spectrum, field).at(degree);
}

SerreReport check_serre(const SimplicialComplex& complex, int r, Field field) {
    if (r < 1) throw InputError("Serre condition needs r >= 1");
    require_nonvoid(complex);
    for (const Face& face : all_faces(complex)) {
        LinkAtlas::Entry e = make_entry(complex, face);
        const int bound = std::min(r - 1, e.link_dimension);
        if (auto bad = first_nonvanishing(e.spectrum, bound, field))
            return {r, field, false, SerreWitness{face, bad->first, e.link_dimension, bad->second}};
    }
    return {r, field, true, std::nullopt};
}

SerreReport check_serre(const LinkAtlas& atlas, int r, Field field) {
    if (r < 1) throw InputError("Serre condition needs r >= 1");
    for (const auto& e : atlas.entries()) {
        const int bound = std::min(r - 1, e.link_dimension);
        if (auto bad = first_nonvanishing(e.spectrum, bound, field))
            return {r, field, false, SerreWitness{e.face, bad->first, e.link_dimension, bad->second}};
    }
    return {r, field, true, std::nullopt};
}

SerreLevel max_serre(const LinkAtlas& atlas, Field field) {
    // S_r fails exactly when some H̃_i(lk F) != 0 with i < dim lk F and
    // i + 2 <= r, so the largest valid r is the least such i + 1.
    SerreLevel level;
    for (const auto& e : atlas.entries()) {
        if (auto bad = first_nonvanishing(e.spectrum, e.link_dimension, field)) {
            const int r = bad->first + 1;
            if (!level.max_r || r < *level.max_r) level.max_r = r;
        }
    }
    return level;
}

SerreLevel max_serre(const SimplicialComplex& complex, Field field) {
    return max_serre(LinkAtlas(complex), field);
}

bool is_cohen_macaulay(const SimplicialComplex& complex, Field field) {
    return max_serre(complex, field).cohen_macaulay();
}

HochsterTable::HochsterTable(const LinkAtlas& atlas, Field field)
    : field_(field), dimension_(atlas.complex_dimension()) {
    for (const auto& e : atlas.entries()) {
        faces_.push_back(e.face);
        const BettiVector betti = reduced_betti(e.spectrum, field);
        std::vector<std::size_t> row;
        for (int i = 0; i <= max_degree(); ++i)
            row.push_back(betti.at(i - static_cast<int>(e.face.size()) - 1));
        values_.push_back(std::move(row));
    }
}

std::size_t HochsterTable::entry(int degree, const Face& face) const {
    if (degree < 0 || degree > max_degree()) return 0;
    auto it = std::lower_bound(faces_.begin(), faces_.end(), face);
    if (it == faces_.end() || *it != face) return 0;
    return values_[static_cast<std::size_t>(it - faces_.begin())][static_cast<std::size_t>(degree)];
}

std::vector<std::pair<Face, std::size_t>> HochsterTable::row(int degree) const {
    std::vector<std::pair<Face, std::size_t>> out;
    if (degree < 0 || degree > max_degree()) return out;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (std::size_t h = values_[f][static_cast<std::size_t>(degree)]) out.emplace_back(faces_[f], h);
    return out;
}

std::size_t HochsterTable::degree_zero(int degree) const { return entry(degree, Face{}); }

bool HochsterTable::row_vanishes(int degree) const { return row(degree).empty(); }

HochsterTable hochster_table(const SimplicialComplex& complex, Field field) {
    return HochsterTable(LinkAtlas(complex), field);
}

int depth(const HochsterTable& table) {
    for (int i = 0; i <= table.max_degree(); ++i)
        if (!table.row_vanishes(i)) return i;
    return table.max_degree();  // unreachable for nonvoid complexes
}

int depth(const SimplicialComplex& complex, Field field) {
    return depth(hochster_table(complex, field));
}

mpz_class GradedHilbert::coefficient(int t_degree) const {
    const int e = inverted ? -t_degree : t_degree;
    mpz_class total = 0;
    for (const auto& [face, h] : contributions) {
        const long s = static_cast<long>(face.size());
        if (s == 0) {
            if (e == 0) total += static_cast<unsigned long>(h);
            continue;
        }
        // Π t⁻¹/(1 − t⁻¹) = Σ_{n≥s} C(n−1, s−1) t^{−n}
        const long n = -static_cast<long>(e);
        if (n < s) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1),
                     static_cast<unsigned long>(s - 1));
        total += binom * static_cast<unsigned long>(h);
    }
    return total;
}

GradedHilbert lc_hilbert(const HochsterTable& table, int degree) {
    if (degree < 0 || degree > table.max_degree())
        throw InputError("cohomological degree " + std::to_string(degree) + " out of range 0.." +
                         std::to_string(table.max_degree()));
    return {table.field(), degree, false, table.row(degree)};
}

GradedHilbert lc_hilbert(const SimplicialComplex& complex, int degree, Field field) {
    return lc_hilbert(hochster_table(complex, field), degree);
}

GradedHilbert canonical_hilbert(const SimplicialComplex& complex, Field field) {
    const HochsterTable table = hochster_table(complex, field);
    GradedHilbert out = lc_hilbert(table, table.max_degree());
    out.inverted = true;
    return out;
}

}  // namespace srkit
