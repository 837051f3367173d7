#include "srkit/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "srkit/error.hpp"

namespace srkit {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (std::any_of(exponents_.begin(), exponents_.end(), [](int e) { return e < 0; }))
        throw InputError("negative exponent in monomial");
}

std::vector<int> Monomial::support() const {
    std::vector<int> out;
    for (int j = 0; j < n_vars(); ++j)
        if (exponents_[static_cast<std::size_t>(j)] > 0) out.push_back(j);
    return out;
}

bool Monomial::is_constant() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
    if (other.n_vars() != n_vars()) return false;
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        if (exponents_[j] > other.exponents_[j]) return false;
    return true;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < n_vars(); ++j) {
        int e = exponents_[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        if (!first) os << '*';
        os << 'x' << j;
        if (e > 1) os << '^' << e;
        first = false;
    }
    return first ? "1" : os.str();
}

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<Monomial> generators)
    : n_vars_(n_vars), generators_(std::move(generators)) {
    if (n_vars_ < 0) throw InputError("negative variable count");
    for (const Monomial& m : generators_)
        if (m.n_vars() != n_vars_)
            throw InputError("generator " + m.to_string() + " has " +
                             std::to_string(m.n_vars()) + " exponents, expected " +
                             std::to_string(n_vars_));
}

bool MonomialIdeal::is_unit() const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [](const Monomial& m) { return m.is_constant(); });
}

MonomialIdeal MonomialIdeal::minimalized() const {
    std::vector<Monomial> gens = generators_;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : gens) {
        bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Monomial& other) {
            return other != m && other.divides(m);
        });
        if (!redundant) kept.push_back(m);
    }
    return MonomialIdeal(n_vars_, std::move(kept));
}

MonomialPrime::MonomialPrime(int n_vars, std::vector<int> vars)
    : n_vars_(n_vars), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (!vars_.empty() && (vars_.front() < 0 || vars_.back() >= n_vars_))
        throw InputError("prime variable out of range");
}

bool MonomialPrime::contains_var(int j) const {
    return std::binary_search(vars_.begin(), vars_.end(), j);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

std::string MonomialPrime::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << 'x' << vars_[i];
    os << ')';
    return os.str();
}

namespace {

using VarSet = std::vector<int>;

// Depth-first transversal search: extend `chosen` until it meets every
// support, branching only on supports not yet hit.
void collect_transversals(const std::vector<VarSet>& supports, std::size_t next,
                          VarSet& chosen, std::set<VarSet>& found) {
    while (next < supports.size()) {
        const VarSet& s = supports[next];
        bool hit = std::any_of(s.begin(), s.end(), [&](int v) {
            return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
        });
        if (!hit) break;
        ++next;
    }
    if (next == supports.size()) {
        VarSet sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        found.insert(std::move(sorted));
        return;
    }
    for (int v : supports[next]) {
        chosen.push_back(v);
        collect_transversals(supports, next + 1, chosen, found);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw InputError("minimal primes of the zero ideal");
    if (ideal.is_unit()) throw UnitIdealError();

    // Only inclusion-minimal supports constrain the transversals.
    std::vector<VarSet> supports;
    for (const Monomial& m : ideal.generators()) supports.push_back(m.support());
    std::sort(supports.begin(), supports.end(),
              [](const VarSet& a, const VarSet& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<VarSet> minimal;
    for (const VarSet& s : supports) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const VarSet& t) {
            return std::includes(s.begin(), s.end(), t.begin(), t.end());
        });
        if (!redundant) minimal.push_back(s);
    }

    std::set<VarSet> found;
    VarSet chosen;
    collect_transversals(minimal, 0, chosen, found);

    std::vector<MonomialPrime> out;
    for (const VarSet& candidate : found) {
        bool has_smaller = std::any_of(found.begin(), found.end(), [&](const VarSet& other) {
            return other.size() < candidate.size() &&
                   std::includes(candidate.begin(), candidate.end(), other.begin(), other.end());
        });
        if (!has_smaller) out.emplace_back(ideal.n_vars(), candidate);
    }
    return out;
}

std::vector<std::pair<MonomialPrime, Face>> stanley_reisner_components(
    const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("void complex has no Stanley-Reisner components");
    std::vector<std::pair<MonomialPrime, Face>> out;
    for (const Face& facet : complex.facets()) {
        std::vector<int> vars;
        for (int v = 0; v < complex.n_vertices(); ++v)
            if (!facet.contains(v)) vars.push_back(v);
        out.emplace_back(MonomialPrime(complex.n_vertices(), std::move(vars)), facet);
    }
    return out;
}

}  // namespace srkit
