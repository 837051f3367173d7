#include "srkit/fiberprod.hpp"

#include <sstream>

#include "srkit/corpus.hpp"
#include "srkit/error.hpp"
#include "srkit/serre.hpp"

namespace srkit {

std::string Atom::label() const {
    return (kind == Kind::T ? "T_" : "AnnJ_T_") + std::to_string(k);
}

bool SymSum::is_zero() const {
    if (finite != 0) return false;
    for (const auto& [atom, mult] : atoms)
        if (mult != 0) return false;
    return true;
}

SymSum& SymSum::operator+=(const SymSum& rhs) {
    finite += rhs.finite;
    for (const auto& [atom, mult] : rhs.atoms) {
        long& m = atoms[atom];
        m += mult;
        if (m == 0) atoms.erase(atom);
    }
    return *this;
}

SymDim SymDim::finite(long n) {
    SymDim d;
    d.direct_.finite = n;
    return d;
}

SymDim SymDim::atom(Atom a, long multiplicity) {
    SymDim d;
    if (multiplicity != 0) d.direct_.atoms[a] = multiplicity;
    return d;
}

SymDim SymDim::extension(SymSum sub, SymSum quotient) {
    SymDim d;
    d.extension_ = std::pair{std::move(sub), std::move(quotient)};
    return d;
}

SymSum SymDim::total() const {
    SymSum out = direct_;
    if (extension_) out += extension_->first + extension_->second;
    return out;
}

SymDim& SymDim::operator+=(const SymDim& rhs) {
    direct_ += rhs.direct_;
    if (rhs.extension_) {
        if (extension_) {
            extension_->first += rhs.extension_->first;
            extension_->second += rhs.extension_->second;
        } else {
            extension_ = rhs.extension_;
        }
    }
    return *this;
}

SymDim SymDim::scaled(long factor) const {
    SymDim out;
    for (long i = 0; i < factor; ++i) out += *this;
    return out;
}

namespace {

std::string sum_to_string(const SymSum& s) {
    std::ostringstream os;
    bool first = true;
    if (s.finite != 0 || s.atoms.empty()) {
        os << "K^" << s.finite;
        first = false;
    }
    for (const auto& [atom, mult] : s.atoms) {
        os << (first ? "" : " + ") << atom.label();
        if (mult != 1) os << '^' << mult;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string SymDim::to_string() const {
    if (extension_) {
        std::string s = "ext(" + sum_to_string(extension_->first) + " -> " +
                        sum_to_string(extension_->second) + ")";
        if (!direct_.is_zero()) s = sum_to_string(direct_) + " + " + s;
        return s;
    }
    return sum_to_string(direct_);
}

char ring_letter(Ring ring) {
    switch (ring) {
        case Ring::R: return 'R';
        case Ring::B: return 'B';
        case Ring::C: return 'C';
        case Ring::A: return 'A';
    }
    return '?';
}

SymDim LCProfile::row(int degree) const {
    auto it = rows.find(degree);
    return it == rows.end() ? SymDim::zero() : it->second;
}

int LCProfile::max_degree() const { return rows.empty() ? -1 : rows.rbegin()->first; }

namespace {

void require_k(int k, int min_k) {
    if (k < min_k) throw InputError("k must be at least " + std::to_string(min_k));
}

SymSum sum_of_atom(Atom a) {
    SymSum s;
    s.atoms[a] = 1;
    return s;
}

SymSum sum_of_finite(long n) {
    SymSum s;
    s.finite = n;
    return s;
}

}  // namespace

LCProfile table_R(int k) {
    require_k(k, 2);
    return {Ring::R, k, {{k, SymDim::finite(2)}, {2 * k - 1, SymDim::atom({Atom::Kind::T, k})}}};
}

LCProfile table_B(int k) {
    LCProfile r = table_R(k);
    LCProfile out{Ring::B, k, {}};
    for (const auto& [i, d] : r.rows) out.rows[i] = d.scaled(2);
    return out;
}

LCProfile table_C(int k) {
    require_k(k, 3);
    const Atom ann{Atom::Kind::AnnJ_T, k};
    if (k == 3)
        return {Ring::C, k,
                {{1, SymDim::finite(2)},
                 {2, SymDim::finite(4)},
                 {3, SymDim::extension(sum_of_finite(2), sum_of_atom(ann))}}};
    return {Ring::C, k,
            {{k - 2, SymDim::finite(2)},
             {k - 1, SymDim::finite(4)},
             {k, SymDim::finite(2)},
             {2 * k - 3, SymDim::atom(ann)}}};
}

LCProfile table_A(int k) {
    require_k(k, 3);
    const Atom ann{Atom::Kind::AnnJ_T, k};
    const Atom t{Atom::Kind::T, k};
    if (k == 3)
        return {Ring::A, k,
                {{2, SymDim::finite(2)},
                 {3, SymDim::extension(sum_of_finite(4), sum_of_finite(2))},
                 {4, SymDim::atom(ann)},
                 {5, SymDim::atom(t, 2)}}};
    return {Ring::A, k,
            {{k - 1, SymDim::finite(2)},
             {k, SymDim::finite(6)},
             {2 * k - 2, SymDim::atom(ann)},
             {2 * k - 1, SymDim::atom(t, 2)}}};
}

LesCheck verify_les(const LCProfile& a, const LCProfile& b, const LCProfile& c) {
    const int top = std::max({a.max_degree(), b.max_degree(), c.max_degree()}) + 1;
    // Running dimension of the image of the incoming map, per component.
    SymSum image;
    int segment_end = -1;  // degree of the last nonzero term seen
    for (int i = 0; i <= top; ++i) {
        for (const LCProfile* p : {&a, &b, &c}) {
            const SymSum term = p->row(i).total();
            if (term.is_zero()) {
                if (!image.is_zero()) {
                    return {false, segment_end,
                            "exact segment ending in degree " + std::to_string(segment_end) +
                                " does not close up: leftover " + sum_to_string(image)};
                }
                continue;
            }
            // image(next) = dim(term) − kernel, and kernel = image(previous)
            SymSum next = term;
            SymSum negated;
            negated.finite = -image.finite;
            for (const auto& [atom, m] : image.atoms) negated.atoms[atom] = -m;
            next += negated;
            bool negative = next.finite < 0;
            for (const auto& [atom, m] : next.atoms) negative = negative || m < 0;
            if (negative)
                return {false, i,
                        std::string("H^") + std::to_string(i) + "(" + ring_letter(p->ring) +
                            ") is too small for the incoming image"};
            image = next;
            segment_end = i;
        }
    }
    return {true, std::nullopt, "consistent"};
}

LesCheck verify_les(int k) { return verify_les(table_A(k), table_B(k), table_C(k)); }

namespace {

void require_desk_k(int k) {
    if (k != 2 && k != 3) throw InputError("sphere-product checks are limited to k = 2, 3");
}

}  // namespace

bool verify_kunneth(int k, Field field) {
    require_desk_k(k);
    const BettiVector betti = reduced_betti(sphere_product(k), field);
    for (int i = -1; i <= betti.top_degree(); ++i) {
        const std::size_t expected = i == k - 1 ? 2 : i == 2 * k - 2 ? 1 : 0;
        if (betti.at(i) != expected) return false;
    }
    return betti.top_degree() == 2 * k - 2;
}

bool verify_Sk(int k, Field field) {
    require_desk_k(k);
    const SerreLevel level = max_serre(sphere_product(k), field);
    return level.max_r == k;
}

}  // namespace srkit
