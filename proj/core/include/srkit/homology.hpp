#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srkit/complex.hpp"
#include "srkit/integer_matrix.hpp"

namespace srkit {

/// Coefficient field: Q (characteristic 0) or F_p for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws InputError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// Parses "q"/"Q" or "f:<p>".
    static Field parse(std::string_view text);

    [[nodiscard]] std::uint32_t characteristic() const { return characteristic_; }
    [[nodiscard]] bool is_rational() const { return characteristic_ == 0; }
    /// "Q" or "F_p".
    [[nodiscard]] std::string name() const;

    friend bool operator==(Field, Field) = default;

private:
    explicit Field(std::uint32_t characteristic) : characteristic_(characteristic) {}
    std::uint32_t characteristic_;
};

/// Reduced Betti numbers dim H̃_i(Δ; K) for i = -1, ..., dim Δ.
class BettiVector {
public:
    BettiVector(Field field, std::vector<std::size_t> dims_from_minus_one)
        : field_(field), dims_(std::move(dims_from_minus_one)) {}

    [[nodiscard]] Field field() const { return field_; }
    /// dim H̃_degree; zero outside the stored range.
    [[nodiscard]] std::size_t at(int degree) const;
    [[nodiscard]] int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;

private:
    Field field_;
    std::vector<std::size_t> dims_;
};

/// Augmented boundary map ∂_i : C_i → C_{i-1}. Columns are the i-faces and
/// rows the (i-1)-faces, both graded lexicographically; the entry at
/// (σ minus its j-th vertex, σ) is (-1)^j. ∂_0 is the augmentation onto
/// C_{-1} = Z·{∅}. Degrees outside the complex give correctly shaped
/// empty matrices.
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int degree);

/// Face counts and boundary-map invariant factors of the augmented chain
/// complex; every coefficient field's homology is read off from it.
struct ChainSpectrum {
    /// f_i at index i+1, for i = -1..dim.
    std::vector<std::size_t> face_counts;
    /// SNF of ∂_i at index i, for i = 0..dim (∂_{-1} and ∂_{dim+1} vanish).
    std::vector<SNFResult> boundary_snf;

    [[nodiscard]] int top_degree() const { return static_cast<int>(face_counts.size()) - 2; }
    /// rank of ∂_degree over the field.
    [[nodiscard]] std::size_t boundary_rank(int degree, Field field) const;
};

ChainSpectrum chain_spectrum(const SimplicialComplex& complex);

BettiVector reduced_betti(const ChainSpectrum& spectrum, Field field);
BettiVector reduced_betti(const SimplicialComplex& complex, Field field = Field::rationals());

struct IntegralHomologyGroup {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};

/// H̃_i(Δ; Z) for i = -1..dim.
std::vector<IntegralHomologyGroup> homology_over_Z(const ChainSpectrum& spectrum);
std::vector<IntegralHomologyGroup> homology_over_Z(const SimplicialComplex& complex);

/// Σ (-1)^i f_i over i = -1..dim.
long reduced_euler_characteristic(const SimplicialComplex& complex);

}  // namespace srkit
