#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "srkit/complex.hpp"

namespace srkit {

/// x^u for a nonnegative exponent vector u.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    [[nodiscard]] int n_vars() const { return static_cast<int>(exponents_.size()); }
    [[nodiscard]] const std::vector<int>& exponents() const { return exponents_; }
    [[nodiscard]] std::vector<int> support() const;
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool divides(const Monomial& other) const;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exponents_;
};

/// A monomial ideal in n_vars variables given by generators. No generators
/// means the zero ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(int n_vars, std::vector<Monomial> generators);

    [[nodiscard]] int n_vars() const { return n_vars_; }
    [[nodiscard]] const std::vector<Monomial>& generators() const { return generators_; }
    [[nodiscard]] bool is_zero() const { return generators_.empty(); }
    [[nodiscard]] bool is_unit() const;

    /// Drops generators divisible by another generator; sorts the rest.
    [[nodiscard]] MonomialIdeal minimalized() const;

private:
    int n_vars_ = 0;
    std::vector<Monomial> generators_;
};

/// The monomial prime (x_j : j in vars).
class MonomialPrime {
public:
    MonomialPrime() = default;
    MonomialPrime(int n_vars, std::vector<int> vars);

    [[nodiscard]] int n_vars() const { return n_vars_; }
    [[nodiscard]] const std::vector<int>& vars() const { return vars_; }
    [[nodiscard]] int height() const { return static_cast<int>(vars_.size()); }
    /// Krull dimension of S/P.
    [[nodiscard]] int dimension() const { return n_vars_ - height(); }
    [[nodiscard]] bool contains_var(int j) const;
    [[nodiscard]] bool is_subset_of(const MonomialPrime& other) const;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;

private:
    int n_vars_ = 0;
    std::vector<int> vars_;
};

/// Minimal primes of a monomial ideal: the inclusion-minimal transversals
/// of the generator supports, sorted lexicographically by variables.
/// Throws UnitIdealError for the unit ideal, InputError for the zero ideal.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// The minimal prime P_F = (x_i : i not in F) of K[Δ] for every facet F,
/// in facet order.
std::vector<std::pair<MonomialPrime, Face>> stanley_reisner_components(
    const SimplicialComplex& complex);

}  // namespace srkit
