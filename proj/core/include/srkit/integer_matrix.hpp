#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace srkit {

/// Sparse arbitrary-precision integer matrix, stored by columns.
class IntegerMatrix {
public:
    using Entry = std::pair<std::size_t, mpz_class>;  // (row, value), value != 0

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return columns_.size(); }
    [[nodiscard]] mpz_class at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const mpz_class& value);

    /// Nonzero entries of column `col`, ordered by row.
    [[nodiscard]] const std::vector<Entry>& column(std::size_t col) const { return columns_.at(col); }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

    [[nodiscard]] IntegerMatrix transposed() const;
    [[nodiscard]] IntegerMatrix operator*(const IntegerMatrix& rhs) const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

struct SNFResult {
    /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
    std::vector<mpz_class> elementary_divisors;

    [[nodiscard]] std::size_t rank() const { return elementary_divisors.size(); }
    /// Rank of the matrix reduced mod p.
    [[nodiscard]] std::size_t rank_mod(std::uint32_t p) const;
    /// Divisors greater than one.
    [[nodiscard]] std::vector<mpz_class> torsion() const;
};

/// Elementary divisors of an integer matrix.
///
/// Unit pivots are eliminated first on the sparse representation, chosen
/// by a Markowitz fill score; whatever survives (typically empty for
/// boundary maps of manifolds) is reduced densely with smallest-magnitude
/// pivoting. The resulting diagonal is normalized into a divisibility chain.
SNFResult smith_normal_form(const IntegerMatrix& matrix);

}  // namespace srkit
