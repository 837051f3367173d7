#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srkit/homology.hpp"

namespace srkit {

/// Opaque infinite-dimensional pieces appearing in the fiber-product
/// tables: T_k = H^{2k-1}(R_k) and its J-torsion (0 :_{T_k} J).
struct Atom {
    enum class Kind { T, AnnJ_T };
    Kind kind;
    int k;

    [[nodiscard]] std::string label() const;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// finite-dimensional part plus a multiset of atoms, combined as a direct sum.
struct SymSum {
    long finite = 0;
    std::map<Atom, long> atoms;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_finite() const { return atoms.empty(); }
    SymSum& operator+=(const SymSum& rhs);
    friend SymSum operator+(SymSum lhs, const SymSum& rhs) { return lhs += rhs; }
    friend bool operator==(const SymSum&, const SymSum&) = default;
};

/// A symbolic dimension: either a direct sum, or an unresolved extension
/// 0 → sub → X → quotient → 0 of which only the two ends are known.
class SymDim {
public:
    SymDim() = default;
    static SymDim zero() { return {}; }
    static SymDim finite(long n);
    static SymDim atom(Atom a, long multiplicity = 1);
    static SymDim extension(SymSum sub, SymSum quotient);

    [[nodiscard]] bool is_extension() const { return extension_.has_value(); }
    /// For a direct sum: its parts. For an extension: sub + quotient.
    [[nodiscard]] SymSum total() const;
    [[nodiscard]] const SymSum& direct() const { return direct_; }
    [[nodiscard]] const std::optional<std::pair<SymSum, SymSum>>& extension_parts() const {
        return extension_;
    }
    [[nodiscard]] bool is_zero() const { return total().is_zero(); }
    /// No atoms and no extension marker.
    [[nodiscard]] bool is_finite() const { return !is_extension() && direct_.is_finite(); }

    SymDim& operator+=(const SymDim& rhs);
    friend SymDim operator+(SymDim lhs, const SymDim& rhs) { return lhs += rhs; }
    [[nodiscard]] SymDim scaled(long factor) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SymDim&, const SymDim&) = default;

private:
    SymSum direct_;
    std::optional<std::pair<SymSum, SymSum>> extension_;
};

enum class Ring { R, B, C, A };
char ring_letter(Ring ring);

/// Local cohomology H^i of one ring of the family 0 → A_k → B_k → C_k → 0
/// with B_k = R_k × R_k, by cohomological degree.
struct LCProfile {
    Ring ring;
    int k;
    std::map<int, SymDim> rows;  // only nonzero rows are stored

    [[nodiscard]] SymDim row(int degree) const;
    [[nodiscard]] int max_degree() const;
    friend bool operator==(const LCProfile&, const LCProfile&) = default;
};

/// H^i(R_k): K^2 at i = k, T_k at i = 2k − 1. Requires k >= 2.
LCProfile table_R(int k);
/// Twice table_R. Requires k >= 2.
LCProfile table_B(int k);
/// Requires k >= 3; k = 3 carries an unresolved extension in degree 3.
LCProfile table_C(int k);
LCProfile table_A(int k);

struct LesCheck {
    bool ok = true;
    /// Degree of the term where the first violation was detected.
    std::optional<int> failing_degree;
    std::string message;
};

/// Bookkeeping check of the long exact sequence
///   … → H^i(A) → H^i(B) → H^i(C) → H^{i+1}(A) → …
/// Between consecutive zero terms the sequence is exact and bounded, so
/// the running image dimension (tracked separately for the finite part and
/// for every atom) must stay nonnegative and return to zero.
LesCheck verify_les(const LCProfile& a, const LCProfile& b, const LCProfile& c);
LesCheck verify_les(int k);

/// reduced_betti(sphere_product(k)) is 2 in degree k−1, 1 in degree 2k−2
/// and zero elsewhere. Only k ∈ {2, 3}.
bool verify_kunneth(int k, Field field = Field::rationals());
/// max_serre(sphere_product(k)) == k. Only k ∈ {2, 3}.
bool verify_Sk(int k, Field field = Field::rationals());

}  // namespace srkit
