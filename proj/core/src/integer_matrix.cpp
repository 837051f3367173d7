#include "srkit/integer_matrix.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

namespace srkit {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> dense;
    for (const auto& r : rows) dense.emplace_back(r);
    return from_rows(dense);
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r].at(c) != 0) m.columns_[c].emplace_back(r, mpz_class(rows[r][c]));
    return m;
}

mpz_class IntegerMatrix::at(std::size_t row, std::size_t col) const {
    const auto& column = columns_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != column.end() && it->first == row) return it->second;
    return 0;
}

void IntegerMatrix::set(std::size_t row, std::size_t col, const mpz_class& value) {
    auto& column = columns_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    const bool present = it != column.end() && it->first == row;
    if (value == 0) {
        if (present) column.erase(it);
    } else if (present) {
        it->second = value;
    } else {
        column.insert(it, Entry{row, value});
    }
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    IntegerMatrix out(rows_, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::map<std::size_t, mpz_class> acc;
        for (const auto& [k, b] : rhs.columns_[c])
            for (const auto& [r, a] : columns_.at(k)) acc[r] += a * b;
        for (auto& [r, v] : acc)
            if (v != 0) out.columns_[c].emplace_back(r, std::move(v));
    }
    return out;
}

std::size_t SNFResult::rank_mod(std::uint32_t p) const {
    std::size_t n = 0;
    for (const mpz_class& d : elementary_divisors)
        if (mpz_divisible_ui_p(d.get_mpz_t(), p) == 0) ++n;
    return n;
}

std::vector<mpz_class> SNFResult::torsion() const {
    std::vector<mpz_class> out;
    for (const mpz_class& d : elementary_divisors)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

using Col = std::uint32_t;
using SparseRow = std::vector<std::pair<Col, mpz_class>>;

mpz_class* find_in_row(SparseRow& row, Col c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, Col col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
}

class UnitEliminator {
public:
    explicit UnitEliminator(const IntegerMatrix& m)
        : rows_(m.rows()), row_active_(m.rows(), true), col_count_(m.cols(), 0),
          col_rows_(m.cols()) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& [r, v] : m.column(c)) {
                rows_[r].emplace_back(static_cast<Col>(c), v);
                ++col_count_[c];
                col_rows_[c].push_back(static_cast<std::uint32_t>(r));
            }
        // columns were visited in order, so rows are already sorted
    }

    /// Eliminates unit pivots until none remain; returns how many.
    std::size_t run() {
        std::size_t eliminated = 0;
        while (auto pivot = choose_pivot()) {
            eliminate(pivot->first, pivot->second);
            ++eliminated;
        }
        return eliminated;
    }

    /// The surviving active submatrix in dense form.
    [[nodiscard]] std::vector<std::vector<mpz_class>> residual() const {
        std::vector<Col> cols;
        for (std::size_t c = 0; c < col_count_.size(); ++c)
            if (col_count_[c] > 0) cols.push_back(static_cast<Col>(c));
        std::vector<std::vector<mpz_class>> dense;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_active_[r] || rows_[r].empty()) continue;
            std::vector<mpz_class> row(cols.size());
            for (const auto& [c, v] : rows_[r]) {
                auto pos = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
                row[static_cast<std::size_t>(pos)] = v;
            }
            dense.push_back(std::move(row));
        }
        return dense;
    }

private:
    std::optional<std::pair<std::size_t, Col>> choose_pivot() const {
        std::optional<std::pair<std::size_t, Col>> best;
        std::size_t best_score = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_active_[r] || rows_[r].empty()) continue;
            const std::size_t row_len = rows_[r].size() - 1;
            for (const auto& [c, v] : rows_[r]) {
                if (abs(v) != 1) continue;
                const std::size_t score = row_len * (col_count_[c] - 1);
                if (score < best_score) {
                    best_score = score;
                    best = {r, c};
                    if (score == 0) return best;
                }
            }
        }
        return best;
    }

    void eliminate(std::size_t pivot_row, Col pivot_col) {
        const SparseRow& prow = rows_[pivot_row];
        const int sign = *find_in_row(rows_[pivot_row], pivot_col) > 0 ? 1 : -1;

        std::vector<std::uint32_t> targets = col_rows_[pivot_col];
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (std::uint32_t r : targets) {
            if (r == pivot_row || !row_active_[r]) continue;
            mpz_class* a = find_in_row(rows_[r], pivot_col);
            if (!a) continue;
            const mpz_class factor = *a * sign;
            axpy(rows_[r], r, factor, prow);
        }
        for (const auto& [c, v] : prow) --col_count_[c];
        col_count_[pivot_col] = 0;
        row_active_[pivot_row] = false;
    }

    // target -= factor * source, keeping column bookkeeping current.
    void axpy(SparseRow& target, std::uint32_t target_index, const mpz_class& factor,
              const SparseRow& source) {
        SparseRow merged;
        merged.reserve(target.size() + source.size());
        auto t = target.begin();
        auto s = source.begin();
        while (t != target.end() || s != source.end()) {
            if (s == source.end() || (t != target.end() && t->first < s->first)) {
                merged.push_back(std::move(*t++));
            } else if (t == target.end() || s->first < t->first) {
                merged.emplace_back(s->first, -factor * s->second);
                ++col_count_[s->first];
                col_rows_[s->first].push_back(target_index);
                ++s;
            } else {
                mpz_class v = t->second - factor * s->second;
                if (v != 0)
                    merged.emplace_back(t->first, std::move(v));
                else
                    --col_count_[t->first];
                ++t;
                ++s;
            }
        }
        target = std::move(merged);
    }

    std::vector<SparseRow> rows_;
    std::vector<bool> row_active_;
    std::vector<std::size_t> col_count_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
};

// Reduces a dense matrix to diagonal form by unimodular row and column
// operations, always pivoting on the entry of least magnitude.
std::vector<mpz_class> dense_diagonalize(std::vector<std::vector<mpz_class>> a) {
    std::vector<mpz_class> diagonal;
    const std::size_t m = a.size();
    if (m == 0) return diagonal;
    const std::size_t n = a.front().size();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) return diagonal;
            std::swap(a[t], a[pi]);
            if (pj != t)
                for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

            bool clean = true;
            mpz_class q;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < n; ++j)
                    if (a[t][j] != 0) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < m; ++i)
                    if (a[i][t] != 0) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        diagonal.push_back(abs(a[t][t]));
    }
    return diagonal;
}

// diag(a, b) is equivalent to diag(gcd, lcm); sweeping all pairs yields
// the invariant-factor chain.
void normalize_chain(std::vector<mpz_class>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
            mpz_class g = gcd(d[i], d[j]);
            mpz_class l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& matrix) {
    UnitEliminator elim(matrix);
    const std::size_t units = elim.run();
    std::vector<mpz_class> rest = dense_diagonalize(elim.residual());
    normalize_chain(rest);
    SNFResult out;
    out.elementary_divisors.assign(units, mpz_class(1));
    for (auto& d : rest) out.elementary_divisors.push_back(std::move(d));
    return out;
}

}  // namespace srkit
