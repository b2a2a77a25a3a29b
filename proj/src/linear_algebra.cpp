#include "genus/linear_algebra.hpp"

#include "genus/errors.hpp"

namespace genus {

std::optional<std::vector<Rational>> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw InputError("solve_exact: right-hand side has wrong length");
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (const auto &row : a)
        if (row.size() != cols) throw InputError("solve_exact: ragged matrix");

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

RationalMatrix transpose(const RationalMatrix &a) {
    if (a.empty()) return {};
    RationalMatrix t(a.front().size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RationalMatrix multiply(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.empty() || b.empty()) return {};
    if (a.front().size() != b.size()) throw InputError("matrix product: inner dimensions differ");
    RationalMatrix out(a.size(), std::vector<Rational>(b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace genus
