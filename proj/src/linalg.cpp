#include "folia/linalg.hpp"

#include "folia/error.hpp"

namespace folia {

std::vector<size_t> rref(RatMat& m) {
    std::vector<size_t> pivots;
    if (m.empty())
        return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr == rows)
            continue;
        std::swap(m[r], m[pr]);
        Rat inv = m[r][c].inv();
        for (size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(RatMat m) { return rref(m).size(); }

std::optional<RatRow> solve(const RatMat& a, const RatRow& b) {
    if (a.size() != b.size())
        fail(Errc::internal, "solve: dimension mismatch");
    if (a.empty())
        return RatRow{};
    const size_t rows = a.size(), cols = a[0].size();
    RatMat aug(rows, RatRow(cols + 1, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j)
            aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<size_t> piv = rref(aug);
    for (size_t k = 0; k < piv.size(); ++k)
        if (piv[k] == cols)
            return std::nullopt; // pivot in the constants column
    RatRow x(cols, Rat(0));
    for (size_t k = 0; k < piv.size(); ++k) {
        // row k has pivot at column piv[k]; with free vars zero the
        // solution entry is the augmented value
        x[piv[k]] = aug[k][cols];
    }
    return x;
}

Rat det(RatMat m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            fail(Errc::internal, "det: non-square matrix");
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t pr = n;
        for (size_t i = c; i < n; ++i)
            if (!m[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr == n)
            return Rat(0);
        if (pr != c) {
            std::swap(m[pr], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = m[c][c].inv();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero())
                continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

} // namespace folia
