#include "gemc/smith.hpp"

#include <stdexcept>
#include <utility>

namespace gemc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size does not match shape");
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                std::int64_t term = 0;
                if (__builtin_mul_overflow(a.at(i, k), b.at(k, j), &term) || __builtin_add_overflow(sum, term, &sum))
                    throw std::overflow_error("matrix product overflows int64");
            }
            out.at(i, j) = sum;
        }
    return out;
}

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    return smith_normal_form(std::move(rows));
}

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> a) {
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
    std::vector<BigInt> diag;

    for (std::size_t t = 0; t < nrows && t < ncols; ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| in the trailing block
            std::size_t pr = nrows, pc = ncols;
            for (std::size_t r = t; r < nrows; ++r)
                for (std::size_t c = t; c < ncols; ++c)
                    if (a[r][c] != 0 && (pr == nrows || abs(a[r][c]) < abs(a[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == nrows) return diag;
            std::swap(a[t], a[pr]);
            for (std::size_t r = 0; r < nrows; ++r) std::swap(a[r][t], a[r][pc]);

            bool clean = true;
            for (std::size_t r = t + 1; r < nrows; ++r) {
                if (a[r][t] == 0) continue;
                const BigInt q = a[r][t] / a[t][t];
                for (std::size_t c = t; c < ncols; ++c) a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < ncols; ++c) {
                if (a[t][c] == 0) continue;
                const BigInt q = a[t][c] / a[t][t];
                for (std::size_t r = t; r < nrows; ++r) a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into the pivot row and retry
            bool divides = true;
            for (std::size_t r = t + 1; r < nrows && divides; ++r)
                for (std::size_t c = t + 1; c < ncols; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (std::size_t k = t; k < ncols; ++k) a[t][k] += a[r][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

}  // namespace gemc
