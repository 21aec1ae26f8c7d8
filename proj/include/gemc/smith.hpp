#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gemc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact product; throws std::overflow_error if an entry leaves int64.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Nonzero invariant factors d_1 | d_2 | ... | d_r (r = rank), all positive.
/// Unit factors are kept, so the 2x2 identity yields (1, 1).
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

/// Same on a big-integer matrix given as rows.
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> rows);

}  // namespace gemc
