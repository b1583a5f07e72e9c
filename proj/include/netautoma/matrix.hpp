#pragma once

#include <cstddef>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace netautoma {

// Dense row-major matrix. Rows are timesteps, columns are network nodes
// throughout this library.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Drops the first `tau` rows (the transient) and keeps rows tau..end.
template <typename T>
Matrix<T> discard_transient(const Matrix<T>& m, std::size_t tau) {
    if (tau >= m.rows())
        throw std::invalid_argument("discard_transient: tau must be smaller than the row count");
    Matrix<T> out(m.rows() - tau, m.cols());
    for (std::size_t r = tau; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r - tau, c) = m(r, c);
    return out;
}

// Plain-text dump: one header line "rows cols", then one line per row.
// Real values keep 17 significant digits so the dump round-trips.
template <typename T>
void write_matrix_text(std::ostream& os, const Matrix<T>& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    char buf[64];
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            if constexpr (std::is_floating_point_v<T>) {
                std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(m(r, c)));
                os << buf;
            } else {
                os << static_cast<long long>(m(r, c));
            }
        }
        os << '\n';
    }
}

}  // namespace netautoma
