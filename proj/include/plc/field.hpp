#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace plc {

/// Order of a prime field Z_d. Construction fails for non-primes and for
/// d > 251 (entries of odd-characteristic matrices are stored as bytes).
class FieldOrder {
public:
    explicit FieldOrder(unsigned d);

    [[nodiscard]] unsigned value() const noexcept { return d_; }
    [[nodiscard]] bool is_binary() const noexcept { return d_ == 2; }

    [[nodiscard]] unsigned reduce(long long v) const noexcept {
        long long r = v % static_cast<long long>(d_);
        return static_cast<unsigned>(r < 0 ? r + d_ : r);
    }
    [[nodiscard]] unsigned add(unsigned a, unsigned b) const noexcept { return (a + b) % d_; }
    [[nodiscard]] unsigned sub(unsigned a, unsigned b) const noexcept { return (a + d_ - b) % d_; }
    [[nodiscard]] unsigned mul(unsigned a, unsigned b) const noexcept { return (a * b) % d_; }
    [[nodiscard]] unsigned neg(unsigned a) const noexcept { return (d_ - a) % d_; }
    /// Multiplicative inverse; throws std::domain_error for zero.
    [[nodiscard]] unsigned inv(unsigned a) const;

    friend bool operator==(FieldOrder, FieldOrder) = default;

private:
    unsigned d_;
};

[[nodiscard]] bool is_prime(unsigned d) noexcept;

/// Seeded generator used for every random choice in the library. Built on
/// mt19937_64 with explicit modular reduction so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform-ish value in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Dense matrix over Z_d.
///
/// For d = 2 rows are bit-packed into 64-bit words so that row operations are
/// word-parallel; for odd d every entry occupies one byte.
class Matrix {
public:
    Matrix(FieldOrder field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldOrder field, std::size_t n);
    static Matrix from_rows(FieldOrder field, const std::vector<std::vector<int>>& rows);
    static Matrix from_rows(FieldOrder field, std::initializer_list<std::initializer_list<int>> rows);

    [[nodiscard]] FieldOrder field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] unsigned operator()(std::size_t r, std::size_t c) const noexcept {
        if (field_.is_binary()) {
            return static_cast<unsigned>((bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1U);
        }
        return bytes_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, unsigned v) noexcept;
    void set(std::size_t r, std::size_t c, long long v) noexcept { set(r, c, field_.reduce(v)); }
    void set(std::size_t r, std::size_t c, int v) noexcept { set(r, c, field_.reduce(v)); }

    /// row(dst) += factor * row(src)
    void add_row_multiple(std::size_t dst, std::size_t src, unsigned factor) noexcept;
    void add_row_multiple_from(std::size_t dst, const Matrix& other, std::size_t src, unsigned factor) noexcept;
    void scale_row(std::size_t r, unsigned factor) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    [[nodiscard]] bool row_is_zero(std::size_t r) const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    [[nodiscard]] Matrix row_matrix(std::size_t r) const { return block(r, 0, 1, cols_); }
    [[nodiscard]] Matrix col_matrix(std::size_t c) const { return block(0, c, rows_, 1); }
    [[nodiscard]] Matrix select_rows(const std::vector<std::size_t>& idx) const;
    [[nodiscard]] Matrix select_cols(const std::vector<std::size_t>& idx) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src);
    [[nodiscard]] std::vector<int> row_values(std::size_t r) const;
    [[nodiscard]] std::vector<std::vector<int>> to_rows() const;

    /// Appends the rows of `other` (column counts must agree).
    [[nodiscard]] Matrix vstack(const Matrix& other) const;
    [[nodiscard]] Matrix hstack(const Matrix& other) const;
    [[nodiscard]] Matrix direct_sum(const Matrix& other) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    [[nodiscard]] Matrix scaled(unsigned factor) const;
    [[nodiscard]] Matrix negated() const { return scaled(field_.neg(1)); }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Total order on (shape, entries); used for canonical tie-breaking.
    [[nodiscard]] bool lexicographically_less(const Matrix& o) const;
    [[nodiscard]] std::size_t hash() const noexcept;

    [[nodiscard]] std::string to_string() const;

    // Raw word access for the d = 2 kernels.
    [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }
    [[nodiscard]] const std::uint64_t* row_words(std::size_t r) const noexcept { return bits_.data() + r * words_; }
    [[nodiscard]] std::uint64_t* row_words(std::size_t r) noexcept { return bits_.data() + r * words_; }

private:
    void check_same_shape(const Matrix& o, const char* what) const;

    FieldOrder field_;
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint8_t> bytes_;
};

/// Row transform T and reduced form R with T * m = R.
struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    Matrix row_transform;
    std::vector<std::size_t> pivot_cols;
};

[[nodiscard]] RrefResult rref(const Matrix& m);
/// Reduced row echelon form without tracking the transform.
[[nodiscard]] Matrix rref_only(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, one basis vector per column
/// of the returned cols(m) x k matrix.
[[nodiscard]] Matrix null_space(const Matrix& m);
/// Basis of the left null space {y : y m = 0}, one basis vector per row.
[[nodiscard]] Matrix left_null_space(const Matrix& m);
/// Rows forming a basis of the row space of m.
[[nodiscard]] Matrix row_space_basis(const Matrix& m);
/// Rows that complete the independent rows of `basis` to a basis of Z_d^n.
[[nodiscard]] Matrix complete_basis(const Matrix& basis);
/// Basis (rows) of the intersection of two row spaces of the same width.
[[nodiscard]] Matrix row_space_intersection(const Matrix& a, const Matrix& b);

/// All solutions of a x = b: one particular solution plus a basis of the
/// homogeneous solutions (columns of `kernel`).
struct LinearSolution {
    Matrix particular;
    Matrix kernel;
};

[[nodiscard]] std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);
[[nodiscard]] std::optional<Matrix> invert(const Matrix& m);
[[nodiscard]] bool is_invertible(const Matrix& m);

/// Column-major flattening of matrix unknowns: entry (i, j) of an r x c
/// matrix sits at index j * r + i. Every linear system with matrix unknowns
/// uses this convention.
[[nodiscard]] inline std::size_t column_major_index(std::size_t i, std::size_t j, std::size_t rows) noexcept {
    return j * rows + i;
}
[[nodiscard]] Matrix flatten_column_major(const Matrix& m);
[[nodiscard]] Matrix unflatten_column_major(const Matrix& vec, std::size_t rows, std::size_t cols);

/// Π_{k<n} (d^n - d^k)
[[nodiscard]] std::uint64_t general_linear_order(std::size_t n, FieldOrder d);

struct EnumerationBudget {
    /// Upper bound on d^(n^2) candidate matrices scanned.
    std::uint64_t max_candidates = std::uint64_t{1} << 16;
};

/// Calls `visit` on every invertible n x n matrix over Z_d. Returning false
/// from the callback stops the enumeration. Throws std::length_error when
/// d^(n^2) exceeds the budget (defaults admit n <= 4 for d = 2, n <= 3 for d = 3).
void enumerate_invertible(std::size_t n, FieldOrder d, const std::function<bool(const Matrix&)>& visit,
                          EnumerationBudget budget = {});
[[nodiscard]] std::vector<Matrix> all_invertible(std::size_t n, FieldOrder d, EnumerationBudget budget = {});

[[nodiscard]] Matrix random_matrix(std::size_t rows, std::size_t cols, FieldOrder d, Rng& rng);
[[nodiscard]] Matrix random_invertible(std::size_t n, FieldOrder d, Rng& rng);
[[nodiscard]] Matrix random_invertible(std::size_t n, FieldOrder d, std::uint64_t seed);

}  // namespace plc
