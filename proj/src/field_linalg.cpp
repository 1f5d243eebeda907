#include "plc/field.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace plc {

bool is_prime(unsigned d) noexcept {
    if (d < 2) return false;
    for (unsigned k = 2; k * k <= d; ++k) {
        if (d % k == 0) return false;
    }
    return true;
}

FieldOrder::FieldOrder(unsigned d) : d_(d) {
    if (!is_prime(d)) throw std::invalid_argument("field order " + std::to_string(d) + " is not prime");
    if (d > 251) throw std::invalid_argument("field order " + std::to_string(d) + " exceeds 251");
}

unsigned FieldOrder::inv(unsigned a) const {
    a %= d_;
    if (a == 0) throw std::domain_error("zero has no inverse");
    // Fermat: a^(d-2)
    unsigned result = 1;
    unsigned base = a;
    unsigned e = d_ - 2;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    return engine_() % bound;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldOrder field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), words_(field.is_binary() ? (cols + 63) / 64 : 0) {
    if (field_.is_binary()) {
        bits_.assign(rows_ * words_, 0);
    } else {
        bytes_.assign(rows_ * cols_, 0);
    }
}

Matrix Matrix::identity(FieldOrder field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1U);
    return m;
}

Matrix Matrix::from_rows(FieldOrder field, const std::vector<std::vector<int>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    Matrix m(field, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_rows(FieldOrder field, std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(field, v);
}

void Matrix::set(std::size_t r, std::size_t c, unsigned v) noexcept {
    v %= field_.value();
    if (field_.is_binary()) {
        std::uint64_t& w = bits_[r * words_ + (c >> 6)];
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        w = v != 0 ? (w | mask) : (w & ~mask);
    } else {
        bytes_[r * cols_ + c] = static_cast<std::uint8_t>(v);
    }
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, unsigned factor) noexcept {
    add_row_multiple_from(dst, *this, src, factor);
}

void Matrix::add_row_multiple_from(std::size_t dst, const Matrix& other, std::size_t src, unsigned factor) noexcept {
    factor %= field_.value();
    if (factor == 0) return;
    if (field_.is_binary()) {
        std::uint64_t* d = row_words(dst);
        const std::uint64_t* s = other.row_words(src);
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
        return;
    }
    const unsigned p = field_.value();
    std::uint8_t* d = bytes_.data() + dst * cols_;
    const std::uint8_t* s = other.bytes_.data() + src * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (s[c] != 0) d[c] = static_cast<std::uint8_t>((d[c] + factor * s[c]) % p);
    }
}

void Matrix::scale_row(std::size_t r, unsigned factor) noexcept {
    factor %= field_.value();
    if (field_.is_binary()) {
        if (factor == 0) std::fill_n(row_words(r), words_, 0);
        return;
    }
    const unsigned p = field_.value();
    std::uint8_t* d = bytes_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) d[c] = static_cast<std::uint8_t>((d[c] * factor) % p);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    if (field_.is_binary()) {
        std::swap_ranges(row_words(a), row_words(a) + words_, row_words(b));
    } else {
        std::swap_ranges(bytes_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                         bytes_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                         bytes_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
    }
}

bool Matrix::row_is_zero(std::size_t r) const noexcept {
    if (field_.is_binary()) {
        const std::uint64_t* w = row_words(r);
        return std::all_of(w, w + words_, [](std::uint64_t x) { return x == 0; });
    }
    const std::uint8_t* b = bytes_.data() + r * cols_;
    return std::all_of(b, b + cols_, [](std::uint8_t x) { return x == 0; });
}

bool Matrix::is_zero() const noexcept {
    if (field_.is_binary()) return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t x) { return x == 0; });
    return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (unsigned v = (*this)(r, c); v != 0) t.set(c, r, v);
        }
    }
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) {
            if (unsigned v = (*this)(r0 + r, c0 + c); v != 0) b.set(r, c, v);
        }
    }
    return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw std::out_of_range("row index out of range");
        out.add_row_multiple_from(i, *this, idx[i], 1U);
    }
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw std::out_of_range("column index out of range");
            if (unsigned v = (*this)(r, idx[j]); v != 0) out.set(r, j, v);
        }
    }
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("set_block out of range");
    for (std::size_t r = 0; r < src.rows_; ++r) {
        for (std::size_t c = 0; c < src.cols_; ++c) set(r0 + r, c0 + c, src(r, c));
    }
}

std::vector<int> Matrix::row_values(std::size_t r) const {
    std::vector<int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = static_cast<int>((*this)(r, c));
    return out;
}

std::vector<std::vector<int>> Matrix::to_rows() const {
    std::vector<std::vector<int>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_values(r));
    return out;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (other.cols_ != cols_ || !(other.field_ == field_)) throw std::invalid_argument("vstack shape mismatch");
    Matrix out(field_, rows_ + other.rows_, cols_);
    if (field_.is_binary()) {
        std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
        std::copy(other.bits_.begin(), other.bits_.end(), out.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
    } else {
        std::copy(bytes_.begin(), bytes_.end(), out.bytes_.begin());
        std::copy(other.bytes_.begin(), other.bytes_.end(),
                  out.bytes_.begin() + static_cast<std::ptrdiff_t>(bytes_.size()));
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& other) const {
    if (other.rows_ != rows_ || !(other.field_ == field_)) throw std::invalid_argument("hstack shape mismatch");
    Matrix out(field_, rows_, cols_ + other.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, other);
    return out;
}

Matrix Matrix::direct_sum(const Matrix& other) const {
    if (!(other.field_ == field_)) throw std::invalid_argument("direct_sum field mismatch");
    Matrix out(field_, rows_ + other.rows_, cols_ + other.cols_);
    out.set_block(0, 0, *this);
    out.set_block(rows_, cols_, other);
    return out;
}

void Matrix::check_same_shape(const Matrix& o, const char* what) const {
    if (o.rows_ != rows_ || o.cols_ != cols_ || !(o.field_ == field_)) {
        throw std::invalid_argument(std::string(what) + ": shape or field mismatch");
    }
}

Matrix& Matrix::operator+=(const Matrix& o) {
    check_same_shape(o, "matrix addition");
    if (field_.is_binary()) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    } else {
        const unsigned p = field_.value();
        for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] = static_cast<std::uint8_t>((bytes_[i] + o.bytes_[i]) % p);
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_same_shape(o, "matrix subtraction");
    if (field_.is_binary()) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    } else {
        const unsigned p = field_.value();
        for (std::size_t i = 0; i < bytes_.size(); ++i) {
            bytes_[i] = static_cast<std::uint8_t>((bytes_[i] + p - o.bytes_[i]) % p);
        }
    }
    return *this;
}

Matrix Matrix::scaled(unsigned factor) const {
    Matrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r) out.scale_row(r, factor);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    if (a.field_.is_binary()) {
        const std::size_t ow = out.words_;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::uint64_t* dst = out.row_words(i);
            const std::uint64_t* arow = a.row_words(i);
            for (std::size_t w = 0; w < a.words_; ++w) {
                std::uint64_t bitsw = arow[w];
                while (bitsw != 0) {
                    const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bitsw));
                    bitsw &= bitsw - 1;
                    const std::uint64_t* src = b.row_words(k);
                    for (std::size_t x = 0; x < ow; ++x) dst[x] ^= src[x];
                }
            }
        }
        return out;
    }
    const unsigned p = a.field_.value();
    std::vector<unsigned> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0U);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const unsigned aik = a.bytes_[i * a.cols_ + k];
            if (aik == 0) continue;
            const std::uint8_t* brow = b.bytes_.data() + k * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out.bytes_[i * out.cols_ + j] = static_cast<std::uint8_t>(acc[j] % p);
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_ &&
           a.bytes_ == b.bytes_;
}

bool Matrix::lexicographically_less(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const unsigned x = (*this)(r, c);
            const unsigned y = o(r, c);
            if (x != y) return x < y;
        }
    }
    return false;
}

std::size_t Matrix::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(rows_);
    mix(cols_);
    for (auto w : bits_) mix(w);
    for (auto b : bytes_) mix(b);
    return static_cast<std::size_t>(h);
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " [");
        for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : " ") << (*this)(r, c);
        os << ']';
        if (r + 1 < rows_) os << '\n';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Gauss-Jordan on `m`, mirroring every row operation on `shadow` when given.
std::size_t eliminate(Matrix& m, Matrix* shadow, std::vector<std::size_t>& pivots) {
    const FieldOrder f = m.field();
    pivots.clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        if (shadow != nullptr) shadow->swap_rows(r, p);
        if (const unsigned lead = m(r, c); lead != 1) {
            const unsigned li = f.inv(lead);
            m.scale_row(r, li);
            if (shadow != nullptr) shadow->scale_row(r, li);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            if (const unsigned v = m(i, c); v != 0) {
                const unsigned factor = f.neg(v);
                m.add_row_multiple(i, r, factor);
                if (shadow != nullptr) shadow->add_row_multiple(i, r, factor);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    Matrix reduced = m;
    Matrix transform = Matrix::identity(m.field(), m.rows());
    std::vector<std::size_t> pivots;
    const std::size_t rk = eliminate(reduced, &transform, pivots);
    return RrefResult{std::move(reduced), rk, std::move(transform), std::move(pivots)};
}

Matrix rref_only(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix reduced = m;
    std::vector<std::size_t> pv;
    eliminate(reduced, nullptr, pv);
    if (pivots != nullptr) *pivots = std::move(pv);
    return reduced;
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    std::vector<std::size_t> pv;
    return eliminate(work, nullptr, pv);
}

Matrix null_space(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref_only(m, &pivots);
    const FieldOrder f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix basis(f, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.set(fc, k, 1U);
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            if (const unsigned v = r(row, fc); v != 0) basis.set(pivots[row], k, f.neg(v));
        }
    }
    return basis;
}

Matrix left_null_space(const Matrix& m) { return null_space(m.transpose()).transpose(); }

Matrix row_space_basis(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref_only(m, &pivots);
    return r.block(0, 0, pivots.size(), m.cols());
}

Matrix complete_basis(const Matrix& basis) {
    std::vector<std::size_t> pivots;
    (void)rref_only(basis, &pivots);
    std::vector<bool> is_pivot(basis.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix extra(basis.field(), basis.cols() - pivots.size(), basis.cols());
    std::size_t k = 0;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        if (!is_pivot[c]) extra.set(k++, c, 1U);
    }
    return extra;
}

Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_intersection width mismatch");
    if (a.rows() == 0 || b.rows() == 0) return Matrix(a.field(), 0, a.cols());
    // x a + y b = 0  =>  x a lies in both row spaces.
    const Matrix combos = left_null_space(a.vstack(b));
    const Matrix xs = combos.block(0, 0, combos.rows(), a.rows());
    return row_space_basis(xs * a);
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
    const Matrix aug = a.hstack(b);
    std::vector<std::size_t> pivots;
    const Matrix r = rref_only(aug, &pivots);
    Matrix particular(a.field(), a.cols(), b.cols());
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        const std::size_t p = pivots[row];
        if (p >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) particular.set(p, j, r(row, a.cols() + j));
    }
    return LinearSolution{std::move(particular), null_space(a)};
}

std::optional<Matrix> invert(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("invert: matrix is not square");
    RrefResult res = rref(m);
    if (res.rank < m.rows()) return std::nullopt;
    return std::move(res.row_transform);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix flatten_column_major(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) v.set(column_major_index(i, j, m.rows()), 0, m(i, j));
    }
    return v;
}

Matrix unflatten_column_major(const Matrix& vec, std::size_t rows, std::size_t cols) {
    if (vec.rows() != rows * cols || vec.cols() != 1) throw std::invalid_argument("unflatten: size mismatch");
    Matrix m(vec.field(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, vec(column_major_index(i, j, rows), 0));
    }
    return m;
}

std::uint64_t general_linear_order(std::size_t n, FieldOrder d) {
    std::uint64_t dn = 1;
    for (std::size_t i = 0; i < n; ++i) dn *= d.value();
    std::uint64_t order = 1;
    std::uint64_t dk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        order *= dn - dk;
        dk *= d.value();
    }
    return order;
}

void enumerate_invertible(std::size_t n, FieldOrder d, const std::function<bool(const Matrix&)>& visit,
                          EnumerationBudget budget) {
    const std::size_t cells = n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total > budget.max_candidates / d.value()) {
            throw std::length_error("enumerate_invertible: d^(n^2) exceeds the enumeration budget");
        }
        total *= d.value();
    }
    if (total > budget.max_candidates) throw std::length_error("enumerate_invertible: budget exceeded");
    Matrix m(d, n, n);
    std::vector<unsigned> digits(cells, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            // odometer increment
            for (std::size_t k = 0; k < cells; ++k) {
                digits[k] = (digits[k] + 1) % d.value();
                m.set(k / n, k % n, digits[k]);
                if (digits[k] != 0) break;
            }
        }
        if (is_invertible(m) && !visit(m)) return;
    }
}

std::vector<Matrix> all_invertible(std::size_t n, FieldOrder d, EnumerationBudget budget) {
    std::vector<Matrix> out;
    enumerate_invertible(
        n, d,
        [&out](const Matrix& m) {
            out.push_back(m);
            return true;
        },
        budget);
    return out;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, FieldOrder d, Rng& rng) {
    Matrix m(d, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<unsigned>(rng.below(d.value())));
    }
    return m;
}

Matrix random_invertible(std::size_t n, FieldOrder d, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, d, rng);
        if (is_invertible(m)) return m;
    }
}

Matrix random_invertible(std::size_t n, FieldOrder d, std::uint64_t seed) {
    Rng rng(seed);
    return random_invertible(n, d, rng);
}

}  // namespace plc
