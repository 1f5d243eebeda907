#pragma once

#include "plc/field.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plc {

/// Pauli operator modulo phase: (a_1, b_1, ..., a_n, b_n) over Z_d, encoding
/// X^{a_1} Z^{b_1} (x) ... (x) X^{a_n} Z^{b_n}. Sites are 0-indexed in code.
class SymplecticVector {
public:
    SymplecticVector(FieldOrder d, std::size_t n);
    SymplecticVector(FieldOrder d, std::vector<int> interleaved);

    /// Qubit helper: "XZIY" -> X on site 0, Z on site 1, identity, Y.
    static SymplecticVector from_pauli_string(std::string_view paulis);
    /// X^a Z^b on a single site, identity elsewhere.
    static SymplecticVector single_site(FieldOrder d, std::size_t n, std::size_t site, unsigned a, unsigned b);

    [[nodiscard]] FieldOrder field() const noexcept { return field_; }
    [[nodiscard]] std::size_t sites() const noexcept { return entries_.size() / 2; }
    [[nodiscard]] unsigned x(std::size_t site) const noexcept { return entries_[2 * site]; }
    [[nodiscard]] unsigned z(std::size_t site) const noexcept { return entries_[2 * site + 1]; }
    void set_x(std::size_t site, unsigned v) noexcept { entries_[2 * site] = field_.reduce(v); }
    void set_z(std::size_t site, unsigned v) noexcept { entries_[2 * site + 1] = field_.reduce(v); }
    [[nodiscard]] const std::vector<unsigned>& entries() const noexcept { return entries_; }
    [[nodiscard]] bool is_zero() const noexcept;

    SymplecticVector& operator+=(const SymplecticVector& o);
    [[nodiscard]] SymplecticVector scaled(unsigned k) const;
    friend SymplecticVector operator+(SymplecticVector a, const SymplecticVector& b) { return a += b; }
    friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;

    [[nodiscard]] Matrix as_row() const;
    static SymplecticVector from_row(const Matrix& m, std::size_t row);

    [[nodiscard]] std::string to_string() const;

private:
    FieldOrder field_;
    std::vector<unsigned> entries_;
};

/// Ordered list of disjoint, non-empty parties covering sites 0..n-1.
class PartyPartition {
public:
    PartyPartition(std::size_t n, std::vector<std::vector<std::size_t>> parties);

    /// Same checks except that parties may be empty. Synthesized states and
    /// reference tuples (a Bell pair shared by two of three parties) need this.
    static PartyPartition allowing_empty(std::size_t n, std::vector<std::vector<std::size_t>> parties);

    /// Parties filled with consecutive sites: sizes (2,1,1) -> {0,1}|{2}|{3}.
    static PartyPartition contiguous(const std::vector<std::size_t>& sizes);
    /// One site per party.
    static PartyPartition singletons(std::size_t n);
    /// "1,2|3|4" with 1-indexed sites.
    static PartyPartition parse(std::string_view text);

    [[nodiscard]] std::size_t sites() const noexcept { return party_of_.size(); }
    [[nodiscard]] std::size_t party_count() const noexcept { return parties_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& party(std::size_t alpha) const { return parties_.at(alpha); }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& parties() const noexcept { return parties_; }
    [[nodiscard]] std::size_t party_of(std::size_t site) const { return party_of_.at(site); }
    [[nodiscard]] std::vector<std::size_t> sizes() const;
    /// Sites of every party except `alpha`, ascending.
    [[nodiscard]] std::vector<std::size_t> complement(std::size_t alpha) const;
    /// Sites of the union of the given parties, ascending.
    [[nodiscard]] std::vector<std::size_t> union_of(const std::vector<std::size_t>& alphas) const;

    /// Inverse of parse().
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PartyPartition&, const PartyPartition&) = default;

private:
    PartyPartition(std::size_t n, std::vector<std::vector<std::size_t>> parties, bool allow_empty);

    std::vector<std::vector<std::size_t>> parties_;
    std::vector<std::size_t> party_of_;
};

/// The symplectic form on Z_d^{2n}:
///   omega(f, g) = sum_i (z_i(f) x_i(g) - x_i(f) z_i(g))   (mod d)
/// so that sigma(f) sigma(g) = eta^{omega(f,g)} sigma(g) sigma(f) with
/// X|k> = |k+1>, Z|k> = eta^k |k>. For d = 2 the sign is immaterial and the
/// form is symmetric.
class SymplecticForm {
public:
    SymplecticForm(FieldOrder d, std::size_t n) : field_(d), n_(n) {}

    [[nodiscard]] FieldOrder field() const noexcept { return field_; }
    [[nodiscard]] std::size_t sites() const noexcept { return n_; }
    /// Gram matrix in the interleaved layout: omega(f, g) = f G g^T.
    [[nodiscard]] Matrix gram() const;
    [[nodiscard]] unsigned operator()(const SymplecticVector& f, const SymplecticVector& g) const;

private:
    FieldOrder field_;
    std::size_t n_;
};

/// omega(f, g) with the form selected by f's field.
[[nodiscard]] unsigned omega(const SymplecticVector& f, const SymplecticVector& g);

/// Symplectic product of two interleaved rows restricted to a site subset.
[[nodiscard]] unsigned omega_on_sites(const Matrix& a, std::size_t row_a, const Matrix& b, std::size_t row_b,
                                      const std::vector<std::size_t>& sites);

/// Keeps the (x_i, z_i) pairs for i in `sites`, in the order given.
[[nodiscard]] SymplecticVector restrict_to(const SymplecticVector& f, const std::vector<std::size_t>& sites);

/// Sites where (x_i, z_i) != (0, 0).
[[nodiscard]] std::vector<std::size_t> support(const SymplecticVector& f);

/// Parties on which f restricts to a nonzero vector.
[[nodiscard]] std::vector<std::size_t> party_support(const SymplecticVector& f, const PartyPartition& p);

/// Column indices (2i, 2i+1) of the given sites in the interleaved layout.
[[nodiscard]] std::vector<std::size_t> interleaved_columns(const std::vector<std::size_t>& sites);

}  // namespace plc
