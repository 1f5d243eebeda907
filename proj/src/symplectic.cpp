#include "plc/symplectic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace plc {

SymplecticVector::SymplecticVector(FieldOrder d, std::size_t n) : field_(d), entries_(2 * n, 0U) {}

SymplecticVector::SymplecticVector(FieldOrder d, std::vector<int> interleaved) : field_(d) {
    if (interleaved.size() % 2 != 0) throw std::invalid_argument("symplectic vector must have even length");
    entries_.reserve(interleaved.size());
    for (int v : interleaved) entries_.push_back(d.reduce(v));
}

SymplecticVector SymplecticVector::from_pauli_string(std::string_view paulis) {
    SymplecticVector v(FieldOrder(2), paulis.size());
    for (std::size_t i = 0; i < paulis.size(); ++i) {
        switch (paulis[i]) {
            case 'I': case '_': break;
            case 'X': v.set_x(i, 1); break;
            case 'Z': v.set_z(i, 1); break;
            case 'Y': v.set_x(i, 1); v.set_z(i, 1); break;
            default: throw std::invalid_argument(std::string("unknown Pauli letter '") + paulis[i] + "'");
        }
    }
    return v;
}

SymplecticVector SymplecticVector::single_site(FieldOrder d, std::size_t n, std::size_t site, unsigned a,
                                               unsigned b) {
    if (site >= n) throw std::out_of_range("site index out of range");
    SymplecticVector v(d, n);
    v.set_x(site, a);
    v.set_z(site, b);
    return v;
}

bool SymplecticVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](unsigned e) { return e == 0; });
}

SymplecticVector& SymplecticVector::operator+=(const SymplecticVector& o) {
    if (!(o.field_ == field_) || o.entries_.size() != entries_.size()) {
        throw std::invalid_argument("symplectic vector addition: dimension or field mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = field_.add(entries_[i], o.entries_[i]);
    return *this;
}

SymplecticVector SymplecticVector::scaled(unsigned k) const {
    SymplecticVector out = *this;
    for (auto& e : out.entries_) e = field_.mul(e, k % field_.value());
    return out;
}

Matrix SymplecticVector::as_row() const {
    Matrix m(field_, 1, entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) m.set(0, i, entries_[i]);
    return m;
}

SymplecticVector SymplecticVector::from_row(const Matrix& m, std::size_t row) {
    if (m.cols() % 2 != 0) throw std::invalid_argument("row width must be even");
    SymplecticVector v(m.field(), m.cols() / 2);
    for (std::size_t i = 0; i < m.cols(); ++i) v.entries_[i] = m(row, i);
    return v;
}

std::string SymplecticVector::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < sites(); ++i) {
        const unsigned a = x(i);
        const unsigned b = z(i);
        if (a == 0 && b == 0) continue;
        any = true;
        if (a != 0) {
            os << 'X' << (i + 1);
            if (a != 1) os << '^' << a;
        }
        if (b != 0) {
            os << 'Z' << (i + 1);
            if (b != 1) os << '^' << b;
        }
    }
    if (!any) os << 'I';
    return os.str();
}

// ---------------------------------------------------------------------------

PartyPartition::PartyPartition(std::size_t n, std::vector<std::vector<std::size_t>> parties)
    : PartyPartition(n, std::move(parties), false) {}

PartyPartition PartyPartition::allowing_empty(std::size_t n, std::vector<std::vector<std::size_t>> parties) {
    return PartyPartition(n, std::move(parties), true);
}

namespace {
// not n: with empty parties allowed a party index can equal the site count
constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();
}  // namespace

PartyPartition::PartyPartition(std::size_t n, std::vector<std::vector<std::size_t>> parties, bool allow_empty)
    : parties_(std::move(parties)), party_of_(n, unassigned) {
    if (parties_.empty()) throw std::invalid_argument("partition needs at least one party");
    for (std::size_t alpha = 0; alpha < parties_.size(); ++alpha) {
        auto& party = parties_[alpha];
        if (party.empty() && !allow_empty) throw std::invalid_argument("party " + std::to_string(alpha + 1) + " is empty");
        std::sort(party.begin(), party.end());
        for (std::size_t site : party) {
            if (site >= n) throw std::invalid_argument("site " + std::to_string(site + 1) + " out of range");
            if (party_of_[site] != unassigned) {
                throw std::invalid_argument("site " + std::to_string(site + 1) + " assigned to two parties");
            }
            party_of_[site] = alpha;
        }
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (party_of_[s] == unassigned) throw std::invalid_argument("site " + std::to_string(s + 1) + " not assigned");
    }
}

PartyPartition PartyPartition::contiguous(const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<std::size_t>> parties;
    std::size_t next = 0;
    for (std::size_t sz : sizes) {
        std::vector<std::size_t> party(sz);
        for (auto& s : party) s = next++;
        parties.push_back(std::move(party));
    }
    return PartyPartition(next, std::move(parties));
}

PartyPartition PartyPartition::singletons(std::size_t n) { return contiguous(std::vector<std::size_t>(n, 1)); }

PartyPartition PartyPartition::parse(std::string_view text) {
    std::vector<std::vector<std::size_t>> parties(1);
    std::size_t max_site = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find_first_of(",|", pos);
        const std::string_view tok = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        std::size_t begin = 0;
        while (begin < tok.size() && tok[begin] == ' ') ++begin;
        std::size_t last = tok.size();
        while (last > begin && tok[last - 1] == ' ') --last;
        const std::string_view trimmed = tok.substr(begin, last - begin);
        std::size_t site = 0;
        const auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), site);
        if (ec != std::errc() || ptr != trimmed.data() + trimmed.size() || site == 0) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parties.back().push_back(site - 1);
        max_site = std::max(max_site, site);
        if (end == std::string_view::npos) break;
        if (text[end] == '|') parties.emplace_back();
        pos = end + 1;
    }
    return PartyPartition(max_site, std::move(parties));
}

std::vector<std::size_t> PartyPartition::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(parties_.size());
    for (const auto& p : parties_) out.push_back(p.size());
    return out;
}

std::vector<std::size_t> PartyPartition::complement(std::size_t alpha) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < party_of_.size(); ++s) {
        if (party_of_[s] != alpha) out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> PartyPartition::union_of(const std::vector<std::size_t>& alphas) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < party_of_.size(); ++s) {
        if (std::find(alphas.begin(), alphas.end(), party_of_[s]) != alphas.end()) out.push_back(s);
    }
    return out;
}

std::string PartyPartition::to_string() const {
    std::ostringstream os;
    for (std::size_t alpha = 0; alpha < parties_.size(); ++alpha) {
        if (alpha != 0) os << '|';
        for (std::size_t k = 0; k < parties_[alpha].size(); ++k) {
            if (k != 0) os << ',';
            os << parties_[alpha][k] + 1;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Matrix SymplecticForm::gram() const {
    Matrix g(field_, 2 * n_, 2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        g.set(2 * i, 2 * i + 1, field_.neg(1));
        g.set(2 * i + 1, 2 * i, 1U);
    }
    return g;
}

unsigned SymplecticForm::operator()(const SymplecticVector& f, const SymplecticVector& g) const {
    if (!(f.field() == field_) || !(g.field() == field_) || f.sites() != n_ || g.sites() != n_) {
        throw std::invalid_argument("omega: dimension or field mismatch");
    }
    return omega(f, g);
}

unsigned omega(const SymplecticVector& f, const SymplecticVector& g) {
    if (!(f.field() == g.field()) || f.sites() != g.sites()) {
        throw std::invalid_argument("omega: dimension or field mismatch");
    }
    const FieldOrder d = f.field();
    long long acc = 0;
    for (std::size_t i = 0; i < f.sites(); ++i) {
        acc += static_cast<long long>(f.z(i)) * g.x(i) - static_cast<long long>(f.x(i)) * g.z(i);
    }
    return d.reduce(acc);
}

unsigned omega_on_sites(const Matrix& a, std::size_t row_a, const Matrix& b, std::size_t row_b,
                        const std::vector<std::size_t>& sites) {
    long long acc = 0;
    for (std::size_t s : sites) {
        acc += static_cast<long long>(a(row_a, 2 * s + 1)) * b(row_b, 2 * s) -
               static_cast<long long>(a(row_a, 2 * s)) * b(row_b, 2 * s + 1);
    }
    return a.field().reduce(acc);
}

SymplecticVector restrict_to(const SymplecticVector& f, const std::vector<std::size_t>& sites) {
    SymplecticVector out(f.field(), sites.size());
    for (std::size_t k = 0; k < sites.size(); ++k) {
        if (sites[k] >= f.sites()) throw std::out_of_range("restrict: site " + std::to_string(sites[k] + 1) + " out of range");
        out.set_x(k, f.x(sites[k]));
        out.set_z(k, f.z(sites[k]));
    }
    return out;
}

std::vector<std::size_t> support(const SymplecticVector& f) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.sites(); ++i) {
        if (f.x(i) != 0 || f.z(i) != 0) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> party_support(const SymplecticVector& f, const PartyPartition& p) {
    if (p.sites() != f.sites()) throw std::invalid_argument("party_support: partition size mismatch");
    std::vector<bool> hit(p.party_count(), false);
    for (std::size_t s : support(f)) hit[p.party_of(s)] = true;
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < hit.size(); ++a) {
        if (hit[a]) out.push_back(a);
    }
    return out;
}

std::vector<std::size_t> interleaved_columns(const std::vector<std::size_t>& sites) {
    std::vector<std::size_t> cols;
    cols.reserve(2 * sites.size());
    for (std::size_t s : sites) {
        cols.push_back(2 * s);
        cols.push_back(2 * s + 1);
    }
    return cols;
}

}  // namespace plc
