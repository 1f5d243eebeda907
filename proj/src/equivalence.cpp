#include "plc/equivalence.hpp"

#include "bitmat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <type_traits>
#include <stdexcept>

namespace plc {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::equivalent: return "equivalent";
        case Verdict::inequivalent: return "inequivalent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(SplitVerdict v) noexcept {
    switch (v) {
        case SplitVerdict::indecomposable: return "indecomposable";
        case SplitVerdict::split: return "split";
        case SplitVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// d^k, saturating at limit + 1
std::uint64_t capped_power(unsigned d, std::size_t k, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > limit / d) return limit + 1;
        v *= d;
    }
    return v;
}

bool use_bits(const CommutationTuple& c) { return c.field().is_binary() && c.size() <= 64; }

bool congruent_by(const Matrix& q, const CommutationTuple& a, const CommutationTuple& b) {
    const Matrix qt = q.transpose();
    for (std::size_t k = 0; k < a.parties(); ++k) {
        if (!(q * a[k] * qt == b[k])) return false;
    }
    return true;
}

// Enumerates every linear combination of `basis` (d^k of them), calling
// visit(sum) for each nonzero one; stops when visit returns true. For odd d
// only combinations whose leading nonzero coefficient is 1 are produced when
// `projective` is set. Returns the number of candidates visited.
template <typename Visit>
std::uint64_t enumerate_span(const std::vector<Matrix>& basis, bool projective, Visit&& visit, bool& stopped) {
    stopped = false;
    if (basis.empty()) return 0;
    const FieldOrder d = basis.front().field();
    const std::size_t k = basis.size();
    std::uint64_t visited = 0;
    if (d.is_binary() && basis.front().rows() <= 64 && basis.front().is_square()) {
        std::vector<detail::BitMat> bits;
        bits.reserve(k);
        for (const auto& m : basis) bits.push_back(detail::BitMat::from(m));
        detail::BitMat cur;
        cur.n = basis.front().rows();
        const std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= bits[static_cast<std::size_t>(std::countr_zero(i))];
            ++visited;
            if (visit(cur)) {
                stopped = true;
                return visited;
            }
        }
        return visited;
    }
    std::vector<unsigned> coeff(k, 0);
    Matrix cur(d, basis.front().rows(), basis.front().cols());
    while (true) {
        // odometer increment, least significant digit last so leading digits vary slowest
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (coeff[pos] + 1 < d.value()) {
                ++coeff[pos];
                cur += basis[pos];
                break;
            }
            coeff[pos] = 0;
            cur += basis[pos];  // adding once more wraps d-1 -> 0
            if (pos == 0) return visited;
        }
        if (projective) {
            const auto lead = std::find_if(coeff.begin(), coeff.end(), [](unsigned c) { return c != 0; });
            if (lead == coeff.end() || *lead != 1) continue;
        }
        ++visited;
        if (visit(cur)) {
            stopped = true;
            return visited;
        }
    }
}

Matrix random_combination(const std::vector<Matrix>& basis, Rng& rng) {
    Matrix cur(basis.front().field(), basis.front().rows(), basis.front().cols());
    for (const auto& b : basis) {
        const auto c = static_cast<unsigned>(rng.below(b.field().value()));
        if (c != 0) cur += b.scaled(c);
    }
    return cur;
}

std::size_t subset_rank(const CommutationTuple& c, std::uint64_t mask) {
    Matrix s(c.field(), c.size(), c.size());
    for (std::size_t a = 0; a < c.parties(); ++a) {
        if ((mask >> a) & 1U) s += c[a];
    }
    return rank(s);
}

}  // namespace

std::vector<std::size_t> congruence_invariants(const CommutationTuple& c) {
    const std::size_t m = c.parties();
    std::vector<std::size_t> out;
    out.push_back(rank(c.concatenated()));
    if (m <= 12) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) out.push_back(subset_rank(c, mask));
    } else {
        for (std::size_t a = 0; a < m; ++a) out.push_back(rank(c[a]));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) out.push_back(rank(c[a] + c[b]));
        }
    }
    return out;
}

CongruenceResult congruence_equivalent(const CommutationTuple& a, const CommutationTuple& b, const SearchBudget& budget) {
    if (a.size() != b.size() || a.parties() != b.parties() || !(a.field() == b.field())) {
        throw std::invalid_argument("congruence: tuples differ in size, party count or field");
    }
    CongruenceResult res;
    res.budget = budget;
    const FieldOrder d = a.field();
    const std::size_t n = a.size();
    const std::size_t m = a.parties();

    // phase 1: necessary invariants
    res.invariants_a = congruence_invariants(a);
    res.invariants_b = congruence_invariants(b);
    res.invariants_match = res.invariants_a == res.invariants_b;
    if (!res.invariants_match) {
        res.verdict = Verdict::inequivalent;
        res.exhaustive = true;
        res.reason = "subset-rank invariants differ";
        return res;
    }

    // phase 2: Q A_alpha - B_alpha P = 0, unknowns [vec Q ; vec P] (column-major)
    const std::size_t nn = n * n;
    Matrix sys(d, m * nn, 2 * nn);
    for (std::size_t al = 0; al < m; ++al) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = al * nn + column_major_index(i, j, n);
                for (std::size_t k = 0; k < n; ++k) {
                    const unsigned av = a[al](k, j);
                    if (av != 0) {
                        const std::size_t col = column_major_index(i, k, n);
                        sys.set(row, col, d.add(sys(row, col), av));
                    }
                    const unsigned bv = b[al](i, k);
                    if (bv != 0) {
                        const std::size_t col = nn + column_major_index(k, j, n);
                        sys.set(row, col, d.sub(sys(row, col), bv));
                    }
                }
            }
        }
    }
    const Matrix kernel = null_space(sys);
    const Matrix q_part = row_space_basis(kernel.block(0, 0, nn, kernel.cols()).transpose());
    std::vector<Matrix> q_basis;
    q_basis.reserve(q_part.rows());
    for (std::size_t r = 0; r < q_part.rows(); ++r) {
        q_basis.push_back(unflatten_column_major(q_part.row_matrix(r).transpose(), n, n));
    }
    res.solution_dimension = q_basis.size();
    if (q_basis.empty()) {
        res.verdict = Verdict::inequivalent;
        res.exhaustive = true;
        res.reason = "linear relaxation has only the zero solution";
        return res;
    }

    // phase 3: search the Q-space
    const bool bits = use_bits(a);
    std::vector<detail::BitMat> ab, bb;
    if (bits) {
        for (std::size_t k = 0; k < m; ++k) {
            ab.push_back(detail::BitMat::from(a[k]));
            bb.push_back(detail::BitMat::from(b[k]));
        }
    }
    const auto check_bits = [&](const detail::BitMat& q) {
        for (std::size_t k = 0; k < m; ++k) {
            if (!(detail::congruence(q, ab[k]) == bb[k])) return false;
        }
        return detail::invertible(q);
    };
    const auto check = [&](const Matrix& q) { return congruent_by(q, a, b) && is_invertible(q); };

    const std::uint64_t points = capped_power(d.value(), q_basis.size(), budget.congruence_search);
    if (points <= budget.congruence_search) {
        bool found = false;
        std::optional<Matrix> witness;
        const auto visit = [&](const auto& cand) {
            if constexpr (std::is_same_v<std::decay_t<decltype(cand)>, detail::BitMat>) {
                if (!check_bits(cand)) return false;
                witness = cand.to_matrix();
            } else {
                if (!check(cand)) return false;
                witness = cand;
            }
            return true;
        };
        res.candidates_examined = enumerate_span(q_basis, false, visit, found);
        res.exhaustive = !found;
        if (found) {
            res.verdict = Verdict::equivalent;
            res.witness = std::move(witness);
            res.reason = "witness found by exhaustive search of the relaxed solution space";
        } else {
            res.verdict = Verdict::inequivalent;
            res.reason = "no invertible congruence in the exhausted solution space";
        }
        return res;
    }

    Rng rng(budget.seed);
    for (std::uint64_t s = 0; s < budget.random_samples; ++s) {
        const Matrix q = random_combination(q_basis, rng);
        ++res.candidates_examined;
        if (check(q)) {
            res.verdict = Verdict::equivalent;
            res.witness = q;
            res.reason = "witness found by random sampling";
            return res;
        }
    }
    res.verdict = Verdict::inconclusive;
    res.reason = "solution space of dimension " + std::to_string(q_basis.size()) + " exceeds the search budget";
    return res;
}

CongruenceResult plc_equivalent(const StabilizerTableau& a, const StabilizerTableau& b, const PartyPartition& p,
                                const SearchBudget& budget) {
    if (a.sites() != b.sites() || !(a.field() == b.field())) {
        throw std::invalid_argument("states differ in size or field");
    }
    return congruence_equivalent(from_state(a, p), from_state(b, p), budget);
}

std::vector<Matrix> endomorphism_basis(const CommutationTuple& c) {
    const FieldOrder d = c.field();
    const std::size_t n = c.size();
    const std::size_t nn = n * n;
    Matrix sys(d, c.parties() * nn, nn);
    for (std::size_t al = 0; al < c.parties(); ++al) {
        const Matrix& m = c[al];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                // (C E)_ij - (E^T C)_ij = sum_k C_ik E_kj - E_ki C_kj
                const std::size_t row = al * nn + column_major_index(i, j, n);
                for (std::size_t k = 0; k < n; ++k) {
                    if (const unsigned v = m(i, k); v != 0) {
                        const std::size_t col = column_major_index(k, j, n);
                        sys.set(row, col, d.add(sys(row, col), v));
                    }
                    if (const unsigned v = m(k, j); v != 0) {
                        const std::size_t col = column_major_index(k, i, n);
                        sys.set(row, col, d.sub(sys(row, col), v));
                    }
                }
            }
        }
    }
    const Matrix kernel = null_space(sys);
    std::vector<Matrix> out;
    out.reserve(kernel.cols());
    for (std::size_t k = 0; k < kernel.cols(); ++k) out.push_back(unflatten_column_major(kernel.col_matrix(k), n, n));
    return out;
}

namespace {

// Rows: transposed basis of the image of f, then of its kernel. Because f is
// a polynomial in a self-adjoint E, x^T C y = 0 for x in the image and y in
// the kernel, so the tuple becomes block diagonal in this basis.
Matrix fitting_basis(const Matrix& f) {
    const Matrix image = row_space_basis(f.transpose());
    const Matrix kernel = null_space(f).transpose();
    return image.vstack(kernel);
}

bool is_block_diagonal(const CommutationTuple& c, std::size_t n1) {
    const std::size_t n = c.size();
    for (const auto& m : c.matrices()) {
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = n1; j < n; ++j) {
                if (m(i, j) != 0 || m(j, i) != 0) return false;
            }
        }
    }
    return true;
}

Matrix stable_power(const Matrix& e) {
    Matrix p = e;
    for (std::size_t k = 1; k < e.rows(); k *= 2) p = p * p;
    return p;
}

bool self_adjoint(const CommutationTuple& c, const Matrix& e) {
    const Matrix et = e.transpose();
    for (const auto& m : c.matrices()) {
        if (!(m * e == et * m)) return false;
    }
    return true;
}

SplitResult make_split(const CommutationTuple& c, Matrix q, std::size_t n1, std::string method) {
    SplitResult r;
    r.verdict = SplitVerdict::split;
    r.first_size = n1;
    r.second_size = c.size() - n1;
    r.method = std::move(method);
    if (!is_block_diagonal(change_basis(c, q), n1)) throw std::logic_error("fitting split produced a non-block witness");
    r.witness = std::move(q);
    return r;
}

}  // namespace

SplitResult fitting_split(const CommutationTuple& c, const SearchBudget& budget) {
    const FieldOrder d = c.field();
    const std::size_t n = c.size();
    for (const auto& m : c.matrices()) {
        if (!is_alternating(m)) throw std::invalid_argument("fitting_split needs alternating matrices");
    }
    if (n <= 1) {
        SplitResult r;
        r.verdict = SplitVerdict::indecomposable;
        r.witness = Matrix::identity(d, n);
        r.exhaustive = true;
        r.method = "trivial size";
        return r;
    }

    // common radical: vectors orthogonal to everything split off as zero blocks
    const Matrix radical = left_null_space(c.concatenated());
    if (radical.rows() == n) return make_split(c, Matrix::identity(d, n), 1, "zero tuple");
    if (radical.rows() > 0) {
        return make_split(c, complete_basis(radical).vstack(radical), n - radical.rows(), "common radical");
    }

    std::vector<Matrix> basis = endomorphism_basis(c);
    SplitResult res;
    res.ring_dimension = basis.size();
    Rng rng(budget.seed);
    if (budget.seed != 0) {
        for (std::size_t i = basis.size(); i > 1; --i) std::swap(basis[i - 1], basis[rng.below(i)]);
    }

    const Matrix id = Matrix::identity(d, n);
    const bool bits = use_bits(c);
    std::optional<Matrix> found;
    // classify E by the rank of a power beyond n: 0 nilpotent, n invertible, else split
    const auto try_matrix = [&](const Matrix& e) {
        ++res.elements_examined;
        if (bits) {
            const detail::BitMat p = detail::stable_power(detail::BitMat::from(e));
            const std::size_t r = detail::rank(p);
            if (r == 0 || r == n) return false;
            found = p.to_matrix();
            return true;
        }
        const Matrix p = stable_power(e);
        const std::size_t r = rank(p);
        if (r == 0 || r == n) return false;
        found = p;
        return true;
    };

    // cheap candidates: basis elements shifted by scalars, then products that stay self-adjoint
    for (const auto& e : basis) {
        for (unsigned lambda = 0; lambda < d.value(); ++lambda) {
            if (try_matrix(lambda == 0 ? e : e + id.scaled(lambda))) {
                return make_split(c, fitting_basis(*found), rank(*found), "basis element");
            }
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Matrix prod = basis[i] * basis[j];
            if (self_adjoint(c, prod) && try_matrix(prod)) {
                return make_split(c, fitting_basis(*found), rank(*found), "product of basis elements");
            }
        }
    }

    const std::uint64_t points = capped_power(d.value(), basis.size(), budget.ring_enumeration);
    if (points <= budget.ring_enumeration) {
        bool stopped = false;
        const auto visit = [&](const auto& cand) {
            if constexpr (std::is_same_v<std::decay_t<decltype(cand)>, detail::BitMat>) {
                ++res.elements_examined;
                const detail::BitMat p = detail::stable_power(cand);
                const std::size_t r = detail::rank(p);
                if (r == 0 || r == n) return false;
                found = p.to_matrix();
                return true;
            } else {
                return try_matrix(cand);
            }
        };
        (void)enumerate_span(basis, true, visit, stopped);
        if (stopped) return make_split(c, fitting_basis(*found), rank(*found), "exhaustive ring scan");
        res.verdict = SplitVerdict::indecomposable;
        res.exhaustive = true;
        res.witness = id;
        res.method = "exhaustive ring scan";
        return res;
    }

    for (std::uint64_t s = 0; s < budget.random_samples; ++s) {
        if (try_matrix(random_combination(basis, rng))) {
            return make_split(c, fitting_basis(*found), rank(*found), "random ring sample");
        }
    }
    res.verdict = SplitVerdict::inconclusive;
    res.witness = id;
    res.method = "ring of dimension " + std::to_string(basis.size()) + " exceeds the enumeration budget";
    return res;
}

namespace {

DecompositionReport decompose_rec(const CommutationTuple& c, const SearchBudget& budget) {
    DecompositionReport out;
    const SplitResult s = fitting_split(c, budget);
    if (s.verdict != SplitVerdict::split) {
        out.blocks.push_back(c);
        out.witness = Matrix::identity(c.field(), c.size());
        if (s.verdict == SplitVerdict::inconclusive) {
            out.complete = false;
            out.inconclusive_blocks = 1;
        }
        return out;
    }
    const CommutationTuple t = change_basis(c, s.witness);
    auto left = decompose_rec(t.principal_block(0, s.first_size), budget);
    auto right = decompose_rec(t.principal_block(s.first_size, s.second_size), budget);
    out.witness = left.witness.direct_sum(right.witness) * s.witness;
    out.blocks = std::move(left.blocks);
    for (auto& b : right.blocks) out.blocks.push_back(std::move(b));
    out.complete = left.complete && right.complete;
    out.inconclusive_blocks = left.inconclusive_blocks + right.inconclusive_blocks;
    return out;
}

}  // namespace

DecompositionReport decompose(const CommutationTuple& c, const SearchBudget& budget) {
    DecompositionReport raw = decompose_rec(c, budget);
    // stable sort by decreasing size, permuting witness rows along
    std::vector<std::size_t> order(raw.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return raw.blocks[x].size() > raw.blocks[y].size(); });
    std::vector<std::size_t> offsets(raw.blocks.size(), 0);
    for (std::size_t k = 1; k < raw.blocks.size(); ++k) offsets[k] = offsets[k - 1] + raw.blocks[k - 1].size();
    std::vector<std::size_t> rows;
    DecompositionReport out;
    for (std::size_t k : order) {
        for (std::size_t r = 0; r < raw.blocks[k].size(); ++r) rows.push_back(offsets[k] + r);
        out.blocks.push_back(raw.blocks[k]);
    }
    out.witness = raw.witness.select_rows(rows);
    out.complete = raw.complete;
    out.inconclusive_blocks = raw.inconclusive_blocks;
    return out;
}

CommutationTuple ghz_reference(FieldOrder d, std::size_t parties, const std::vector<std::size_t>& members) {
    if (members.empty()) throw std::invalid_argument("reference state needs at least one party");
    const std::size_t n = members.size();
    GraphAdjacency star(d, n);
    for (std::size_t k = 1; k < n; ++k) star.set_multiplicity(0, k, 1U);
    std::vector<std::vector<std::size_t>> sites(parties);
    for (std::size_t k = 0; k < n; ++k) {
        if (members[k] >= parties) throw std::out_of_range("reference party out of range");
        sites[members[k]].push_back(k);
    }
    return from_graph(star, PartyPartition::allowing_empty(n, std::move(sites)));
}

BlockClass classify_block(const CommutationTuple& block, const SearchBudget& budget) {
    BlockClass out;
    for (std::size_t a = 0; a < block.parties(); ++a) {
        if (!block[a].is_zero()) out.parties.push_back(a);
    }
    if (out.parties.empty()) {
        out.kind = block.size() == 1 ? BlockClass::Kind::zero : BlockClass::Kind::other;
        return out;
    }
    if (out.parties.size() != block.size()) return out;
    const auto res = congruence_equivalent(block, ghz_reference(block.field(), block.parties(), out.parties), budget);
    if (res.verdict == Verdict::equivalent) out.kind = BlockClass::Kind::ghz;
    if (res.verdict == Verdict::inconclusive) out.kind = BlockClass::Kind::inconclusive;
    return out;
}

NamedCounts named_counts(const StabilizerTableau& s, const PartyPartition& p, const SearchBudget& budget) {
    NamedCounts out;
    const CommutationTuple c = from_state(s, p);
    for (std::size_t a = 0; a < p.party_count(); ++a) out.zeros_per_party.push_back(p.party(a).size() - rank(c[a]) / 2);
    const auto report = decompose(c, budget);
    out.inconclusive_blocks = report.inconclusive_blocks;
    for (const auto& b : report.blocks) {
        const auto cls = classify_block(b, budget);
        switch (cls.kind) {
            case BlockClass::Kind::zero: break;
            case BlockClass::Kind::ghz: ++out.ghz[cls.parties]; break;
            case BlockClass::Kind::other: ++out.other_blocks; break;
            case BlockClass::Kind::inconclusive: ++out.inconclusive_blocks; break;
        }
    }
    return out;
}

TripartiteCounts tripartite_canonical_counts(const StabilizerTableau& s, const PartyPartition& p,
                                             const SearchBudget& budget) {
    if (p.party_count() != 3) throw std::invalid_argument("tripartite counts need exactly three parties");
    const NamedCounts nc = named_counts(s, p, budget);
    if (nc.other_blocks != 0 || nc.inconclusive_blocks != 0) {
        throw std::logic_error("tripartite state has a block that is not |0>, Bell or GHZ");
    }
    TripartiteCounts out;
    for (std::size_t a = 0; a < 3; ++a) out.zeros[a] = nc.zeros_per_party[a];
    for (const auto& [parties, count] : nc.ghz) {
        if (parties.size() == 3) {
            out.ghz += count;
        } else if (parties == std::vector<std::size_t>{0, 1}) {
            out.bell[0] += count;
        } else if (parties == std::vector<std::size_t>{0, 2}) {
            out.bell[1] += count;
        } else {
            out.bell[2] += count;
        }
    }
    return out;
}

std::size_t ghz_extraction_count(const StabilizerTableau& s, const PartyPartition& p) {
    Matrix all(s.field(), 0, 2 * s.sites());
    for (std::size_t a = 0; a < p.party_count(); ++a) all = all.vstack(colocal_subspace(s, p, a));
    return s.sites() - rank(all);
}

GhzConditionResult ghz_extraction_condition(const StabilizerTableau& s, const PartyPartition& p, std::size_t first_party,
                                            std::size_t excluded_party) {
    const std::size_t m = p.party_count();
    if (m < 3) throw std::invalid_argument("the GHZ extraction condition needs at least three parties");
    if (first_party >= m || excluded_party >= m || first_party == excluded_party) {
        throw std::invalid_argument("invalid first/excluded party");
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (local_subspace_dim(s, p, a) != 0) {
            throw std::invalid_argument("precondition: not full local rank (party " + std::to_string(a + 1) + ")");
        }
    }
    GhzConditionResult out;
    out.first_party = first_party;
    out.excluded_party = excluded_party;
    const Matrix& g = s.generators();
    const auto first_cols = interleaved_columns(p.party(first_party));

    std::vector<Matrix> elements;      // W_j: stabilizer vectors vanishing outside first (+) beta
    std::vector<Matrix> restrictions;  // R_j: their restrictions to the first party
    std::optional<Matrix> common;
    for (std::size_t beta = 0; beta < m; ++beta) {
        if (beta == first_party || beta == excluded_party) continue;
        std::vector<std::size_t> outside;
        for (std::size_t site = 0; site < s.sites(); ++site) {
            const std::size_t owner = p.party_of(site);
            if (owner != first_party && owner != beta) outside.push_back(site);
        }
        const Matrix coeffs = left_null_space(g.select_cols(interleaved_columns(outside)));
        const Matrix w = coeffs.rows() == 0 ? Matrix(s.field(), 0, g.cols()) : coeffs * g;
        const Matrix r = w.select_cols(first_cols);
        elements.push_back(w);
        restrictions.push_back(r);
        common = common ? row_space_intersection(*common, r) : row_space_basis(r);
        if (common->rows() == 0) return out;
    }
    out.holds = true;
    const Matrix target = common->row_matrix(0);
    for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto sol = solve_linear(restrictions[j].transpose(), target.transpose());
        if (!sol) throw std::logic_error("common restriction not reachable");
        const Matrix f = sol->particular.transpose() * elements[j];
        out.witnesses.push_back(SymplecticVector::from_row(f, 0));
    }
    return out;
}

GhzConditionResult ghz_extraction_condition_any(const StabilizerTableau& s, const PartyPartition& p) {
    GhzConditionResult last;
    for (std::size_t first = 0; first < p.party_count(); ++first) {
        for (std::size_t excluded = 0; excluded < p.party_count(); ++excluded) {
            if (first == excluded) continue;
            last = ghz_extraction_condition(s, p, first, excluded);
            if (last.holds) return last;
        }
    }
    return last;
}

bool forced_decomposable_by_sizes(const std::vector<std::size_t>& sizes) {
    if (sizes.size() != 4) throw std::invalid_argument("the size test applies to four parties");
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi > 2 * *lo;
}

OrderInvarianceReport decomposition_order_invariance(const CommutationTuple& c, std::size_t trials, std::uint64_t seed,
                                                     const SearchBudget& budget) {
    OrderInvarianceReport out;
    const auto reference = decompose(c, budget);
    for (const auto& b : reference.blocks) out.block_sizes.push_back(b.size());
    if (!reference.complete) ++out.inconclusive;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        ++out.trials;
        const Matrix q = random_invertible(c.size(), c.field(), rng);
        SearchBudget b = budget;
        b.seed = rng.next() | 1U;
        const auto run = decompose(change_basis(c, q), b);
        if (!run.complete) {
            ++out.inconclusive;
            continue;
        }
        if (run.blocks.size() != reference.blocks.size()) {
            out.consistent = false;
            continue;
        }
        std::vector<bool> used(run.blocks.size(), false);
        for (const auto& ref : reference.blocks) {
            bool matched = false;
            for (std::size_t k = 0; k < run.blocks.size() && !matched; ++k) {
                if (used[k] || run.blocks[k].size() != ref.size()) continue;
                const auto v = congruence_equivalent(ref, run.blocks[k], budget);
                if (v.verdict == Verdict::inconclusive) ++out.inconclusive;
                if (v.verdict == Verdict::equivalent) matched = used[k] = true;
            }
            if (!matched) out.consistent = false;
        }
    }
    return out;
}

}  // namespace plc
