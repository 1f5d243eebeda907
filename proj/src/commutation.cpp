#include "plc/commutation.hpp"

#include <sstream>
#include <stdexcept>

namespace plc {

CommutationTuple::CommutationTuple(FieldOrder d, std::size_t n, std::vector<Matrix> matrices)
    : field_(d), n_(n), matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw std::invalid_argument("commutation tuple needs at least one party");
    for (const auto& m : matrices_) {
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("commutation matrices must be n x n");
        if (!(m.field() == d)) throw std::invalid_argument("commutation matrices must share one field");
    }
}

Matrix CommutationTuple::concatenated() const {
    Matrix out(field_, n_, n_ * matrices_.size());
    for (std::size_t a = 0; a < matrices_.size(); ++a) out.set_block(0, a * n_, matrices_[a]);
    return out;
}

CommutationTuple CommutationTuple::principal_block(std::size_t offset, std::size_t count) const {
    if (offset + count > n_) throw std::out_of_range("principal block out of range");
    std::vector<Matrix> mats;
    mats.reserve(matrices_.size());
    for (const auto& m : matrices_) mats.push_back(m.block(offset, offset, count, count));
    return CommutationTuple(field_, count, std::move(mats));
}

CommutationTuple CommutationTuple::reorder_parties(const std::vector<std::size_t>& order) const {
    if (order.size() != matrices_.size()) throw std::invalid_argument("party order has wrong length");
    std::vector<Matrix> mats;
    mats.reserve(order.size());
    for (std::size_t k : order) mats.push_back(matrices_.at(k));
    return CommutationTuple(field_, n_, std::move(mats));
}

std::string CommutationTuple::to_string() const {
    std::ostringstream os;
    for (std::size_t a = 0; a < matrices_.size(); ++a) os << "C" << a + 1 << " =\n" << matrices_[a].to_string();
    return os.str();
}

bool is_alternating(const Matrix& m) {
    if (!m.is_square()) return false;
    const FieldOrder d = m.field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (d.add(m(i, j), m(j, i)) != 0) return false;
        }
    }
    return true;
}

CommutationTuple from_state(const StabilizerTableau& t, const PartyPartition& p) {
    if (p.sites() != t.sites()) throw std::invalid_argument("partition does not match the tableau");
    const std::size_t n = t.sites();
    const Matrix& g = t.generators();
    std::vector<Matrix> mats;
    mats.reserve(p.party_count());
    for (const auto& party : p.parties()) {
        Matrix c(t.field(), n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const unsigned v = omega_on_sites(g, i, g, j, party);
                c.set(i, j, v);
                c.set(j, i, t.field().neg(v));
            }
        }
        mats.push_back(std::move(c));
    }
    return CommutationTuple(t.field(), n, std::move(mats));
}

CommutationTuple from_graph(const GraphAdjacency& g, const PartyPartition& p) {
    if (p.sites() != g.vertices()) throw std::invalid_argument("partition does not match the graph");
    const FieldOrder d = g.field();
    const std::size_t n = g.vertices();
    std::vector<Matrix> mats;
    mats.reserve(p.party_count());
    for (const auto& party : p.parties()) {
        Matrix c(d, n, n);
        for (std::size_t i : party) {
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) continue;
                const unsigned m = g.multiplicity(k, i);
                if (m == 0) continue;
                c.set(k, i, d.add(c(k, i), m));
                c.set(i, k, d.sub(c(i, k), m));
            }
        }
        mats.push_back(std::move(c));
    }
    return CommutationTuple(d, n, std::move(mats));
}

CommutationTuple change_basis(const CommutationTuple& c, const Matrix& q) {
    if (q.rows() != c.size() || q.cols() != c.size()) throw std::invalid_argument("basis change has the wrong size");
    if (!is_invertible(q)) throw std::invalid_argument("basis change matrix is singular");
    const Matrix qt = q.transpose();
    std::vector<Matrix> mats;
    mats.reserve(c.parties());
    for (const auto& m : c.matrices()) mats.push_back(q * m * qt);
    return CommutationTuple(c.field(), c.size(), std::move(mats));
}

CommutationTuple merge_parties(const CommutationTuple& c, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("cannot merge a party with itself");
    if (i >= c.parties() || j >= c.parties()) throw std::out_of_range("party index out of range");
    const std::size_t keep = std::min(i, j);
    const std::size_t drop = std::max(i, j);
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < c.parties(); ++a) {
        if (a == drop) continue;
        mats.push_back(a == keep ? c[i] + c[j] : c[a]);
    }
    return CommutationTuple(c.field(), c.size(), std::move(mats));
}

CommutationTuple direct_sum(const CommutationTuple& a, const CommutationTuple& b) {
    if (a.parties() != b.parties() || !(a.field() == b.field())) {
        throw std::invalid_argument("direct sum needs tuples with the same parties and field");
    }
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < a.parties(); ++k) mats.push_back(a[k].direct_sum(b[k]));
    return CommutationTuple(a.field(), a.size() + b.size(), std::move(mats));
}

TupleReport validate(const CommutationTuple& c, bool check_rank_condition) {
    TupleReport r;
    Matrix sum(c.field(), c.size(), c.size());
    for (std::size_t a = 0; a < c.parties(); ++a) {
        if (!is_alternating(c[a])) {
            r.alternating = false;
            r.violations.push_back("matrix " + std::to_string(a + 1) + " is not alternating");
        }
        sum += c[a];
    }
    if (!sum.is_zero()) {
        r.zero_sum = false;
        r.violations.emplace_back("matrices do not sum to zero");
    }
    if (check_rank_condition && r.alternating && r.zero_sum) {
        const auto sides = rank_sides(c.matrices());
        r.rank_condition = sides.twice_concatenated == sides.sum_of_ranks;
        if (!*r.rank_condition) {
            r.violations.push_back("rank condition fails: 2*rk(concat) = " + std::to_string(sides.twice_concatenated) +
                                   " but sum of ranks = " + std::to_string(sides.sum_of_ranks));
        }
    }
    return r;
}

RankSides rank_sides(const std::vector<Matrix>& matrices) {
    RankSides s;
    if (matrices.empty()) return s;
    const std::size_t n = matrices.front().rows();
    Matrix cat(matrices.front().field(), n, n * matrices.size());
    for (std::size_t a = 0; a < matrices.size(); ++a) {
        cat.set_block(0, a * n, matrices[a]);
        s.sum_of_ranks += rank(matrices[a]);
    }
    s.twice_concatenated = 2 * rank(cat);
    return s;
}

bool rank_condition(const CommutationTuple& c) {
    const auto report = validate(c);
    if (!report.ok()) throw std::invalid_argument("not a commutation tuple: " + report.violations.front());
    const auto s = rank_sides(c.matrices());
    return s.twice_concatenated == s.sum_of_ranks;
}

bool rank_inequality_check(const std::vector<Matrix>& matrices) {
    if (matrices.empty()) return true;
    const CommutationTuple c(matrices.front().field(), matrices.front().rows(), matrices);
    const auto report = validate(c);
    if (!report.ok()) throw std::invalid_argument("rank inequality needs alternating zero-sum matrices: " +
                                                  report.violations.front());
    const auto s = rank_sides(matrices);
    return s.twice_concatenated <= s.sum_of_ranks;
}

DicksonForm dickson_normal_form(const Matrix& c) {
    if (!is_alternating(c)) throw std::invalid_argument("Dickson normal form needs an alternating matrix");
    const FieldOrder d = c.field();
    const std::size_t n = c.rows();
    // rows of w are the working basis vectors; form(u, v) = w_u c w_v^T
    Matrix w = Matrix::identity(d, n);
    std::vector<bool> done(n, false);
    std::vector<std::size_t> order;
    DicksonForm out{Matrix(d, n, n), {}, {}};

    const auto form = [&](std::size_t a, std::size_t b) {
        return (w.row_matrix(a) * c * w.row_matrix(b).transpose())(0, 0);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::size_t partner = n;
        unsigned val = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (done[j]) continue;
            val = form(i, j);
            if (val != 0) {
                partner = j;
                break;
            }
        }
        if (partner == n) continue;  // i is (currently) in the radical; revisit below
        w.scale_row(partner, d.inv(val));
        done[i] = done[partner] = true;
        order.push_back(i);
        order.push_back(partner);
        // w' = w - B(w, v) u + B(w, u) v clears both pair directions
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            const unsigned bv = form(k, partner);
            const unsigned bu = form(k, i);
            if (bv != 0) w.add_row_multiple(k, i, d.neg(bv));
            if (bu != 0) w.add_row_multiple(k, partner, bu);
        }
    }
    const std::size_t pair_rows = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!done[i]) order.push_back(i);
    }
    out.transform = w.select_rows(order);
    for (std::size_t k = 0; k < pair_rows; k += 2) out.pairs.emplace_back(k, k + 1);
    for (std::size_t k = pair_rows; k < n; ++k) out.zeros.push_back(k);
    return out;
}

SynthesisResult synthesize_state(const CommutationTuple& c) {
    const auto report = validate(c, true);
    if (!report.alternating || !report.zero_sum) {
        throw std::invalid_argument("not a commutation tuple: " + report.violations.front());
    }
    if (!*report.rank_condition) {
        throw std::invalid_argument("not a stabilizer tuple (stabilizer-code case, unsupported): " +
                                    report.violations.front());
    }
    const FieldOrder d = c.field();
    const std::size_t n = c.size();
    const std::size_t m = c.parties();

    // R: last w rows span the common radical {y : y C_alpha = 0 for all alpha}
    const Matrix radical = left_null_space(c.concatenated());
    const std::size_t w = radical.rows();
    const std::size_t top = n - w;
    Matrix r = (w == 0 ? Matrix::identity(d, n) : complete_basis(radical).vstack(radical));
    if (w == n) r = radical;
    const Matrix r_inv = invert(r).value();

    std::vector<DicksonForm> forms;
    std::vector<std::size_t> entangled(m);
    std::size_t total_entangled = 0;
    for (std::size_t a = 0; a < m; ++a) {
        const Matrix reduced = (r * c[a] * r.transpose()).block(0, 0, top, top);
        forms.push_back(dickson_normal_form(reduced));
        entangled[a] = forms.back().pairs.size();
        total_entangled += entangled[a];
    }
    const std::size_t sites = total_entangled + w;
    if (sites != n) throw std::logic_error("synthesis: site count mismatch despite rank condition");

    // generators in the R-basis, one block of columns per party
    Matrix g_r(d, n, 2 * sites);
    std::vector<std::vector<std::size_t>> parties(m);
    std::size_t next_site = 0;
    for (std::size_t a = 0; a < m; ++a) {
        const auto& f = forms[a];
        // H: local generator restrictions in the Dickson basis (u -> X, v -> Z^{-1})
        Matrix h(d, top, 2 * sites);
        for (std::size_t k = 0; k < f.pairs.size(); ++k) {
            const std::size_t site = next_site + k;
            h.set(f.pairs[k].first, 2 * site, 1U);
            h.set(f.pairs[k].second, 2 * site + 1, d.neg(1));
            parties[a].push_back(site);
        }
        next_site += f.pairs.size();
        if (top > 0) {
            const Matrix local = invert(f.transform).value() * h;
            Matrix block = g_r.block(0, 0, top, 2 * sites);
            block += local;
            g_r.set_block(0, 0, block);
        }
    }
    for (std::size_t k = 0; k < w; ++k) {
        const std::size_t site = next_site + k;
        g_r.set(top + k, 2 * site + 1, 1U);
        parties[0].push_back(site);
    }
    StabilizerTableau tableau(r_inv * g_r);
    return {std::move(tableau), PartyPartition::allowing_empty(sites, std::move(parties))};
}

Matrix random_alternating(std::size_t n, FieldOrder d, Rng& rng) {
    Matrix m(d, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto v = static_cast<unsigned>(rng.below(d.value()));
            m.set(i, j, v);
            m.set(j, i, d.neg(v));
        }
    }
    return m;
}

std::vector<Matrix> random_zero_sum_family(std::size_t n, std::size_t m, FieldOrder d, Rng& rng) {
    if (m == 0) throw std::invalid_argument("need at least one matrix");
    std::vector<Matrix> out;
    Matrix sum(d, n, n);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        out.push_back(random_alternating(n, d, rng));
        sum += out.back();
    }
    out.push_back(sum.negated());
    return out;
}

}  // namespace plc
