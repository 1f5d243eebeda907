#include "plc/egs.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

namespace plc {

PartyConfiguration::PartyConfiguration(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("party configuration needs at least one party");
    for (std::size_t s : sizes_) {
        if (s == 0) throw std::invalid_argument("party sizes must be positive");
    }
}

PartyConfiguration PartyConfiguration::parse(std::string_view text) {
    std::vector<std::size_t> sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("bad party size '" + std::string(tok) + "' in \"" + std::string(text) + "\"");
        }
        sizes.push_back(v);
        pos = comma + 1;
    }
    return PartyConfiguration(std::move(sizes));
}

std::size_t PartyConfiguration::sites() const noexcept {
    return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::string PartyConfiguration::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < sizes_.size(); ++k) {
        if (k != 0) s += ',';
        s += std::to_string(sizes_[k]);
    }
    return s;
}

std::pair<GraphAdjacency, PartyPartition> spiral_graph(std::size_t n, FieldOrder d) {
    if (n < 4) throw std::invalid_argument("spiral graphs need at least 4 sites");
    GraphAdjacency g(d, n);
    for (std::size_t j = 0; j + 1 < n; ++j) g.set_multiplicity(j, j + 1, 1);
    std::vector<std::vector<std::size_t>> parties(4);
    for (std::size_t j = 0; j < n; ++j) parties[j % 4].push_back(j);
    return {std::move(g), PartyPartition(n, std::move(parties))};
}

// ---------------------------------------------------------------------------
// graph space

namespace {

std::uint64_t saturating_power(unsigned d, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / d) return std::numeric_limits<std::uint64_t>::max();
        r *= d;
    }
    return r;
}

}  // namespace

GraphSpace::GraphSpace(PartyConfiguration config, FieldOrder d)
    : config_(std::move(config)), partition_(config_.partition()), d_(d) {
    const std::size_t n = config_.sites();
    std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            slot[i][j] = slot[j][i] = pairs_.size();
            pairs_.emplace_back(i, j);
        }
    }
    size_ = saturating_power(d.value(), pairs_.size());

    // site permutations preserving every party, as products of per-party permutations
    std::uint64_t count = 1;
    for (std::size_t size : config_.sizes()) {
        for (std::size_t k = 2; k <= size && count <= max_symmetries; ++k) count *= k;
    }
    if (count > max_symmetries) return;
    symmetric_filter_ = true;
    std::vector<std::vector<std::size_t>> site_perms{std::vector<std::size_t>(n)};
    std::iota(site_perms[0].begin(), site_perms[0].end(), 0);
    for (const auto& party : partition_.parties()) {
        std::vector<std::size_t> local = party;
        std::vector<std::vector<std::size_t>> next;
        do {
            for (const auto& base : site_perms) {
                auto p = base;
                for (std::size_t k = 0; k < party.size(); ++k) p[party[k]] = local[k];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(local.begin(), local.end()));
        site_perms = std::move(next);
    }
    for (const auto& sp : site_perms) {
        bool identity = true;
        for (std::size_t i = 0; i < n; ++i) identity = identity && sp[i] == i;
        if (identity) continue;
        std::vector<std::size_t> perm(pairs_.size());
        for (std::size_t e = 0; e < pairs_.size(); ++e) perm[e] = slot[sp[pairs_[e].first]][sp[pairs_[e].second]];
        slot_perms_.push_back(std::move(perm));
    }
}

GraphAdjacency GraphSpace::graph(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("graph index outside the space");
    GraphAdjacency g(d_, config_.sites());
    const unsigned d = d_.value();
    for (const auto& [i, j] : pairs_) {
        const auto digit = static_cast<unsigned>(index % d);
        index /= d;
        if (digit != 0) g.set_multiplicity(i, j, digit);
    }
    return g;
}

bool GraphSpace::is_canonical(std::uint64_t index) const {
    if (!symmetric_filter_) throw std::length_error("too many party-preserving permutations for the canonical filter");
    if (slot_perms_.empty()) return true;
    const unsigned d = d_.value();
    std::vector<unsigned> digits(pairs_.size());
    for (auto& x : digits) {
        x = static_cast<unsigned>(index % d);
        index /= d;
    }
    std::vector<unsigned> image(digits.size());
    for (const auto& perm : slot_perms_) {
        for (std::size_t e = 0; e < digits.size(); ++e) image[perm[e]] = digits[e];
        // compare as numbers: most significant slot last
        for (std::size_t e = digits.size(); e-- > 0;) {
            if (image[e] != digits[e]) {
                if (image[e] < digits[e]) return false;
                break;
            }
        }
    }
    return true;
}

void enumerate_graph_states(const PartyConfiguration& config, FieldOrder d,
                            const std::function<void(const GraphAdjacency&, const PartyPartition&)>& visit,
                            const EnumerationOptions& options) {
    const GraphSpace space(config, d);
    if (space.size() > options.budget) {
        throw std::length_error("graph enumeration of " + std::to_string(d.value()) + "^" +
                                std::to_string(space.edge_slots()) + " graphs exceeds the budget of " +
                                std::to_string(options.budget));
    }
    for (std::uint64_t k = 0; k < space.size(); ++k) {
        if (options.canonical_only && !space.is_canonical(k)) continue;
        visit(space.graph(k), space.partition());
    }
}

// ---------------------------------------------------------------------------
// search pipeline

namespace {

std::vector<std::vector<std::size_t>> size_preserving_permutations(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> perm(sizes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < perm.size(); ++a) ok = ok && sizes[perm[a]] == sizes[a];
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

template <class Fn>
void parallel_for(std::size_t tasks, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < tasks && !failed; t = next++) {
                try {
                    fn(t);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct Survivor {
    GraphAdjacency graph;
    CommutationTuple tuple;
    std::vector<std::size_t> key;
};

struct ChunkResult {
    std::vector<Survivor> survivors;
    std::vector<QuarantinedGraph> quarantine;
    std::uint64_t examined = 0;
    std::uint64_t decomposable = 0;
};

using GraphSource = std::function<std::optional<GraphAdjacency>(std::uint64_t)>;

class Pipeline {
public:
    Pipeline(const PartyConfiguration& config, FieldOrder d, const EgsOptions& options, EgsReport& report)
        : partition_(config.partition()), d_(d), options_(options), report_(report) {}

    void run(std::uint64_t count, const GraphSource& source) {
        filter(count, source);
        deduplicate();
        relabel_classes();
        report_.class_count = report_.representatives.size();
        if (!report_.quarantine.empty()) {
            report_.complete = false;
            if (report_.partial_reason.empty()) {
                report_.partial_reason = std::to_string(report_.quarantine.size()) + " graph(s) quarantined as inconclusive";
            }
        }
    }

private:
    static constexpr std::uint64_t chunk_size = 2048;
    static constexpr std::size_t batch_size = 512;

    void filter(std::uint64_t count, const GraphSource& source) {
        const std::size_t chunks = static_cast<std::size_t>((count + chunk_size - 1) / chunk_size);
        std::vector<ChunkResult> results(chunks);
        parallel_for(chunks, options_.workers, [&](std::size_t c) {
            ChunkResult& out = results[c];
            const std::uint64_t lo = c * chunk_size;
            const std::uint64_t hi = std::min(count, lo + chunk_size);
            for (std::uint64_t k = lo; k < hi; ++k) {
                auto g = source(k);
                if (!g) continue;
                ++out.examined;
                auto tuple = from_graph(*g, partition_);
                const auto split = fitting_split(tuple, options_.search);
                if (split.verdict == SplitVerdict::split) {
                    ++out.decomposable;
                } else if (split.verdict == SplitVerdict::inconclusive) {
                    out.quarantine.push_back({std::move(*g), partition_, "decomposition",
                                              "endomorphism ring too large to search (dimension " +
                                                  std::to_string(split.ring_dimension) + ")"});
                } else {
                    auto key = congruence_invariants(tuple);
                    out.survivors.push_back({std::move(*g), std::move(tuple), std::move(key)});
                }
            }
        });
        for (auto& r : results) {
            report_.graphs_examined += r.examined;
            report_.decomposable += r.decomposable;
            for (auto& s : r.survivors) survivors_.push_back(std::move(s));
            for (auto& q : r.quarantine) report_.quarantine.push_back(std::move(q));
        }
        report_.indecomposable = survivors_.size();
    }

    struct Match {
        std::optional<std::size_t> rep;
        bool inconclusive = false;
    };

    // compares against reps in the survivor's bucket with index in [from, to)
    Match match(const Survivor& s, std::size_t from, std::size_t to) const {
        Match m;
        const auto it = buckets_.find(s.key);
        if (it == buckets_.end()) return m;
        for (std::size_t r : it->second) {
            if (r < from || r >= to) continue;
            const auto res = congruence_equivalent(s.tuple, report_.representatives[r].tuple, options_.search);
            if (res.verdict == Verdict::equivalent) {
                m.rep = r;
                return m;
            }
            if (res.verdict == Verdict::inconclusive) m.inconclusive = true;
        }
        return m;
    }

    void deduplicate() {
        for (std::size_t start = 0; start < survivors_.size(); start += batch_size) {
            const std::size_t end = std::min(survivors_.size(), start + batch_size);
            const std::size_t known = report_.representatives.size();
            std::vector<Match> matches(end - start);
            parallel_for(end - start, options_.workers,
                         [&](std::size_t k) { matches[k] = match(survivors_[start + k], 0, known); });
            for (std::size_t k = start; k < end; ++k) {
                Match m = matches[k - start];
                if (!m.rep) {
                    const Match late = match(survivors_[k], known, report_.representatives.size());
                    m.rep = late.rep;
                    m.inconclusive = m.inconclusive || late.inconclusive;
                }
                Survivor& s = survivors_[k];
                if (m.rep) {
                    ++report_.representatives[*m.rep].members;
                } else if (m.inconclusive) {
                    report_.quarantine.push_back(
                        {std::move(s.graph), partition_, "deduplication", "congruence search inconclusive"});
                } else {
                    buckets_[s.key].push_back(report_.representatives.size());
                    report_.representatives.push_back({std::move(s.graph), partition_, std::move(s.tuple), 0, 1});
                }
            }
        }
        survivors_.clear();
    }

    void relabel_classes() {
        auto& reps = report_.representatives;
        const auto sizes = partition_.sizes();
        std::vector<std::size_t> parent(reps.size());
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };

        auto perms = size_preserving_permutations(sizes);
        perms.erase(perms.begin());  // identity

        std::size_t unresolved = 0;
        std::vector<std::vector<std::pair<std::size_t, bool>>> found(reps.size());
        parallel_for(reps.size(), options_.workers, [&](std::size_t r) {
            for (const auto& p : perms) {
                Survivor s{reps[r].graph, reps[r].tuple.reorder_parties(p), {}};
                s.key = congruence_invariants(s.tuple);
                const Match m = match(s, 0, reps.size());
                if (m.rep) {
                    found[r].emplace_back(*m.rep, true);
                } else if (m.inconclusive) {
                    found[r].emplace_back(0, false);
                }
            }
        });
        for (std::size_t r = 0; r < reps.size(); ++r) {
            for (const auto& [other, ok] : found[r]) {
                if (!ok) {
                    ++unresolved;
                    continue;
                }
                parent[find(r)] = find(other);
            }
        }
        std::map<std::size_t, std::size_t> label;
        for (std::size_t r = 0; r < reps.size(); ++r) {
            const auto root = find(r);
            const auto [it, fresh] = label.emplace(root, label.size());
            reps[r].relabel_class = it->second;
        }
        report_.class_count_up_to_relabeling = label.size();
        if (unresolved != 0) {
            report_.notes.push_back(std::to_string(unresolved) +
                                    " relabeling comparison(s) inconclusive; the relabeled class count is an upper bound");
        }
    }

    PartyPartition partition_;
    FieldOrder d_;
    EgsOptions options_;
    EgsReport& report_;
    std::vector<Survivor> survivors_;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets_;
};

EgsReport empty_report(const PartyConfiguration& config, FieldOrder d, const EgsOptions& options) {
    EgsReport r;
    r.configuration = config;
    r.d = d.value();
    r.budget = options.search;
    r.graph_budget = options.graph_budget;
    r.notes.emplace_back("class counts cover indecomposable classes only; decomposable graphs are dropped first");
    return r;
}

}  // namespace

EgsReport egs_search(const PartyConfiguration& config, FieldOrder d, const EgsOptions& options) {
    EgsReport report = empty_report(config, d, options);
    const GraphSpace space(config, d);
    report.graphs_in_space = space.size();
    std::uint64_t count = space.size();
    if (count > options.graph_budget) {
        count = options.graph_budget;
        report.complete = false;
        report.partial_reason = "graph space of " + std::to_string(d.value()) + "^" + std::to_string(space.edge_slots()) +
                                " exceeds the enumeration budget; only the first " + std::to_string(count) +
                                " graphs were examined";
    }
    const bool canonical = options.canonical_filter && space.has_canonical_filter();
    if (options.canonical_filter && !canonical) {
        report.notes.push_back("canonical filter disabled: too many party-preserving permutations");
    }
    Pipeline(config, d, options, report).run(count, [&](std::uint64_t k) -> std::optional<GraphAdjacency> {
        if (canonical && !space.is_canonical(k)) return std::nullopt;
        return space.graph(k);
    });
    return report;
}

EgsReport qutrit_egs_search(const PartyConfiguration& config, const EgsOptions& options) {
    return egs_search(config, FieldOrder(3), options);
}

std::optional<std::size_t> find_class(const EgsReport& report, const GraphAdjacency& g, const PartyPartition& p,
                                      bool up_to_relabeling) {
    if (p.sizes() != report.configuration.sizes()) throw std::invalid_argument("partition does not match the report's configuration");
    const auto base = from_graph(g, p);
    const auto perms = up_to_relabeling ? size_preserving_permutations(p.sizes())
                                        : std::vector<std::vector<std::size_t>>{};
    const auto candidates = perms.empty() ? std::vector<CommutationTuple>{base} : [&] {
        std::vector<CommutationTuple> out;
        for (const auto& perm : perms) out.push_back(base.reorder_parties(perm));
        return out;
    }();
    for (std::size_t r = 0; r < report.representatives.size(); ++r) {
        for (const auto& t : candidates) {
            if (congruence_equivalent(t, report.representatives[r].tuple, report.budget).verdict == Verdict::equivalent) {
                return r;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// orbit database

OrbitDatabaseError::OrbitDatabaseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<GraphAdjacency> parse_orbit_database(std::istream& in, FieldOrder d) {
    std::vector<GraphAdjacency> graphs;
    std::optional<GraphAdjacency> current;
    std::string raw;
    std::size_t lineno = 0;
    const auto flush = [&] {
        if (current) graphs.push_back(std::move(*current));
        current.reset();
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (raw.find('#') == std::string::npos) flush();  // blank line ends a block; comment lines do not
            continue;
        }
        const auto first = line.find_first_not_of(" \t");
        if (line.compare(first, 2, "n=") == 0) {
            if (current) throw OrbitDatabaseError(lineno, "header inside a block (missing blank line?)");
            std::istringstream hs(line.substr(first + 2));
            long long n = 0;
            std::string rest;
            if (!(hs >> n) || (hs >> rest) || n <= 0) throw OrbitDatabaseError(lineno, "bad header '" + raw + "'");
            current.emplace(d, static_cast<std::size_t>(n));
            continue;
        }
        if (!current) throw OrbitDatabaseError(lineno, "edge line before an 'n=<count>' header");
        std::istringstream es(line);
        long long i = 0, j = 0, m = 1;
        if (!(es >> i >> j)) throw OrbitDatabaseError(lineno, "expected 'i j [m]', got '" + raw + "'");
        if (!(es >> m)) {
            if (!es.eof()) throw OrbitDatabaseError(lineno, "bad multiplicity in '" + raw + "'");
            m = 1;
        }
        std::string rest;
        es.clear();
        if (es >> rest) throw OrbitDatabaseError(lineno, "trailing text in '" + raw + "'");
        const auto n = static_cast<long long>(current->vertices());
        if (i < 1 || j < 1 || i > n || j > n) throw OrbitDatabaseError(lineno, "vertex out of range 1.." + std::to_string(n));
        if (i == j) throw OrbitDatabaseError(lineno, "self-loop on vertex " + std::to_string(i));
        const unsigned mult = d.reduce(m);
        if (mult == 0) throw OrbitDatabaseError(lineno, "multiplicity is zero mod " + std::to_string(d.value()));
        current->set_multiplicity(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), mult);
    }
    flush();
    return graphs;
}

namespace {

// every way to hand vertex sets of the given sizes to the parties, as vertex orders (party by party)
void assignments(std::vector<std::size_t>& order, std::vector<bool>& used, const std::vector<std::size_t>& sizes,
                 std::size_t party, std::size_t start, std::size_t taken, std::vector<std::vector<std::size_t>>& out) {
    if (party == sizes.size()) {
        out.push_back(order);
        return;
    }
    if (taken == sizes[party]) {
        assignments(order, used, sizes, party + 1, 0, 0, out);
        return;
    }
    for (std::size_t v = start; v < used.size(); ++v) {
        if (used[v]) continue;
        used[v] = true;
        order.push_back(v);
        assignments(order, used, sizes, party, v + 1, taken + 1, out);
        order.pop_back();
        used[v] = false;
    }
}

GraphAdjacency relabelled(const GraphAdjacency& g, const std::vector<std::size_t>& order) {
    // new vertex k is old vertex order[k]
    GraphAdjacency h(g.field(), g.vertices());
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const unsigned m = g.multiplicity(order[a], order[b]);
            if (m != 0) h.set_multiplicity(a, b, m);
        }
    }
    return h;
}

}  // namespace

EgsReport egs_search_from_orbit_database(std::istream& in, const PartyConfiguration& config, FieldOrder d,
                                         const EgsOptions& options) {
    EgsReport report = empty_report(config, d, options);
    const auto graphs = parse_orbit_database(in, d);
    std::vector<std::size_t> order;
    std::vector<bool> used(config.sites(), false);
    std::vector<std::vector<std::size_t>> orders;
    assignments(order, used, config.sizes(), 0, 0, 0, orders);

    std::vector<const GraphAdjacency*> usable;
    std::size_t skipped = 0;
    for (const auto& g : graphs) {
        if (g.vertices() == config.sites()) {
            usable.push_back(&g);
        } else {
            ++skipped;
        }
    }
    if (skipped != 0) {
        report.notes.push_back(std::to_string(skipped) + " database graph(s) with a different vertex count skipped");
    }
    const std::uint64_t count = usable.size() * orders.size();
    report.graphs_in_space = count;
    if (count > options.graph_budget) {
        throw std::length_error(std::to_string(count) + " graph placements exceed the enumeration budget");
    }
    Pipeline(config, d, options, report).run(count, [&](std::uint64_t k) -> std::optional<GraphAdjacency> {
        return relabelled(*usable[k / orders.size()], orders[k % orders.size()]);
    });
    return report;
}

// ---------------------------------------------------------------------------
// spiral family

std::vector<SpiralCheck> verify_spiral_family(FieldOrder d, std::size_t n_min, std::size_t n_max,
                                              const SearchBudget& budget) {
    std::vector<SpiralCheck> out;
    for (std::size_t n = std::max<std::size_t>(n_min, 4); n <= n_max; ++n) {
        const auto [g, p] = spiral_graph(n, d);
        SpiralCheck check;
        check.n = n;
        check.sizes = p.sizes();
        const auto c = from_graph(g, p);
        check.verdict = fitting_split(c, budget).verdict;
        const CommutationTuple pair(d, n, {c[0] + c[1], c[1] + c[2]});
        check.merged_pair = fitting_split(pair, budget).verdict;
        std::vector<std::size_t> names{0, 1, 2, 3};
        do {
            const CommutationTuple named(d, n, {c[names[0]] + c[names[1]], c[names[1]] + c[names[2]]});
            if (fitting_split(named, budget).verdict == SplitVerdict::split) ++check.splitting_namings;
        } while (std::next_permutation(names.begin(), names.end()));
        const auto s = graph_state(g);
        check.layout_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t expect = (i == 0 || i + 1 == n) ? 2 : 3;
            check.layout_ok = check.layout_ok && party_support(s.generator(i), p).size() == expect;
        }
        out.push_back(std::move(check));
    }
    return out;
}

// ---------------------------------------------------------------------------
// two-qubit cosets

namespace {

const FieldOrder f2(2);

std::uint16_t encode(const Matrix& m) {
    std::uint16_t code = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) code = static_cast<std::uint16_t>(code | (m(i, j) << (4 * i + j)));
    }
    return code;
}

Matrix decode(std::uint16_t code) {
    Matrix m(f2, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m.set(i, j, (code >> (4 * i + j)) & 1U);
    }
    return m;
}

Matrix two_site_gram() { return Matrix::from_rows(f2, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }

struct CosetEntry {
    std::vector<std::vector<int>> b;
    std::vector<std::size_t> sequence;
};

const std::vector<CosetEntry>& coset_table() {
    static const std::vector<CosetEntry> table = {
        {{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {1}},
        {{{1, 1, 0, 1}, {0, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}}, {0, 3, 0, 2, 0, 3, 0}},
        {{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}}, {1, 0, 3, 0}},
        {{{1, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {0, 0, 0, 1}}, {0, 4, 0}},
        {{{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}, {0, 4, 3, 0, 2, 1, 0, 4, 0}},
        {{{0, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 0}}, {0, 4, 3, 4, 0}},
        {{{1, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}}, {2, 0, 3, 0}},
        {{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}, {0}},
        {{{0, 1, 1, 1}, {0, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 0, 0}}, {1, 2, 0, 4, 3, 0}},
        {{{0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 0, 0}}, {1, 0, 4, 3, 0}},
        {{{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}, {1, 0, 0, 1}}, {2, 0}},
        {{{1, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 1}, {0, 1, 0, 1}}, {1, 0, 3, 4, 0}},
        {{{1, 0, 1, 1}, {0, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}}, {2, 1, 0, 3, 0, 2, 0}},
        {{{1, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}}, {0, 3, 0, 2, 1, 0}},
        {{{1, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}}, {0, 3, 4, 0}},
        {{{1, 1, 0, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {0, 0, 0, 1}}, {1, 0, 4, 0}},
        {{{1, 1, 1, 1}, {0, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}}, {2, 0, 3, 0, 2, 0}},
        {{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}}, {1, 0}},
        {{{1, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 1}}, {2, 1, 0}},
        {{{1, 1, 0, 1}, {1, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 0}}, {0, 4, 0, 1, 0}},
    };
    return table;
}

}  // namespace

std::vector<Matrix> two_qubit_lce_generators() {
    const Matrix sx = Matrix::from_rows(f2, {{1, 1}, {0, 1}});
    const Matrix sz = Matrix::from_rows(f2, {{1, 0}, {1, 1}});
    const Matrix id = Matrix::identity(f2, 2);
    return {
        Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}),
        sx.direct_sum(id),
        id.direct_sum(sx),
        sx.direct_sum(sz),
        sz.direct_sum(sx),
    };
}

Matrix compose_lce_sequence(const std::vector<std::size_t>& sequence) {
    const auto gens = two_qubit_lce_generators();
    Matrix p = Matrix::identity(f2, 4);
    bool connected = false;
    for (std::size_t s : sequence) {
        if (s >= gens.size()) throw std::invalid_argument("generator index " + std::to_string(s) + " out of range 0..4");
        if ((s == 1 || s == 2) && connected) {
            throw std::invalid_argument("operator " + std::to_string(s) + " needs the qubits disconnected");
        }
        if ((s == 3 || s == 4) && !connected) {
            throw std::invalid_argument("operator " + std::to_string(s) + " needs the qubits connected");
        }
        p = gens[s] * p;
        if (s == 0) connected = !connected;
    }
    return p;
}

bool is_local_symplectic(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("expected a 4 x 4 matrix");
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i / 2 != j / 2 && m(i, j) != 0) return false;
        }
    }
    return m * two_site_gram() * m.transpose() == two_site_gram();
}

CosetCheckReport verify_coset_table() {
    CosetCheckReport report;
    const Matrix j = two_site_gram();
    std::vector<Matrix> group;
    std::vector<Matrix> local;
    for (std::uint32_t code = 0; code < (1U << 16); ++code) {
        Matrix m = decode(static_cast<std::uint16_t>(code));
        if (!(m * j * m.transpose() == j)) continue;
        if (is_local_symplectic(m)) local.push_back(m);
        group.push_back(std::move(m));
    }
    report.group_order = group.size();
    report.subgroup_order = local.size();

    // right coset L*B, labelled by its smallest element
    const auto key = [&](const Matrix& b) {
        std::uint16_t best = std::numeric_limits<std::uint16_t>::max();
        for (const auto& l : local) best = std::min(best, encode(l * b));
        return best;
    };
    std::set<std::uint16_t> all;
    for (const auto& g : group) all.insert(key(g));
    report.coset_count = all.size();

    const auto gens = two_qubit_lce_generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!(gens[k] * j * gens[k].transpose() == j)) {
            report.failures.push_back("generator " + std::to_string(k) + " is not symplectic");
        }
    }

    std::set<std::uint16_t> hit;
    const auto& table = coset_table();
    for (std::size_t row = 0; row < table.size(); ++row) {
        const Matrix b = Matrix::from_rows(f2, table[row].b);
        if (!(b * j * b.transpose() == j)) {
            report.failures.push_back("table entry " + std::to_string(row + 1) + ": B is not symplectic");
            continue;
        }
        const auto kb = key(b);
        if (!hit.insert(kb).second) {
            report.failures.push_back("table entry " + std::to_string(row + 1) + " repeats an earlier coset");
        }
        try {
            if (key(compose_lce_sequence(table[row].sequence)) == kb) {
                ++report.sequences_verified;
            } else {
                report.failures.push_back("table entry " + std::to_string(row + 1) +
                                          ": generating sequence lands in a different coset");
            }
        } catch (const std::invalid_argument& e) {
            report.failures.push_back("table entry " + std::to_string(row + 1) + ": " + e.what());
        }
    }
    report.distinct_cosets = hit.size();
    if (report.coset_count * report.subgroup_order != report.group_order) {
        report.failures.push_back("coset count times subgroup order differs from the group order");
    }
    if (hit.size() != report.coset_count) {
        report.failures.push_back("table covers " + std::to_string(hit.size()) + " of " +
                                  std::to_string(report.coset_count) + " cosets");
    }
    return report;
}

// ---------------------------------------------------------------------------
// trees

TreeNormalization normalize_tree_multiplicities(const GraphAdjacency& g) {
    const std::size_t n = g.vertices();
    const FieldOrder d = g.field();
    TreeNormalization out{g, {}};
    std::vector<bool> seen(n, false);
    std::size_t tree_edges = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<std::size_t> todo;
        todo.push(root);
        while (!todo.empty()) {
            const std::size_t v = todo.front();
            todo.pop();
            for (std::size_t c : out.normalized.neighbours(v)) {
                if (seen[c]) continue;
                seen[c] = true;
                ++tree_edges;
                const unsigned m = out.normalized.multiplicity(v, c);
                if (m != 1) {
                    const unsigned f = d.inv(m);
                    out.normalized = qudit_edge_multiply(out.normalized, c, f);
                    out.scalings.emplace_back(c, f);
                }
                todo.push(c);
            }
        }
    }
    if (tree_edges != g.edges().size()) throw std::invalid_argument("graph has a cycle; not a forest");
    return out;
}

}  // namespace plc
