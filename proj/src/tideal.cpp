#include "bicomm/tideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bicomm {

namespace {

// Number of product monomials of multidegree (a, b) in two variables: all
// splits of each variable between y and z, minus the all-y and all-z corners.
int component_dimension(int a, int b) {
    return (a + 1) * (b + 1) - 2;
}

std::vector<Monomial> component_monomials(int a, int b) {
    std::vector<Monomial> out;
    for (int i1 = 0; i1 <= a; ++i1)
        for (int i2 = 0; i2 <= b; ++i2) {
            Monomial m(2);
            m.yexp[0] = i1;
            m.zexp[0] = a - i1;
            m.yexp[1] = i2;
            m.zexp[1] = b - i2;
            if (m.is_product_monomial()) out.push_back(m);
        }
    return out;
}

bool has_degree_one_generator(const std::vector<GElement>& gens) {
    for (const auto& g : gens)
        if (!g.linear_is_zero()) return true;
    return false;
}

struct PoolEntry {
    Target target;
    int deg1;
    int deg2;
};

std::vector<PoolEntry> build_target_pool(int a, int b) {
    std::vector<PoolEntry> pool;
    if (a >= 1) pool.push_back({Target::variable(0), 1, 0});
    if (b >= 1) pool.push_back({Target::variable(1), 0, 1});
    // Product-monomial targets, smallest total degree first so the search
    // fills low-degree slots early and prunes sooner.
    std::vector<Monomial> monos;
    for (int i1 = 0; i1 <= a; ++i1)
        for (int k1 = 0; k1 + i1 <= a; ++k1)
            for (int i2 = 0; i2 <= b; ++i2)
                for (int k2 = 0; k2 + i2 <= b; ++k2) {
                    if (i1 + i2 < 1 || k1 + k2 < 1) continue;
                    Monomial m(2);
                    m.yexp[0] = i1;
                    m.zexp[0] = k1;
                    m.yexp[1] = i2;
                    m.zexp[1] = k2;
                    monos.push_back(m);
                }
    GradedLexGreater gt;
    std::sort(monos.begin(), monos.end(), [&gt](const Monomial& x, const Monomial& y) {
        if (x.total_degree() != y.total_degree())
            return x.total_degree() < y.total_degree();
        return gt(y, x);
    });
    for (const auto& m : monos)
        pool.push_back({Target::square(Poly::term(m, Rational(1))), m.vardeg(0), m.vardeg(1)});
    return pool;
}

// Inserts every consequence of generator g that lands in the (a, b)
// component: substitution of a monomial target into each slot of the
// linearized generator, followed by a monomial multiplier soaking up the
// remaining degree.  Returns early once the span fills the whole component.
void add_generator_consequences(RowSpan& span, const GElement& g, int a, int b) {
    const int full = component_dimension(a, b);
    if (span.rank() == full) return;
    if (g.is_zero()) return;
    if (!g.is_multihomogeneous(nullptr))
        throw invariant_error("consequence span: generator is not multihomogeneous");

    if (!g.linear_is_zero()) {
        // A degree-1 identity makes every element an identity.
        for (const auto& m : component_monomials(a, b)) {
            span.insert(Poly::term(m, Rational(1)));
            if (span.rank() == full) return;
        }
        return;
    }

    GElement glin = multilinearize(g);
    const int slots = glin.d;
    if (slots == 0 || slots > a + b) return;

    // Slots belonging to the same original variable produce symmetric
    // substitutions, so only weakly increasing pool indices are tried there.
    std::vector<int> block(slots, 0);
    {
        std::vector<int> dv;
        g.is_multihomogeneous(&dv);
        int s = 0, blk = 0;
        for (int i = 0; i < g.d; ++i) {
            for (int k = 0; k < dv[i]; ++k) block[s++] = blk;
            if (dv[i] > 0) ++blk;
        }
    }

    const auto pool = build_target_pool(a, b);
    std::vector<int> choice(slots, 0);
    std::vector<Target> targets(slots);

    auto emit = [&](int r1, int r2) {
        GElement image = eval_multilinear(glin, targets, 2);
        if (image.square.is_zero()) return;
        for (int a2 = 0; a2 <= r1; ++a2)
            for (int b2 = 0; b2 <= r2; ++b2) {
                Monomial mult(2);
                mult.yexp[0] = a2;
                mult.zexp[0] = r1 - a2;
                mult.yexp[1] = b2;
                mult.zexp[1] = r2 - b2;
                span.insert(image.square * Poly::term(mult, Rational(1)));
                if (span.rank() == full) return;
            }
    };

    // Depth-first assignment of pool targets to slots.
    auto rec = [&](auto&& self, int s, int r1, int r2) -> void {
        if (span.rank() == full) return;
        if (s == slots) {
            emit(r1, r2);
            return;
        }
        int start = (s > 0 && block[s] == block[s - 1]) ? choice[s - 1] : 0;
        int remaining_slots = slots - s;
        for (int idx = start; idx < static_cast<int>(pool.size()); ++idx) {
            const auto& e = pool[idx];
            int n1 = r1 - e.deg1, n2 = r2 - e.deg2;
            if (n1 < 0 || n2 < 0) continue;
            // Every remaining slot consumes at least degree one.
            if (n1 + n2 < remaining_slots - 1) continue;
            choice[s] = idx;
            targets[s] = e.target;
            self(self, s + 1, n1, n2);
            if (span.rank() == full) return;
        }
    };
    rec(rec, 0, a, b);
}

RowSpan component_rowspan(const std::vector<GElement>& gens, int a, int b) {
    if (a < 0 || b < 0 || a + b < 2)
        throw std::invalid_argument("consequence span: component degree must be at least 2");
    RowSpan span(2);
    for (const auto& g : gens) {
        add_generator_consequences(span, g, a, b);
        if (span.rank() == component_dimension(a, b)) break;
    }
    return span;
}

} // namespace

int MultiplicityTable::multiplicity_of(const Partition& lambda) const {
    for (const auto& [p, m] : rows)
        if (p == lambda) return m;
    throw std::invalid_argument("MultiplicityTable: shape " + lambda.str() + " not present");
}

long long MultiplicityTable::codimension() const {
    long long s = 0;
    for (const auto& [p, m] : rows) s += static_cast<long long>(m) * sn_irrep_dim(p);
    return s;
}

std::string MultiplicityTable::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : rows) {
        if (!first) os << ", ";
        os << p.str() << ":" << m;
        first = false;
    }
    return os.str();
}

std::vector<Poly> consequence_span_component(const VarietySpec& spec, int deg1, int deg2) {
    return component_rowspan(spec.generators, deg1, deg2).rows();
}

std::vector<Poly> consequence_span(const VarietySpec& spec, const Partition& lambda) {
    return consequence_span_component(spec, lambda.l1, lambda.l2);
}

int multiplicity(const VarietySpec& spec, const Partition& lambda) {
    if (lambda.n() == 1)
        return has_degree_one_generator(spec.generators) ? 0 : 1;
    std::vector<Poly> span = consequence_span(spec, lambda);
    std::vector<Poly> hw = hwv_subspace(span, lambda);
    return free_multiplicity(lambda) - static_cast<int>(hw.size());
}

MultiplicityTable cocharacter(const VarietySpec& spec, int n) {
    MultiplicityTable t;
    t.n = n;
    for (const auto& lambda : two_row_partitions(n))
        t.rows.emplace_back(lambda, multiplicity(spec, lambda));
    return t;
}

namespace {

bool implies_with_base(const RowSpan* base, const VarietySpec& spec, const GElement& u,
                       const GElement& v) {
    if (v.d != 2)
        throw std::invalid_argument("implies: consequence must live in the two-variable model");
    std::vector<int> dv;
    if (!v.is_multihomogeneous(&dv))
        throw std::invalid_argument("implies: consequence must be multihomogeneous");
    if (v.is_zero()) return true;
    if (!v.linear_is_zero()) {
        // Degree-1 target: only a degree-1 identity reaches it.
        return has_degree_one_generator(spec.generators) || !u.linear_is_zero();
    }
    int a = dv[0], b = dv[1];
    RowSpan span = base ? *base : component_rowspan(spec.generators, a, b);
    if (span.rank() < component_dimension(a, b))
        add_generator_consequences(span, u, a, b);
    return span.contains(v.square);
}

} // namespace

bool implies(const VarietySpec& spec, const GElement& u, const GElement& v) {
    return implies_with_base(nullptr, spec, u, v);
}

const RowSpan& ConsequenceOracle::component(int deg1, int deg2) {
    auto key = std::make_pair(deg1, deg2);
    auto it = components_.find(key);
    if (it == components_.end())
        it = components_.emplace(key, component_rowspan(spec_.generators, deg1, deg2)).first;
    return it->second;
}

int ConsequenceOracle::multiplicity(const Partition& lambda) {
    if (lambda.n() == 1)
        return has_degree_one_generator(spec_.generators) ? 0 : 1;
    auto key = std::make_pair(lambda.l1, lambda.l2);
    auto it = multiplicities_.find(key);
    if (it != multiplicities_.end()) return it->second;
    std::vector<Poly> hw = hwv_subspace(component(lambda.l1, lambda.l2).rows(), lambda);
    int m = free_multiplicity(lambda) - static_cast<int>(hw.size());
    multiplicities_.emplace(key, m);
    return m;
}

bool ConsequenceOracle::implies(const GElement& u, const GElement& v) {
    std::vector<int> dv;
    if (v.d == 2 && v.is_multihomogeneous(&dv) && v.linear_is_zero() && !v.is_zero())
        return implies_with_base(&component(dv[0], dv[1]), spec_, u, v);
    return implies_with_base(nullptr, spec_, u, v);
}

// --- multilinear oracle ----------------------------------------------------

namespace {

// Reduced echelon rows over the dense subset-mask coordinate space.
class MaskSpan {
public:
    explicit MaskSpan(int width) : width_(width) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    bool insert(std::vector<Rational> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            Rational f = c;
            for (int i = 0; i < width_; ++i)
                if (!rows_[r][i].is_zero()) v[i] -= f * rows_[r][i];
        }
        int pivot = -1;
        for (int i = 0; i < width_; ++i)
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return false;
        Rational inv = Rational(1) / v[pivot];
        for (int i = 0; i < width_; ++i)
            if (!v[i].is_zero()) v[i] *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& c = rows_[r][pivot];
            if (c.is_zero()) continue;
            Rational f = c;
            for (int i = 0; i < width_; ++i)
                if (!v[i].is_zero()) rows_[r][i] -= f * v[i];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, pivot);
        return true;
    }

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    int width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

std::vector<Rational> mask_vector_of(const GElement& ml) {
    int k = ml.d;
    std::vector<Rational> v(std::size_t(1) << k, Rational(0));
    for (const auto& [m, c] : ml.square.terms()) {
        unsigned mask = 0;
        for (int i = 0; i < k; ++i) {
            if (m.yexp[i] + m.zexp[i] != 1)
                throw std::logic_error("mask_vector_of: element is not multilinear");
            if (m.yexp[i] == 1) mask |= (1u << i);
        }
        v[mask] += c;
    }
    return v;
}

std::vector<Rational> permute_adjacent(const std::vector<Rational>& v, int m, int j) {
    std::vector<Rational> out(v.size(), Rational(0));
    (void)m;
    for (std::size_t mask = 0; mask < v.size(); ++mask) {
        if (v[mask].is_zero()) continue;
        bool bj = mask & (1u << j);
        bool bj1 = mask & (1u << (j + 1));
        std::size_t nm = mask;
        if (bj != bj1) nm = (mask ^ (1u << j)) ^ (1u << (j + 1));
        out[nm] += v[mask];
    }
    return out;
}

void close_under_permutations(MaskSpan& span, int m) {
    bool changed = true;
    while (changed) {
        changed = false;
        // Snapshot: rows added during the pass are covered by the next pass.
        std::vector<std::vector<Rational>> snapshot = span.rows();
        for (const auto& row : snapshot)
            for (int j = 0; j + 1 < m; ++j)
                if (span.insert(permute_adjacent(row, m, j))) changed = true;
    }
}

} // namespace

int oracle_multilinear_dim(const VarietySpec& spec, int n, int cap) {
    if (n < 1) throw std::invalid_argument("oracle_multilinear_dim: n must be positive");
    if (n > cap)
        throw std::invalid_argument("oracle_multilinear_dim: degree exceeds cap");
    if (spec.generators.empty()) return 0;
    if (has_degree_one_generator(spec.generators))
        return static_cast<int>((std::size_t(1) << n) - 2);

    std::vector<GElement> lins;
    int min_deg = n + 1;
    for (const auto& g : spec.generators) {
        if (g.is_zero()) continue;
        if (!g.is_multihomogeneous(nullptr))
            throw invariant_error("oracle_multilinear_dim: generator is not multihomogeneous");
        GElement lin = multilinearize(g);
        if (lin.d > n || lin.d < 2) continue;
        min_deg = std::min(min_deg, lin.d);
        lins.push_back(std::move(lin));
    }
    if (min_deg > n) return 0;

    MaskSpan span(1 << min_deg);
    for (const auto& lin : lins)
        if (lin.d == min_deg) span.insert(mask_vector_of(lin));
    close_under_permutations(span, min_deg);

    for (int m = min_deg; m < n; ++m) {
        MaskSpan next(1 << (m + 1));
        for (const auto& row : span.rows()) {
            std::vector<Rational> left(std::size_t(1) << (m + 1), Rational(0));
            std::vector<Rational> right(std::size_t(1) << (m + 1), Rational(0));
            for (std::size_t mask = 0; mask < row.size(); ++mask) {
                if (row[mask].is_zero()) continue;
                left[mask | (std::size_t(1) << m)] += row[mask]; // x_{m+1} * u = y_{m+1} u
                right[mask] += row[mask];                        // u * x_{m+1} = u z_{m+1}
            }
            next.insert(std::move(left));
            next.insert(std::move(right));
            for (int i = 0; i < m; ++i) {
                // x_i -> x_i * x_{m+1}: a y_i slot keeps its mask bit, a z_i
                // slot moves variable i to the y side; z_{m+1} fills the gap.
                std::vector<Rational> sub(std::size_t(1) << (m + 1), Rational(0));
                for (std::size_t mask = 0; mask < row.size(); ++mask) {
                    if (row[mask].is_zero()) continue;
                    sub[mask | (std::size_t(1) << i)] += row[mask];
                }
                next.insert(std::move(sub));
            }
        }
        for (const auto& lin : lins)
            if (lin.d == m + 1) next.insert(mask_vector_of(lin));
        close_under_permutations(next, m + 1);
        span = std::move(next);
    }
    return span.rank();
}

} // namespace bicomm
