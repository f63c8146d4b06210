#include "bicomm/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bicomm {

Monomial::Monomial(std::vector<int> y, std::vector<int> z)
    : yexp(std::move(y)), zexp(std::move(z)) {
    if (yexp.size() != zexp.size())
        throw std::invalid_argument("Monomial: exponent vectors differ in length");
    for (int e : yexp)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    for (int e : zexp)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

int Monomial::ydeg() const { return std::accumulate(yexp.begin(), yexp.end(), 0); }
int Monomial::zdeg() const { return std::accumulate(zexp.begin(), zexp.end(), 0); }

std::vector<int> Monomial::multidegree() const {
    std::vector<int> dv(yexp.size());
    for (std::size_t i = 0; i < yexp.size(); ++i)
        dv[i] = yexp[i] + zexp[i];
    return dv;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (dim() != o.dim())
        throw std::invalid_argument("Monomial: dimension mismatch in product");
    Monomial r(dim());
    for (int i = 0; i < dim(); ++i) {
        r.yexp[i] = yexp[i] + o.yexp[i];
        r.zexp[i] = zexp[i] + o.zexp[i];
    }
    return r;
}

std::string Monomial::str() const {
    std::string out;
    auto emit = [&out](char family, int index, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += family;
        out += std::to_string(index + 1);
        if (e > 1) {
            out += "^";
            out += std::to_string(e);
        }
    };
    for (int i = 0; i < dim(); ++i) emit('y', i, yexp[i]);
    for (int i = 0; i < dim(); ++i) emit('z', i, zexp[i]);
    return out; // empty for the constant monomial
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta > tb;
    if (a.yexp != b.yexp) return a.yexp > b.yexp;
    return a.zexp > b.zexp;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p(m.dim());
    p.add_term(m, c);
    return p;
}

Poly Poly::var_y(int i, int d) {
    Monomial m(d);
    m.yexp.at(i) = 1;
    return term(m, Rational(1));
}

Poly Poly::var_z(int i, int d) {
    Monomial m(d);
    m.zexp.at(i) = 1;
    return term(m, Rational(1));
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::lead_monomial() const {
    if (terms_.empty()) throw std::logic_error("Poly: zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Rational& Poly::lead_coeff() const {
    if (terms_.empty()) throw std::logic_error("Poly: zero polynomial has no leading term");
    return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.dim() != d_)
        throw std::invalid_argument("Poly: monomial dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (d_ != o.d_) throw std::invalid_argument("Poly: dimension mismatch in sum");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (d_ != o.d_) throw std::invalid_argument("Poly: dimension mismatch in difference");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(d_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("Poly: dimension mismatch in product");
    Poly r(a.d_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

bool Poly::is_multihomogeneous(std::vector<int>* degvec) const {
    if (terms_.empty()) {
        if (degvec) degvec->assign(d_, 0);
        return true;
    }
    std::vector<int> dv = terms_.begin()->first.multidegree();
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.multidegree() != dv) return false;
    }
    if (degvec) *degvec = dv;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        std::string ms = m.str();
        if (ms.empty()) {
            os << a.str();
        } else if (a == Rational(1)) {
            os << ms;
        } else {
            os << a.str() << "*" << ms;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly multihomogeneous_component(const Poly& p, const std::vector<int>& degvec) {
    if (static_cast<int>(degvec.size()) != p.dim())
        throw std::invalid_argument("multihomogeneous_component: degree vector length mismatch");
    Poly r(p.dim());
    for (const auto& [m, c] : p.terms())
        if (m.multidegree() == degvec) r.add_term(m, c);
    return r;
}

namespace {

Poly poly_pow(const Poly& base, int e, int d) {
    Poly r = Poly::term(Monomial(d), Rational(1));
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

} // namespace

Poly substitute(const Poly& p, const std::vector<std::pair<Poly, Poly>>& images) {
    if (static_cast<int>(images.size()) != p.dim())
        throw std::invalid_argument("substitute: one image pair per variable required");
    int dout = -1;
    for (const auto& [yi, zi] : images) {
        if (dout == -1) dout = yi.dim();
        if (yi.dim() != dout || zi.dim() != dout)
            throw std::invalid_argument("substitute: image dimensions disagree");
    }
    if (dout == -1) dout = 0;
    Poly r(dout);
    for (const auto& [m, c] : p.terms()) {
        Poly acc = Poly::term(Monomial(dout), c);
        for (int i = 0; i < p.dim(); ++i) {
            if (m.yexp[i] > 0) acc = acc * poly_pow(images[i].first, m.yexp[i], dout);
            if (m.zexp[i] > 0) acc = acc * poly_pow(images[i].second, m.zexp[i], dout);
        }
        r += acc;
    }
    return r;
}

Poly derive(const Poly& p, int i, const Poly& yimg, const Poly& zimg) {
    if (i < 0 || i >= p.dim())
        throw std::invalid_argument("derive: variable index out of range");
    if (yimg.dim() != p.dim() || zimg.dim() != p.dim())
        throw std::invalid_argument("derive: image dimension mismatch");
    Poly r(p.dim());
    for (const auto& [m, c] : p.terms()) {
        if (m.yexp[i] > 0) {
            Monomial m2 = m;
            m2.yexp[i] -= 1;
            r += Poly::term(m2, c * Rational(m.yexp[i])) * yimg;
        }
        if (m.zexp[i] > 0) {
            Monomial m2 = m;
            m2.zexp[i] -= 1;
            r += Poly::term(m2, c * Rational(m.zexp[i])) * zimg;
        }
    }
    return r;
}

// --- linear algebra -------------------------------------------------------

bool RowSpan::insert(Poly p) {
    if (p.dim() != d_) throw std::invalid_argument("RowSpan: dimension mismatch");
    p = reduce(std::move(p));
    if (p.is_zero()) return false;
    p *= Rational(1) / p.lead_coeff();
    // Keep existing rows reduced against the newcomer.
    for (auto& row : rows_) {
        Rational c = row.coeff(p.lead_monomial());
        if (!c.is_zero()) row -= c * p;
    }
    GradedLexGreater gt;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                                [&gt](const Poly& a, const Poly& b) {
                                    return gt(a.lead_monomial(), b.lead_monomial());
                                });
    rows_.insert(pos, std::move(p));
    return true;
}

Poly RowSpan::reduce(Poly p) const {
    // Rows are ordered by decreasing lead, so a single pass is complete: the
    // tail introduced by one subtraction only contains smaller monomials.
    for (const auto& row : rows_) {
        if (p.is_zero()) break;
        Rational c = p.coeff(row.lead_monomial());
        if (!c.is_zero()) p -= c * row;
    }
    return p;
}

bool RowSpan::contains(Poly p) const { return reduce(std::move(p)).is_zero(); }

int rank_of_span(const std::vector<Poly>& ps) {
    if (ps.empty()) return 0;
    RowSpan span(ps.front().dim());
    for (const auto& p : ps) span.insert(p);
    return span.rank();
}

namespace {

// Augmented row: polynomial together with its expression in the original
// input vectors, so reductions can be replayed on the coefficient side.
struct TrackedRow {
    Poly poly;
    std::vector<Rational> combo;
};

} // namespace

std::optional<std::vector<Rational>> coordinates(const Poly& p,
                                                 const std::vector<Poly>& basis) {
    if (basis.empty()) {
        if (p.is_zero()) return std::vector<Rational>{};
        return std::nullopt;
    }
    int d = basis.front().dim();
    std::size_t n = basis.size();
    std::vector<TrackedRow> rows;
    auto reduce_tracked = [&rows](TrackedRow r) {
        for (const auto& row : rows) {
            if (r.poly.is_zero()) break;
            Rational c = r.poly.coeff(row.poly.lead_monomial());
            if (c.is_zero()) continue;
            r.poly -= c * row.poly;
            for (std::size_t i = 0; i < r.combo.size(); ++i)
                r.combo[i] -= c * row.combo[i];
        }
        return r;
    };
    GradedLexGreater gt;
    for (std::size_t k = 0; k < n; ++k) {
        if (basis[k].dim() != d)
            throw std::invalid_argument("coordinates: basis dimensions disagree");
        TrackedRow r{basis[k], std::vector<Rational>(n, Rational(0))};
        r.combo[k] = Rational(1);
        r = reduce_tracked(std::move(r));
        if (r.poly.is_zero())
            throw std::invalid_argument("coordinates: basis is linearly dependent");
        Rational inv = Rational(1) / r.poly.lead_coeff();
        r.poly *= inv;
        for (auto& c : r.combo) c *= inv;
        auto pos = std::lower_bound(rows.begin(), rows.end(), r,
                                    [&gt](const TrackedRow& a, const TrackedRow& b) {
                                        return gt(a.poly.lead_monomial(), b.poly.lead_monomial());
                                    });
        rows.insert(pos, std::move(r));
    }
    if (p.dim() != d)
        throw std::invalid_argument("coordinates: dimension mismatch");
    TrackedRow target{p, std::vector<Rational>(n, Rational(0))};
    target = reduce_tracked(std::move(target));
    if (!target.poly.is_zero()) return std::nullopt;
    // target.poly == p - sum(-combo_i * basis_i) after the sign flips below.
    std::vector<Rational> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = -target.combo[i];
    return coords;
}

std::vector<std::vector<Rational>> kernel_combinations(const std::vector<Poly>& images) {
    std::vector<std::vector<Rational>> kernel;
    if (images.empty()) return kernel;
    int d = images.front().dim();
    std::size_t n = images.size();
    std::vector<TrackedRow> rows;
    GradedLexGreater gt;
    for (std::size_t k = 0; k < n; ++k) {
        if (images[k].dim() != d)
            throw std::invalid_argument("kernel_combinations: dimensions disagree");
        TrackedRow r{images[k], std::vector<Rational>(n, Rational(0))};
        r.combo[k] = Rational(1);
        for (const auto& row : rows) {
            if (r.poly.is_zero()) break;
            Rational c = r.poly.coeff(row.poly.lead_monomial());
            if (c.is_zero()) continue;
            r.poly -= c * row.poly;
            for (std::size_t i = 0; i < n; ++i) r.combo[i] -= c * row.combo[i];
        }
        if (r.poly.is_zero()) {
            kernel.push_back(std::move(r.combo));
            continue;
        }
        Rational inv = Rational(1) / r.poly.lead_coeff();
        r.poly *= inv;
        for (auto& c : r.combo) c *= inv;
        auto pos = std::lower_bound(rows.begin(), rows.end(), r,
                                    [&gt](const TrackedRow& a, const TrackedRow& b) {
                                        return gt(a.poly.lead_monomial(), b.poly.lead_monomial());
                                    });
        rows.insert(pos, std::move(r));
    }
    return kernel;
}

} // namespace bicomm
