#include "bicomm/galgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace bicomm {

GElement GElement::variable(int i, int dim_) {
    GElement e(dim_);
    e.linear.at(i) = Rational(1);
    return e;
}

GElement GElement::from_square(Poly p) {
    GElement e(p.dim());
    e.square = std::move(p);
    e.validate();
    return e;
}

void GElement::validate() const {
    if (static_cast<int>(linear.size()) != d)
        throw invariant_error("GElement: linear part has wrong length");
    if (square.dim() != d)
        throw invariant_error("GElement: product part has wrong dimension");
    for (const auto& [m, c] : square.terms()) {
        (void)c;
        if (!m.is_product_monomial())
            throw invariant_error("GElement: product-part monomial lacks a y or z factor: " + m.str());
    }
}

bool GElement::linear_is_zero() const {
    for (const auto& c : linear)
        if (!c.is_zero()) return false;
    return true;
}

bool GElement::is_zero() const { return linear_is_zero() && square.is_zero(); }

bool GElement::is_multihomogeneous(std::vector<int>* degvec) const {
    bool have = false;
    std::vector<int> dv;
    for (int i = 0; i < d; ++i) {
        if (linear[i].is_zero()) continue;
        std::vector<int> e(d, 0);
        e[i] = 1;
        if (!have) {
            dv = e;
            have = true;
        } else if (dv != e) {
            return false;
        }
    }
    for (const auto& [m, c] : square.terms()) {
        (void)c;
        std::vector<int> e = m.multidegree();
        if (!have) {
            dv = e;
            have = true;
        } else if (dv != e) {
            return false;
        }
    }
    if (!have) dv.assign(d, 0);
    if (degvec) *degvec = dv;
    return true;
}

int GElement::total_degree() const {
    int deg = -1;
    for (int i = 0; i < d; ++i)
        if (!linear[i].is_zero()) {
            if (deg != -1 && deg != 1)
                throw std::logic_error("GElement: inhomogeneous element has no degree");
            deg = 1;
        }
    for (const auto& [m, c] : square.terms()) {
        (void)c;
        int t = m.total_degree();
        if (deg != -1 && deg != t)
            throw std::logic_error("GElement: inhomogeneous element has no degree");
        deg = t;
    }
    return deg == -1 ? 0 : deg;
}

GElement& GElement::operator+=(const GElement& o) {
    if (d != o.d) throw std::invalid_argument("GElement: dimension mismatch in sum");
    for (int i = 0; i < d; ++i) linear[i] += o.linear[i];
    square += o.square;
    return *this;
}

GElement& GElement::operator-=(const GElement& o) {
    if (d != o.d) throw std::invalid_argument("GElement: dimension mismatch in difference");
    for (int i = 0; i < d; ++i) linear[i] -= o.linear[i];
    square -= o.square;
    return *this;
}

GElement GElement::operator-() const {
    GElement r(d);
    for (int i = 0; i < d; ++i) r.linear[i] = -linear[i];
    r.square = -square;
    return r;
}

GElement& GElement::operator*=(const Rational& c) {
    for (auto& v : linear) v *= c;
    square *= c;
    return *this;
}

std::string GElement::str() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < d; ++i) {
        if (linear[i].is_zero()) continue;
        if (any) os << " + ";
        if (linear[i] == Rational(1))
            os << "x" << (i + 1);
        else
            os << linear[i].str() << "*x" << (i + 1);
        any = true;
    }
    if (!square.is_zero()) {
        if (any) os << " + ";
        os << square.str();
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

GElement gmul(const GElement& a, const GElement& b) {
    if (a.d != b.d) throw std::invalid_argument("gmul: dimension mismatch");
    int d = a.d;
    GElement r(d);
    // linear x linear:  x_i * x_j = y_i z_j
    for (int i = 0; i < d; ++i) {
        if (a.linear[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b.linear[j].is_zero()) continue;
            Monomial m(d);
            m.yexp[i] += 1;
            m.zexp[j] += 1;
            r.square.add_term(m, a.linear[i] * b.linear[j]);
        }
    }
    // linear x product:  x_i * u = y_i u
    for (int i = 0; i < d; ++i) {
        if (a.linear[i].is_zero()) continue;
        r.square += a.linear[i] * (Poly::var_y(i, d) * b.square);
    }
    // product x linear:  u * x_j = u z_j
    for (int j = 0; j < d; ++j) {
        if (b.linear[j].is_zero()) continue;
        r.square += b.linear[j] * (a.square * Poly::var_z(j, d));
    }
    // product x product: plain commutative product
    r.square += a.square * b.square;
    return r;
}

GElement delta_ij(const GElement& a, int i, int j) {
    if (i < 0 || i >= a.d || j < 0 || j >= a.d)
        throw std::invalid_argument("delta_ij: index out of range");
    GElement r(a.d);
    r.linear[j] = a.linear[i];
    r.square = derive(a.square, i, Poly::var_y(j, a.d), Poly::var_z(j, a.d));
    return r;
}

GElement delta_i_u(const GElement& a, int i, const Poly& u) {
    if (i < 0 || i >= a.d)
        throw std::invalid_argument("delta_i_u: index out of range");
    if (u.dim() != a.d)
        throw std::invalid_argument("delta_i_u: dimension mismatch");
    for (const auto& [m, c] : u.terms()) {
        (void)c;
        if (!m.is_product_monomial())
            throw std::invalid_argument("delta_i_u: image must be a product-part polynomial");
    }
    GElement r(a.d);
    r.square = a.linear[i] * u + derive(a.square, i, u, u);
    return r;
}

GElement substitute_product(const GElement& a, int i, int j, int k) {
    if (i < 0 || i >= a.d || j < 0 || j >= a.d || k < 0 || k >= a.d)
        throw std::invalid_argument("substitute_product: index out of range");
    Monomial prod(a.d);
    prod.yexp[j] += 1;
    prod.zexp[k] += 1;
    Poly u = Poly::term(prod, Rational(1));
    std::vector<std::pair<Poly, Poly>> images;
    images.reserve(a.d);
    for (int v = 0; v < a.d; ++v) {
        if (v == i)
            images.emplace_back(u, u);
        else
            images.emplace_back(Poly::var_y(v, a.d), Poly::var_z(v, a.d));
    }
    GElement r(a.d);
    r.linear = a.linear;
    r.linear[i] = Rational(0);
    r.square = substitute(a.square, images);
    r.square += a.linear[i] * u;
    return r;
}

GElement polarize(const GElement& a, int i, int j) {
    if (i < 0 || i >= a.d || j < 0 || j >= a.d || i == j)
        throw std::invalid_argument("polarize: bad variable indices");
    std::vector<std::pair<Poly, Poly>> images;
    images.reserve(a.d);
    for (int v = 0; v < a.d; ++v) {
        Poly yi = Poly::var_y(v, a.d);
        Poly zi = Poly::var_z(v, a.d);
        if (v == i) {
            yi += Poly::var_y(j, a.d);
            zi += Poly::var_z(j, a.d);
        }
        images.emplace_back(std::move(yi), std::move(zi));
    }
    GElement r(a.d);
    r.linear = a.linear;
    r.linear[j] += a.linear[i];
    r.square = substitute(a.square, images);
    return r;
}

GElement multilinearize(const GElement& a) {
    std::vector<int> dv;
    if (!a.is_multihomogeneous(&dv))
        throw std::invalid_argument("multilinearize: element is not multihomogeneous");
    int n = 0;
    for (int k : dv) n += k;
    if (n == 0) return GElement(0);
    // Fresh indices are handed out block by block in increasing original
    // variable order.
    std::vector<std::vector<int>> block(a.d);
    int next = 0;
    for (int i = 0; i < a.d; ++i)
        for (int k = 0; k < dv[i]; ++k) block[i].push_back(next++);
    GElement r(n);
    for (int i = 0; i < a.d; ++i) {
        if (a.linear[i].is_zero()) continue;
        // Only possible for degree-1 elements: the block is a single index.
        r.linear[block[i][0]] += a.linear[i];
    }
    if (!a.square.is_zero()) {
        std::vector<std::pair<Poly, Poly>> images;
        images.reserve(a.d);
        for (int i = 0; i < a.d; ++i) {
            Poly ys(n), zs(n);
            for (int b : block[i]) {
                ys += Poly::var_y(b, n);
                zs += Poly::var_z(b, n);
            }
            images.emplace_back(std::move(ys), std::move(zs));
        }
        Poly full = substitute(a.square, images);
        r.square = multihomogeneous_component(full, std::vector<int>(n, 1));
    }
    return r;
}

Rational witness_eval(const GElement& a) {
    Rational s(0);
    for (const auto& c : a.linear) s += c;
    for (const auto& [m, c] : a.square.terms()) {
        (void)m;
        s += c;
    }
    return s;
}

Target Target::variable(int idx) {
    Target t;
    t.is_var = true;
    t.var = idx;
    return t;
}

Target Target::square(Poly p) {
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        if (!m.is_product_monomial())
            throw std::invalid_argument("Target: square target must be a product-part polynomial");
    }
    Target t;
    t.is_var = false;
    t.square_part = std::move(p);
    return t;
}

std::vector<int> Target::multidegree(int dout) const {
    std::vector<int> dv(dout, 0);
    if (is_var) {
        dv.at(var) = 1;
        return dv;
    }
    std::vector<int> first;
    bool have = false;
    for (const auto& [m, c] : square_part.terms()) {
        (void)c;
        if (!have) {
            first = m.multidegree();
            have = true;
        } else if (first != m.multidegree()) {
            throw std::invalid_argument("Target: square target must be multihomogeneous");
        }
    }
    if (!have) throw std::invalid_argument("Target: zero target has no degree");
    for (int i = 0; i < dout; ++i) dv[i] = first[i];
    return dv;
}

GElement eval_multilinear(const GElement& ml, const std::vector<Target>& targets, int dout) {
    if (static_cast<int>(targets.size()) != ml.d)
        throw std::invalid_argument("eval_multilinear: one target per slot required");
    for (const auto& t : targets) {
        if (t.is_var && (t.var < 0 || t.var >= dout))
            throw std::invalid_argument("eval_multilinear: target variable out of range");
        if (!t.is_var && t.square_part.dim() != dout)
            throw std::invalid_argument("eval_multilinear: target dimension mismatch");
    }
    GElement r(dout);
    for (int i = 0; i < ml.d; ++i) {
        if (ml.linear[i].is_zero()) continue;
        if (targets[i].is_var)
            r.linear[targets[i].var] += ml.linear[i];
        else
            r.square += ml.linear[i] * targets[i].square_part;
    }
    for (const auto& [m, c] : ml.square.terms()) {
        Poly acc = Poly::term(Monomial(dout), c);
        for (int i = 0; i < ml.d; ++i) {
            if (m.yexp[i] + m.zexp[i] != 1)
                throw std::invalid_argument("eval_multilinear: element is not multilinear");
            const Target& t = targets[i];
            Poly img(dout);
            if (m.yexp[i] == 1)
                img = t.is_var ? Poly::var_y(t.var, dout) : t.square_part;
            else
                img = t.is_var ? Poly::var_z(t.var, dout) : t.square_part;
            acc = acc * img;
        }
        r.square += acc;
    }
    return r;
}

} // namespace bicomm
