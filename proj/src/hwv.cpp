#include "bicomm/hwv.hpp"

#include <sstream>
#include <stdexcept>

namespace bicomm {

Partition::Partition(int a, int b) : l1(a), l2(b) {
    if (l1 < 1 || l2 < 0 || l1 < l2)
        throw std::invalid_argument("Partition: parts must satisfy l1 >= l2 >= 0 and l1 >= 1");
}

Partition Partition::parse(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    try {
        if (comma == std::string::npos) {
            std::size_t used = 0;
            int a = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument("trailing junk");
            return Partition(a);
        }
        std::size_t used = 0;
        int a = std::stoi(t.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("trailing junk");
        std::string rest = t.substr(comma + 1);
        int b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing junk");
        return Partition(a, b);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Partition: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Partition: value out of range in '" + s + "'");
    }
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(" << l1;
    if (l2 > 0) os << "," << l2;
    os << ")";
    return os.str();
}

std::vector<Partition> two_row_partitions(int n) {
    if (n < 1) throw std::invalid_argument("two_row_partitions: n must be positive");
    std::vector<Partition> out;
    for (int l2 = 0; l2 <= n / 2; ++l2) out.emplace_back(n - l2, l2);
    return out;
}

int free_multiplicity(const Partition& lambda) {
    if (lambda.l2 == 0) return lambda.l1 == 1 ? 1 : lambda.l1 - 1;
    return lambda.l1 - lambda.l2 + 1;
}

long long sn_irrep_dim(const Partition& lambda) {
    mpz_class nf, af, bf;
    mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(lambda.n()));
    mpz_fac_ui(af.get_mpz_t(), static_cast<unsigned long>(lambda.l1 + 1));
    mpz_fac_ui(bf.get_mpz_t(), static_cast<unsigned long>(lambda.l2));
    mpz_class num = nf * (lambda.l1 - lambda.l2 + 1);
    mpz_class den = af * bf;
    mpz_class q = num / den;
    if (q * den != num)
        throw std::logic_error("sn_irrep_dim: non-integral result");
    if (!q.fits_slong_p())
        throw std::overflow_error("sn_irrep_dim: result does not fit");
    return q.get_si();
}

std::vector<Poly> hwv_basis(const Partition& lambda) {
    if (lambda.n() < 2)
        throw std::invalid_argument("hwv_basis: defined for shapes of degree >= 2");
    std::vector<Poly> basis;
    const int d = 2;
    if (lambda.one_row()) {
        int n = lambda.l1;
        for (int j = 1; j <= n - 1; ++j) {
            Monomial m(d);
            m.yexp[0] = j;
            m.zexp[0] = n - j;
            basis.push_back(Poly::term(m, Rational(1)));
        }
        return basis;
    }
    // (y1 z2 - y2 z1)^l2
    Poly det(d);
    {
        Monomial a(d), b(d);
        a.yexp[0] = 1;
        a.zexp[1] = 1;
        b.yexp[1] = 1;
        b.zexp[0] = 1;
        det = Poly::term(a, Rational(1)) - Poly::term(b, Rational(1));
    }
    Poly detpow = Poly::term(Monomial(d), Rational(1));
    for (int k = 0; k < lambda.l2; ++k) detpow = detpow * det;
    for (int j = 0; j <= lambda.l1 - lambda.l2; ++j) {
        Monomial m(d);
        m.yexp[0] = j;
        m.zexp[0] = lambda.l1 - lambda.l2 - j;
        basis.push_back(Poly::term(m, Rational(1)) * detpow);
    }
    return basis;
}

bool is_hwv(const Poly& p) {
    for (int i = 1; i < p.dim(); ++i)
        for (int j = 0; j < i; ++j)
            if (!derive(p, i, Poly::var_y(j, p.dim()), Poly::var_z(j, p.dim())).is_zero())
                return false;
    return true;
}

bool is_hwv(const GElement& a) {
    for (int i = 1; i < a.d; ++i)
        for (int j = 0; j < i; ++j)
            if (!delta_ij(a, i, j).is_zero()) return false;
    return true;
}

std::vector<Poly> hwv_subspace(const std::vector<Poly>& ps, const Partition& lambda) {
    std::vector<Poly> result;
    if (ps.empty()) return result;
    const int d = 2;
    std::vector<int> want{lambda.l1, lambda.l2};
    RowSpan span(d);
    for (const auto& p : ps) {
        if (p.dim() != d)
            throw std::invalid_argument("hwv_subspace: expected two-variable polynomials");
        std::vector<int> dv;
        if (!p.is_multihomogeneous(&dv) || (!p.is_zero() && dv != want))
            throw std::invalid_argument("hwv_subspace: input outside the requested component");
        span.insert(p);
    }
    const auto& rows = span.rows();
    std::vector<Poly> images;
    images.reserve(rows.size());
    for (const auto& r : rows)
        images.push_back(derive(r, 1, Poly::var_y(0, d), Poly::var_z(0, d)));
    RowSpan out(d);
    for (const auto& combo : kernel_combinations(images)) {
        Poly v(d);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!combo[i].is_zero()) v += combo[i] * rows[i];
        out.insert(v);
    }
    return out.rows();
}

std::optional<std::vector<Rational>> hwv_coordinates(const Poly& p, const Partition& lambda) {
    return coordinates(p, hwv_basis(lambda));
}

} // namespace bicomm
