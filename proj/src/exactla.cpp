#include "spinconf/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinconf::exactla {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long factorial(long n) {
    long r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero ExactScalar");
    Rational n2 = b.re * b.re + b.im * b.im;
    return ExactScalar(Rational((a.re * b.re + a.im * b.im) / n2),
                       Rational((a.im * b.re - a.re * b.im) / n2));
}

std::string ExactScalar::str() const {
    if (sgn(im) == 0) return re.get_str();
    Rational abs_im = abs(im);
    std::ostringstream os;
    os << re.get_str() << (sgn(im) < 0 ? "-" : "+") << abs_im.get_str() << "i";
    return os.str();
}

ExactMatrix ExactMatrix::identity(int dim) {
    ExactMatrix m(dim);
    for (int k = 0; k < dim; ++k) m.at(k, k) = ExactScalar(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

bool ExactMatrix::is_identity() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (!(at(r, c) == (r == c ? ExactScalar(1) : ExactScalar(0)))) return false;
    return true;
}

ExactScalar ExactMatrix::trace() const {
    ExactScalar t;
    for (int k = 0; k < dim_; ++k) t += at(k, k);
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m.at(c, r) = at(r, c);
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    const int n = a.dim_;
    ExactMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const ExactScalar& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                const ExactScalar& bkc = b.at(k, c);
                if (bkc.is_zero()) continue;
                out.at(r, c) += ark * bkc;
            }
        }
    return out;
}

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m) {
    ExactMatrix out(m.dim_);
    for (size_t k = 0; k < m.a_.size(); ++k)
        if (!m.a_[k].is_zero()) out.a_[k] = s * m.a_[k];
    return out;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    ExactVector out(dim_);
    for (int c = 0; c < dim_; ++c) {
        if (v[c].is_zero()) continue;
        for (int r = 0; r < dim_; ++r) {
            const ExactScalar& m = at(r, c);
            if (!m.is_zero()) out[r] += m * v[c];
        }
    }
    return out;
}

ExactScalar ExactMatrix::scalar_value() const {
    ExactScalar c = at(0, 0);
    for (int r = 0; r < dim_; ++r)
        for (int q = 0; q < dim_; ++q)
            if (!(at(r, q) == (r == q ? c : ExactScalar(0))))
                throw std::domain_error("matrix is not a scalar multiple of the identity");
    return c;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    ExactMatrix out(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca) {
            const ExactScalar& v = a.at(ra, ca);
            if (v.is_zero()) continue;
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb) {
                    const ExactScalar& w = b.at(rb, cb);
                    if (!w.is_zero()) out.at(ra * nb + rb, ca * nb + cb) = v * w;
                }
        }
    return out;
}

ExactPolynomial::ExactPolynomial(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactPolynomial ExactPolynomial::from_roots(const std::vector<ExactScalar>& roots) {
    std::vector<ExactScalar> c{ExactScalar(1)};
    for (const auto& r : roots) {
        std::vector<ExactScalar> next(c.size() + 1);
        for (size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return ExactPolynomial(std::move(c));
}

ExactScalar ExactPolynomial::eval(const ExactScalar& x) const {
    ExactScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (c_.size() <= 1) return ExactPolynomial();
    std::vector<ExactScalar> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = ExactScalar(static_cast<long>(k)) * c_[k];
    return ExactPolynomial(std::move(d));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.degree() < 0 || b.degree() < 0) return ExactPolynomial();
    std::vector<ExactScalar> c(a.c_.size() + b.c_.size() - 1);
    for (size_t j = 0; j < a.c_.size(); ++j)
        for (size_t k = 0; k < b.c_.size(); ++k) c[j + k] += a.c_[j] * b.c_[k];
    return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<ExactScalar> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] -= b.c_[k];
    }
    return ExactPolynomial(std::move(c));
}

std::string ExactPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << "(" << c_[k].str() << ")";
        if (k > 0) os << "x^" << k;
    }
    return os.str();
}

ExactPolynomial minimal_polynomial(const ExactMatrix& m) {
    const int n = m.dim();
    RowSpace space(n * n);
    std::vector<ExactVector> powers;  // flattened 1, m, m^2, ...
    ExactMatrix p = ExactMatrix::identity(n);
    for (int deg = 0; deg <= n; ++deg) {
        ExactVector flat(static_cast<size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) flat[static_cast<size_t>(r) * n + c] = p.at(r, c);
        if (!space.insert(flat)) {
            // m^deg depends on lower powers: coefficients give the monic minimal polynomial
            LinearSolve ls = solve_columns(powers, flat);
            std::vector<ExactScalar> coeffs(deg + 1);
            for (int k = 0; k < deg; ++k) coeffs[k] = -ls.particular[k];
            coeffs[deg] = ExactScalar(1);
            return ExactPolynomial(std::move(coeffs));
        }
        powers.push_back(flat);
        p = p * m;
    }
    throw std::logic_error("minimal_polynomial: no dependence up to dim (impossible)");
}

ExactMatrix eval_poly(const ExactPolynomial& p, const ExactMatrix& m) {
    ExactMatrix acc(m.dim());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        for (int d = 0; d < m.dim(); ++d) acc.at(d, d) += p.coeff(k);
    }
    return acc;
}

ExactPolynomial synthetic_divide(const ExactPolynomial& p, const ExactScalar& root) {
    if (!p.eval(root).is_zero())
        throw std::invalid_argument("synthetic_divide: " + root.str() + " is not a root");
    const int d = p.degree();
    std::vector<ExactScalar> q(d);
    ExactScalar carry = p.coeff(d);
    for (int k = d - 1; k >= 0; --k) {
        q[k] = carry;
        carry = p.coeff(k) + root * carry;
    }
    return ExactPolynomial(std::move(q));
}

namespace {

struct Gint {  // Gaussian integer
    mpz_class re, im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

Gint gmul(const Gint& a, const Gint& b) {
    return {mpz_class(a.re * b.re - a.im * b.im), mpz_class(a.re * b.im + a.im * b.re)};
}

Gint gsub(const Gint& a, const Gint& b) { return {mpz_class(a.re - b.re), mpz_class(a.im - b.im)}; }

// exact division a/b in Z[i]; Bareiss guarantees divisibility
Gint gdivexact(const Gint& a, const Gint& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    Gint out;
    mpz_divexact(out.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return out;
}

}  // namespace

int rank(const ExactMatrix& m) {
    const int n = m.dim();
    if (n == 0) return 0;
    // clear denominators per row (row scaling preserves rank)
    std::vector<std::vector<Gint>> a(n, std::vector<Gint>(n));
    for (int r = 0; r < n; ++r) {
        mpz_class l(1);
        for (int c = 0; c < n; ++c) {
            l = lcm(l, m.at(r, c).re.get_den());
            l = lcm(l, m.at(r, c).im.get_den());
        }
        for (int c = 0; c < n; ++c) {
            const ExactScalar& s = m.at(r, c);
            a[r][c] = {mpz_class(s.re.get_num() * (l / s.re.get_den())),
                       mpz_class(s.im.get_num() * (l / s.im.get_den()))};
        }
    }
    Gint prev{mpz_class(1), mpz_class(0)};
    int rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int piv = -1;
        for (int r = rk; r < n; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rk], a[piv]);
        for (int r = rk + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                a[r][c] = gdivexact(gsub(gmul(a[rk][col], a[r][c]), gmul(a[r][col], a[rk][c])), prev);
            a[r][col] = {mpz_class(0), mpz_class(0)};
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

Rref rref(std::vector<ExactVector> rows) {
    Rref out;
    if (rows.empty()) return out;
    const int ncols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int k = r; k < static_cast<int>(rows.size()); ++k)
            if (!rows[k][c].is_zero()) { piv = k; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        ExactScalar inv = ExactScalar(1) / rows[r][c];
        for (int j = c; j < ncols; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] = inv * rows[r][j];
        for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
            if (k == r || rows[k][c].is_zero()) continue;
            ExactScalar f = rows[k][c];
            for (int j = c; j < ncols; ++j)
                if (!rows[r][j].is_zero()) rows[k][j] -= f * rows[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

bool RowSpace::insert(ExactVector v) {
    // reduce against existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
        const ExactScalar& coef = v[pivots_[k]];
        if (coef.is_zero()) continue;
        ExactScalar f = coef;
        for (int j = 0; j < ncols_; ++j)
            if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
    int piv = -1;
    for (int j = 0; j < ncols_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    ExactScalar inv = ExactScalar(1) / v[piv];
    for (int j = piv; j < ncols_; ++j)
        if (!v[j].is_zero()) v[j] = inv * v[j];
    // back-substitute to keep rows fully reduced
    for (size_t k = 0; k < rows_.size(); ++k) {
        ExactScalar f = rows_[k][piv];
        if (f.is_zero()) continue;
        for (int j = 0; j < ncols_; ++j)
            if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool RowSpace::contains(const ExactVector& v) const {
    ExactVector w = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
        const ExactScalar& coef = w[pivots_[k]];
        if (coef.is_zero()) continue;
        ExactScalar f = coef;
        for (int j = 0; j < ncols_; ++j)
            if (!rows_[k][j].is_zero()) w[j] -= f * rows_[k][j];
    }
    return std::all_of(w.begin(), w.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

ExactVector RowSpace::coordinates(const ExactVector& v) const {
    ExactVector w = v, coords(rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k) {
        ExactScalar f = w[pivots_[k]];
        coords[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j < ncols_; ++j)
            if (!rows_[k][j].is_zero()) w[j] -= f * rows_[k][j];
    }
    for (const auto& s : w)
        if (!s.is_zero()) throw std::domain_error("vector outside row space");
    return coords;
}

std::vector<ExactVector> kernel_basis(const std::vector<ExactVector>& rows, int ncols) {
    Rref rr = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<ExactVector> out;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        ExactVector v(ncols);
        v[free] = ExactScalar(1);
        for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = -rr.rows[k][free];
        out.push_back(std::move(v));
    }
    return out;
}

LinearSolve solve_columns(const std::vector<ExactVector>& columns, const ExactVector& target) {
    const int nrows = static_cast<int>(target.size());
    const int nc = static_cast<int>(columns.size());
    // augmented system rows: [columns | target] transposed into row echelon over rows
    std::vector<ExactVector> rows(nrows, ExactVector(nc + 1));
    for (int r = 0; r < nrows; ++r) {
        for (int c = 0; c < nc; ++c) rows[r][c] = columns[c][r];
        rows[r][nc] = target[r];
    }
    Rref rr = rref(std::move(rows));
    LinearSolve out;
    for (int c : rr.pivot_cols)
        if (c == nc) return out;  // pivot in the target column: inconsistent
    out.consistent = true;
    out.particular.assign(nc, ExactScalar());
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
        out.particular[rr.pivot_cols[k]] = rr.rows[k][nc];
    std::vector<bool> is_pivot(nc, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        ExactVector v(nc);
        v[free] = ExactScalar(1);
        for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = -rr.rows[k][free];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::pair<std::string, std::string> scalar_strings(const ExactScalar& s) {
    return {rational_str(s.re), rational_str(s.im)};
}

ExactScalar scalar_from_strings(const std::string& re, const std::string& im) {
    return ExactScalar(parse_rational(re), parse_rational(im));
}

}  // namespace spinconf::exactla
