#ifndef SPINCONF_EXACTLA_HPP
#define SPINCONF_EXACTLA_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace spinconf::exactla {

/// Exact rational scalar. GMP keeps the canonical form (positive
/// denominator, coprime with the numerator) after every operation.
using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);   // always "p/q"
long factorial(long n);

/// Gaussian rational a + b*i. The field underlying every algebraic check.
struct ExactScalar {
    Rational re, im;

    ExactScalar() : re(0), im(0) {}
    ExactScalar(long n) : re(n), im(0) {}
    ExactScalar(const Rational& r) : re(r), im(0) { re.canonicalize(); }
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }
    static ExactScalar of(long num, long den) { return ExactScalar(Rational(num, den)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    ExactScalar conj() const { return ExactScalar(re, Rational(-im)); }

    ExactScalar operator-() const { return ExactScalar(Rational(-re), Rational(-im)); }
    ExactScalar& operator+=(const ExactScalar& o) { re += o.re; im += o.im; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { re -= o.re; im -= o.im; return *this; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(Rational(a.re + b.re), Rational(a.im + b.im));
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(Rational(a.re - b.re), Rational(a.im - b.im));
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(Rational(a.re * b.re - a.im * b.im),
                           Rational(a.re * b.im + a.im * b.re));
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string str() const;
};

using ExactVector = std::vector<ExactScalar>;

/// Dense square matrix over ExactScalar.
class ExactMatrix {
  public:
    ExactMatrix() : dim_(0) {}
    explicit ExactMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static ExactMatrix identity(int dim);
    static ExactMatrix zero(int dim) { return ExactMatrix(dim); }

    int dim() const { return dim_; }
    ExactScalar& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const ExactScalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    ExactScalar trace() const;
    ExactMatrix transpose() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

    ExactVector apply(const ExactVector& v) const;

    /// If this is c*identity, returns c; throws otherwise.
    ExactScalar scalar_value() const;

  private:
    int dim_;
    std::vector<ExactScalar> a_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Monic-normalized polynomial over ExactScalar, coeffs[k] multiplying x^k.
/// Zero polynomial has empty coefficient list and degree() == -1.
class ExactPolynomial {
  public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<ExactScalar> coeffs);

    static ExactPolynomial from_roots(const std::vector<ExactScalar>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<ExactScalar>& coeffs() const { return c_; }
    const ExactScalar& coeff(int k) const { return c_[k]; }

    ExactScalar eval(const ExactScalar& x) const;
    ExactPolynomial derivative() const;

    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::string str() const;

  private:
    std::vector<ExactScalar> c_;
};

/// Least-degree monic p with p(m) = 0, found as the first linear dependence
/// among 1, m, m^2, ... under exact elimination.
ExactPolynomial minimal_polynomial(const ExactMatrix& m);

ExactMatrix eval_poly(const ExactPolynomial& p, const ExactMatrix& m);

/// Exact quotient p(x)/(x - root); rejects non-roots.
ExactPolynomial synthetic_divide(const ExactPolynomial& p, const ExactScalar& root);

/// Rank by fraction-free (Bareiss) elimination over Gaussian integers after
/// clearing denominators; no intermediate fraction growth.
int rank(const ExactMatrix& m);

// --- rectangular exact elimination utilities (shared by the construction
// and verification code; rows are vectors over ExactScalar) ---

struct Rref {
    std::vector<ExactVector> rows;   // reduced rows, pivot entries = 1
    std::vector<int> pivot_cols;
};

Rref rref(std::vector<ExactVector> rows);

/// Incrementally growing row space with exact membership tests.
class RowSpace {
  public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}
    int dim() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    /// Returns true if v enlarged the space.
    bool insert(ExactVector v);
    bool contains(const ExactVector& v) const;
    /// Coordinates of v in the stored (reduced) basis; throws if outside.
    ExactVector coordinates(const ExactVector& v) const;
    const std::vector<ExactVector>& basis() const { return rows_; }

  private:
    int ncols_;
    std::vector<ExactVector> rows_;
    std::vector<int> pivots_;
};

/// Basis of the right kernel of a rectangular matrix given by rows.
std::vector<ExactVector> kernel_basis(const std::vector<ExactVector>& rows, int ncols);

/// Exact solve of (columns)·x = target. Returns a particular solution and a
/// basis of the homogeneous solution space; consistent == false when the
/// target is outside the column span.
struct LinearSolve {
    bool consistent = false;
    ExactVector particular;
    std::vector<ExactVector> nullspace;
};
LinearSolve solve_columns(const std::vector<ExactVector>& columns, const ExactVector& target);

// --- serialization (JSON-friendly primitives; full JSON lives with the CLI) ---
std::pair<std::string, std::string> scalar_strings(const ExactScalar& s);
ExactScalar scalar_from_strings(const std::string& re, const std::string& im);

}  // namespace spinconf::exactla

#endif
