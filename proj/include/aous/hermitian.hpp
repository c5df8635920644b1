// Complex Hermitian matrices, eigendecomposition (cyclic Jacobi with complex
// rotations), functional calculus, norms and the PSD cone order. Everything
// else in the library is built on top of this file.
#ifndef AOUS_HERMITIAN_HPP
#define AOUS_HERMITIAN_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aous {

using Complex = std::complex<double>;

/// Absolute/relative tolerances shared by every approximate predicate.
struct ToleranceProfile {
    double atol = 1e-9;
    double rtol = 1e-9;
    double eig_tol = 1e-11;
    double psd_slack = 1e-8;

    void validate() const;

    // Gate for residual comparisons: absolute tolerance scaled by the
    // magnitude of the data (never below atol itself).
    double gate(double scale) const { return atol * (scale > 1.0 ? scale : 1.0); }
    double psd_gate(double scale) const { return psd_slack * (scale > 1.0 ? scale : 1.0); }
};

/// Dense complex square matrix. Used for non-Hermitian intermediates
/// (products, commutators) and as the eigenvector basis carrier.
struct ComplexDense {
    std::size_t n = 0;
    std::vector<Complex> a;  // row-major

    ComplexDense() = default;
    explicit ComplexDense(std::size_t dim) : n(dim), a(dim * dim, Complex{0.0, 0.0}) {}

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static ComplexDense identity(std::size_t dim);
    ComplexDense adjoint() const;
    double frobenius() const;
};

ComplexDense mul(const ComplexDense& x, const ComplexDense& y);

class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Complex{0.0, 0.0}) {}

    // Parses external data: rejects non-finite entries and inputs whose
    // asymmetry residual max|a_ij - conj(a_ji)| exceeds 1e-6, then stores
    // the exact symmetrization (H + H*)/2.
    static HermitianMatrix from_entries(std::size_t dim, const std::vector<Complex>& row_major);

    // Symmetrizes unconditionally; for internally computed matrices whose
    // asymmetry is rounding noise (e.g. U f(D) U*, p v p).
    static HermitianMatrix symmetrized(std::size_t dim, const std::vector<Complex>& row_major);

    static HermitianMatrix identity(std::size_t dim);
    static HermitianMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const noexcept { return dim_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    const std::vector<Complex>& entries() const noexcept { return a_; }
    ComplexDense dense() const;

    double frobenius() const;
    double trace() const;
    bool is_zero(double tol) const;

    HermitianMatrix& operator+=(const HermitianMatrix& rhs);
    HermitianMatrix& operator-=(const HermitianMatrix& rhs);
    HermitianMatrix& operator*=(double k);

    friend HermitianMatrix operator+(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs += rhs; }
    friend HermitianMatrix operator-(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs -= rhs; }
    friend HermitianMatrix operator*(double k, HermitianMatrix m) { return m *= k; }
    friend HermitianMatrix operator-(HermitianMatrix m) { return m *= -1.0; }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;

    void enforce_hermitian();
};

void require_same_dim(const HermitianMatrix& x, const HermitianMatrix& y);

/// Thrown when the Jacobi sweep cap is reached before the off-diagonal mass
/// falls under the convergence threshold.
struct EigensolverError : std::runtime_error {
    double offdiag_residual;
    EigensolverError(const std::string& what, double residual)
        : std::runtime_error(what), offdiag_residual(residual) {}
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexDense basis;               // columns are the eigenvectors

    // U diag(f(lambda)) U*, symmetrized.
    HermitianMatrix assemble(const std::function<double(double)>& f) const;
    // U diag(values) U*, symmetrized.
    HermitianMatrix assemble_values(const std::vector<double>& values) const;
    HermitianMatrix reconstruct() const;
    // Projection onto the eigenvectors selected by `keep`.
    HermitianMatrix projection(const std::function<bool(double)>& keep) const;
};

EigenDecomposition eigh(const HermitianMatrix& h, const ToleranceProfile& tol = {});

// U diag(f(lambda)) U*. Throws std::domain_error if f is non-finite at an
// eigenvalue of h.
HermitianMatrix apply_function(const HermitianMatrix& h, const std::function<double(double)>& f,
                               const ToleranceProfile& tol = {});

enum class NormKind { Operator, Trace, Frobenius };

double norm(const HermitianMatrix& h, NormKind kind, const ToleranceProfile& tol = {});
inline double operator_norm(const HermitianMatrix& h, const ToleranceProfile& tol = {}) {
    return norm(h, NormKind::Operator, tol);
}
inline double trace_norm(const HermitianMatrix& h, const ToleranceProfile& tol = {}) {
    return norm(h, NormKind::Trace, tol);
}

// Operator norm (largest singular value) of a general complex matrix.
double operator_norm(const ComplexDense& x, const ToleranceProfile& tol = {});

struct PsdVerdict {
    bool psd = false;
    double residual = 0.0;  // max(0, -lambda_min)
};

PsdVerdict is_psd(const HermitianMatrix& h, const ToleranceProfile& tol = {});

/// Cone order: a <= b iff b - a is PSD (within psd_slack).
bool leq(const HermitianMatrix& a, const HermitianMatrix& b, const ToleranceProfile& tol = {});

ComplexDense mul(const HermitianMatrix& x, const HermitianMatrix& y);

// p v p, symmetrized.
HermitianMatrix compress(const HermitianMatrix& p, const HermitianMatrix& v);

// ||xy - yx||_op
double commutator_norm(const HermitianMatrix& x, const HermitianMatrix& y,
                       const ToleranceProfile& tol = {});

// ||xy||_op
double product_norm(const HermitianMatrix& x, const HermitianMatrix& y,
                    const ToleranceProfile& tol = {});

}  // namespace aous

#endif
