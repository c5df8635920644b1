#include "aous/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aous {

namespace {
constexpr double kAsymmetryLimit = 1e-6;
constexpr int kMaxSweeps = 100;

bool all_finite(const std::vector<Complex>& v) {
    for (const auto& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}
}  // namespace

void ToleranceProfile::validate() const {
    if (!(atol > 0.0) || !(rtol > 0.0) || !(eig_tol > 0.0) || !(psd_slack > 0.0))
        throw std::invalid_argument("tolerance profile: all fields must be strictly positive");
    if (atol > psd_slack)
        throw std::invalid_argument("tolerance profile: atol must not exceed psd_slack");
}

ComplexDense ComplexDense::identity(std::size_t dim) {
    ComplexDense m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexDense ComplexDense::adjoint() const {
    ComplexDense m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

double ComplexDense::frobenius() const {
    double s = 0.0;
    for (const auto& z : a) s += std::norm(z);
    return std::sqrt(s);
}

ComplexDense mul(const ComplexDense& x, const ComplexDense& y) {
    if (x.n != y.n) throw std::invalid_argument("dimension mismatch in matrix product");
    ComplexDense r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const Complex xik = x.at(i, k);
            if (xik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < x.n; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

void HermitianMatrix::enforce_hermitian() {
    for (std::size_t i = 0; i < dim_; ++i) {
        a_[i * dim_ + i] = Complex{a_[i * dim_ + i].real(), 0.0};
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const Complex avg = 0.5 * (a_[i * dim_ + j] + std::conj(a_[j * dim_ + i]));
            a_[i * dim_ + j] = avg;
            a_[j * dim_ + i] = std::conj(avg);
        }
    }
}

HermitianMatrix HermitianMatrix::from_entries(std::size_t dim, const std::vector<Complex>& row_major) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
    if (row_major.size() != dim * dim)
        throw std::invalid_argument("entry count does not match dimension");
    if (!all_finite(row_major))
        throw std::invalid_argument("matrix entries must be finite (no NaN/Inf)");
    double asym = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            asym = std::max(asym, std::abs(row_major[i * dim + j] - std::conj(row_major[j * dim + i])));
    if (asym > kAsymmetryLimit)
        throw std::invalid_argument("matrix is not Hermitian: asymmetry residual " +
                                    std::to_string(asym) + " exceeds 1e-6");
    return symmetrized(dim, row_major);
}

HermitianMatrix HermitianMatrix::symmetrized(std::size_t dim, const std::vector<Complex>& row_major) {
    if (row_major.size() != dim * dim)
        throw std::invalid_argument("entry count does not match dimension");
    if (!all_finite(row_major))
        throw std::invalid_argument("matrix entries must be finite (no NaN/Inf)");
    HermitianMatrix h(dim);
    h.a_ = row_major;
    h.enforce_hermitian();
    return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    HermitianMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i) h.a_[i * dim + i] = 1.0;
    return h;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    HermitianMatrix h(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) h.a_[i * d.size() + i] = d[i];
    return h;
}

ComplexDense HermitianMatrix::dense() const {
    ComplexDense m(dim_);
    m.a = a_;
    return m;
}

double HermitianMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double HermitianMatrix::trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += a_[i * dim_ + i].real();
    return s;
}

bool HermitianMatrix::is_zero(double tol) const {
    for (const auto& z : a_)
        if (std::abs(z) > tol) return false;
    return true;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double k) {
    for (auto& z : a_) z *= k;
    return *this;
}

void require_same_dim(const HermitianMatrix& x, const HermitianMatrix& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

HermitianMatrix EigenDecomposition::assemble(const std::function<double(double)>& f) const {
    const std::size_t n = basis.n;
    std::vector<double> fv(n);
    for (std::size_t k = 0; k < n; ++k) {
        fv[k] = f(eigenvalues[k]);
        if (!std::isfinite(fv[k]))
            throw std::domain_error("function undefined (non-finite) at eigenvalue " +
                                    std::to_string(eigenvalues[k]));
    }
    return assemble_values(fv);
}

HermitianMatrix EigenDecomposition::assemble_values(const std::vector<double>& values) const {
    const std::size_t n = basis.n;
    if (values.size() != n) throw std::invalid_argument("assemble_values: wrong value count");
    std::vector<Complex> out(n * n, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        if (values[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex uik = basis.at(i, k) * values[k];
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += uik * std::conj(basis.at(j, k));
        }
    }
    return HermitianMatrix::symmetrized(n, out);
}

HermitianMatrix EigenDecomposition::reconstruct() const {
    return assemble([](double t) { return t; });
}

HermitianMatrix EigenDecomposition::projection(const std::function<bool(double)>& keep) const {
    return assemble([&](double t) { return keep(t) ? 1.0 : 0.0; });
}

EigenDecomposition eigh(const HermitianMatrix& h, const ToleranceProfile& tol) {
    const std::size_t n = h.dim();
    if (n == 0) throw std::invalid_argument("eigh: empty matrix");

    ComplexDense a = h.dense();
    ComplexDense v = ComplexDense::identity(n);

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a.at(i, j));
        return std::sqrt(s);
    };

    const double scale = h.frobenius();
    const double threshold = tol.eig_tol * scale;
    bool converged = (n == 1) || scale == 0.0 || offdiag() <= threshold;

    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        const double elem_skip = threshold / static_cast<double>(n);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a.at(p, q);
                const double absb = std::abs(b);
                if (absb <= elem_skip) continue;

                // Unitary 2x2 rotation annihilating a[p][q]: classic Jacobi
                // angle on |b| combined with the phase of b.
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * absb);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c) * (b / absb);

                // columns: (col_p, col_q) <- (c col_p - conj(s) col_q, s col_p + c col_q)
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex xp = a.at(i, p), xq = a.at(i, q);
                    a.at(i, p) = c * xp - std::conj(s) * xq;
                    a.at(i, q) = s * xp + c * xq;
                }
                // rows: (row_p, row_q) <- (c row_p - s row_q, conj(s) row_p + c row_q)
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex xp = a.at(p, j), xq = a.at(q, j);
                    a.at(p, j) = c * xp - s * xq;
                    a.at(q, j) = std::conj(s) * xp + c * xq;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = Complex{a.at(p, p).real(), 0.0};
                a.at(q, q) = Complex{a.at(q, q).real(), 0.0};

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex xp = v.at(i, p), xq = v.at(i, q);
                    v.at(i, p) = c * xp - std::conj(s) * xq;
                    v.at(i, q) = s * xp + c * xq;
                }
            }
        }
        converged = offdiag() <= threshold;
    }

    if (!converged) {
        const double res = offdiag();
        throw EigensolverError("eigh: Jacobi failed to converge after " +
                                   std::to_string(kMaxSweeps) +
                                   " sweeps; off-diagonal residual " + std::to_string(res),
                               res);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a.at(i, i).real() < a.at(j, j).real(); });

    EigenDecomposition d;
    d.eigenvalues.resize(n);
    d.basis = ComplexDense(n);
    for (std::size_t k = 0; k < n; ++k) {
        d.eigenvalues[k] = a.at(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) d.basis.at(i, k) = v.at(i, order[k]);
    }
    return d;
}

HermitianMatrix apply_function(const HermitianMatrix& h, const std::function<double(double)>& f,
                               const ToleranceProfile& tol) {
    return eigh(h, tol).assemble(f);
}

double norm(const HermitianMatrix& h, NormKind kind, const ToleranceProfile& tol) {
    if (kind == NormKind::Frobenius) return h.frobenius();
    const auto d = eigh(h, tol);
    double s = 0.0;
    for (double lam : d.eigenvalues) {
        if (kind == NormKind::Operator)
            s = std::max(s, std::abs(lam));
        else
            s += std::abs(lam);
    }
    return s;
}

double operator_norm(const ComplexDense& x, const ToleranceProfile& tol) {
    // sqrt of the largest eigenvalue of x* x
    const ComplexDense g = mul(x.adjoint(), x);
    const auto d = eigh(HermitianMatrix::symmetrized(g.n, g.a), tol);
    const double top = d.eigenvalues.empty() ? 0.0 : d.eigenvalues.back();
    return std::sqrt(std::max(top, 0.0));
}

PsdVerdict is_psd(const HermitianMatrix& h, const ToleranceProfile& tol) {
    const auto d = eigh(h, tol);
    const double lo = d.eigenvalues.front();
    const double hi = std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
    PsdVerdict v;
    v.residual = std::max(0.0, -lo);
    v.psd = v.residual <= tol.psd_gate(hi);
    return v;
}

bool leq(const HermitianMatrix& a, const HermitianMatrix& b, const ToleranceProfile& tol) {
    require_same_dim(a, b);
    return is_psd(b - a, tol).psd;
}

ComplexDense mul(const HermitianMatrix& x, const HermitianMatrix& y) {
    require_same_dim(x, y);
    return mul(x.dense(), y.dense());
}

HermitianMatrix compress(const HermitianMatrix& p, const HermitianMatrix& v) {
    require_same_dim(p, v);
    const ComplexDense pvp = mul(mul(p.dense(), v.dense()), p.dense());
    return HermitianMatrix::symmetrized(p.dim(), pvp.a);
}

double commutator_norm(const HermitianMatrix& x, const HermitianMatrix& y, const ToleranceProfile& tol) {
    ComplexDense xy = mul(x, y);
    const ComplexDense yx = mul(y, x);
    for (std::size_t i = 0; i < xy.a.size(); ++i) xy.a[i] -= yx.a[i];
    return operator_norm(xy, tol);
}

double product_norm(const HermitianMatrix& x, const HermitianMatrix& y, const ToleranceProfile& tol) {
    return operator_norm(mul(x, y), tol);
}

}  // namespace aous
