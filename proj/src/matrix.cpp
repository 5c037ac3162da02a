#include "naqcsim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace naqcsim {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("matrix dimension must be 2 or 4");
}

double h2(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const int dim = static_cast<int>(rows.size());
    check_dim(dim);
    ComplexMatrix m(dim);
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("ragged matrix rows");
        int c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& v : a_) v *= scale;
    return *this;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m = std::max(m, std::abs((*this)(r, c)));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m = std::max(m, std::abs((*this)(r, c) - other(r, c)));
    return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < n; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = std::conj(m(c, r));
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex s = 0.0;
    for (int i = 0; i < m.dim(); ++i) s += m(i, i);
    return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron expects two 2x2 matrices");
    ComplexMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

Spectrum2 eig_hermitian_2(const ComplexMatrix& h, double hermitian_tol) {
    if (h.dim() != 2) throw std::invalid_argument("eig_hermitian_2 expects a 2x2 matrix");
    if (!h.is_hermitian(hermitian_tol)) throw std::invalid_argument("matrix is not Hermitian");

    const double a = h(0, 0).real();
    const double c = h(1, 1).real();
    const Complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));

    const double mean = 0.5 * (a + c);
    const double disc = std::hypot(0.5 * (a - c), std::abs(b));

    Spectrum2 s;
    s.eigenvalues = {mean + disc, mean - disc};
    s.eigenvectors = {{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(1.0)}}};

    const double scale = std::max({std::abs(a), std::abs(c), std::abs(b), 1.0});
    if (disc <= 1e-14 * scale) return s;  // degenerate, keep computational basis

    if (std::abs(b) <= 1e-15 * scale) {
        if (a < c) std::swap(s.eigenvectors[0], s.eigenvectors[1]);
        return s;
    }

    const double lam = s.eigenvalues[0];
    // Two algebraically equivalent null vectors of (h - lam); keep the better conditioned one.
    std::array<Complex, 2> v{b, Complex(lam - a)};
    std::array<Complex, 2> u{Complex(lam - c), std::conj(b)};
    if (std::norm(u[0]) + std::norm(u[1]) > std::norm(v[0]) + std::norm(v[1])) v = u;

    const double nrm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= nrm;
    v[1] /= nrm;

    auto fix_phase = [](std::array<Complex, 2>& w) {
        const int lead = std::abs(w[0]) >= std::abs(w[1]) ? 0 : 1;
        const double mag = std::abs(w[lead]);
        if (mag > 0.0) {
            const Complex phase = std::conj(w[lead]) / mag;
            w[0] *= phase;
            w[1] *= phase;
        }
    };

    fix_phase(v);
    std::array<Complex, 2> w{-std::conj(v[1]), std::conj(v[0])};  // exact orthogonal complement
    fix_phase(w);

    s.eigenvectors = {v, w};
    return s;
}

ComplexMatrix sqrt_psd_2(const ComplexMatrix& m) {
    const Spectrum2 s = eig_hermitian_2(m);
    double roots[2];
    for (int k = 0; k < 2; ++k) {
        double lam = s.eigenvalues[k];
        if (lam < -1e-12) throw std::domain_error("matrix has an eigenvalue below -1e-12");
        roots[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }
    ComplexMatrix out(2);
    for (int k = 0; k < 2; ++k) {
        const auto& v = s.eigenvectors[k];
        out(0, 0) += roots[k] * std::norm(v[0]);
        out(1, 1) += roots[k] * std::norm(v[1]);
        out(0, 1) += roots[k] * v[0] * std::conj(v[1]);
    }
    out(1, 0) = std::conj(out(0, 1));
    return out;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("von_neumann_entropy expects a 2x2 state");
    if (std::abs(trace(rho) - Complex(1.0)) > 1e-9)
        throw std::invalid_argument("state trace differs from 1");
    const Spectrum2 s = eig_hermitian_2(rho);
    if (s.eigenvalues[1] < -1e-12) throw std::invalid_argument("state is not positive semidefinite");
    const double p = std::clamp(s.eigenvalues[0], 0.0, 1.0);
    return std::clamp(h2(p), 0.0, 1.0);
}

bool psd_within(const ComplexMatrix& h, double tol) {
    const int n = h.dim();
    if (n == 2) {
        const Spectrum2 s = eig_hermitian_2(h, 1e-6);
        return s.eigenvalues[1] >= -tol;
    }

    // Work on the Hermitian part shifted by tol, then eliminate with the largest
    // remaining diagonal as pivot. All pivots positive proves PSD of the shifted
    // matrix; a vanishing pivot is fine only if the whole remaining block vanishes.
    Complex m[4][4];
    double scale = 1.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = 0.5 * (h(r, c) + std::conj(h(c, r)));
        m[r][r] += tol;
        scale = std::max(scale, std::abs(m[r][r]));
    }
    const double pivot_floor = 1e-13 * scale;

    bool active[4] = {true, true, true, true};
    for (int step = 0; step < n; ++step) {
        int p = -1;
        double best = -1.0;
        for (int i = 0; i < n; ++i)
            if (active[i] && m[i][i].real() > best) {
                best = m[i][i].real();
                p = i;
            }
        if (best <= pivot_floor) {
            double residual = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (active[i] && active[j]) residual = std::max(residual, std::abs(m[i][j]));
            return residual <= 1e-11 * scale;
        }
        active[p] = false;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!active[j]) continue;
                m[i][j] -= m[i][p] * m[p][j] / best;
            }
        }
    }
    return true;
}

}  // namespace naqcsim
