#pragma once

#include <array>
#include <complex>
#include <initializer_list>

namespace naqcsim {

using Complex = std::complex<double>;

// Dense complex matrix of dimension 2 or 4, row-major, inline storage.
// Dimension 2 covers single-qubit operators, dimension 4 the joint pair.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) { return a_[static_cast<std::size_t>(row * dim_ + col)]; }
    const Complex& operator()(int row, int col) const {
        return a_[static_cast<std::size_t>(row * dim_ + col)];
    }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

    bool is_hermitian(double tol) const;
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;

private:
    int dim_;
    std::array<Complex, 16> a_{};
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

// Kronecker product of two 2x2 matrices, index convention (a,b) -> 2a+b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigendecomposition of a 2x2 Hermitian matrix, eigenvalues descending.
// eigenvectors[k] is the unit eigenvector for eigenvalues[k], phase fixed so the
// largest-magnitude component is real and non-negative. A (near-)degenerate
// matrix yields the computational basis.
struct Spectrum2 {
    std::array<double, 2> eigenvalues;
    std::array<std::array<Complex, 2>, 2> eigenvectors;
};

Spectrum2 eig_hermitian_2(const ComplexMatrix& h, double hermitian_tol = 1e-9);

// Principal square root of a 2x2 PSD matrix. Eigenvalues in [-1e-12, 0) are
// clipped to zero; anything more negative throws std::domain_error.
ComplexMatrix sqrt_psd_2(const ComplexMatrix& m);

// Von Neumann entropy in bits of a single-qubit state, clamped to [0, 1].
double von_neumann_entropy(const ComplexMatrix& rho);

// True when all eigenvalues of the Hermitian part of h are >= -tol.
// Dimension 2 uses the closed-form spectrum; dimension 4 uses a diagonally
// pivoted Cholesky elimination on h + tol*I so no 4x4 eigensolver is needed.
bool psd_within(const ComplexMatrix& h, double tol);

}  // namespace naqcsim
