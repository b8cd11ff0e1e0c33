#ifndef DTA_SPD_HPP
#define DTA_SPD_HPP

#include <Eigen/Dense>
#include <stdexcept>

namespace dta {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct NonSpdError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Relative tolerances fixed for the whole project: symmetry within 1e-12,
// eigenvalues judged against 1e-10 of the largest.
inline constexpr double kSymTol = 1e-12;
inline constexpr double kEigTol = 1e-10;

bool is_symmetric(const Matrix& m, double rel_tol = kSymTol);

// Throws NonSpdError unless m is symmetric with eigenvalues > 0
// (or >= 0 when allow_semi). Returns the symmetrized matrix.
Matrix require_spd(const Matrix& m, bool allow_semi = false);

// True when the Cholesky factorization succeeds.
bool cholesky_ok(const Matrix& m);

// Symmetric square root via eigendecomposition: m = Q L Q^T,
// result = Q L^{1/2} Q^T.
Matrix sym_sqrt(const Matrix& m);

inline Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace dta

#endif
