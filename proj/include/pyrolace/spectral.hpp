#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pyrolace/graph.hpp"
#include "pyrolace/int_matrix.hpp"
#include "pyrolace/labeling.hpp"

namespace pyrolace {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficients in ascending degree order.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  BigInt evaluate(const BigInt& x) const;

  /// Decimal strings, ascending.
  std::vector<std::string> to_strings() const;
  /// e.g. "x^6 - 7x^4 - 4x^3 + 7x^2 + 4x - 1"
  std::string pretty(const std::string& var = "x") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;  // trailing zeros trimmed
};

/// Index of (u, v) in a product of G (order left) and H (order right) is
/// u * right + v, so the H coordinate varies fastest.
struct ProductVertexMap {
  std::size_t left = 0;
  std::size_t right = 0;

  std::size_t index(std::size_t u, std::size_t v) const { return u * right + v; }
  std::pair<std::size_t, std::size_t> pair(std::size_t index) const {
    return {index / right, index % right};
  }
};

struct ProductGraph {
  Graph graph;
  ProductVertexMap map;
};

ProductGraph cartesian_product(const Graph& g, const Graph& h);
ProductGraph strong_product(const Graph& g, const Graph& h);

/// Labels "(a,b)" for the product of two labeled graphs.
VertexLabeling product_labeling(const VertexLabeling& g, const VertexLabeling& h);

/// Block matrix with block (i, j) equal to a(i, j) * b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// ((A_G + I) kron (A_H + I)) - I equals the adjacency matrix of the strong
/// product under ProductVertexMap ordering.
bool strong_product_matrix_identity(const Graph& g, const Graph& h);

/// det(xI - M) by the division-free Berkowitz algorithm over arbitrary
/// precision integers. Throws PreconditionError for non-square input.
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly(const Graph& g);

/// Equal characteristic polynomials of the adjacency matrices.
bool are_cospectral(const Graph& g, const Graph& h);

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Eigenvalues of a symmetric matrix (row-major n*n) by cyclic Jacobi
/// rotations, sorted ascending. Iterates until the off-diagonal Frobenius
/// norm drops below tol; throws SolverError after max_sweeps sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol = kJacobiTolerance,
                                       int max_sweeps = kJacobiMaxSweeps);

struct SpectrumApprox {
  std::vector<double> eigenvalues;  // ascending, with multiplicity
};

SpectrumApprox spectrum_approx(const Graph& g, double tol = kJacobiTolerance,
                               int max_sweeps = kJacobiMaxSweeps);

/// Sorted lists of equal length whose entries differ by at most tol.
bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol);

/// {(l + 1)(m + 1) - 1 : l an eigenvalue of G, m of H}, sorted ascending.
std::vector<double> strong_product_spectrum_prediction(const SpectrumApprox& g,
                                                       const SpectrumApprox& h);

/// Compares the prediction above with the computed spectrum of G strong H.
bool strong_product_spectrum_formula(const Graph& g, const Graph& h, double tol = 1e-6);

}  // namespace pyrolace
