#include "pyrolace/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "pyrolace/errors.hpp"

namespace pyrolace {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coefficients_(std::move(ascending)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::string> IntPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coefficients_.size());
  for (const BigInt& c : coefficients_) out.push_back(c.str());
  return out;
}

std::string IntPolynomial::pretty(const std::string& var) const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw PreconditionError("product factor is empty");
  const ProductVertexMap map{g.order(), h.order()};
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (auto [v1, v2] : h.edges()) edges.emplace_back(map.index(u, v1), map.index(u, v2));
  for (std::size_t v = 0; v < h.order(); ++v)
    for (auto [u1, u2] : g.edges()) edges.emplace_back(map.index(u1, v), map.index(u2, v));
  return {Graph(g.order() * h.order(), edges), map};
}

ProductGraph strong_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw PreconditionError("product factor is empty");
  ProductGraph product = cartesian_product(g, h);
  const ProductVertexMap map = product.map;
  std::vector<Edge> edges = product.graph.edges();
  for (auto [u1, u2] : g.edges()) {
    for (auto [v1, v2] : h.edges()) {
      edges.emplace_back(map.index(u1, v1), map.index(u2, v2));
      edges.emplace_back(map.index(u1, v2), map.index(u2, v1));
    }
  }
  return {Graph(g.order() * h.order(), edges), map};
}

VertexLabeling product_labeling(const VertexLabeling& g, const VertexLabeling& h) {
  VertexLabeling out;
  for (const auto& a : g.labels())
    for (const auto& b : h.labels()) out.add("(" + a + "," + b + ")");
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

bool strong_product_matrix_identity(const Graph& g, const Graph& h) {
  const IntMatrix lhs =
      kronecker(adjacency_matrix(g) + IntMatrix::identity(g.order()),
                adjacency_matrix(h) + IntMatrix::identity(h.order())) -
      IntMatrix::identity(g.order() * h.order());
  if (g.order() == 0 || h.order() == 0) return lhs.rows() == 0;
  return lhs == adjacency_matrix(strong_product(g, h).graph);
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  // Coefficients of det(xI - A_r) for the leading r x r block, highest
  // degree first. Each step multiplies by a lower-triangular Toeplitz matrix
  // whose first column is (1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C).
  std::vector<BigInt> p{1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<BigInt> column(r + 2);
    column[0] = 1;
    column[1] = -BigInt(m(r, r));
    std::vector<BigInt> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += BigInt(m(r, i)) * v[i];
      column[k + 2] = -dot;
      std::vector<BigInt> next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (m(i, j) != 0) next[i] += BigInt(m(i, j)) * v[j];
      v = std::move(next);
    }
    std::vector<BigInt> q(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += column[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

IntPolynomial char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

bool are_cospectral(const Graph& g, const Graph& h) {
  return g.order() == h.order() && char_poly(g) == char_poly(h);
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol,
                                       int max_sweeps) {
  if (a.size() != n * n) throw PreconditionError("matrix storage does not match n*n");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  bool converged = off_norm() < tol;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
    converged = off_norm() < tol;
  }
  if (!converged)
    throw SolverError("Jacobi iteration did not converge in " + std::to_string(max_sweeps) +
                      " sweeps");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectrumApprox spectrum_approx(const Graph& g, double tol, int max_sweeps) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (auto [u, v] : g.edges()) {
    a[u * n + v] = 1.0;
    a[v * n + u] = 1.0;
  }
  return {jacobi_eigenvalues(std::move(a), n, tol, max_sweeps)};
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::vector<double> strong_product_spectrum_prediction(const SpectrumApprox& g,
                                                       const SpectrumApprox& h) {
  std::vector<double> out;
  out.reserve(g.eigenvalues.size() * h.eigenvalues.size());
  for (double l : g.eigenvalues)
    for (double m : h.eigenvalues) out.push_back((l + 1.0) * (m + 1.0) - 1.0);
  std::sort(out.begin(), out.end());
  return out;
}

bool strong_product_spectrum_formula(const Graph& g, const Graph& h, double tol) {
  const auto predicted = strong_product_spectrum_prediction(spectrum_approx(g), spectrum_approx(h));
  return spectra_match(predicted, spectrum_approx(strong_product(g, h).graph).eigenvalues, tol);
}

}  // namespace pyrolace
