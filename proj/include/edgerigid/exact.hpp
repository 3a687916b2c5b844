#pragma once

// Dense arbitrary-precision integer matrices and polynomials.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace edgerigid {

using BigInt = mpz_class;

class Graph;

/// Square dense matrix of arbitrary-precision integers, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t order);

  static ExactMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }

  BigInt trace() const;
  bool is_symmetric() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<BigInt> data_;
};

ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs);

/// Product lhs * rhs. Zero entries of lhs are skipped, so sparse integer
/// matrices (Laplacians, adjacency matrices) on the left are cheap.
ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);

/// Integer polynomial with coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i (zero beyond the degree).
  BigInt coefficient(std::size_t i) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  /// Human-readable form, e.g. "x^3 - 6*x^2 + 9*x".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend auto operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
      return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
      const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c <=> 0;
    }
    return 0 <=> 0;
  }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);

/// Calls `visit(l, M^l)` for l = 0..max_power, stopping early if `visit`
/// returns false. Only one power is held at a time.
void mat_pow_stream(const ExactMatrix& m, int max_power,
                    const std::function<bool(int, const ExactMatrix&)>& visit);

/// Materialized powers M^0..M^max_power.
std::vector<ExactMatrix> mat_powers(const ExactMatrix& m, int max_power);

/// Faddeev–LeVerrier run on an integer matrix A of order n. Besides the
/// characteristic polynomial it keeps the matrix coefficients of the
/// adjugate: adj(xI - A) = sum_{k=1..n} adjugate_coeffs[k-1] * x^(n-k).
struct FaddeevLeVerrier {
  IntPolynomial char_poly;
  std::vector<ExactMatrix> adjugate_coeffs;
};

FaddeevLeVerrier faddeev_leverrier(const ExactMatrix& m);

/// det(xI - M), monic of degree order(M).
IntPolynomial char_poly(const ExactMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const ExactMatrix& m);

/// Principal submatrix obtained by deleting row and column `index`.
ExactMatrix delete_row_col(const ExactMatrix& m, std::size_t index);

/// z_e^T adj(xI - L) z_e for edge index e of g, computed as
/// char_poly(L - L_e) - char_poly(L).
IntPolynomial adjugate_quadratic_form(const Graph& g, int edge);

/// The same polynomial for every edge at once, read off the adjugate
/// coefficients of a single Faddeev–LeVerrier run on L.
std::vector<IntPolynomial> adjugate_quadratic_forms(const Graph& g);

}  // namespace edgerigid
