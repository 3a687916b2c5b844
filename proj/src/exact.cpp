#include "edgerigid/exact.hpp"

#include <algorithm>
#include <sstream>

#include "edgerigid/errors.hpp"
#include "edgerigid/graph.hpp"

namespace edgerigid {

ExactMatrix::ExactMatrix(std::size_t order) : order_(order), data_(order * order) {}

ExactMatrix ExactMatrix::identity(std::size_t order) {
  ExactMatrix id(order);
  for (std::size_t i = 0; i < order; ++i) id(i, i) = 1;
  return id;
}

BigInt ExactMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

void require_same_order(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.order() != rhs.order()) throw DimensionMismatch("matrix orders differ");
}

// Coefficient of x^(n-k) in adj(xI - A) is M_k with
//   M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
// The division is exact for integer A.
IntPolynomial run_faddeev_leverrier(const ExactMatrix& a,
                                    const std::function<void(int, const ExactMatrix&)>& visit) {
  const std::size_t n = a.order();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  ExactMatrix mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix next = (k == 1) ? ExactMatrix(n) : a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    if (visit) visit(static_cast<int>(k), mk);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(a(i, j)) != 0) tr += a(i, j) * mk(j, i);
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -tr;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_order(lhs, rhs);
  ExactMatrix out(lhs.order());
  for (std::size_t i = 0; i < lhs.order(); ++i)
    for (std::size_t j = 0; j < lhs.order(); ++j) out(i, j) = lhs(i, j) + rhs(i, j);
  return out;
}

ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_order(lhs, rhs);
  ExactMatrix out(lhs.order());
  for (std::size_t i = 0; i < lhs.order(); ++i)
    for (std::size_t j = 0; j < lhs.order(); ++j) out(i, j) = lhs(i, j) - rhs(i, j);
  return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_order(lhs, rhs);
  const std::size_t n = lhs.order();
  ExactMatrix out(n);
  BigInt term;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& lik = lhs(i, k);
      if (sgn(lik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt& rkj = rhs(k, j);
        if (sgn(rkj) == 0) continue;
        mpz_addmul(out(i, j).get_mpz_t(), lik.get_mpz_t(), rkj.get_mpz_t());
      }
    }
  }
  return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << '*';
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  const std::size_t len = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  std::vector<BigInt> c(len);
  for (std::size_t i = 0; i < len; ++i) c[i] = lhs.coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  const std::size_t len = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  std::vector<BigInt> c(len);
  for (std::size_t i = 0; i < len; ++i) c[i] = lhs.coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

void mat_pow_stream(const ExactMatrix& m, int max_power,
                    const std::function<bool(int, const ExactMatrix&)>& visit) {
  if (max_power < 0) return;
  ExactMatrix power = ExactMatrix::identity(m.order());
  if (!visit(0, power)) return;
  for (int l = 1; l <= max_power; ++l) {
    power = m * power;
    if (!visit(l, power)) return;
  }
}

std::vector<ExactMatrix> mat_powers(const ExactMatrix& m, int max_power) {
  std::vector<ExactMatrix> out;
  mat_pow_stream(m, max_power, [&](int, const ExactMatrix& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

FaddeevLeVerrier faddeev_leverrier(const ExactMatrix& m) {
  FaddeevLeVerrier out;
  out.char_poly = run_faddeev_leverrier(
      m, [&](int, const ExactMatrix& mk) { out.adjugate_coeffs.push_back(mk); });
  return out;
}

IntPolynomial char_poly(const ExactMatrix& m) { return run_faddeev_leverrier(m, nullptr); }

BigInt determinant(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  ExactMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

ExactMatrix delete_row_col(const ExactMatrix& m, std::size_t index) {
  if (index >= m.order()) throw IndexOutOfRange("delete_row_col: index out of range");
  ExactMatrix out(m.order() - 1);
  for (std::size_t i = 0, r = 0; i < m.order(); ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, c = 0; j < m.order(); ++j) {
      if (j == index) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

IntPolynomial adjugate_quadratic_form(const Graph& g, int edge) {
  if (edge < 0 || edge >= g.size()) throw IndexOutOfRange("edge index out of range");
  const ExactMatrix l = laplacian_exact(g);
  ExactMatrix deleted = l;
  const auto [a, b] = g.edge(edge);
  deleted(a, a) -= 1;
  deleted(b, b) -= 1;
  deleted(a, b) += 1;
  deleted(b, a) += 1;
  return char_poly(deleted) - char_poly(l);
}

std::vector<IntPolynomial> adjugate_quadratic_forms(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  std::vector<std::vector<BigInt>> coeffs(static_cast<std::size_t>(m),
                                          std::vector<BigInt>(static_cast<std::size_t>(n)));
  run_faddeev_leverrier(laplacian_exact(g), [&](int k, const ExactMatrix& mk) {
    const auto values = adjoint_apply(g, mk);
    for (int e = 0; e < m; ++e) coeffs[e][n - k] = values[e];
  });
  std::vector<IntPolynomial> out;
  out.reserve(coeffs.size());
  for (auto& c : coeffs) out.emplace_back(std::move(c));
  return out;
}

}  // namespace edgerigid
