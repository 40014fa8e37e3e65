#pragma once

// Exact scalars, integer triples and small dense rational linear algebra.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace econres {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
};

struct ZeroVector : Error {
  ZeroVector() : Error("zero vector has no primitive scaling") {}
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  // cpp_rational's two-argument constructor rejects negative denominators.
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& n, const BigInt& d) {
  return -floor_div(BigInt(-n), d);
}

/// Least non-negative residue of n modulo m (m > 0).
inline std::int64_t mod_int(const BigInt& n, std::int64_t m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

inline BigInt floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline BigInt ceil(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto check = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + text);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + text);
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(check(s));
  return make_rational(check(trim(s.substr(0, slash))), check(trim(s.substr(slash + 1))));
}

struct IntVec3 {
  std::array<BigInt, 3> c{};

  IntVec3() = default;
  IntVec3(BigInt a, BigInt b, BigInt d) : c{std::move(a), std::move(b), std::move(d)} {}

  const BigInt& operator[](std::size_t i) const { return c[i]; }
  BigInt& operator[](std::size_t i) { return c[i]; }

  friend IntVec3 operator+(const IntVec3& u, const IntVec3& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
  }
  friend IntVec3 operator-(const IntVec3& u, const IntVec3& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
  }
  friend IntVec3 operator-(const IntVec3& u) { return {-u[0], -u[1], -u[2]}; }
  friend IntVec3 operator*(const BigInt& k, const IntVec3& u) { return {k * u[0], k * u[1], k * u[2]}; }

  friend bool operator==(const IntVec3&, const IntVec3&) = default;
  friend std::strong_ordering operator<=>(const IntVec3& u, const IntVec3& v) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (u[i] < v[i]) return std::strong_ordering::less;
      if (u[i] > v[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  friend std::ostream& operator<<(std::ostream& os, const IntVec3& u) {
    return os << '(' << u[0] << ',' << u[1] << ',' << u[2] << ')';
  }
};

inline BigInt dot(const IntVec3& u, const IntVec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

inline IntVec3 cross(const IntVec3& u, const IntVec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline BigInt det3(const IntVec3& u, const IntVec3& v, const IntVec3& w) { return dot(u, cross(v, w)); }

inline BigInt content(const IntVec3& u) {
  using boost::multiprecision::gcd;
  return gcd(gcd(abs(u[0]), abs(u[1])), abs(u[2]));
}

/// Divides out the gcd; the zero vector is returned unchanged.
inline IntVec3 primitive(const IntVec3& u) {
  BigInt g = content(u);
  if (g == 0) return u;
  return {u[0] / g, u[1] / g, u[2] / g};
}

using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend RatVector operator*(const RatMatrix& a, std::span<const Rational> x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    RatVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
    return out;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Rational determinant3(const RatMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("determinant3 needs a 3x3 matrix");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Inverse through the adjugate; throws SingularMatrix when det(m) = 0.
inline RatMatrix invert_matrix3(const RatMatrix& m) {
  Rational det = determinant3(m);
  if (det == 0) throw SingularMatrix{};
  RatMatrix inv(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) / det;
    }
  return inv;
}

/// One exact solution of A x = b by Gauss-Jordan elimination with the free
/// variables set to zero, or nullopt when the system is inconsistent.
inline std::optional<RatVector> solve_rational_system(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() == 0) throw std::invalid_argument("system needs at least one equation");
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t n = a.rows(), m = a.cols();
  RatMatrix w(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) w(i, j) = a(i, j);
    w(i, m) = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && w(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != row)
      for (std::size_t j = 0; j <= m; ++j) std::swap(w(p, j), w(row, j));
    Rational inv = 1 / w(row, col);
    for (std::size_t j = col; j <= m; ++j) w(row, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || w(i, col) == 0) continue;
      Rational f = w(i, col);
      for (std::size_t j = col; j <= m; ++j) w(i, j) -= f * w(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (w(i, m) != 0) return std::nullopt;

  RatVector x(m);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w(i, m);
  return x;
}

inline std::size_t matrix_rank(RatMatrix w) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
    std::size_t p = row;
    while (p < w.rows() && w(p, col) == 0) ++p;
    if (p == w.rows()) continue;
    for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(p, j), w(row, j));
    for (std::size_t i = row + 1; i < w.rows(); ++i) {
      if (w(i, col) == 0) continue;
      Rational f = w(i, col) / w(row, col);
      for (std::size_t j = col; j < w.cols(); ++j) w(i, j) -= f * w(row, j);
    }
    ++row;
  }
  return row;
}

/// The primitive integer vector on the ray through v (direction preserved).
inline std::vector<BigInt> primitive_scale(std::span<const Rational> v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::numerator;
  BigInt lcm = 1;
  bool nonzero = false;
  for (const auto& q : v) {
    if (q != 0) nonzero = true;
    BigInt d = denominator(q);
    lcm = lcm / gcd(lcm, d) * d;
  }
  if (!nonzero) throw ZeroVector{};
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& q : v) {
    out.push_back(numerator(q) * (lcm / denominator(q)));
    g = gcd(g, abs(out.back()));
  }
  for (auto& e : out) e /= g;
  return out;
}

}  // namespace econres
