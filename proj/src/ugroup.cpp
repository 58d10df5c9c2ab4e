#include "ncg/ugroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int k = static_cast<int>(rows.size());
  IntMatrix m(k);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rows[i].size()) != k) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r(k_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r(k_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(k_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(k_);
  for (int i = 0; i < k_; ++i)
    for (int l = 0; l < k_; ++l) {
      const BigInt& v = at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < k_; ++j) r.at(i, j) += v * o.at(l, j);
    }
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const BigInt& v) { return v == 0; });
}

bool IntMatrix::in_Ln(int n) const {
  for (int i = 0; i < std::min(n, k_); ++i)
    for (int j = 0; j < k_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

int IntMatrix::row_support_end(int i) const {
  for (int j = k_ - 1; j >= 0; --j)
    if (at(i, j) != 0) return j + 1;
  return 0;
}

int IntMatrix::rn(int n) const {
  int r = 0;
  for (int i = 0; i < std::min(n, k_); ++i) r = std::max(r, row_support_end(i));
  return r;
}

IntVector IntVector::from(const std::vector<long long>& v) {
  IntVector r(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r.at(static_cast<int>(i)) = v[i];
  return r;
}

IntVector IntVector::operator+(const IntVector& o) const {
  IntVector r(k());
  for (int i = 0; i < k(); ++i) r.at(i) = at(i) + o.at(i);
  return r;
}

IntVector IntVector::operator-(const IntVector& o) const {
  IntVector r(k());
  for (int i = 0; i < k(); ++i) r.at(i) = at(i) - o.at(i);
  return r;
}

IntVector IntVector::operator-() const {
  IntVector r(k());
  for (int i = 0; i < k(); ++i) r.at(i) = -at(i);
  return r;
}

bool IntVector::is_zero() const {
  for (int i = 0; i < k(); ++i)
    if (at(i) != 0) return false;
  return true;
}

bool IntVector::in_Gn(int n) const {
  for (int i = 0; i < std::min(n, k()); ++i)
    if (at(i) != 0) return false;
  return true;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  IntVector r(m.k());
  for (int i = 0; i < m.k(); ++i) {
    BigInt acc = 0;
    for (int j = 0; j < m.k(); ++j) acc += m.at(i, j) * v.at(j);
    r.at(i) = acc;
  }
  return r;
}

UElement UElement::identity(int k) {
  UElement u;
  u.k = k;
  u.a = IntMatrix(k);
  u.b = IntMatrix(k);
  u.d = IntMatrix(k);
  u.c = IntVector(k);
  u.e = IntVector(k);
  u.f = IntVector(k);
  return u;
}

// When an element plays the second role it is written with letters
// u,v,w,x,y,z; those map onto the fields as u=a, v=b, w=c, x=d, y=e, z=f.

UElement u_mul(const UElement& A, const UElement& X) {
  if (A.k != X.k) throw std::invalid_argument("u_mul: truncation mismatch");
  UElement r;
  r.k = A.k;
  r.a = A.a + X.a;                          // a + u
  r.b = A.b + X.b;                          // b + v
  r.c = A.c + X.c;                          // c + w
  r.d = A.a * X.b + (A.d + X.d);            // a v + d + x
  r.e = A.b * X.c + (A.e + X.e);            // b w + e + y
  r.f = A.a * X.e + A.d * X.c + (A.f + X.f);  // a y + d w + f + z
  return r;
}

UElement u_inv(const UElement& X) {
  UElement r;
  r.k = X.k;
  r.a = -X.a;                                   // -u
  r.b = -X.b;                                   // -v
  r.c = -X.c;                                   // -w
  r.d = X.a * X.b - X.d;                        // u v - x
  r.e = X.b * X.c - X.e;                        // v w - y
  r.f = -(X.a * (X.b * X.c)) + X.a * X.e + X.d * X.c - X.f;  // -uvw + uy + xw - z
  return r;
}

bool u_in_un(const UElement& X, int n) {
  return X.a.in_Ln(n) && X.b.in_Ln(n) && X.d.in_Ln(n) && X.c.in_Gn(n) && X.e.in_Gn(n) &&
         X.f.in_Gn(n);
}

bool coset_eq(const UElement& X1, const UElement& X2, int n) {
  if (X1.k != X2.k) throw std::invalid_argument("coset_eq: truncation mismatch");
  int k = X1.k;
  int rows = std::min(n, k);
  // The six entries of X2^{-1} X1 in closed form; only the first n rows of
  // each entry decide membership in U_n, so the products run row-limited.
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < k; ++j) {
      if (X1.a.at(r, j) != X2.a.at(r, j)) return false;  // u1 - u2
      if (X1.b.at(r, j) != X2.b.at(r, j)) return false;  // v1 - v2
    }
  for (int r = 0; r < rows; ++r)
    if (X1.c.at(r) != X2.c.at(r)) return false;  // w1 - w2

  // x1 - x2 + u2 (v2 - v1), row by row.
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < k; ++j) {
      BigInt acc = X1.d.at(r, j) - X2.d.at(r, j);
      for (int l = 0; l < k; ++l) acc += X2.a.at(r, l) * (X2.b.at(l, j) - X1.b.at(l, j));
      if (acc != 0) return false;
    }
  // y1 - y2 + v2 (w2 - w1).
  for (int r = 0; r < rows; ++r) {
    BigInt acc = X1.e.at(r) - X2.e.at(r);
    for (int l = 0; l < k; ++l) acc += X2.b.at(r, l) * (X2.c.at(l) - X1.c.at(l));
    if (acc != 0) return false;
  }
  // z1 - z2 + u2 (y2 - y1) + u2 v2 (w1 - w2) + x2 (w2 - w1).
  for (int r = 0; r < rows; ++r) {
    BigInt acc = X1.f.at(r) - X2.f.at(r);
    for (int l = 0; l < k; ++l) {
      acc += X2.a.at(r, l) * (X2.e.at(l) - X1.e.at(l));
      acc += X2.d.at(r, l) * (X2.c.at(l) - X1.c.at(l));
      if (X2.a.at(r, l) != 0) {
        for (int m = 0; m < k; ++m)
          acc += X2.a.at(r, l) * X2.b.at(l, m) * (X1.c.at(m) - X2.c.at(m));
      }
    }
    if (acc != 0) return false;
  }
  return true;
}

WindowProfile window(const UElement& X, int n) {
  if (n < 1 || n > X.k) throw std::invalid_argument("window: need 1 <= n <= k");
  WindowProfile w;
  w.n = n;
  w.n1 = n;
  w.n2 = std::max(n, X.a.rn(n));
  // R^n(uv - x) needs only the first n rows of the product.
  int k = X.k;
  int rn_uvx = 0;
  for (int r = 0; r < std::min(n, k); ++r) {
    for (int j = k - 1; j >= rn_uvx; --j) {
      BigInt acc = -X.d.at(r, j);
      for (int l = 0; l < k; ++l) acc += X.a.at(r, l) * X.b.at(l, j);
      if (acc != 0) {
        rn_uvx = j + 1;
        break;
      }
    }
  }
  w.n3 = std::max({w.n2, rn_uvx, X.b.rn(n)});
  return w;
}

UNormalForms normal_forms(const UElement& A, const UElement& X) {
  if (A.k != X.k) throw std::invalid_argument("normal_forms: truncation mismatch");
  UNormalForms nf;
  IntMatrix ub = X.a * A.b;  // u b

  nf.f1 = X;
  nf.f1.d = -ub + X.d;                                                  // -ub + x
  nf.f1.e = X.e - X.b * A.c;                                            // y - vc
  nf.f1.f = -(ub * X.c) - X.a * A.e + ub * A.c - X.d * A.c + X.f;       // -ubw - ue + ubc - xc + z

  nf.f2 = X;
  nf.f2.e = X.e - X.b * A.c;                                            // y - vc
  nf.f2.f = -(X.d * A.c) + X.f;                                         // -xc + z

  nf.f3 = X;
  nf.f3.f = (X.a * X.b - X.d) * A.c + X.f;                              // (uv - x)c + z
  return nf;
}

bool in_normal_subgroup(const UElement& X) {
  return X.a.is_zero() && X.b.is_zero() && X.c.is_zero();
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.zero && b.zero) return std::strong_ordering::equal;
  if (a.zero) return std::strong_ordering::less;
  if (b.zero) return std::strong_ordering::greater;
  // 2^{-n} decreases as n grows.
  return b.neg_log2 <=> a.neg_log2;
}

std::string Dyadic::to_string() const {
  if (zero) return "0";
  if (neg_log2 == 0) return "1";
  return "2^-" + std::to_string(neg_log2);
}

Dyadic ultrametric_d(const IntMatrix& a, const IntMatrix& b) {
  if (a.k() != b.k()) throw std::invalid_argument("ultrametric: size mismatch");
  for (int i = 0; i < a.k(); ++i)
    for (int j = 0; j < a.k(); ++j)
      if (a.at(i, j) != b.at(i, j)) return Dyadic::from_rows_differing_at(i);
  return Dyadic{};
}

BigInt det(const IntMatrix& g) {
  // Fraction-free Bareiss elimination.
  int k = g.k();
  if (k == 0) return 1;
  IntMatrix m = g;
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < k - 1; ++col) {
    if (m.at(col, col) == 0) {
      int pivot = -1;
      for (int r = col + 1; r < k; ++r)
        if (m.at(r, col) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < k; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r) {
      for (int j = col + 1; j < k; ++j) {
        m.at(r, j) = (m.at(r, j) * m.at(col, col) - m.at(r, col) * m.at(col, j)) / prev;
      }
      m.at(r, col) = 0;
    }
    prev = m.at(col, col);
  }
  return sign * m.at(k - 1, k - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& g) {
  BigInt dg = det(g);
  if (dg != 1 && dg != -1)
    throw std::invalid_argument("matrix is not invertible over the integers");
  int k = g.k();
  IntMatrix inv(k);
  // Adjugate via cofactors; exact since det = +-1.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      IntMatrix minor(k - 1);
      for (int r = 0, mr = 0; r < k; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < k; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = g.at(r, c);
          ++mc;
        }
        ++mr;
      }
      BigInt cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = cof * dg;  // adj^T / det with det = +-1
    }
  }
  return inv;
}

std::optional<int> conjugation_window(const IntMatrix& g, int n) {
  IntMatrix ginv = unimodular_inverse(g);
  int k = g.k();
  // g E_{ij} g^{-1} is the outer product of column i of g with row j of
  // g^{-1}; its first n rows vanish iff g[r][i] * ginv[j][s] = 0 for all
  // r < n, s. Scanning the elementary matrices of L_M spans the window.
  auto works = [&](int M) {
    for (int i = M; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int r = 0; r < std::min(n, k); ++r)
          for (int s = 0; s < k; ++s)
            if (g.at(r, i) * ginv.at(j, s) != 0) return false;
    return true;
  };
  for (int M = 0; M <= k; ++M)
    if (works(M)) return M;
  return std::nullopt;
}

}  // namespace ncg
