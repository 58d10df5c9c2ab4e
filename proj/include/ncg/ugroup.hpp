#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ncg {

using BigInt = boost::multiprecision::cpp_int;

/// k x k integer matrix, the truncation of a row-finite infinite matrix
/// (entries beyond the window are zero). Arithmetic is exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int k) : k_(k), e_(static_cast<std::size_t>(k) * k) {}
  static IntMatrix identity(int k);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int k() const { return k_; }
  const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * k_ + j]; }
  BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * k_ + j]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const;
  /// First n rows all zero (membership in L_n).
  bool in_Ln(int n) const;
  /// R_i: least j with the whole row zero from column j on.
  int row_support_end(int i) const;
  /// R^n = max of R_0..R_{n-1}.
  int rn(int n) const;

 private:
  int k_ = 0;
  std::vector<BigInt> e_;
};

/// Length-k integer vector; G_n is the window with the first n coordinates
/// zero.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(int k) : e_(k) {}
  static IntVector from(const std::vector<long long>& v);

  int k() const { return static_cast<int>(e_.size()); }
  const BigInt& at(int i) const { return e_[i]; }
  BigInt& at(int i) { return e_[i]; }

  IntVector operator+(const IntVector& o) const;
  IntVector operator-(const IntVector& o) const;
  IntVector operator-() const;
  bool operator==(const IntVector& o) const = default;

  bool is_zero() const;
  bool in_Gn(int n) const;

 private:
  std::vector<BigInt> e_;
};

IntVector operator*(const IntMatrix& m, const IntVector& v);

/// Element of the block-unitriangular group U at truncation k:
/// rows (1 a d f / 0 1 b e / 0 0 1 c / 0 0 0 1) with a,b,d matrices and
/// c,e,f vectors.
struct UElement {
  int k = 0;
  IntMatrix a, b, d;
  IntVector c, e, f;

  static UElement identity(int k);
  bool operator==(const UElement& o) const = default;
};

/// Matrix product of two U elements, per the block formulas.
UElement u_mul(const UElement& A, const UElement& X);
UElement u_inv(const UElement& X);
/// Membership in U_n: a,b,d in L_n and c,e,f in G_n.
bool u_in_un(const UElement& X, int n);
/// X2^{-1} X1 in U_n, evaluated through the closed-form coset difference.
bool coset_eq(const UElement& X1, const UElement& X2, int n);

struct WindowProfile {
  int n = 0;
  int n1 = 0, n2 = 0, n3 = 0;
  bool operator==(const WindowProfile& o) const = default;
};

/// N_1 = n, N_2 = max{n, R^n(u)}, N_3 = max{N_2, R^n(uv-x), R^n(v)} for the
/// element written with letters u,v,w,x,y,z.
WindowProfile window(const UElement& X, int n);

struct UNormalForms {
  UElement f1, f2, f3;
};

/// The three coset normal forms F_1, F_2, F_3 of A X modulo U_n.
UNormalForms normal_forms(const UElement& A, const UElement& X);

/// Member of the normal subgroup N: only the d, e, f blocks may be nonzero.
bool in_normal_subgroup(const UElement& X);

/// Dyadic value of the ultrametric on L: 2^{-n} for the least differing
/// row, 0 for equal matrices.
struct Dyadic {
  bool zero = true;
  int neg_log2 = 0;  // value is 2^{-neg_log2} when not zero

  static Dyadic from_rows_differing_at(int n) { return Dyadic{false, n}; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  std::string to_string() const;
};

Dyadic ultrametric_d(const IntMatrix& a, const IntMatrix& b);

/// Least M <= k with g L_M g^{-1} inside L_n, tested on the spanning
/// elementary matrices of L_M. Requires det(g) = +-1 (invertible over the
/// integers); throws otherwise. nullopt when no M <= k works.
std::optional<int> conjugation_window(const IntMatrix& g, int n);

/// Exact inverse of an integer matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& g);
BigInt det(const IntMatrix& g);

}  // namespace ncg
