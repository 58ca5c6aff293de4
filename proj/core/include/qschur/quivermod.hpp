#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qschur/gf.hpp"
#include "qschur/matrix_index.hpp"

namespace qschur {

/// Isomorphism class of a module over the linearly oriented type A quiver
/// with vertices 1..n-1 and arrows l -> l+1.  The indecomposables are the
/// interval modules M(i,j) for 1 <= i < j <= n, supported on vertices
/// i..j-1; a class is the multiset of its interval summands, stored as a
/// strictly upper triangular matrix of multiplicities.  The zero module is
/// the empty multiset.
class Multisegment {
 public:
  /// Zero module on the size-n index set.
  explicit Multisegment(int n) : mult_(n) {}
  /// Interval module M(i,j).
  static Multisegment interval(int n, int i, int j);
  /// Simple module S_l = M(l, l+1).
  static Multisegment simple(int n, int l) { return interval(n, l, l + 1); }
  /// Projective module P_i = M(i, n).
  static Multisegment projective(int n, int i) { return interval(n, i, n); }
  /// Reads the multiplicity matrix; must be strictly upper triangular.
  static Multisegment from_matrix(const MatrixIndex& mult);

  int n() const { return mult_.n(); }
  int multiplicity(int i, int j) const { return mult_.at(i, j); }
  void add(int i, int j, int count);
  bool is_zero() const { return mult_.sum() == 0; }

  /// The multiplicity matrix itself (strictly upper triangular).
  const MatrixIndex& matrix() const { return mult_; }
  /// Nonzero segments as (i, j, multiplicity), lexicographically.
  std::vector<std::array<int, 3>> segments() const;

  /// Direct sum.
  Multisegment operator+(const Multisegment& rhs) const;

  bool operator==(const Multisegment&) const = default;
  auto operator<=>(const Multisegment&) const = default;

  std::string str() const;

 private:
  MatrixIndex mult_;
};

/// Dimension at each vertex 1..n-1: component l sums the multiplicities of
/// the intervals containing l.
std::vector<int> dim_vector(const Multisegment& M);

/// Total dimension (sum of the dimension vector).
int total_dim(const Multisegment& M);

/// Number of indecomposable summands (sum of all multiplicities).
int indec_count(const Multisegment& M);

/// dim Hom(M, N), by bilinearity from the interval case:
/// dim Hom(M(a,b), M(c,d)) = 1 if c <= a < d <= b, else 0.
int hom_dim(const Multisegment& M, const Multisegment& N);

/// Degeneration order: X <= Y iff hom_dim(X, I) <= hom_dim(Y, I) for every
/// interval I.  X <= Y means the orbit of Y lies in the closure of the
/// orbit of X.  Only defined for equal dimension vectors; throws
/// DimVectorMismatch otherwise.
bool deg_leq(const Multisegment& X, const Multisegment& Y);

/// Ranks of the composite structure maps of a concrete representation:
/// at(i, j) is the rank of the map from vertex i to vertex j for
/// 1 <= i <= j <= n-1 (at(i, i) is the dimension at vertex i), and 0
/// outside that range.  The boundary convention makes the multiplicity
/// inversion below a single formula.
struct RankTable {
  int n = 0;
  std::vector<std::vector<int>> r;  // r[i][j], 1-based, i <= j <= n-1

  int at(int i, int j) const {
    if (i < 1 || j >= n || j < i) return 0;
    return r[i][j];
  }
};

/// Recovers the multiset of interval summands from composite ranks:
/// mult[a][b] = r[a][b-1] - r[a-1][b-1] - r[a][b] + r[a-1][b].
/// Throws InconsistentRanks if any computed multiplicity is negative.
Multisegment iso_type_from_ranks(const RankTable& T);

/// Minimal projective resolution 0 -> Q -> P -> M -> 0:
/// P = sum of P_i over segments (i,j), Q = sum of P_j over segments with
/// j < n (the cover of M(i,j) is P_i with kernel M(j,n)).
std::pair<Multisegment, Multisegment> min_projective_resolution(
    const Multisegment& M);

/// Every multisegment with the given dimension vector (length n-1),
/// lexicographically by multiplicity matrix.
std::vector<Multisegment> multisegments_with_dim_vector(
    int n, const std::vector<int>& d);

/// Concrete representation over F_p: a dimension per vertex and one matrix
/// per arrow, acting on row vectors (v at vertex l maps to v * maps[l-1]).
struct QuiverRep {
  std::uint32_t p = 2;
  std::vector<int> dims;         // n-1 entries
  std::vector<gf::Matrix> maps;  // n-2 entries; maps[l-1] : vertex l -> l+1

  int n() const { return static_cast<int>(dims.size()) + 1; }
};

/// Block realization of a multisegment: one basis vector per summand per
/// supported vertex, identity maps along each interval.
QuiverRep realize(const Multisegment& M, std::uint32_t p);

/// Composite maps F[i][j] : vertex i -> vertex j for 1 <= i <= j <= n-1,
/// with F[i][i] the identity.  Entries outside i <= j are default zero
/// matrices, unused.
std::vector<std::vector<gf::Matrix>> composite_table(const QuiverRep& rep);

/// Composite ranks of a concrete representation.
RankTable rank_table(const QuiverRep& rep);

/// Composite ranks of an isomorphism class: the rank from vertex u to
/// vertex v counts the interval summands whose support contains [u, v].
/// Inverse of iso_type_from_ranks.
RankTable rank_table(const Multisegment& M);

/// Isomorphism class of a concrete representation.
Multisegment iso_type(const QuiverRep& rep);

}  // namespace qschur
