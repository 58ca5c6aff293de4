#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qschur/gf.hpp"
#include "qschur/matrix_index.hpp"

namespace qschur {

/// Subspace of F_p^r, held as its unique basis in reduced row echelon form.
/// Equality of subspaces is therefore plain structural equality, and
/// subspaces can be used as ordered map keys.
class Subspace {
 public:
  static Subspace zero(std::uint32_t p, int ambient);
  static Subspace full(std::uint32_t p, int ambient);
  /// Span of the rows of an arbitrary matrix.
  static Subspace row_span(gf::Matrix rows);
  /// Span of the given standard basis vectors (indices 0-based, strictly
  /// increasing).
  static Subspace coordinate(std::uint32_t p, int ambient,
                             const std::vector<int>& indices);

  std::uint32_t prime() const { return basis_.prime(); }
  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const gf::Matrix& basis() const { return basis_; }

  /// Whether `sub` is contained in this subspace.
  bool contains(const Subspace& sub) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace&) const = default;
  auto operator<=>(const Subspace&) const = default;

 private:
  explicit Subspace(gf::Matrix basis) : basis_(std::move(basis)) {}
  gf::Matrix basis_;
};

/// Chain of nested subspaces V_1 <= V_2 <= ... <= V_n = F_p^r.  Steps may
/// repeat; the type of the chain is the list of successive quotient
/// dimensions, which sums to r.
class FlagChain {
 public:
  /// Validating constructor; throws PreconditionViolated unless the steps
  /// are nested, share prime and ambient space, and end at the full space.
  explicit FlagChain(std::vector<Subspace> steps);
  /// Trusted constructor for enumeration-internal use.
  static FlagChain unchecked(std::vector<Subspace> steps);

  /// Number of steps V_1, ..., V_n (the stored chain also holds step(0)).
  int length() const { return static_cast<int>(steps_.size()) - 1; }
  int ambient_dim() const { return steps_.back().ambient_dim(); }
  std::uint32_t prime() const { return steps_.back().prime(); }
  /// 1-based step access; step(0) is the zero subspace.
  const Subspace& step(int i) const;
  std::vector<int> type() const;

  bool operator==(const FlagChain&) const = default;
  auto operator<=>(const FlagChain&) const = default;

 private:
  FlagChain() = default;
  std::vector<Subspace> steps_;  // step(0) = zero, then V_1, ..., V_n
};

/// Relative position of a pair of flags of equal length over the same
/// space: the matrix A with
///   a_{ij} = dim(V_{i-1} + (V_i cap V'_j)) - dim(V_{i-1} + (V_i cap V'_{j-1})).
/// Computed through the equivalent second difference of the intersection
/// dimension table d_{ij} = dim(V_i cap V'_j), which needs ranks only:
/// expanding both dims with the modular law gives
///   a_{ij} = d_{i,j} - d_{i-1,j} - d_{i,j-1} + d_{i-1,j-1}.
/// Row sums recover the type of f, column sums the type of g.
MatrixIndex relative_position(const FlagChain& f, const FlagChain& g);

/// Canonical pair of flags in relative position A over F_p: the r standard
/// basis vectors are split into groups of size a_{ij} (cells ordered
/// lexicographically); step i of the first flag spans the groups with first
/// index <= i, step j of the second flag the groups with second index <= j.
std::pair<FlagChain, FlagChain> standard_pair(const MatrixIndex& A,
                                              std::uint32_t p);

/// All subspaces of F_p^ambient of the given dimension, via reduced-echelon
/// pivot patterns.  Each subspace is visited exactly once.
void enumerate_subspaces(std::uint32_t p, int ambient, int dim,
                         const std::function<void(const Subspace&)>& visit);

/// All subspaces of dimension `dim` containing `base`, by enumerating the
/// quotient space and lifting.
void enumerate_superspaces(const Subspace& base, int dim,
                           const std::function<void(const Subspace&)>& visit);

/// Number of dim-dimensional subspaces of F_p^ambient (the Gaussian binomial
/// coefficient evaluated at p), tallied pattern by pattern without
/// materializing the subspaces.
std::uint64_t subspace_count(std::uint32_t p, int ambient, int dim);

/// All flags with the given successive quotient dimensions.  The enumeration
/// is deterministic and restartable (it owns no state between calls).
void enumerate_flags(const std::vector<int>& step_dims, std::uint32_t p,
                     const std::function<void(const FlagChain&)>& visit);

/// Materialized enumerate_flags.
std::vector<FlagChain> all_flags(const std::vector<int>& step_dims,
                                 std::uint32_t p);

/// Number of intermediate flags realizing the structure constant
/// g_{A,A2,A3} at q = p: with (f1, f2) the standard pair of A3, counts the
/// flags f with relative_position(f1, f) = A and
/// relative_position(f, f2) = A2.
///
/// pre: all three matrices share n and entry sum, ro(A3) = ro(A) and
/// co(A3) = co(A2); violations throw PreconditionViolated.  When
/// co(A) != ro(A2) no intermediate flag can exist and the count is 0.
std::uint64_t count_intermediate(const MatrixIndex& A, const MatrixIndex& A2,
                                 const MatrixIndex& A3, std::uint32_t p);

/// Joint tally behind count_intermediate: one pass over the supplied flags
/// (all of one type) bucketing each flag f by the pair
/// (relative_position(f1, f), relative_position(f, f2)), where (f1, f2) is
/// the standard pair of A3.  A single pass therefore yields the counts for
/// every product with this candidate and middle type at this prime.
std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t>
intermediate_position_tally(const MatrixIndex& A3,
                            const std::vector<FlagChain>& middle_flags);

/// Convenience overload enumerating the flags of the given type itself.
std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t>
intermediate_position_tally(const MatrixIndex& A3,
                            const std::vector<int>& middle_type,
                            std::uint32_t p);

}  // namespace qschur
