#ifndef SARX_LSS_HPP
#define SARX_LSS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sarx/matrix.hpp"
#include "sarx/sarx_model.hpp"

namespace sarx {

struct LssMode {
  RatMatrix a;  // n x n
  RatMatrix b;  // n x m
  RatMatrix c;  // p x n
};

/// Linear switched system x_{t+1} = A_q x_t + B_q u_t, y_t = C_q x_t.
class Lss {
 public:
  Lss(std::map<std::string, LssMode> modes, RatVector x0);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t p() const { return p_; }
  std::vector<std::string> labels() const;
  const std::map<std::string, LssMode>& modes() const { return modes_; }
  const LssMode& mode(const std::string& q) const;
  const RatVector& x0() const { return x0_; }

 private:
  std::map<std::string, LssMode> modes_;
  RatVector x0_;
  std::size_t n_ = 0, m_ = 0, p_ = 0;
};

/// Companion-style embedding whose state is the regressor.
Lss associatedLss(const SarxModel& model);

std::vector<RatVector> simulateLss(const Lss& sys, const HybridWord& word);

/// Linear subspace of Q^n held as a canonical basis: the columns are the
/// transposed nonzero rows of the reduced row echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
  /// Span of the columns of `spanning` (ambient = spanning.rows()).
  static Subspace span(const RatMatrix& spanning);
  static Subspace whole(std::size_t ambient) { return span(RatMatrix::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  bool contains(const RatMatrix& column) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  RatMatrix basis_;
};

/// Smallest A_q-invariant subspace containing x0 and every column of every B_q.
Subspace reachableSpan(const Lss& sys);

/// Largest A_q-invariant subspace inside the kernel of every C_q.
Subspace unobservableSpace(const Lss& sys);

struct LssMinimality {
  bool minimal = false;
  std::size_t reachableDim = 0;
  std::size_t unobservableDim = 0;
};

LssMinimality isMinimalLss(const Lss& sys);

struct IsoSolution {
  enum class Kind { UniqueIdentity, UniqueOther, None, AffineFamily };
  Kind kind = Kind::None;
  /// Dimension of the solution family (0 when unique).
  std::size_t familyDimension = 0;
  /// Invertible solution, when one was found.
  std::optional<RatMatrix> witness;
};

std::string toString(IsoSolution::Kind kind);

/// Solves S A_q = A'_q S, S B_q = B'_q, C'_q S = C_q, S x0 = x0' for S.
IsoSolution findIsomorphisms(const Lss& a, const Lss& b);

}  // namespace sarx

#endif  // SARX_LSS_HPP
