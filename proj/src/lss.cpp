#include "sarx/lss.hpp"

#include <random>
#include <stdexcept>

namespace sarx {

Lss::Lss(std::map<std::string, LssMode> modes, RatVector x0) : modes_(std::move(modes)), x0_(std::move(x0)) {
  if (modes_.empty()) throw std::invalid_argument("LSS needs at least one mode");
  const LssMode& first = modes_.begin()->second;
  n_ = first.a.rows();
  m_ = first.b.cols();
  p_ = first.c.rows();
  for (const auto& [q, md] : modes_) {
    if (md.a.rows() != n_ || md.a.cols() != n_ || md.b.rows() != n_ || md.b.cols() != m_ || md.c.rows() != p_ ||
        md.c.cols() != n_)
      throw std::invalid_argument("LSS mode '" + q + "' has inconsistent matrix shapes");
  }
  if (x0_.size() != n_) throw std::invalid_argument("LSS initial state has wrong length");
}

std::vector<std::string> Lss::labels() const {
  std::vector<std::string> out;
  for (const auto& [q, md] : modes_) out.push_back(q);
  return out;
}

const LssMode& Lss::mode(const std::string& q) const {
  auto it = modes_.find(q);
  if (it == modes_.end()) throw std::invalid_argument("unknown mode '" + q + "'");
  return it->second;
}

Lss associatedLss(const SarxModel& model) {
  const std::size_t p = model.p(), m = model.m(), ny = model.ny();
  const std::size_t n = model.dim();
  const std::size_t uRow = p * ny;
  std::map<std::string, LssMode> modes;
  for (const auto& [q, h] : model.modes()) {
    RatMatrix a(n, n);
    a.setBlock(0, 0, h);
    // Shift the output history down by one block.
    for (std::size_t i = p; i < p * ny; ++i) a(i, i - p) = 1;
    // Rows uRow..uRow+m-1 receive the fresh input through B; shift the rest.
    for (std::size_t i = uRow + m; i < n; ++i) a(i, i - m) = 1;
    RatMatrix b(n, m);
    for (std::size_t k = 0; k < m; ++k) b(uRow + k, k) = 1;
    modes.emplace(q, LssMode{std::move(a), std::move(b), h});
  }
  return Lss(std::move(modes), RatVector(n));
}

std::vector<RatVector> simulateLss(const Lss& sys, const HybridWord& word) {
  RatMatrix x = RatMatrix::columnVector(sys.x0());
  std::vector<RatVector> ys;
  ys.reserve(word.size());
  for (std::size_t t = 0; t < word.size(); ++t) {
    const LssMode& md = sys.mode(word[t].mode);
    if (word[t].input.size() != sys.m())
      throw std::invalid_argument("input at step " + std::to_string(t) + " has wrong dimension");
    ys.push_back((md.c * x).column(0));
    x = md.a * x + md.b * RatMatrix::columnVector(word[t].input);
  }
  return ys;
}

Subspace Subspace::span(const RatMatrix& spanning) {
  Subspace s(spanning.rows());
  if (spanning.cols() == 0) return s;
  const RrefResult r = rref(spanning.transpose());
  s.basis_ = r.reduced.block(0, 0, r.rank(), r.reduced.cols()).transpose();
  return s;
}

bool Subspace::contains(const RatMatrix& column) const {
  if (column.rows() != ambient_) throw std::invalid_argument("Subspace::contains: length mismatch");
  return rank(hstack(basis_, column)) == dimension();
}

Subspace reachableSpan(const Lss& sys) {
  const std::size_t n = sys.n();
  RatMatrix seed = RatMatrix::columnVector(sys.x0());
  for (const auto& [q, md] : sys.modes()) seed = hstack(seed, md.b);
  Subspace v = Subspace::span(seed);
  while (true) {
    RatMatrix grown = v.basis();
    for (const auto& [q, md] : sys.modes()) grown = hstack(grown, md.a * v.basis());
    Subspace next = Subspace::span(grown);
    if (next.dimension() == v.dimension() || next.dimension() == n) return next;
    v = std::move(next);
  }
}

Subspace unobservableSpace(const Lss& sys) {
  const std::size_t n = sys.n();
  // Row space of the observability rows, grown until invariant.
  RatMatrix rows(0, n);
  for (const auto& [q, md] : sys.modes()) rows = vstack(rows, md.c);
  Subspace r = Subspace::span(rows.transpose());
  while (r.dimension() < n) {
    RatMatrix grown = r.basis().transpose();
    for (const auto& [q, md] : sys.modes()) grown = vstack(grown, r.basis().transpose() * md.a);
    Subspace next = Subspace::span(grown.transpose());
    if (next.dimension() == r.dimension()) break;
    r = std::move(next);
  }
  return Subspace::span(kernelMatrix(r.basis().transpose()));
}

LssMinimality isMinimalLss(const Lss& sys) {
  LssMinimality out;
  out.reachableDim = reachableSpan(sys).dimension();
  out.unobservableDim = unobservableSpace(sys).dimension();
  out.minimal = out.reachableDim == sys.n() && out.unobservableDim == 0;
  return out;
}

std::string toString(IsoSolution::Kind kind) {
  switch (kind) {
    case IsoSolution::Kind::UniqueIdentity:
      return "unique-identity";
    case IsoSolution::Kind::UniqueOther:
      return "unique-other";
    case IsoSolution::Kind::None:
      return "none";
    case IsoSolution::Kind::AffineFamily:
      return "affine-family";
  }
  return "none";
}

IsoSolution findIsomorphisms(const Lss& a, const Lss& b) {
  if (a.n() != b.n() || a.m() != b.m() || a.p() != b.p() || a.labels() != b.labels())
    throw std::invalid_argument("findIsomorphisms: systems have different shapes or mode sets");
  const std::size_t n = a.n(), m = a.m(), p = a.p();
  const std::size_t unknowns = n * n;
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };

  std::vector<RatVector> rows;
  RatVector rhs;
  auto addEquation = [&](RatVector row, const Rational& value) {
    rows.push_back(std::move(row));
    rhs.push_back(value);
  };

  for (const std::string& q : a.labels()) {
    const LssMode& ma = a.mode(q);
    const LssMode& mb = b.mode(q);
    // (S A - A' S)_{ij} = 0
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RatVector row(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          row[var(i, k)] += ma.a(k, j);
          row[var(k, j)] -= mb.a(i, k);
        }
        addEquation(std::move(row), 0);
      }
    // (S B)_{ij} = B'_{ij}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        RatVector row(unknowns);
        for (std::size_t k = 0; k < n; ++k) row[var(i, k)] = ma.b(k, j);
        addEquation(std::move(row), mb.b(i, j));
      }
    // (C' S)_{ij} = C_{ij}
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RatVector row(unknowns);
        for (std::size_t k = 0; k < n; ++k) row[var(k, j)] = mb.c(i, k);
        addEquation(std::move(row), ma.c(i, j));
      }
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(unknowns);
    for (std::size_t k = 0; k < n; ++k) row[var(i, k)] = a.x0()[k];
    addEquation(std::move(row), b.x0()[i]);
  }

  const LinearSolution sol = solveLinear(RatMatrix::fromRows(rows, unknowns), rhs);
  IsoSolution out;
  if (!sol.consistent) return out;

  auto toMatrix = [&](const RatVector& v) {
    RatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = v[var(i, j)];
    return s;
  };

  if (sol.nullspace.empty()) {
    RatMatrix s = toMatrix(sol.particular);
    if (determinant(s) == 0) return out;
    out.kind = s == RatMatrix::identity(n) ? IsoSolution::Kind::UniqueIdentity : IsoSolution::Kind::UniqueOther;
    out.witness = std::move(s);
    return out;
  }

  out.kind = IsoSolution::Kind::AffineFamily;
  out.familyDimension = sol.nullspace.size();
  // Look for an invertible member at a few fixed pseudo-random points.
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> coef(-10, 10);
  for (int attempt = 0; attempt < 32; ++attempt) {
    RatVector v = sol.particular;
    for (const RatVector& dir : sol.nullspace) {
      const Rational c = coef(rng);
      for (std::size_t k = 0; k < unknowns; ++k) v[k] += c * dir[k];
    }
    RatMatrix s = toMatrix(v);
    if (determinant(s) != 0) {
      out.witness = std::move(s);
      break;
    }
  }
  return out;
}

}  // namespace sarx
