#ifndef SARX_COUPLING_RECURSION_HPP
#define SARX_COUPLING_RECURSION_HPP

#include <cstddef>
#include <vector>

namespace sarx {

/// Polynomials in z over an arbitrary coefficient ring T, ascending degree.
template <class T>
using ZPoly = std::vector<T>;

/// Output of the coupling recursion for one ordered mode pair (from, to),
/// where `to` drives the d vectors and the difference h_to - h_from enters
/// the psi polynomials.
template <class T>
struct CouplingSequence {
  std::vector<ZPoly<T>> psi;       // psi_0 .. psi_nu, deg psi_j = j
  std::vector<std::vector<T>> d;   // d_0 .. d_nu, each of length ny + nu
  ZPoly<T> phi;                    // sum_{j=1}^{nu} h_to^{ny+j} psi_{nu-j}
};

/// `zero` and `one` are passed explicitly so that ring elements that carry
/// context (such as a variable list) can be built.
template <class T>
CouplingSequence<T> couplingSequence(const std::vector<T>& hFrom, const std::vector<T>& hTo, std::size_t ny,
                                     std::size_t nu, const T& zero, const T& one) {
  const std::size_t len = ny + nu;
  CouplingSequence<T> out;
  std::vector<T> d(len, zero);
  d[0] = one;
  out.psi.push_back(ZPoly<T>{one});
  out.d.push_back(d);
  for (std::size_t j = 0; j < nu; ++j) {
    T shift = zero;
    T lead = zero;
    for (std::size_t k = 0; k < len; ++k) {
      shift = shift + (hTo[k] - hFrom[k]) * d[k];
      lead = lead + hTo[k] * d[k];
    }
    // psi_{j+1} = z * psi_j + shift
    ZPoly<T> next(out.psi.back().size() + 1, zero);
    for (std::size_t k = 0; k < out.psi.back().size(); ++k) next[k + 1] = out.psi.back()[k];
    next[0] = next[0] + shift;
    out.psi.push_back(std::move(next));
    // d_{j+1} = (h_to d_j, d_{j,1}, ..., d_{j,ny-1}, 0, ..., 0)
    std::vector<T> nd(len, zero);
    nd[0] = lead;
    for (std::size_t k = 1; k < ny; ++k) nd[k] = d[k - 1];
    d = std::move(nd);
    out.d.push_back(d);
  }
  out.phi = ZPoly<T>(nu, zero);
  for (std::size_t j = 1; j <= nu; ++j) {
    const ZPoly<T>& psi = out.psi[nu - j];
    for (std::size_t k = 0; k < psi.size(); ++k) out.phi[k] = out.phi[k] + hTo[ny + j - 1] * psi[k];
  }
  return out;
}

/// z^ny - sum_j h^j z^{ny-j}
template <class T>
ZPoly<T> denominatorPoly(const std::vector<T>& h, std::size_t ny, const T& zero, const T& one) {
  ZPoly<T> out(ny + 1, zero);
  out[ny] = one;
  for (std::size_t j = 1; j <= ny; ++j) out[ny - j] = zero - h[j - 1];
  return out;
}

/// sum_j h^j z^{ny-j}
template <class T>
ZPoly<T> autoregressivePoly(const std::vector<T>& h, std::size_t ny, const T& zero) {
  ZPoly<T> out(ny, zero);
  for (std::size_t j = 1; j <= ny; ++j) out[ny - j] = h[j - 1];
  return out;
}

}  // namespace sarx

#endif  // SARX_COUPLING_RECURSION_HPP
