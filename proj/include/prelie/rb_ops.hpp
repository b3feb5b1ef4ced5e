#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "prelie/combinatorics.hpp"
#include "prelie/rb_models.hpp"

namespace prelie {

/// Right pre-Lie product a <| b = aR(b) - R(b)a + th ab.
template <RotaBaxterModel M>
typename M::Element pre_lie_right(const M& m, const typename M::Element& a, const typename M::Element& b) {
  const auto rb = m.R(b);
  return m.add(m.sub(m.mul(a, rb), m.mul(rb, a)), m.theta_times(m.mul(a, b)));
}

/// Left pre-Lie product a |> b = R(a)b - bR(a) - th ba.
template <RotaBaxterModel M>
typename M::Element pre_lie_left(const M& m, const typename M::Element& a, const typename M::Element& b) {
  const auto ra = m.R(a);
  return m.sub(m.sub(m.mul(ra, b), m.mul(b, ra)), m.theta_times(m.mul(b, a)));
}

/// Double product a *th b = R(a)b + aR(b) + th ab; associative, and R turns it
/// into the algebra product: R(a *th b) = R(a)R(b).
template <RotaBaxterModel M>
typename M::Element double_product(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.add(m.add(m.mul(m.R(a), b), m.mul(a, m.R(b))), m.theta_times(m.mul(a, b)));
}

/// Left-nested iterated operator: b_1 for one argument, then
/// R(previous) * b_k for each further argument.
template <RotaBaxterModel M>
typename M::Element iterated_R(const M& m, std::span<const typename M::Element> bs) {
  if (bs.empty()) throw std::invalid_argument("iterated R needs at least one argument");
  auto out = bs[0];
  for (std::size_t k = 1; k < bs.size(); ++k) out = m.mul(m.R(out), bs[k]);
  return out;
}

/// iterated_R applied to b_{s(1)}, ..., b_{s(n)}.
template <RotaBaxterModel M>
typename M::Element iterated_R_perm(const M& m, std::span<const typename M::Element> bs, const Permutation& s) {
  if (static_cast<std::size_t>(s.size()) != bs.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<typename M::Element> permuted;
  permuted.reserve(bs.size());
  for (int i = 1; i <= s.size(); ++i) permuted.push_back(bs[static_cast<std::size_t>(s(i) - 1)]);
  return iterated_R<M>(m, permuted);
}

/// R(x)R(y) - R(R(x)y + xR(y)) - th R(xy); zero iff the axiom holds at (x, y).
template <RotaBaxterModel M>
typename M::Element rota_baxter_defect(const M& m, const typename M::Element& x, const typename M::Element& y) {
  const auto rx = m.R(x);
  const auto ry = m.R(y);
  const auto inner = m.add(m.mul(rx, y), m.mul(x, ry));
  return m.sub(m.sub(m.mul(rx, ry), m.R(inner)), m.R(m.theta_times(m.mul(x, y))));
}

/// Right and left pre-Lie associator defects:
///   (x<|y)<|z - x<|(y<|z) - ((x<|z)<|y - x<|(z<|y))
///   (x|>y)|>z - x|>(y|>z) - ((y|>x)|>z - y|>(x|>z)).
template <RotaBaxterModel M>
typename M::Element right_pre_lie_defect(const M& m, const typename M::Element& x, const typename M::Element& y,
                                         const typename M::Element& z) {
  auto p = [&](const auto& a, const auto& b) { return pre_lie_right(m, a, b); };
  return m.sub(m.sub(p(p(x, y), z), p(x, p(y, z))), m.sub(p(p(x, z), y), p(x, p(z, y))));
}

template <RotaBaxterModel M>
typename M::Element left_pre_lie_defect(const M& m, const typename M::Element& x, const typename M::Element& y,
                                        const typename M::Element& z) {
  auto p = [&](const auto& a, const auto& b) { return pre_lie_left(m, a, b); };
  return m.sub(m.sub(p(p(x, y), z), p(x, p(y, z))), m.sub(p(p(y, x), z), p(y, p(x, z))));
}

}  // namespace prelie
