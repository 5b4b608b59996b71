#include "wbr/witt.hpp"

#include <algorithm>

namespace wbr {

namespace {

std::uint64_t index_in(const Frame& f, std::uint32_t u, std::uint32_t t) {
  return static_cast<std::uint64_t>(f.nodes[t].size / f.nodes[u].size);
}

void check_same_ring(const WittVec& a, const WittVec& b) {
  if (a.frame != b.frame || a.modulus != b.modulus)
    throw ModulusMismatchError();
}

WittVec lift_coords(const WittVec& a) {
  WittVec r{a.frame, std::nullopt, {}};
  r.coords.reserve(a.coords.size());
  for (auto& c : a.coords) r.coords.push_back(c.lift());
  return r;
}

WittVec reduce_coords(const WittVec& a, std::uint64_t m) {
  WittVec r{a.frame, m, {}};
  r.coords.reserve(a.coords.size());
  for (auto& c : a.coords) r.coords.push_back(c.reduce_mod(m));
  return r;
}

}  // namespace

WittVec witt_zero(const Frame& f, std::optional<std::uint64_t> modulus) {
  WittVec a{&f, modulus, {}};
  a.coords.assign(f.node_count(), MPoly(modulus));
  return a;
}

WittVec witt_from_ints(const Frame& f, std::vector<BigInt> values,
                       std::optional<std::uint64_t> modulus) {
  if (values.size() != f.node_count())
    throw Error("coordinate count does not match the frame");
  WittVec a{&f, modulus, {}};
  for (auto& v : values) a.coords.push_back(MPoly::constant(v, modulus));
  return a;
}

std::vector<MPoly> ghost(const WittVec& a) {
  const Frame& f = *a.frame;
  std::vector<MPoly> w(f.node_count(), MPoly(a.modulus));
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    MPoly acc(a.modulus);
    for (auto u : f.downset(t)) {
      acc = acc + MPoly::constant(f.phi[t][u], a.modulus) *
                      a.coords[u].pow(index_in(f, u, t));
    }
    w[t] = acc;
  }
  return w;
}

WittVec ghost_inverse(const Frame& f, const std::vector<MPoly>& w,
                      std::optional<std::uint64_t> modulus) {
  if (w.size() != f.node_count())
    throw Error("ghost vector length does not match the frame");
  if (modulus) {
    for (std::uint32_t t = 0; t < f.node_count(); ++t)
      if (big_gcd(f.phi[t][t], BigInt(*modulus)) != 1)
        throw TorsionRingError();
  }
  WittVec a = witt_zero(f, modulus);
  // Nodes are sorted by size, so each step only consumes solved
  // coordinates strictly below.
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    MPoly rest = w[t];
    for (auto u : f.strict_downset(t)) {
      rest = rest - MPoly::constant(f.phi[t][u], modulus) *
                        a.coords[u].pow(index_in(f, u, t));
    }
    if (modulus) {
      BigInt inv = mod_inverse(f.phi[t][t], BigInt(*modulus));
      a.coords[t] = MPoly::constant(inv, modulus) * rest;
    } else {
      a.coords[t] = rest.exact_div(f.phi[t][t]);
    }
  }
  return a;
}

namespace {

// Combine two elements through the ghost map over a torsion-free ring.
template <typename Op>
WittVec ghost_combine(const WittVec& a, const WittVec& b, Op op) {
  auto wa = ghost(a), wb = ghost(b);
  std::vector<MPoly> w;
  w.reserve(wa.size());
  for (std::size_t i = 0; i < wa.size(); ++i) w.push_back(op(wa[i], wb[i]));
  return ghost_inverse(*a.frame, w, a.modulus);
}

template <typename F>
WittVec via_lift(const WittVec& a, const WittVec& b, F f) {
  check_same_ring(a, b);
  if (!a.modulus) return f(a, b);
  WittVec r = f(lift_coords(a), lift_coords(b));
  return reduce_coords(r, *a.modulus);
}

}  // namespace

WittVec witt_add(const WittVec& a, const WittVec& b) {
  return via_lift(a, b, [](const WittVec& x, const WittVec& y) {
    return ghost_combine(x, y, [](const MPoly& u, const MPoly& v) { return u + v; });
  });
}

WittVec witt_sub(const WittVec& a, const WittVec& b) {
  return via_lift(a, b, [](const WittVec& x, const WittVec& y) {
    return ghost_combine(x, y, [](const MPoly& u, const MPoly& v) { return u - v; });
  });
}

WittVec witt_mul(const WittVec& a, const WittVec& b) {
  return via_lift(a, b, [](const WittVec& x, const WittVec& y) {
    return ghost_combine(x, y, [](const MPoly& u, const MPoly& v) { return u * v; });
  });
}

WittVec witt_neg(const WittVec& a) {
  return witt_sub(witt_zero(*a.frame, a.modulus), a);
}

WittVec witt_int_scale(const BigInt& n, const WittVec& a) {
  auto scale = [&](const WittVec& x) {
    auto w = ghost(x);
    for (auto& c : w) c = MPoly::constant(n, x.modulus) * c;
    return ghost_inverse(*x.frame, w, x.modulus);
  };
  if (!a.modulus) return scale(a);
  return reduce_coords(scale(lift_coords(a)), *a.modulus);
}

WittVec teichmuller(const Frame& f, const MPoly& c) {
  return teichmuller(f, f.bottom(), c);
}

WittVec teichmuller(const Frame& f, std::uint32_t node, const MPoly& c) {
  if (node >= f.node_count()) throw FrameQueryError("node out of range");
  WittVec a = witt_zero(f, c.modulus());
  a.coords[node] = c;
  return a;
}

Frame subframe(const Frame& f, std::vector<std::uint32_t> keep) {
  std::sort(keep.begin(), keep.end());
  std::vector<char> in(f.node_count(), 0);
  for (auto t : keep) in[t] = 1;
  for (auto t : keep)
    for (auto u : f.strict_downset(t))
      if (!in[u]) throw NotDownClosedError();
  Frame s;
  s.spec = f.spec;
  std::vector<std::uint32_t> newid(f.node_count(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    FrameNode nd = f.nodes[keep[i]];
    nd.id = static_cast<std::uint32_t>(i);
    newid[keep[i]] = nd.id;
    s.nodes.push_back(std::move(nd));
  }
  std::size_t n = keep.size();
  s.leq.assign(n, std::vector<char>(n, 0));
  s.phi.assign(n, std::vector<BigInt>(n, 0));
  s.covers_below.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.leq[i][j] = f.leq[keep[i]][keep[j]];
      s.phi[i][j] = f.phi[keep[i]][keep[j]];
    }
  for (std::size_t j = 0; j < n; ++j)
    for (auto u : f.covers_below[keep[j]])
      if (in[u]) s.covers_below[j].push_back(newid[u]);
  return s;
}

WittVec witt_project(const WittVec& a, const Frame& sub,
                     const std::vector<std::uint32_t>& keep) {
  if (keep.size() != sub.node_count())
    throw Error("node list does not match the sub-frame");
  WittVec r{&sub, a.modulus, {}};
  for (auto t : keep) r.coords.push_back(a.coords[t]);
  return r;
}

bool in_size_ideal(const WittVec& a, const BigInt& s) {
  const Frame& f = *a.frame;
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    if (f.nodes[t].size < s && !a.coords[t].is_zero()) return false;
  return true;
}

bool in_node_ideal(const WittVec& a, std::uint32_t t) {
  for (auto u : a.frame->downset(t))
    if (!a.coords[u].is_zero()) return false;
  return true;
}

WittVec witt_invert_unit(const WittVec& a) {
  const Frame& f = *a.frame;
  if (!a.modulus || *a.modulus != f.spec.prime())
    throw Error("unit inversion works over the residue ring Z/p");
  const MPoly& a0 = a.coords[f.bottom()];
  if (!a0.is_constant() ||
      big_gcd(a0.constant_value(), BigInt(*a.modulus)) != 1)
    throw NotAUnitError();
  BigInt inv0 = mod_inverse(a0.constant_value(), BigInt(*a.modulus));
  WittVec u = teichmuller(f, MPoly::constant(inv0, a.modulus));
  WittVec one = teichmuller(f, MPoly::constant(1, a.modulus));
  WittVec t = witt_sub(one, witt_mul(u, a));
  // t has zero bottom coordinate, so t^k dies once p^k clears the largest
  // node size; sum the geometric series.
  WittVec acc = one;
  WittVec pw = t;
  std::size_t guard = 0;
  while (!witt_is_zero(pw)) {
    acc = witt_add(acc, pw);
    pw = witt_mul(pw, t);
    if (++guard > f.node_count() + 2)
      throw Error("geometric series failed to terminate");
  }
  return witt_mul(u, acc);
}

bool witt_is_zero(const WittVec& a) {
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [](const MPoly& c) { return c.is_zero(); });
}

bool witt_eq(const WittVec& a, const WittVec& b) {
  check_same_ring(a, b);
  return a.coords == b.coords;
}

}  // namespace wbr
