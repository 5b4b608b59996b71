#include "wbr/frame.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wbr {

BigInt count_gmaps(const GroupSpec& spec, const SubgroupRep& H,
                   const SubgroupRep& K) {
  if (spec.is_abelian_p()) {
    // No conjugation: a map exists iff H <= K, and then every coset of K
    // gives one.
    return subgroup_contains(spec, K, H) ? spec.order() / subgroup_order(spec, K)
                                         : BigInt(0);
  }
  CayleyTable T = spec.to_table();
  auto eh = subgroup_elements(spec, H);
  auto ek = subgroup_elements(spec, K);
  std::set<std::uint16_t> kset(ek.begin(), ek.end());
  // Count cosets gK with g^-1 H g <= K; iterate all g and divide by |K|.
  auto inv = [&](std::uint16_t x) {
    for (std::uint16_t y = 0;; ++y)
      if (T.table[x][y] == 0) return y;
  };
  std::size_t hits = 0;
  for (std::uint16_t g = 0; g < T.table.size(); ++g) {
    std::uint16_t gi = inv(g);
    bool ok = true;
    for (auto h : eh) {
      if (!kset.count(T.table[T.table[gi][h]][g])) { ok = false; break; }
    }
    hits += ok;
  }
  return BigInt(hits) / BigInt(ek.size());
}

Frame build_frame(const GroupSpec& spec) {
  Frame f;
  f.spec = spec;
  auto reps = conjugacy_class_reps(spec);
  std::size_t n = reps.size();

  bool homocyclic = false;
  if (spec.is_abelian_p()) {
    const auto& A = spec.abelian();
    homocyclic = std::all_of(A.exponents.begin(), A.exponents.end(),
                             [&](std::uint32_t e) { return e == A.exponents[0]; });
  }

  f.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FrameNode nd;
    nd.stab = reps[i];
    nd.size = spec.order() / subgroup_order(spec, reps[i]);
    nd.cyclic = quotient_cyclic(spec, reps[i]);
    if (homocyclic) {
      // Largest l with the stabilizer lattice inside p^l Z^d: the smallest
      // elementary-divisor exponent.
      auto inv = quotient_invariants(spec, reps[i]);
      nd.level = inv.front();
    }
    f.nodes.push_back(std::move(nd));
  }
  std::sort(f.nodes.begin(), f.nodes.end(),
            [](const FrameNode& a, const FrameNode& b) {
              if (a.size != b.size) return a.size < b.size;
              return a.stab.key() < b.stab.key();
            });
  for (std::size_t i = 0; i < n; ++i) f.nodes[i].id = static_cast<std::uint32_t>(i);

  f.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t t = 0; t < n; ++t)
      f.leq[u][t] =
          conjugate_into(spec, f.nodes[t].stab, f.nodes[u].stab) ? 1 : 0;

  f.phi.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!f.leq[u][t]) continue;
      f.phi[t][u] = spec.is_abelian_p()
                        ? f.nodes[u].size
                        : count_gmaps(spec, f.nodes[t].stab, f.nodes[u].stab);
    }
  }

  // Covering relation, restricted to size layers below.
  f.covers_below.assign(n, {});
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u == t || !f.leq[u][t]) continue;
      bool cover = true;
      for (std::size_t v = 0; v < n && cover; ++v) {
        if (v == u || v == t) continue;
        if (f.leq[u][v] && f.leq[v][t] &&
            f.nodes[u].size < f.nodes[v].size &&
            f.nodes[v].size < f.nodes[t].size)
          cover = false;
      }
      if (cover) f.covers_below[t].push_back(static_cast<std::uint32_t>(u));
    }
  }
  return f;
}

std::uint32_t Frame::bottom() const {
  for (auto& nd : nodes)
    if (nd.size == 1) return nd.id;
  throw FrameQueryError("frame has no one-point node");
}

std::optional<std::uint32_t> Frame::find_node(const SubgroupRep& stab) const {
  for (auto& nd : nodes)
    if (nd.stab == stab) return nd.id;
  return std::nullopt;
}

std::vector<std::uint32_t> Frame::downset(std::uint32_t t) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < nodes.size(); ++u)
    if (leq[u][t]) out.push_back(u);
  return out;
}

std::vector<std::uint32_t> Frame::strict_downset(std::uint32_t t) const {
  auto out = downset(t);
  out.erase(std::remove(out.begin(), out.end(), t), out.end());
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Frame::linked_pairs()
    const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t a = 0; a < nodes.size(); ++a)
    for (std::uint32_t b = a + 1; b < nodes.size(); ++b) {
      if (nodes[a].size != nodes[b].size) continue;
      if (strict_downset(a) == strict_downset(b)) out.emplace_back(a, b);
    }
  return out;
}

std::string Frame::to_dot() const {
  std::ostringstream out;
  out << "digraph frame {\n  rankdir=BT;\n";
  for (auto& nd : nodes) {
    out << "  n" << nd.id << " [label=\"" << nd.id << ": size "
        << nd.size.str();
    if (nd.level) out << ", lvl " << *nd.level;
    if (nd.cyclic) out << ", cyc";
    out << "\"];\n";
  }
  for (std::uint32_t t = 0; t < nodes.size(); ++t)
    for (auto u : covers_below[t]) out << "  n" << u << " -> n" << t << ";\n";
  out << "}\n";
  return out.str();
}

std::uint32_t node_level(const Frame& f, std::uint32_t t) {
  if (!f.nodes[t].level) throw LevelUndefinedError();
  return *f.nodes[t].level;
}

std::uint32_t scaled_down_node(const Frame& f, std::uint32_t t) {
  std::uint32_t l = node_level(f, t);
  const auto& A = f.spec.abelian();
  const auto& h = std::get<HnfSubgroup>(f.nodes[t].stab.s);
  BigInt pl = big_pow(A.p, l);
  std::size_t d = h.h.size();
  // Every entry is divisible by p^l because the lattice sits inside
  // p^l Z^d; dividing keeps the Hermite shape.
  std::vector<std::vector<BigInt>> cols;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<BigInt> col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = h.h[r][j] / pl;
    cols.push_back(std::move(col));
  }
  auto hat = hnf_from_generators(A, cols);
  auto id = f.find_node(SubgroupRep{hat});
  if (!id) throw FrameQueryError("scaled-down stabilizer not in frame");
  return *id;
}

std::vector<std::uint32_t> nodes_below_with(const Frame& f, std::uint32_t t,
                                            std::uint32_t level,
                                            const BigInt& size) {
  std::vector<std::uint32_t> out;
  for (auto u : f.downset(t))
    if (f.nodes[u].size == size && node_level(f, u) == level) out.push_back(u);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> linked_cyclic_cover(const Frame& f,
                                                            std::uint32_t t) {
  if (!f.spec.is_abelian_p()) throw NonAbelianError();
  const auto& A = f.spec.abelian();
  std::size_t d = A.exponents.size();
  if (d < 2) throw FrameQueryError("need rank >= 2 for a linked cover");
  if (!f.nodes[t].cyclic)
    throw FrameQueryError("node does not have a cyclic quotient");
  const auto& h = std::get<HnfSubgroup>(f.nodes[t].stab.s);

  // Diagonalize the stabilizer lattice: columns of p_inv scaled by the
  // Smith entries form a basis of it.
  std::vector<std::vector<BigInt>> p_inv;
  auto diag = smith_diagonal(h.h, &p_inv);
  // Cyclic quotient: diag = (1, ..., 1, p^k) with p^k = #T.
  auto basis_col = [&](std::size_t j) {
    std::vector<BigInt> col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = p_inv[r][j];
    return col;
  };
  std::vector<std::vector<BigInt>> base;
  for (std::size_t j = 0; j + 2 < d; ++j) base.push_back(basis_col(j));
  auto f1 = basis_col(d - 2), f2 = basis_col(d - 1);
  BigInt pk = diag[d - 1];

  // First cover: shrink the cyclic direction by one more factor of p.
  auto cols1 = base;
  cols1.push_back(f1);
  std::vector<BigInt> f2p(d);
  for (std::size_t r = 0; r < d; ++r) f2p[r] = f2[r] * A.p * pk;
  cols1.push_back(f2p);

  // Second cover: scale the complementary direction instead and glue it to
  // the cyclic one.
  auto cols2 = base;
  std::vector<BigInt> f1p(d), mix(d);
  for (std::size_t r = 0; r < d; ++r) {
    f1p[r] = f1[r] * A.p;
    mix[r] = f1[r] + f2[r] * pk;
  }
  cols2.push_back(f1p);
  cols2.push_back(mix);

  auto id1 = f.find_node(SubgroupRep{hnf_from_generators(A, cols1)});
  auto id2 = f.find_node(SubgroupRep{hnf_from_generators(A, cols2)});
  if (!id1 || !id2)
    throw FrameQueryError("linked covers exceed the frame truncation");
  return {*id1, *id2};
}

std::pair<std::uint32_t, std::uint32_t> tj_pair(const Frame& f,
                                                std::uint32_t j) {
  if (!f.spec.is_abelian_p()) throw NonAbelianError();
  const auto& A = f.spec.abelian();
  if (A.exponents.size() != 2)
    throw FrameQueryError("the linked family needs rank 2");
  if (j < 2) throw FrameQueryError("family index starts at 2");
  for (auto e : A.exponents)
    if (j > e)
      throw FrameQueryError("family index exceeds the frame truncation");
  BigInt pj = big_pow(A.p, j), pj1 = big_pow(A.p, j - 1);
  auto a = hnf_from_generators(A, {{BigInt(1), BigInt(0)}, {BigInt(0), pj}});
  auto b = hnf_from_generators(
      A, {{BigInt(A.p), BigInt(0)}, {BigInt(1), pj1}});
  auto ia = f.find_node(SubgroupRep{a});
  auto ib = f.find_node(SubgroupRep{b});
  if (!ia || !ib)
    throw FrameQueryError("family index exceeds the frame truncation");
  return {*ia, *ib};
}

}  // namespace wbr
