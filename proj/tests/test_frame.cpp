#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "wbr/frame.hpp"

using namespace wbr;

namespace {

// Independent oracle: count equivariant maps G/H -> G/K by enumerating all
// functions on cosets and checking equivariance against the table.
BigInt brute_map_count(const GroupSpec& G, const SubgroupRep& H,
                       const SubgroupRep& K) {
  CayleyTable t = G.to_table();
  std::size_t n = t.table.size();
  auto eh = subgroup_elements(G, H), ek = subgroup_elements(G, K);
  auto cosets = [&](const std::vector<std::uint16_t>& sub) {
    std::vector<int> of(n, -1);
    int c = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (of[g] >= 0) continue;
      for (auto h : sub) of[t.table[g][h]] = c;
      ++c;
    }
    return of;
  };
  auto ch = cosets(eh), ck = cosets(ek);
  int nh = *std::max_element(ch.begin(), ch.end()) + 1;
  int nk = *std::max_element(ck.begin(), ck.end()) + 1;
  // Coset representatives for the domain.
  std::vector<std::size_t> rep(nh);
  for (std::size_t g = n; g-- > 0;) rep[ch[g]] = g;
  REQUIRE(std::pow(double(nk), double(nh)) < 1e7);
  std::vector<int> f(nh, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      for (int c = 0; c < nh && ok; ++c) {
        // g . (rep[c] H) must map to g . f(c).
        int lhs = f[ch[t.table[g][rep[c]]]];
        std::size_t fk = rep[0];  // find an element of coset f(c) of K
        for (std::size_t e = 0; e < n; ++e)
          if (ck[e] == f[c]) { fk = e; break; }
        ok = lhs == ck[t.table[g][fk]];
      }
    if (ok) count += 1;
    int i = 0;
    while (i < nh && ++f[i] == nk) f[i++] = 0;
    if (i == nh) break;
  }
  return count;
}

}  // namespace

TEST_CASE("chain frame") {
  Frame f = build_frame(make_abelian(2, {2}));
  REQUIRE(f.node_count() == 3);
  CHECK(f.nodes[0].size == 1);
  CHECK(f.nodes[1].size == 2);
  CHECK(f.nodes[2].size == 4);
  CHECK(f.bottom() == 0);
  for (std::uint32_t t = 0; t < 3; ++t)
    for (std::uint32_t u = 0; u <= t; ++u) {
      CHECK(f.leq[u][t]);
      CHECK(f.phi[t][u] == f.nodes[u].size);  // abelian: phi = #U
    }
  CHECK(f.covers_below[2] == std::vector<std::uint32_t>{1});
  CHECK(f.linked_pairs().empty());
  for (std::uint32_t t = 0; t < 3; ++t) CHECK(f.nodes[t].cyclic);
}

TEST_CASE("Klein frame has five nodes and three linked pairs") {
  Frame f = build_frame(make_abelian(2, {1, 1}));
  REQUIRE(f.node_count() == 5);
  std::size_t size2 = 0;
  for (auto& n : f.nodes) size2 += n.size == 2;
  CHECK(size2 == 3);
  CHECK(f.linked_pairs().size() == 3);
  // The top node covers all three size-2 nodes.
  CHECK(f.covers_below[4].size() == 3);
}

TEST_CASE("phi matches the brute-force equivariant map count") {
  for (GroupSpec G : {make_abelian(2, {1, 1}), make_abelian(2, {2}),
                      make_dihedral(3)}) {
    Frame f = build_frame(G);
    for (std::uint32_t t = 0; t < f.node_count(); ++t) {
      if (f.nodes[t].size > 4) continue;  // keep the oracle cheap
      for (std::uint32_t u = 0; u < f.node_count(); ++u) {
        if (f.nodes[u].size > 4) continue;
        BigInt want = brute_map_count(G, f.nodes[t].stab, f.nodes[u].stab);
        CHECK(f.phi[t][u] == want);
        CHECK((f.phi[t][u] != 0) == bool(f.leq[u][t]));
      }
    }
  }
}

TEST_CASE("dihedral phi departs from the abelian shortcut") {
  Frame f = build_frame(make_dihedral(3));
  bool found = false;
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    for (std::uint32_t u = 0; u < f.node_count(); ++u)
      if (f.leq[u][t] && f.phi[t][u] != f.nodes[u].size) found = true;
  CHECK(found);
}

TEST_CASE("levels in a homocyclic frame") {
  Frame f = build_frame(make_abelian(2, {2, 2}));
  CHECK(node_level(f, f.bottom()) == 0);
  std::map<std::uint32_t, int> by_level;
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    REQUIRE(f.nodes[t].level.has_value());
    CHECK(node_level(f, t) == *f.nodes[t].level);
    by_level[*f.nodes[t].level]++;
    // Scaling down a node divides its stabilizer entries by p^level.
    std::uint32_t hat = scaled_down_node(f, t);
    CHECK(node_level(f, hat) == 0);
    if (*f.nodes[t].level == 0) CHECK(hat == t);
  }
  // The top node G/1 has full level.
  std::uint32_t top = static_cast<std::uint32_t>(f.node_count() - 1);
  CHECK(node_level(f, top) == 2);
  CHECK(scaled_down_node(f, top) == f.bottom());
  // Levels are undefined for non-homocyclic groups.
  Frame g = build_frame(make_abelian(2, {1, 2}));
  CHECK_THROWS_AS(node_level(g, g.bottom()), LevelUndefinedError);
}

TEST_CASE("cyclic flags agree with quotient invariants") {
  Frame f = build_frame(make_abelian(3, {2, 2}));
  for (auto& n : f.nodes) {
    auto inv = quotient_invariants(f.spec, n.stab);
    int nonzero = 0;
    for (auto e : inv) nonzero += e > 0;
    CHECK(n.cyclic == (nonzero <= 1));
  }
}

TEST_CASE("tj pair nodes are linked with the right sizes") {
  Frame f = build_frame(make_abelian(3, {2, 2}));
  auto [tj, tjp] = tj_pair(f, 2);
  CHECK(tj != tjp);
  CHECK(f.nodes[tj].size == 9);
  CHECK(f.nodes[tjp].size == 9);
  auto pairs = f.linked_pairs();
  bool listed = false;
  for (auto& [a, b] : pairs)
    listed |= (a == std::min(tj, tjp) && b == std::max(tj, tjp)) ||
              (a == std::max(tj, tjp) && b == std::min(tj, tjp));
  CHECK(listed);
  CHECK(f.nodes[tj].cyclic);
  CHECK(f.nodes[tjp].cyclic);
  CHECK_THROWS_AS(tj_pair(f, 1), FrameQueryError);
  CHECK_THROWS_AS(tj_pair(f, 5), FrameQueryError);
}

TEST_CASE("linked cyclic covers") {
  Frame f = build_frame(make_abelian(2, {2, 2}));
  auto [a, b] = linked_cyclic_cover(f, f.bottom());
  CHECK(a != b);
  CHECK(f.nodes[a].size == 2 * f.nodes[f.bottom()].size);
  CHECK(f.nodes[a].size == f.nodes[b].size);
  CHECK(f.nodes[a].cyclic);
  CHECK(f.nodes[b].cyclic);
  CHECK(f.strict_downset(a) == f.strict_downset(b));
  CHECK(f.leq[f.bottom()][a]);
}

TEST_CASE("downsets and covers are consistent") {
  Frame f = build_frame(make_dihedral(4));
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    auto down = f.downset(t);
    CHECK(std::find(down.begin(), down.end(), t) != down.end());
    for (auto c : f.covers_below[t]) {
      CHECK(f.leq[c][t]);
      CHECK(c != t);
      // Nothing strictly between a cover and its node.
      for (auto m : f.strict_downset(t))
        CHECK(!(f.leq[c][m] && m != c && f.leq[m][t] && m != t));
    }
  }
}

TEST_CASE("dot output names every node") {
  Frame f = build_frame(make_abelian(2, {1, 1}));
  std::string dot = f.to_dot();
  CHECK(dot.find("digraph") != std::string::npos);
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    CHECK(dot.find("n" + std::to_string(t)) != std::string::npos);
}
