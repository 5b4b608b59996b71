#include "wbr/verify.hpp"

#include <algorithm>
#include <sstream>

namespace wbr {

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "suite " << suite << (pass() ? " PASS" : " FAIL") << "\n";
  for (auto& [k, v] : params) out << "  " << k << " = " << v << "\n";
  for (auto& c : cases) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
  }
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json prm = nlohmann::json::object();
  for (auto& [k, v] : params) prm[k] = v;
  nlohmann::json cs = nlohmann::json::array();
  for (auto& c : cases)
    cs.push_back({{"name", c.name},
                  {"status", c.pass ? "pass" : "fail"},
                  {"detail", c.detail}});
  return {{"suite", suite}, {"params", prm}, {"cases", cs},
          {"overall", pass() ? "pass" : "fail"}};
}

WittVec random_vec(const Frame& f, std::uint64_t p, Rng& rng,
                   bool zero_bottom) {
  WittVec a = witt_zero(f, p);
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    if (zero_bottom && t == f.bottom()) continue;
    a.coords[t] = MPoly::constant(BigInt(rng.below(p)), p);
  }
  return a;
}

VerifyReport check_ratio_property(const Frame& f) {
  VerifyReport rep;
  rep.suite = "ratio";
  rep.param("group", f.spec.describe());
  BigInt p(f.spec.prime());
  std::size_t triples = 0, violations = 0;
  std::string first_bad;
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    auto down = f.downset(t);
    for (auto t1 : down)
      for (auto t2 : down) {
        if (f.nodes[t].size >= f.nodes[t1].size * f.nodes[t2].size) continue;
        ++triples;
        BigInt num = f.phi[t][t1] * f.phi[t][t2];
        bool ok = num % f.phi[t][t] == 0 && (num / f.phi[t][t]) % p == 0;
        if (!ok) {
          ++violations;
          if (first_bad.empty()) {
            std::ostringstream o;
            o << "(T=" << t << ",T1=" << t1 << ",T2=" << t2 << ")";
            first_bad = o.str();
          }
        }
      }
  }
  std::ostringstream d;
  d << triples << " triples, " << violations << " violations";
  if (!first_bad.empty()) d << ", first " << first_bad;
  rep.add("phi ratios divisible by p", violations == 0, d.str());
  return rep;
}

VerifyReport check_linked_constraints(const Frame& f, std::uint64_t seed,
                                      int trials) {
  VerifyReport rep;
  rep.suite = "linked";
  rep.param("group", f.spec.describe());
  rep.param("seed", std::to_string(seed));
  rep.param("trials", std::to_string(trials));
  std::uint64_t p = f.spec.prime();
  auto pairs = f.linked_pairs();
  rep.add("frame has linked pairs", !pairs.empty(),
          std::to_string(pairs.size()) + " pairs");
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    // Random element of the square of the maximal ideal: a sum of at most
    // four products with vanishing bottom coordinates.
    int r = 1 + static_cast<int>(rng.below(4));
    WittVec z = witt_zero(f, p);
    for (int k = 0; k < r; ++k)
      z = witt_add(z, witt_mul(random_vec(f, p, rng, true),
                               random_vec(f, p, rng, true)));
    for (auto& [a, b] : pairs)
      if (!(z.coords[a] == z.coords[b])) ++bad;
  }
  rep.add("ideal-square elements agree on linked pairs", bad == 0,
          std::to_string(bad) + " mismatches");
  // A single bump at one node of a linked pair breaks the equality,
  // certifying it lies outside the ideal square.
  int broken = 0;
  for (auto& [a, b] : pairs) {
    WittVec w = teichmuller(f, a, MPoly::constant(1, p));
    if (!(w.coords[a] == w.coords[b])) ++broken;
  }
  rep.add("single-node bump violates the constraint at its own pair",
          broken == static_cast<int>(pairs.size()),
          std::to_string(broken) + "/" + std::to_string(pairs.size()));
  return rep;
}

VerifyReport check_nondomain(std::uint32_t p, std::uint32_t d,
                             std::uint32_t trunc) {
  VerifyReport rep;
  rep.suite = "nondomain";
  rep.param("p", std::to_string(p));
  rep.param("d", std::to_string(d));
  rep.param("trunc", std::to_string(trunc));
  Frame f = build_frame(make_abelian(p, std::vector<std::uint32_t>(d, trunc)));

  bool idem_fp = true, idem_z = true;
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    if (t == f.bottom()) continue;
    for (std::optional<std::uint64_t> mod :
         {std::optional<std::uint64_t>{p}, std::optional<std::uint64_t>{}}) {
      WittVec w = teichmuller(f, t, MPoly::constant(1, mod));
      WittVec lhs = witt_mul(w, w);
      WittVec rhs = witt_int_scale(f.nodes[t].size, w);
      (mod ? idem_fp : idem_z) &= witt_eq(lhs, rhs);
    }
  }
  rep.add("omega_T(1)^2 = #T omega_T(1) over Z/p", idem_fp);
  rep.add("same identity over Z before reduction", idem_z);

  WittVec one = teichmuller(f, MPoly::constant(1, std::uint64_t(p)));
  WittVec p1 = witt_int_scale(p, one);
  bool psupp = true;
  std::vector<std::uint32_t> size_p;
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    if (f.nodes[t].size == p) {
      size_p.push_back(t);
      psupp &= p1.coords[t] == MPoly::constant(1, std::uint64_t(p));
    }
  }
  psupp &= p1.coords[f.bottom()].is_zero();
  rep.add("p*1 has coordinate 1 at every size-p node", psupp,
          std::to_string(size_p.size()) + " nodes");

  if (d >= 2) {
    // omega(1) and omega(1) - p*1 at a size-p node: both nonzero, product 0.
    std::uint32_t t = size_p.front();
    WittVec w = teichmuller(f, t, MPoly::constant(1, std::uint64_t(p)));
    WittVec other = witt_sub(w, p1);
    bool ok = !witt_is_zero(w) && !witt_is_zero(other) &&
              witt_is_zero(witt_mul(w, other));
    rep.add("nonzero zero-divisor pair", ok, "node " + std::to_string(t));
  } else {
    // Chain frames: the same witnesses degenerate (the ring is Z/p^{r+1}).
    bool all_degenerate = true;
    for (auto t : size_p) {
      WittVec w = teichmuller(f, t, MPoly::constant(1, std::uint64_t(p)));
      WittVec other = witt_sub(w, p1);
      all_degenerate &= witt_is_zero(other) || witt_is_zero(w);
    }
    rep.add("chain frame yields no nonzero pair among these witnesses",
            all_degenerate);
  }
  return rep;
}

VerifyReport nilpotent_witness(std::uint32_t p, std::uint32_t m,
                               WittVec* witness, const Frame** frame_out) {
  if (p == 2) throw EvenPrimeError();
  if (m < 2) throw Error("truncation must be at least 2");
  VerifyReport rep;
  rep.suite = "nilpotent";
  rep.param("p", std::to_string(p));
  rep.param("m", std::to_string(m));

  static std::vector<std::unique_ptr<Frame>> keep_alive;
  auto fptr = std::make_unique<Frame>(build_frame(make_abelian(p, {1, m})));
  const Frame& f = *fptr;
  keep_alive.push_back(std::move(fptr));
  if (frame_out) *frame_out = &f;
  const auto& A = f.spec.abelian();

  // The two size-p^2 covers of the first chain node that sit off the chain:
  // lattices spanned by (p, 0) and (j, p) for j = 1, 2.
  auto cover = [&](std::uint32_t j) {
    auto h = hnf_from_generators(
        A, {{BigInt(p), BigInt(0)}, {BigInt(j), BigInt(p)}});
    auto id = f.find_node(SubgroupRep{h});
    if (!id) throw FrameQueryError("cover node missing from frame");
    return *id;
  };
  std::uint32_t a = cover(1), b = cover(2);

  // Integral lift with literal coordinates 1 and -1.
  WittVec xz = witt_zero(f, std::nullopt);
  xz.coords[a] = MPoly::constant(1);
  xz.coords[b] = MPoly::constant(-1);
  auto w = ghost(xz);
  BigInt p2 = BigInt(p) * p;
  bool ghost_ok = true;
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    BigInt want = t == a ? p2 : t == b ? -p2 : BigInt(0);
    ghost_ok &= w[t] == MPoly::constant(want);
  }
  rep.add("ghost values are (p^2, -p^2, 0)", ghost_ok);

  WittVec x = witt_zero(f, std::uint64_t(p));
  x.coords[a] = MPoly::constant(1, std::uint64_t(p));
  x.coords[b] = MPoly::constant(p - 1, std::uint64_t(p));
  rep.add("x != 0", !witt_is_zero(x));
  rep.add("x^2 = 0", witt_is_zero(witt_mul(x, x)));
  if (witness) *witness = x;
  return rep;
}

namespace {

std::uint32_t find_hnf_node(const Frame& f,
                            std::vector<std::vector<BigInt>> cols) {
  auto h = hnf_from_generators(f.spec.abelian(), std::move(cols));
  auto id = f.find_node(SubgroupRep{h});
  if (!id) throw FrameQueryError("expected node missing from frame");
  return *id;
}

}  // namespace

VerifyReport check_annihilator(std::uint32_t p, std::uint32_t n,
                               std::uint64_t seed, int trials) {
  if (p == 2) throw EvenPrimeError();
  VerifyReport rep;
  rep.suite = "annihilator";
  rep.param("p", std::to_string(p));
  rep.param("n", std::to_string(n));
  rep.param("seed", std::to_string(seed));
  rep.param("trials", std::to_string(trials));
  Frame f = build_frame(make_abelian(p, {n, n}));

  // V and W: the two distinguished size-p directions.
  std::uint32_t v_node =
      find_hnf_node(f, {{BigInt(p), BigInt(0)}, {BigInt(0), BigInt(1)}});
  WittVec omega_v = witt_zero(f, std::uint64_t(p));
  omega_v.coords[v_node] = MPoly::constant(1, std::uint64_t(p));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> family;
  for (std::uint32_t j = 2; j <= n; ++j) family.push_back(tj_pair(f, j));

  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    WittVec x = witt_zero(f, std::uint64_t(p));
    for (auto& [tj, tjp] : family) {
      std::uint64_t c = rng.below(p);
      x.coords[tj] = MPoly::constant(BigInt(c), std::uint64_t(p));
      x.coords[tjp] = MPoly::constant(BigInt((p - c) % p), std::uint64_t(p));
    }
    if (!witt_is_zero(witt_mul(x, omega_v))) ++bad;
  }
  rep.add("opposite-coordinate family elements annihilate omega_V(1)",
          bad == 0, std::to_string(bad) + " failures");

  // Zero trivially annihilates.
  rep.add("zero annihilates", witt_is_zero(witt_mul(
                                  witt_zero(f, std::uint64_t(p)), omega_v)));

  // Linear relation at linked pairs for sums of products b_i * c_i with
  // b_i in the maximal ideal: a_T - a_T' = sum (b_{i,T} - b_{i,T'}) c_{i,0}^{#T}.
  int rel_bad = 0;
  for (int i = 0; i < trials; ++i) {
    int r = 1 + static_cast<int>(rng.below(2));
    std::vector<WittVec> bs, cs;
    WittVec a = witt_zero(f, std::uint64_t(p));
    for (int k = 0; k < r; ++k) {
      bs.push_back(random_vec(f, p, rng, true));
      cs.push_back(random_vec(f, p, rng, false));
      a = witt_add(a, witt_mul(bs.back(), cs.back()));
    }
    for (auto& [tj, tjp] : family) {
      BigInt m(p);
      BigInt lhs =
          mod_reduce(a.coords[tj].constant_value() -
                         a.coords[tjp].constant_value(), m);
      BigInt rhs = 0;
      std::uint64_t sz = static_cast<std::uint64_t>(f.nodes[tj].size);
      for (int k = 0; k < r; ++k) {
        BigInt diff = bs[k].coords[tj].constant_value() -
                      bs[k].coords[tjp].constant_value();
        rhs += diff * big_pow(cs[k].coords[f.bottom()].constant_value(), sz);
      }
      if (lhs != mod_reduce(rhs, m)) ++rel_bad;
    }
  }
  rep.add("linked-pair coordinate relation for ideal elements", rel_bad == 0,
          std::to_string(rel_bad) + " failures");
  return rep;
}

VerifyReport check_reduced_coordinate(std::uint32_t p, std::uint32_t trunc,
                                      std::uint64_t seed, int trials) {
  VerifyReport rep;
  rep.suite = "reduced";
  rep.param("p", std::to_string(p));
  rep.param("trunc", std::to_string(trunc));
  rep.param("seed", std::to_string(seed));
  rep.param("trials", std::to_string(trials));
  Frame f = build_frame(make_abelian(p, {trunc, trunc}));
  Rng rng(seed);

  int ok_cnt = 0, bad = 0;
  for (int i = 0; i < trials; ++i) {
    WittVec v{&f, std::uint64_t(p), {}};
    std::uint32_t t0 = 0, t = 0;
    bool admissible = false;
    for (int attempt = 0; attempt < 100 && !admissible; ++attempt) {
      v = random_vec(f, p, rng, true);
      if (witt_is_zero(v)) continue;
      // Minimal level, then minimal size, among the support.
      std::uint32_t best = 0;
      bool have = false;
      for (std::uint32_t u = 0; u < f.node_count(); ++u) {
        if (v.coords[u].is_zero()) continue;
        if (!have || node_level(f, u) < node_level(f, best) ||
            (node_level(f, u) == node_level(f, best) &&
             f.nodes[u].size < f.nodes[best].size)) {
          best = u;
          have = true;
        }
      }
      t0 = best;
      // Zero the other support nodes tied at (level, size) so the selected
      // node is the hypothesis's T0 regardless of which tie is taken.
      for (std::uint32_t u = 0; u < f.node_count(); ++u)
        if (u != t0 && node_level(f, u) == node_level(f, t0) &&
            f.nodes[u].size == f.nodes[t0].size)
          v.coords[u] = MPoly(std::optional<std::uint64_t>(std::uint64_t(p)));
      BigInt target = f.nodes[t0].size * f.nodes[t0].size;
      for (std::uint32_t cand = 0; cand < f.node_count(); ++cand) {
        if (f.nodes[cand].size == target && f.leq[t0][cand] &&
            node_level(f, cand) == node_level(f, t0)) {
          t = cand;
          admissible = true;
          break;
        }
      }
    }
    if (!admissible) throw TruncationTooSmallError();
    WittVec sq = witt_mul(v, v);
    std::uint64_t e = 2 * static_cast<std::uint64_t>(f.nodes[t0].size);
    BigInt want = mod_reduce(big_pow(v.coords[t0].constant_value(), e),
                             BigInt(p));
    bool good = want != 0 && sq.coords[t] == MPoly::constant(want, std::uint64_t(p));
    good ? ++ok_cnt : ++bad;
  }
  rep.add("(v^2)_T = v_{T0}^{2#T0} != 0", bad == 0,
          std::to_string(ok_cnt) + "/" + std::to_string(trials));
  return rep;
}

VerifyReport check_ideal_products(const Frame& f, std::uint32_t m,
                                  std::uint32_t n, std::uint64_t seed,
                                  int trials) {
  VerifyReport rep;
  rep.suite = "idealprod";
  rep.param("group", f.spec.describe());
  rep.param("m", std::to_string(m));
  rep.param("n", std::to_string(n));
  rep.param("seed", std::to_string(seed));
  rep.param("trials", std::to_string(trials));
  std::uint64_t p = f.spec.prime();

  rep.add("ratio property holds", check_ratio_property(f).pass());

  Rng rng(seed);
  BigInt pm = big_pow(p, m), pn = big_pow(p, n), pmn = big_pow(p, m + n);
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    WittVec a = random_vec(f, p, rng, false);
    WittVec b = random_vec(f, p, rng, false);
    for (std::uint32_t t = 0; t < f.node_count(); ++t) {
      if (f.nodes[t].size < pm) a.coords[t] = MPoly(std::optional<std::uint64_t>(p));
      if (f.nodes[t].size < pn) b.coords[t] = MPoly(std::optional<std::uint64_t>(p));
    }
    if (!in_size_ideal(witt_mul(a, b), pmn)) ++bad;
  }
  rep.add("products land in the expected size ideal", bad == 0,
          std::to_string(bad) + " failures");

  // Characteristic 0 is genuinely different: on the chain of length 2 the
  // square of the size-p bump stays at size p.
  Frame chain = build_frame(make_abelian(static_cast<std::uint32_t>(p), {2}));
  WittVec x = witt_zero(chain, std::nullopt);
  for (std::uint32_t t = 0; t < chain.node_count(); ++t)
    if (chain.nodes[t].size == p) x.coords[t] = MPoly::constant(1);
  WittVec sq = witt_mul(x, x);
  bool counter = !in_size_ideal(sq, BigInt(p) * p) &&
                 witt_eq(sq, witt_int_scale(p, x));
  rep.add("char-0 counterexample: x^2 = p x stays at size p", counter);
  return rep;
}

VerifyReport prime_ideal_paths(std::uint32_t p, std::uint32_t trunc,
                               std::uint64_t seed, int trials) {
  VerifyReport rep;
  rep.suite = "primepath";
  rep.param("p", std::to_string(p));
  rep.param("trunc", std::to_string(trunc));
  rep.param("seed", std::to_string(seed));
  rep.param("trials", std::to_string(trials));
  Frame f = build_frame(make_abelian(p, {trunc, trunc}));

  // Chain fixed by projection onto the second coordinate: stabilizers
  // contain e1, i.e. lattices (1, 0; 0, p^r).
  std::vector<std::uint32_t> chain;
  for (std::uint32_t r = 0; r <= trunc; ++r)
    chain.push_back(find_hnf_node(
        f, {{BigInt(1), BigInt(0)}, {BigInt(0), big_pow(p, r)}}));

  // The chain is exactly the set of nodes whose stabilizer contains e1.
  bool exact = true;
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    const auto& h = std::get<HnfSubgroup>(f.nodes[t].stab.s);
    bool has_e1 = h.h[0][0] == 1 && h.h[1][0] == 0;
    bool in_chain = std::find(chain.begin(), chain.end(), t) != chain.end();
    exact &= has_e1 == in_chain;
    if (in_chain) exact &= f.nodes[t].cyclic && node_level(f, t) == 0;
  }
  rep.add("chain = cyclic level-0 nodes fixing the kernel direction", exact);

  Frame sub = subframe(f, chain);
  Frame classical = build_frame(make_abelian(p, {trunc}));
  bool same_phi = sub.node_count() == classical.node_count();
  for (std::uint32_t i = 0; same_phi && i < sub.node_count(); ++i)
    for (std::uint32_t j = 0; j < sub.node_count(); ++j)
      same_phi &= sub.phi[i][j] == classical.phi[i][j];
  rep.add("chain sub-frame matches the classical chain", same_phi);

  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    WittVec a = random_vec(f, p, rng, false);
    WittVec b = random_vec(f, p, rng, false);
    WittVec lhs = witt_project(witt_mul(a, b), sub, chain);
    WittVec rhs = witt_mul(witt_project(a, sub, chain),
                           witt_project(b, sub, chain));
    if (!witt_eq(lhs, rhs)) ++bad;
    lhs = witt_project(witt_add(a, b), sub, chain);
    rhs = witt_add(witt_project(a, sub, chain), witt_project(b, sub, chain));
    if (!witt_eq(lhs, rhs)) ++bad;
  }
  rep.add("projection is a ring homomorphism", bad == 0,
          std::to_string(bad) + " failures");

  // Kernel is nonzero: any vector supported off the cyclic nodes projects
  // to zero along every such path.
  WittVec off = witt_zero(f, std::uint64_t(p));
  bool placed = false;
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    if (!f.nodes[t].cyclic && t != f.bottom()) {
      off.coords[t] = MPoly::constant(1, std::uint64_t(p));
      placed = true;
      break;
    }
  bool in_kernel = placed && witt_is_zero(witt_project(off, sub, chain)) &&
                   !witt_is_zero(off);
  rep.add("nonzero vector supported off cyclic nodes lies in the kernel",
          in_kernel);
  return rep;
}

}  // namespace wbr
