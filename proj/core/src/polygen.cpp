#include "wbr/polygen.hpp"

#include <algorithm>

namespace wbr {

std::string sym_var_name(VarId v) {
  static const char* roles[] = {"X", "Y", "Z"};
  std::uint32_t family = v >> 28, role = (v >> 24) & 0xf, node = v & 0xffffff;
  std::string s = roles[role];
  if (family) s += std::to_string(family) + "_";
  return s + std::to_string(node);
}

UniversalPolys gen_polys(const Frame& f, PolyKind kind, const BigInt& size_cap,
                         const std::vector<std::uint32_t>* order_hint) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    if (f.nodes[t].size <= size_cap) keep.push_back(t);

  std::vector<std::uint32_t> order = keep;
  if (order_hint) {
    order = *order_hint;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != keep)
      throw Error("order hint must cover exactly the capped nodes");
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (f.nodes[order[i]].size > f.nodes[order[i + 1]].size)
        throw Error("order hint must respect node sizes");
  }

  // Symbolic ghost components of the two operands.
  auto ghost_of = [&](VarRole role, std::uint32_t t) {
    MPoly w{std::optional<std::uint64_t>{}};
    for (auto u : f.downset(t)) {
      if (f.nodes[u].size > size_cap) continue;
      std::uint64_t e =
          static_cast<std::uint64_t>(f.nodes[t].size / f.nodes[u].size);
      w = w + MPoly::constant(f.phi[t][u]) *
                  MPoly::variable(sym_var(role, u)).pow(e);
    }
    return w;
  };

  std::map<std::uint32_t, MPoly> solved;  // node -> coordinate polynomial
  for (auto t : order) {
    MPoly target = kind == PolyKind::Sum
                       ? ghost_of(VarRole::X, t) + ghost_of(VarRole::Y, t)
                       : ghost_of(VarRole::X, t) * ghost_of(VarRole::Y, t);
    for (auto u : f.strict_downset(t)) {
      std::uint64_t e =
          static_cast<std::uint64_t>(f.nodes[t].size / f.nodes[u].size);
      target = target - MPoly::constant(f.phi[t][u]) * solved.at(u).pow(e);
    }
    solved.emplace(t, target.exact_div(f.phi[t][t]));
  }

  UniversalPolys u;
  u.kind = kind;
  u.nodes = keep;
  for (auto t : keep) u.polys.push_back(solved.at(t));
  return u;
}

namespace {

std::uint64_t weighted_degree(const Frame& f, const Monomial& m) {
  std::uint64_t d = 0;
  for (auto& [v, e] : m.exps)
    d += static_cast<std::uint64_t>(f.nodes[v & 0xffffff].size) * e;
  return d;
}

}  // namespace

bool check_homogeneity(const Frame& f, const UniversalPolys& u,
                       std::string* what) {
  for (std::size_t i = 0; i < u.nodes.size(); ++i) {
    std::uint64_t want =
        static_cast<std::uint64_t>(f.nodes[u.nodes[i]].size) *
        (u.kind == PolyKind::Sum ? 1 : 2);
    for (auto& [m, c] : u.polys[i].terms()) {
      if (weighted_degree(f, m) != want) {
        if (what)
          *what = "node " + std::to_string(u.nodes[i]) + ", monomial " +
                  m.str(sym_var_name);
        return false;
      }
    }
  }
  return true;
}

bool check_specializations(const Frame& f, const UniversalPolys& u,
                           std::string* what) {
  std::map<VarId, MPoly> kill_y;
  for (auto t : u.nodes) {
    kill_y.emplace(sym_var(VarRole::X, t), MPoly::variable(sym_var(VarRole::X, t)));
    kill_y.emplace(sym_var(VarRole::Y, t), MPoly{std::optional<std::uint64_t>{}});
  }
  for (std::size_t i = 0; i < u.nodes.size(); ++i) {
    MPoly got = u.polys[i].substitute(kill_y, std::nullopt);
    MPoly want = u.kind == PolyKind::Sum
                     ? MPoly::variable(sym_var(VarRole::X, u.nodes[i]))
                     : MPoly{std::optional<std::uint64_t>{}};
    if (!(got == want)) {
      if (what) *what = "node " + std::to_string(u.nodes[i]);
      return false;
    }
  }
  return true;
}

namespace {

// Generic symbolic element over Z: one fresh variable per coordinate.
WittVec generic_vec(const Frame& f, VarRole role, std::uint32_t family,
                    bool zero_bottom) {
  WittVec a = witt_zero(f, std::nullopt);
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    if (zero_bottom && t == f.bottom()) continue;
    a.coords[t] = MPoly::variable(sym_var(role, t, family));
  }
  return a;
}

MPoly var_mod(VarRole role, std::uint32_t node, std::uint64_t p,
              std::uint32_t family = 0) {
  return MPoly::variable(sym_var(role, node, family), p);
}

}  // namespace

VerifyReport universal_congruence(const Frame& f, CongruenceKind which,
                                  const CongruenceParams& params) {
  if (!f.spec.is_abelian_p()) throw NonAbelianError();
  std::uint64_t p = f.spec.prime();
  BigInt cap = params.size_cap ? *params.size_cap : BigInt(p) * p;
  if (cap > big_pow(p, 3)) throw SizeCapError();

  std::vector<std::uint32_t> keep;
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    if (f.nodes[t].size <= cap) keep.push_back(t);
  Frame sub = subframe(f, keep);

  VerifyReport rep;
  rep.param("group", f.spec.describe());
  rep.param("size_cap", cap.str());

  switch (which) {
    case CongruenceKind::Gen1: {
      rep.suite = "gen1";
      WittVec z = witt_mul(generic_vec(sub, VarRole::X, 0, true),
                           generic_vec(sub, VarRole::Y, 0, false));
      for (std::uint32_t t = 0; t < sub.node_count(); ++t) {
        if (t == sub.bottom() || !sub.nodes[t].cyclic) continue;
        std::uint64_t e = static_cast<std::uint64_t>(sub.nodes[t].size);
        MPoly psi = z.coords[t].reduce_mod(p) -
                    var_mod(VarRole::X, t, p) *
                        var_mod(VarRole::Y, sub.bottom(), p).pow(e);
        auto strict = sub.strict_downset(t);
        bool ok = true;
        for (auto v : psi.variables())
          ok &= std::find(strict.begin(), strict.end(), sym_var_node(v)) !=
                strict.end();
        rep.add("node " + std::to_string(t) +
                    ": remainder supported strictly below",
                ok, std::to_string(psi.term_count()) + " terms");
      }
      break;
    }
    case CongruenceKind::Gen3: {
      rep.suite = "gen3";
      rep.param("families", std::to_string(params.families));
      auto [tj, tjp] = tj_pair(sub, 2);
      WittVec z = witt_zero(sub, std::nullopt);
      for (std::uint32_t i = 1; i <= params.families; ++i)
        z = witt_add(z, witt_mul(generic_vec(sub, VarRole::X, i, true),
                                 generic_vec(sub, VarRole::Y, i, false)));
      std::uint64_t e = static_cast<std::uint64_t>(sub.nodes[tj].size);
      MPoly lhs = (z.coords[tj] - z.coords[tjp]).reduce_mod(p);
      MPoly rhs{std::optional<std::uint64_t>(p)};
      for (std::uint32_t i = 1; i <= params.families; ++i)
        rhs = rhs + (var_mod(VarRole::X, tj, p, i) -
                     var_mod(VarRole::X, tjp, p, i)) *
                        var_mod(VarRole::Y, sub.bottom(), p, i).pow(e);
      rep.add("linked-pair difference identity", lhs == rhs);
      break;
    }
    case CongruenceKind::NiCyclicProd: {
      rep.suite = "nicyclicprod";
      auto [tj, tjp] = tj_pair(sub, 2);
      WittVec z = witt_mul(generic_vec(sub, VarRole::X, 0, false),
                           generic_vec(sub, VarRole::Y, 0, false));
      std::uint64_t e = static_cast<std::uint64_t>(sub.nodes[tj].size);
      MPoly lhs = (z.coords[tj] - z.coords[tjp]).reduce_mod(p);
      std::uint32_t b = sub.bottom();
      MPoly rhs =
          (var_mod(VarRole::X, tj, p) - var_mod(VarRole::X, tjp, p)) *
              var_mod(VarRole::Y, b, p).pow(e) +
          (var_mod(VarRole::Y, tj, p) - var_mod(VarRole::Y, tjp, p)) *
              var_mod(VarRole::X, b, p).pow(e);
      rep.add("linked-pair product difference identity", lhs == rhs);
      break;
    }
    case CongruenceKind::PMult: {
      rep.suite = "pmult";
      WittVec x = generic_vec(sub, VarRole::X, 0, false);
      WittVec px = witt_int_scale(BigInt(p), x);
      for (std::uint32_t t = 0; t < sub.node_count(); ++t) {
        if (sub.nodes[t].size != p) continue;
        MPoly x0 = MPoly::variable(sym_var(VarRole::X, sub.bottom()));
        MPoly want =
            MPoly::constant(1 - big_pow(p, p - 1)) * x0.pow(p) +
            MPoly::constant(p) * MPoly::variable(sym_var(VarRole::X, t));
        rep.add("node " + std::to_string(t) + ": integral formula",
                px.coords[t] == want);
        rep.add("node " + std::to_string(t) + ": mod-p collapse",
                px.coords[t].reduce_mod(p) ==
                    var_mod(VarRole::X, sub.bottom(), p).pow(p));
      }
      break;
    }
  }
  return rep;
}

}  // namespace wbr
