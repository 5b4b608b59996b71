#include "wbr/json_io.hpp"

#include <algorithm>

namespace wbr {

json poly_to_json(const MPoly& p) {
  auto vars = p.variables();
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<std::uint32_t> exps(vars.size(), 0);
    for (auto& [v, e] : it->first.exps) {
      auto pos = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
      exps[pos] = e;
    }
    terms.push_back({{"exps", exps}, {"coef", it->second.str()}});
  }
  json j{{"vars", vars}, {"terms", terms}};
  if (p.modulus()) j["mod"] = *p.modulus();
  return j;
}

MPoly poly_from_json(const json& j) {
  std::optional<std::uint64_t> mod;
  if (j.contains("mod")) mod = j["mod"].get<std::uint64_t>();
  std::vector<VarId> vars = j.at("vars").get<std::vector<VarId>>();
  MPoly p(mod);
  for (auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
    if (exps.size() != vars.size()) throw Error("term arity mismatch");
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (exps[i]) m.exps.emplace_back(vars[i], exps[i]);
    std::sort(m.exps.begin(), m.exps.end());
    p.add_term(m, BigInt(t.at("coef").get<std::string>()));
  }
  return p;
}

json spec_to_json(const GroupSpec& g) {
  if (auto* a = std::get_if<AbelianP>(&g.g))
    return {{"type", "abelian"}, {"p", a->p}, {"exponents", a->exponents}};
  if (auto* d = std::get_if<Dihedral2>(&g.g))
    return {{"type", "dihedral"}, {"n", d->n}};
  return {{"type", "table"}, {"table", std::get<CayleyTable>(g.g).table}};
}

GroupSpec spec_from_json(const json& j) {
  auto type = j.at("type").get<std::string>();
  if (type == "abelian")
    return make_abelian(j.at("p").get<std::uint32_t>(),
                        j.at("exponents").get<std::vector<std::uint32_t>>());
  if (type == "dihedral") return make_dihedral(j.at("n").get<std::uint32_t>());
  if (type == "table")
    return make_table(
        j.at("table").get<std::vector<std::vector<std::uint16_t>>>());
  throw Error("unknown group type: " + type);
}

json subgroup_to_json(const SubgroupRep& s) {
  if (auto* h = std::get_if<HnfSubgroup>(&s.s)) {
    json rows = json::array();
    for (auto& row : h->h) {
      json r = json::array();
      for (auto& v : row) r.push_back(v.str());
      rows.push_back(r);
    }
    return {{"kind", "lattice"}, {"hnf", rows}};
  }
  if (auto* d = std::get_if<DihedralSub>(&s.s)) {
    if (d->kind == DihedralSub::Rotation)
      return {{"kind", "rotation"}, {"d", d->d}};
    return {{"kind", "mixed"}, {"d", d->d}, {"i", d->i}};
  }
  return {{"kind", "elements"}, {"elems", std::get<ElementSet>(s.s).elems}};
}

json frame_to_json(const Frame& f) {
  json nodes = json::array();
  for (auto& nd : f.nodes) {
    json n{{"id", nd.id},
           {"stab", subgroup_to_json(nd.stab)},
           {"size", nd.size.str()},
           {"cyclic", nd.cyclic}};
    if (nd.level) n["level"] = *nd.level;
    nodes.push_back(std::move(n));
  }
  json phi = json::array(), covers = json::array();
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    json row = json::array();
    for (std::uint32_t u = 0; u < f.node_count(); ++u)
      row.push_back(f.phi[t][u].str());
    phi.push_back(std::move(row));
    covers.push_back(f.covers_below[t]);
  }
  return {{"group", spec_to_json(f.spec)},
          {"nodes", nodes},
          {"phi", phi},
          {"covers_below", covers}};
}

json witt_to_json(const WittVec& a) {
  json coords = json::array();
  for (auto& c : a.coords) coords.push_back(poly_to_json(c));
  return {{"group", spec_to_json(a.frame->spec)},
          {"ring", a.modulus ? "Z/" + std::to_string(*a.modulus) : "Z"},
          {"coords", coords}};
}

WittVec witt_from_json(const json& j, const Frame& f) {
  auto ring = j.at("ring").get<std::string>();
  std::optional<std::uint64_t> mod;
  if (ring != "Z") {
    if (ring.rfind("Z/", 0) != 0) throw Error("unknown ring tag: " + ring);
    mod = std::stoull(ring.substr(2));
  }
  WittVec a{&f, mod, {}};
  for (auto& c : j.at("coords")) {
    MPoly p = poly_from_json(c);
    if (mod && !p.modulus())
      p = p.reduce_mod(*mod);
    a.coords.push_back(std::move(p));
  }
  if (a.coords.size() != f.node_count())
    throw Error("coordinate count does not match the frame");
  return a;
}

}  // namespace wbr
