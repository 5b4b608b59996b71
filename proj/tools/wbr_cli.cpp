// Command-line front end: frame exploration, universal polynomial
// generation, Witt-vector arithmetic on JSON inputs, and the verification
// suites.  Exit code 0 = success / all checks pass, 1 = a verification
// failed, 2 = usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wbr/frame.hpp"
#include "wbr/json_io.hpp"
#include "wbr/polygen.hpp"
#include "wbr/verify.hpp"
#include "wbr/witt.hpp"

namespace {

using namespace wbr;

struct GroupFlags {
  std::uint32_t p = 2;
  std::uint32_t d = 2;
  std::uint32_t trunc = 2;
  std::uint32_t dihedral = 0;  // when nonzero: D_{2^dihedral} instead
  bool allow_any_p = false;
};

void add_group_flags(CLI::App* cmd, GroupFlags& g) {
  cmd->add_option("--p", g.p, "prime (2, 3 or 5; --any-prime to override)");
  cmd->add_option("--d", g.d, "number of cyclic factors");
  cmd->add_option("--trunc", g.trunc, "truncation exponent n (factors Z/p^n)");
  cmd->add_option("--dihedral", g.dihedral,
                  "use the dihedral group of order 2^k instead");
  cmd->add_flag("--any-prime", g.allow_any_p, "skip the small-prime check");
}

GroupSpec spec_of(const GroupFlags& g) {
  if (g.dihedral) return make_dihedral(g.dihedral);
  if (!g.allow_any_p && g.p != 2 && g.p != 3 && g.p != 5)
    throw CLI::ValidationError("--p", "expected 2, 3 or 5 (or --any-prime)");
  if (g.trunc < 1) throw CLI::ValidationError("--trunc", "must be >= 1");
  return make_abelian(g.p, std::vector<std::uint32_t>(g.d, g.trunc));
}

void emit(const std::string& s, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot open output file " + out_path);
  f << s;
}

std::string frame_text(const Frame& f) {
  std::ostringstream o;
  o << "frame of " << f.spec.describe() << ": " << f.node_count()
    << " nodes\n";
  for (auto& n : f.nodes) {
    o << "  [" << n.id << "] size " << n.size.str() << " stab "
      << n.stab.key();
    if (n.level) o << " level " << *n.level;
    if (n.cyclic) o << " cyclic";
    o << " covers{";
    bool first = true;
    for (auto c : f.covers_below[n.id]) {
      if (!first) o << ",";
      o << c;
      first = false;
    }
    o << "}\n";
  }
  auto pairs = f.linked_pairs();
  for (auto& [a, b] : pairs) o << "  linked (" << a << "," << b << ")\n";
  return o.str();
}

BigInt effective_size_cap(const GroupFlags& g, const std::string& cap_str) {
  if (const char* env = std::getenv("WB_SIZE_CAP")) return from_decimal(env);
  if (!cap_str.empty()) return from_decimal(cap_str);
  return BigInt(g.p) * g.p;
}

std::string poly_text(const Frame& f, const UniversalPolys& u) {
  std::ostringstream o;
  o << (u.kind == PolyKind::Sum ? "sum" : "product")
    << " polynomials for " << f.spec.describe() << "\n";
  for (std::size_t i = 0; i < u.nodes.size(); ++i)
    o << "  node " << u.nodes[i] << " (size "
      << f.nodes[u.nodes[i]].size.str()
      << "): " << u.polys[i].str(sym_var_name) << "\n";
  return o.str();
}

WittVec load_vec(const std::string& path, const Frame& f) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file " + path);
  json j;
  in >> j;
  return witt_from_json(j, f);
}

int run_verify(const std::string& suite, const GroupFlags& g,
               std::uint64_t seed, int trials, std::uint32_t m,
               std::uint32_t n, std::uint32_t families, bool as_json,
               const std::string& out_path) {
  VerifyReport rep;
  if (suite == "ratio") {
    rep = check_ratio_property(build_frame(spec_of(g)));
  } else if (suite == "linked") {
    rep = check_linked_constraints(build_frame(spec_of(g)), seed, trials);
  } else if (suite == "nondomain") {
    rep = check_nondomain(g.p, g.d, g.trunc);
  } else if (suite == "nilpotent") {
    rep = nilpotent_witness(g.p, g.trunc);
  } else if (suite == "annihilator") {
    rep = check_annihilator(g.p, g.trunc, seed, trials);
  } else if (suite == "reduced") {
    rep = check_reduced_coordinate(g.p, g.trunc, seed, trials);
  } else if (suite == "idealprod") {
    rep = check_ideal_products(build_frame(spec_of(g)), m, n, seed, trials);
  } else if (suite == "primepath") {
    rep = prime_ideal_paths(g.p, g.trunc, seed, trials);
  } else if (suite == "gen1" || suite == "gen3" || suite == "nicyclicprod" ||
             suite == "pmult") {
    CongruenceKind k = suite == "gen1"           ? CongruenceKind::Gen1
                       : suite == "gen3"         ? CongruenceKind::Gen3
                       : suite == "nicyclicprod" ? CongruenceKind::NiCyclicProd
                                                 : CongruenceKind::PMult;
    CongruenceParams prm;
    prm.families = families;
    rep = universal_congruence(build_frame(spec_of(g)), k, prm);
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  emit(as_json ? rep.to_json().dump(2) + "\n" : rep.text(), out_path);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in truncated Witt-Burnside rings"};
  app.require_subcommand(1);

  GroupFlags g;
  std::string format = "text", out_path;

  // frame ------------------------------------------------------------------
  auto* cmd_frame = app.add_subcommand("frame", "build and dump a frame");
  add_group_flags(cmd_frame, g);
  cmd_frame->add_option("--format", format, "text | json | dot");
  cmd_frame->add_option("--out", out_path, "output file (default stdout)");

  // poly -------------------------------------------------------------------
  std::string kind = "sum", cap_str;
  auto* cmd_poly =
      app.add_subcommand("poly", "generate universal polynomials");
  add_group_flags(cmd_poly, g);
  cmd_poly->add_option("--kind", kind, "sum | product");
  cmd_poly->add_option("--size-cap", cap_str,
                       "largest node size to solve (default p^2)");
  cmd_poly->add_option("--format", format, "text | json");
  cmd_poly->add_option("--out", out_path, "output file (default stdout)");

  // witt -------------------------------------------------------------------
  std::string op = "add", a_path, b_path, scalar_str = "1", const_str = "1";
  std::uint32_t node_arg = 0;
  bool over_z = false;
  auto* cmd_witt = app.add_subcommand("witt", "Witt-vector arithmetic");
  add_group_flags(cmd_witt, g);
  cmd_witt->add_option(
      "--op", op,
      "add | sub | mul | neg | scalar | teich | ghost | ghostinv | inv | "
      "project | ideal");
  cmd_witt->add_option("--a", a_path, "first operand (JSON file)");
  cmd_witt->add_option("--b", b_path, "second operand (JSON file)");
  cmd_witt->add_option("--scalar", scalar_str, "integer for --op scalar");
  cmd_witt->add_option("--value", const_str, "constant for --op teich");
  cmd_witt->add_option("--node", node_arg,
                       "node id for teich / project / ideal");
  cmd_witt->add_flag("--over-z", over_z, "work over Z instead of Z/p");
  cmd_witt->add_option("--format", format, "text | json");
  cmd_witt->add_option("--out", out_path, "output file (default stdout)");

  // verify -----------------------------------------------------------------
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 32;
  std::uint32_t ideal_m = 1, ideal_n = 1, families = 1;
  bool as_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", suite,
                   "ratio | linked | nondomain | nilpotent | annihilator | "
                   "reduced | idealprod | primepath | gen1 | gen3 | "
                   "nicyclicprod | pmult")
      ->required();
  add_group_flags(cmd_verify, g);
  cmd_verify->add_option("--seed", seed, "RNG seed (default 0)");
  cmd_verify->add_option("--trials", trials, "random trials per case");
  cmd_verify->add_option("--m", ideal_m, "ideal exponent m (idealprod)");
  cmd_verify->add_option("--n", ideal_n, "ideal exponent n (idealprod)");
  cmd_verify->add_option("--r", families, "number of summand families (gen3)");
  cmd_verify->add_flag("--json", as_json, "emit the report as JSON");
  cmd_verify->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_frame->parsed()) {
      Frame f = build_frame(spec_of(g));
      if (format == "json")
        emit(frame_to_json(f).dump(2) + "\n", out_path);
      else if (format == "dot")
        emit(f.to_dot(), out_path);
      else
        emit(frame_text(f), out_path);
      return 0;
    }
    if (cmd_poly->parsed()) {
      Frame f = build_frame(spec_of(g));
      PolyKind k = kind == "product" ? PolyKind::Product : PolyKind::Sum;
      UniversalPolys u = gen_polys(f, k, effective_size_cap(g, cap_str));
      if (format == "json") {
        json j = {{"kind", kind == "product" ? "product" : "sum"},
                  {"nodes", u.nodes},
                  {"polys", json::array()}};
        for (auto& p : u.polys) j["polys"].push_back(poly_to_json(p));
        emit(j.dump(2) + "\n", out_path);
      } else {
        emit(poly_text(f, u), out_path);
      }
      return 0;
    }
    if (cmd_witt->parsed()) {
      Frame f = build_frame(spec_of(g));
      std::optional<std::uint64_t> mod;
      if (!over_z) mod = g.p;
      auto need_a = [&] { return load_vec(a_path, f); };
      auto out_vec = [&](const WittVec& v) {
        if (format == "json")
          emit(witt_to_json(v).dump(2) + "\n", out_path);
        else {
          std::ostringstream o;
          for (std::uint32_t t = 0; t < f.node_count(); ++t)
            o << "  [" << t << "] " << v.coords[t].str(sym_var_name) << "\n";
          emit(o.str(), out_path);
        }
      };
      if (op == "add" || op == "sub" || op == "mul") {
        WittVec a = need_a(), b = load_vec(b_path, f);
        out_vec(op == "add"   ? witt_add(a, b)
                : op == "sub" ? witt_sub(a, b)
                              : witt_mul(a, b));
      } else if (op == "neg") {
        out_vec(witt_neg(need_a()));
      } else if (op == "scalar") {
        out_vec(witt_int_scale(from_decimal(scalar_str), need_a()));
      } else if (op == "teich") {
        out_vec(teichmuller(f, node_arg,
                            MPoly::constant(from_decimal(const_str), mod)));
      } else if (op == "ghost") {
        WittVec a = need_a();
        std::ostringstream o;
        auto w = ghost(a);
        for (std::uint32_t t = 0; t < f.node_count(); ++t)
          o << "  [" << t << "] " << w[t].str(sym_var_name) << "\n";
        emit(o.str(), out_path);
      } else if (op == "ghostinv") {
        WittVec a = need_a();
        out_vec(ghost_inverse(f, a.coords, a.modulus));
      } else if (op == "inv") {
        out_vec(witt_invert_unit(need_a()));
      } else if (op == "project") {
        WittVec a = need_a();
        auto keep = f.downset(node_arg);
        std::sort(keep.begin(), keep.end());
        Frame sub = subframe(f, keep);
        out_vec(witt_project(a, sub, keep));
      } else if (op == "ideal") {
        WittVec a = need_a();
        bool in = in_node_ideal(a, node_arg);
        emit(std::string(in ? "in" : "not in") + " the node ideal\n",
             out_path);
      } else {
        std::cerr << "unknown --op " << op << "\n";
        return 2;
      }
      return 0;
    }
    if (cmd_verify->parsed())
      return run_verify(suite, g, seed, trials, ideal_m, ideal_n, families,
                        as_json, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
