#include "wbr/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace wbr {

std::string Monomial::str(const std::function<std::string(VarId)>& name) const {
  if (exps.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto& [v, e] : exps) {
    if (!first) out << "*";
    first = false;
    out << name(v);
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps.reserve(a.exps.size() + b.exps.size());
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first < b.exps[j].first) {
      r.exps.push_back(a.exps[i++]);
    } else if (a.exps[i].first > b.exps[j].first) {
      r.exps.push_back(b.exps[j++]);
    } else {
      r.exps.emplace_back(a.exps[i].first,
                          a.exps[i].second + b.exps[j].second);
      ++i, ++j;
    }
  }
  for (; i < a.exps.size(); ++i) r.exps.push_back(a.exps[i]);
  for (; j < b.exps.size(); ++j) r.exps.push_back(b.exps[j]);
  return r;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: walk variables in ascending id; the monomial putting more
  // weight on the earlier variable is the larger one.
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first != b.exps[j].first)
      return a.exps[i].first > b.exps[j].first;
    if (a.exps[i].second != b.exps[j].second)
      return a.exps[i].second < b.exps[j].second;
    ++i, ++j;
  }
  return false;  // equal (trailing entries impossible at equal degree)
}

MPoly MPoly::constant(BigInt c, std::optional<std::uint64_t> modulus) {
  MPoly p(modulus);
  p.add_term(Monomial{}, c);
  return p;
}

MPoly MPoly::variable(VarId v, std::optional<std::uint64_t> modulus) {
  MPoly p(modulus);
  p.add_term(Monomial{{{v, 1}}}, BigInt(1));
  return p;
}

std::uint64_t MPoly::total_degree() const {
  std::uint64_t d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void MPoly::add_term(const Monomial& m, const BigInt& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    BigInt v = c;
    normalize_coef(v);
    if (v != 0) terms_.emplace(m, std::move(v));
  } else {
    it->second += c;
    normalize_coef(it->second);
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_ring(o);
  MPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_ring(o);
  MPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(modulus_);
  for (auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_ring(o);
  MPoly r(modulus_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

MPoly MPoly::pow(std::uint64_t e) const {
  MPoly r = MPoly::constant(1, modulus_);
  MPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

MPoly MPoly::exact_div(const BigInt& c) const {
  if (modulus_) throw Error("exact_div is defined over Z only");
  if (c == 0) throw Error("division by zero");
  MPoly r(modulus_);
  for (auto& [m, v] : terms_) {
    BigInt q = v / c;
    if (q * c != v) throw NonIntegralError(v, m.str([](VarId id) {
      return "x" + std::to_string(id);
    }));
    r.terms_.emplace(m, std::move(q));
  }
  return r;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& images,
                        std::optional<std::uint64_t> modulus) const {
  // Cache image powers per variable; exponents in practice stay small.
  std::map<VarId, std::vector<MPoly>> powers;
  MPoly r(modulus);
  for (auto& [m, c] : terms_) {
    MPoly t = MPoly::constant(c, modulus);
    for (auto& [v, e] : m.exps) {
      auto img = images.find(v);
      if (img == images.end()) throw UnboundVariableError(v);
      if (img->second.modulus() != modulus) throw ModulusMismatchError();
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(MPoly::constant(1, modulus));
      while (cache.size() <= e) cache.push_back(cache.back() * img->second);
      t = t * cache[e];
    }
    r = r + t;
  }
  return r;
}

MPoly MPoly::reduce_mod(std::uint64_t m) const {
  if (modulus_ && *modulus_ % m != 0)
    throw ModulusMismatchError();
  MPoly r(m);
  for (auto& [mono, c] : terms_) r.add_term(mono, c);
  return r;
}

MPoly MPoly::lift() const {
  MPoly r{std::optional<std::uint64_t>{}};
  for (auto& [mono, c] : terms_) r.terms_.emplace(mono, c);
  return r;
}

std::vector<VarId> MPoly::variables() const {
  std::vector<VarId> vars;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.exps) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string MPoly::str(const std::function<std::string(VarId)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Largest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.exps.empty()) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << m.str(name);
    }
  }
  return out.str();
}

std::string MPoly::str() const {
  return str([](VarId id) { return "x" + std::to_string(id); });
}

}  // namespace wbr
