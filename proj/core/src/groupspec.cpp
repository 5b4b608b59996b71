#include "wbr/groupspec.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wbr {

namespace {

// Extended gcd: returns g, sets u, v with u*a + v*b == g >= 0.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
  BigInt r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1, u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
  u = u0; v = v0;
  return r0;
}

using Matrix = std::vector<std::vector<BigInt>>;

// Lower-triangular column-style Hermite form of a full-row-rank d x k
// matrix, in place; returns the leading d x d block.
Matrix hnf_lower(Matrix a) {
  std::size_t d = a.size(), k = a[0].size();
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < d; ++r) std::swap(a[r][x], a[r][y]);
  };
  std::size_t c = 0;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j0 = c;
    while (j0 < k && a[i][j0] == 0) ++j0;
    if (j0 == k) throw Error("generators do not span a full-rank lattice");
    if (j0 != c) col_swap(c, j0);
    for (std::size_t j = c + 1; j < k; ++j) {
      if (a[i][j] == 0) continue;
      BigInt u, v, g = ext_gcd(a[i][c], a[i][j], u, v);
      BigInt x = a[i][c] / g, y = a[i][j] / g;
      for (std::size_t r = 0; r < d; ++r) {
        BigInt nc = u * a[r][c] + v * a[r][j];
        BigInt nj = x * a[r][j] - y * a[r][c];
        a[r][c] = nc;
        a[r][j] = nj;
      }
    }
    if (a[i][c] < 0)
      for (std::size_t r = 0; r < d; ++r) a[r][c] = -a[r][c];
    for (std::size_t j = 0; j < c; ++j) {
      BigInt q = a[i][j] / a[i][c];
      if (a[i][j] - q * a[i][c] < 0) q -= 1;
      if (q == 0) continue;
      for (std::size_t r = 0; r < d; ++r) a[r][j] -= q * a[r][c];
    }
    ++c;
  }
  Matrix h(d, std::vector<BigInt>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) h[r][j] = a[r][j];
  return h;
}

// Canonical upper-triangular Hermite form (pivot h_ii > 0, 0 <= h_ij < h_ii
// for j > i), via the lower-triangular form on a row/column-reversed copy.
Matrix hnf_upper(const Matrix& a) {
  std::size_t d = a.size(), k = a[0].size();
  Matrix rev(d, std::vector<BigInt>(k));
  for (std::size_t r = 0; r < d; ++r) rev[r] = a[d - 1 - r];
  Matrix low = hnf_lower(std::move(rev));
  Matrix up(d, std::vector<BigInt>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) up[r][j] = low[d - 1 - r][d - 1 - j];
  return up;
}

// Does the upper-triangular lattice basis h contain the column vector v?
bool hnf_contains_vector(const Matrix& h, std::vector<BigInt> v) {
  std::size_t d = h.size();
  for (std::size_t i = d; i-- > 0;) {
    BigInt q = v[i] / h[i][i];
    if (q * h[i][i] != v[i]) return false;
    for (std::size_t r = 0; r <= i; ++r) v[r] -= q * h[r][i];
  }
  return true;
}

Matrix lambda_matrix(const AbelianP& A) {
  std::size_t d = A.exponents.size();
  Matrix m(d, std::vector<BigInt>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    m[i][i] = big_pow(A.p, A.exponents[i]);
  return m;
}

std::uint64_t dihedral_rotations(const Dihedral2& D) {
  return 1ull << (D.n - 1);
}

// Element encoding for Dihedral2: rotations r^k -> k, reflections
// r^k s -> N + k.
std::uint16_t dihedral_mul(std::uint64_t N, std::uint16_t a, std::uint16_t b) {
  bool fa = a >= N, fb = b >= N;
  std::uint64_t ka = fa ? a - N : a, kb = fb ? b - N : b;
  // (r^ka s^fa)(r^kb s^fb) = r^(ka + (-1)^fa kb) s^(fa^fb)
  std::uint64_t k = fa ? (ka + N - kb % N) % N : (ka + kb) % N;
  return static_cast<std::uint16_t>((fa ^ fb) ? N + k : k);
}

std::vector<std::uint16_t> closure(const CayleyTable& T,
                                   std::vector<std::uint16_t> gens) {
  std::set<std::uint16_t> seen(gens.begin(), gens.end());
  seen.insert(0);
  std::vector<std::uint16_t> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    std::uint16_t x = todo.back();
    todo.pop_back();
    for (std::uint16_t y : std::vector<std::uint16_t>(seen.begin(), seen.end())) {
      for (std::uint16_t z : {T.table[x][y], T.table[y][x]}) {
        if (seen.insert(z).second) todo.push_back(z);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint16_t table_inverse(const CayleyTable& T, std::uint16_t x) {
  for (std::uint16_t y = 0; y < T.table.size(); ++y)
    if (T.table[x][y] == 0) return y;
  throw InvalidGroupError("element has no inverse");
}

}  // namespace

BigInt GroupSpec::order() const {
  if (auto* a = std::get_if<AbelianP>(&g)) {
    BigInt n = 1;
    for (auto e : a->exponents) n *= big_pow(a->p, e);
    return n;
  }
  if (auto* d = std::get_if<Dihedral2>(&g)) return BigInt(1) << d->n;
  return BigInt(std::get<CayleyTable>(g).table.size());
}

std::uint32_t GroupSpec::prime() const {
  if (auto* a = std::get_if<AbelianP>(&g)) return a->p;
  if (std::holds_alternative<Dihedral2>(g)) return 2;
  BigInt n = order();
  for (std::uint32_t p = 2; BigInt(p) * p <= n; ++p) {
    if (n % p == 0) {
      BigInt m = n;
      while (m % p == 0) m /= p;
      if (m != 1) throw InvalidGroupError("group order is not a prime power");
      return p;
    }
  }
  if (n == 1) throw InvalidGroupError("trivial group has no defining prime");
  return static_cast<std::uint32_t>(n);  // n itself prime
}

std::string GroupSpec::describe() const {
  std::ostringstream out;
  if (auto* a = std::get_if<AbelianP>(&g)) {
    bool first = true;
    for (auto e : a->exponents) {
      if (!first) out << " x ";
      first = false;
      out << "Z/" << big_pow(a->p, e).str();
    }
  } else if (auto* d = std::get_if<Dihedral2>(&g)) {
    out << "D" << (BigInt(1) << d->n).str();
  } else {
    out << "table group of order " << order().str();
  }
  return out.str();
}

CayleyTable GroupSpec::to_table(std::uint64_t cap) const {
  BigInt n = order();
  if (n > cap) throw OrderCapError("group order " + n.str() +
                                   " exceeds table cap " + std::to_string(cap));
  std::size_t sz = static_cast<std::size_t>(n);
  if (auto* a = std::get_if<AbelianP>(&g)) {
    std::size_t d = a->exponents.size();
    std::vector<std::uint64_t> radix(d);
    for (std::size_t i = 0; i < d; ++i)
      radix[i] = static_cast<std::uint64_t>(big_pow(a->p, a->exponents[i]));
    auto decode = [&](std::size_t idx) {
      std::vector<std::uint64_t> t(d);
      for (std::size_t i = d; i-- > 0;) {
        t[i] = idx % radix[i];
        idx /= radix[i];
      }
      return t;
    };
    auto encode = [&](const std::vector<std::uint64_t>& t) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < d; ++i) idx = idx * radix[i] + t[i];
      return idx;
    };
    CayleyTable T;
    T.table.assign(sz, std::vector<std::uint16_t>(sz));
    for (std::size_t x = 0; x < sz; ++x) {
      auto tx = decode(x);
      for (std::size_t y = 0; y < sz; ++y) {
        auto ty = decode(y);
        std::vector<std::uint64_t> s(d);
        for (std::size_t i = 0; i < d; ++i) s[i] = (tx[i] + ty[i]) % radix[i];
        T.table[x][y] = static_cast<std::uint16_t>(encode(s));
      }
    }
    return T;
  }
  if (auto* dd = std::get_if<Dihedral2>(&g)) {
    std::uint64_t N = dihedral_rotations(*dd);
    CayleyTable T;
    T.table.assign(sz, std::vector<std::uint16_t>(sz));
    for (std::size_t x = 0; x < sz; ++x)
      for (std::size_t y = 0; y < sz; ++y)
        T.table[x][y] = dihedral_mul(N, static_cast<std::uint16_t>(x),
                                     static_cast<std::uint16_t>(y));
    return T;
  }
  return std::get<CayleyTable>(g);
}

GroupSpec make_abelian(std::uint32_t p, std::vector<std::uint32_t> exponents) {
  if (p < 2 || exponents.empty())
    throw InvalidGroupError("abelian spec needs p >= 2 and d >= 1");
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw InvalidGroupError("p must be prime");
  for (auto e : exponents)
    if (e == 0) throw InvalidGroupError("cyclic factor exponents must be >= 1");
  return GroupSpec{AbelianP{p, std::move(exponents)}};
}

GroupSpec make_dihedral(std::uint32_t n) {
  if (n < 2 || n > 15) throw InvalidGroupError("dihedral exponent out of range");
  return GroupSpec{Dihedral2{n}};
}

GroupSpec make_table(std::vector<std::vector<std::uint16_t>> table) {
  std::size_t n = table.size();
  if (n == 0 || n > 4096) throw InvalidGroupError("table size out of range");
  for (auto& row : table) {
    if (row.size() != n) throw InvalidGroupError("table is not square");
    for (auto v : row)
      if (v >= n) throw InvalidGroupError("table entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (table[0][x] != x || table[x][0] != x)
      throw InvalidGroupError("index 0 must be the identity");
  return GroupSpec{CayleyTable{std::move(table)}};
}

std::string SubgroupRep::key() const {
  std::ostringstream out;
  if (auto* h = std::get_if<HnfSubgroup>(&s)) {
    out << "hnf[";
    for (auto& row : h->h)
      for (auto& v : row) out << v.str() << ",";
    out << "]";
  } else if (auto* ds = std::get_if<DihedralSub>(&s)) {
    if (ds->kind == DihedralSub::Rotation)
      out << "rot[" << ds->d << "]";
    else
      out << "mix[" << ds->d << "," << ds->i << "]";
  } else {
    out << "set[";
    for (auto e : std::get<ElementSet>(s).elems) out << e << ",";
    out << "]";
  }
  return out.str();
}

HnfSubgroup hnf_from_generators(const AbelianP& A,
                                std::vector<std::vector<BigInt>> columns) {
  std::size_t d = A.exponents.size();
  Matrix m(d);
  Matrix lam = lambda_matrix(A);
  for (std::size_t r = 0; r < d; ++r) {
    for (auto& col : columns) {
      if (col.size() != d) throw Error("generator has wrong dimension");
      m[r].push_back(col[r]);
    }
    for (std::size_t j = 0; j < d; ++j) m[r].push_back(lam[r][j]);
  }
  return HnfSubgroup{hnf_upper(m)};
}

std::vector<BigInt> smith_diagonal(Matrix m, Matrix* p_inv) {
  std::size_t d = m.size();
  if (p_inv) {
    p_inv->assign(d, std::vector<BigInt>(d, 0));
    for (std::size_t i = 0; i < d; ++i) (*p_inv)[i][i] = 1;
  }
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& t) {
    for (std::size_t j = 0; j < d; ++j) m[dst][j] += t * m[src][j];
    if (p_inv)
      for (std::size_t r = 0; r < d; ++r) (*p_inv)[r][src] -= t * (*p_inv)[r][dst];
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    std::swap(m[x], m[y]);
    if (p_inv)
      for (std::size_t r = 0; r < d; ++r) std::swap((*p_inv)[r][x], (*p_inv)[r][y]);
  };
  auto row_neg = [&](std::size_t x) {
    for (std::size_t j = 0; j < d; ++j) m[x][j] = -m[x][j];
    if (p_inv)
      for (std::size_t r = 0; r < d; ++r) (*p_inv)[r][x] = -(*p_inv)[r][x];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& t) {
    for (std::size_t r = 0; r < d; ++r) m[r][dst] += t * m[r][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < d; ++r) std::swap(m[r][x], m[r][y]);
  };

  for (std::size_t k = 0; k < d; ++k) {
    // Move a nonzero pivot to (k, k).
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < d && !found; ++i)
      for (std::size_t j = k; j < d && !found; ++j)
        if (m[i][j] != 0) { pi = i; pj = j; found = true; }
    if (!found) break;  // remaining block is zero
    if (pi != k) row_swap(k, pi);
    if (pj != k) col_swap(k, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < d; ++i) {
        while (m[i][k] != 0) {
          BigInt q = m[i][k] / m[k][k];
          row_add(i, k, -q);
          if (m[i][k] != 0) { row_swap(i, k); dirty = true; }
        }
      }
      for (std::size_t j = k + 1; j < d; ++j) {
        while (m[k][j] != 0) {
          BigInt q = m[k][j] / m[k][k];
          col_add(j, k, -q);
          if (m[k][j] != 0) { col_swap(j, k); dirty = true; }
        }
      }
    }
    if (m[k][k] < 0) row_neg(k);
  }
  // Enforce the divisibility chain d_k | d_{k+1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < d; ++k) {
      if (m[k + 1][k + 1] != 0 && m[k][k] != 0 &&
          m[k + 1][k + 1] % m[k][k] != 0) {
        // Fold entry (k+1, k+1) into the (k, k) pivot and re-reduce.
        col_add(k, k + 1, 1);
        while (m[k + 1][k] != 0) {
          BigInt q = m[k + 1][k] / m[k][k];
          row_add(k + 1, k, -q);
          if (m[k + 1][k] != 0) row_swap(k + 1, k);
        }
        while (m[k][k + 1] != 0) {
          BigInt q = m[k][k + 1] / m[k][k];
          col_add(k + 1, k, -q);
          if (m[k][k + 1] != 0) col_swap(k + 1, k);
        }
        if (m[k][k] < 0) row_neg(k);
        if (m[k + 1][k + 1] < 0) row_neg(k + 1);
        changed = true;
      }
    }
  }
  std::vector<BigInt> diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = m[i][i] < 0 ? -m[i][i] : m[i][i];
  return diag;
}

std::vector<SubgroupRep> enumerate_subgroups(const GroupSpec& G) {
  std::vector<SubgroupRep> out;
  if (auto* A = std::get_if<AbelianP>(&G.g)) {
    std::size_t d = A->exponents.size();
    Matrix lam = lambda_matrix(*A);
    std::vector<std::uint32_t> a(d, 0);
    Matrix h(d, std::vector<BigInt>(d, 0));
    // Walk every reduced upper-triangular matrix with p-power diagonal
    // p^{a_i} <= p^{e_i}; Hermite uniqueness makes each accepted matrix a
    // distinct subgroup.
    std::function<void(std::size_t)> offdiag = [&](std::size_t pos) {
      // pos indexes pairs (i, j), i < j, row-major
      std::size_t i = 0, j = 0, c = pos;
      for (i = 0; i < d; ++i) {
        if (c < d - i - 1) { j = i + 1 + c; break; }
        c -= d - i - 1;
      }
      if (i == d) {
        bool ok = true;
        for (std::size_t col = 0; col < d && ok; ++col) {
          std::vector<BigInt> v(d, 0);
          v[col] = lam[col][col];
          ok = hnf_contains_vector(h, v);
        }
        if (ok) out.push_back(SubgroupRep{HnfSubgroup{h}});
        return;
      }
      for (BigInt v = 0; v < h[i][i]; ++v) {
        h[i][j] = v;
        offdiag(pos + 1);
      }
    };
    std::function<void(std::size_t)> diag = [&](std::size_t i) {
      if (i == d) {
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t cc = 0; cc < d; ++cc)
            if (r != cc) h[r][cc] = 0;
        offdiag(0);
        return;
      }
      for (std::uint32_t ai = 0; ai <= A->exponents[i]; ++ai) {
        h[i][i] = big_pow(A->p, ai);
        diag(i + 1);
      }
    };
    diag(0);
  } else if (auto* D = std::get_if<Dihedral2>(&G.g)) {
    std::uint64_t N = dihedral_rotations(*D);
    for (std::uint64_t dd = 1; dd <= N; dd <<= 1) {
      out.push_back(SubgroupRep{DihedralSub{DihedralSub::Rotation, dd, 0}});
      for (std::uint64_t i = 0; i < dd; ++i)
        out.push_back(SubgroupRep{DihedralSub{DihedralSub::Mixed, dd, i}});
    }
  } else {
    const auto& T = std::get<CayleyTable>(G.g);
    if (T.table.size() > 256)
      throw OrderCapError("table subgroup enumeration capped at order 256");
    std::set<std::vector<std::uint16_t>> subs;
    subs.insert({0});
    std::vector<std::vector<std::uint16_t>> todo = {{0}};
    while (!todo.empty()) {
      auto s = todo.back();
      todo.pop_back();
      for (std::uint16_t g = 0; g < T.table.size(); ++g) {
        if (std::binary_search(s.begin(), s.end(), g)) continue;
        auto gens = s;
        gens.push_back(g);
        auto c = closure(T, gens);
        if (subs.insert(c).second) todo.push_back(c);
      }
    }
    for (auto& s : subs) out.push_back(SubgroupRep{ElementSet{s}});
  }
  std::sort(out.begin(), out.end(), [&](const SubgroupRep& x, const SubgroupRep& y) {
    BigInt ox = subgroup_order(G, x), oy = subgroup_order(G, y);
    if (ox != oy) return ox < oy;
    return x.key() < y.key();
  });
  return out;
}

BigInt subgroup_order(const GroupSpec& G, const SubgroupRep& H) {
  if (auto* h = std::get_if<HnfSubgroup>(&H.s)) {
    // |L / Lambda| = det(Lambda) / det(L)
    BigInt det = 1;
    for (std::size_t i = 0; i < h->h.size(); ++i) det *= h->h[i][i];
    return G.order() / det;
  }
  if (auto* ds = std::get_if<DihedralSub>(&H.s)) {
    std::uint64_t N = dihedral_rotations(std::get<Dihedral2>(G.g));
    return ds->kind == DihedralSub::Rotation ? BigInt(N / ds->d)
                                             : BigInt(2 * (N / ds->d));
  }
  return BigInt(std::get<ElementSet>(H.s).elems.size());
}

std::vector<std::uint16_t> subgroup_elements(const GroupSpec& G,
                                             const SubgroupRep& H) {
  if (auto* hs = std::get_if<HnfSubgroup>(&H.s)) {
    const auto& A = std::get<AbelianP>(G.g);
    std::size_t d = A.exponents.size();
    BigInt n = G.order();
    if (n > 4096) throw OrderCapError("element listing capped at order 4096");
    std::vector<std::uint64_t> radix(d);
    for (std::size_t i = 0; i < d; ++i)
      radix[i] = static_cast<std::uint64_t>(big_pow(A.p, A.exponents[i]));
    std::vector<std::uint16_t> elems;
    std::size_t sz = static_cast<std::size_t>(n);
    for (std::size_t idx = 0; idx < sz; ++idx) {
      std::vector<BigInt> v(d);
      std::size_t t = idx;
      for (std::size_t i = d; i-- > 0;) {
        v[i] = BigInt(t % radix[i]);
        t /= radix[i];
      }
      if (hnf_contains_vector(hs->h, v))
        elems.push_back(static_cast<std::uint16_t>(idx));
    }
    return elems;
  }
  if (auto* ds = std::get_if<DihedralSub>(&H.s)) {
    std::uint64_t N = dihedral_rotations(std::get<Dihedral2>(G.g));
    std::vector<std::uint16_t> elems;
    for (std::uint64_t k = 0; k < N; k += ds->d)
      elems.push_back(static_cast<std::uint16_t>(k));
    if (ds->kind == DihedralSub::Mixed)
      for (std::uint64_t k = ds->i; k < N; k += ds->d)
        elems.push_back(static_cast<std::uint16_t>(N + k));
    std::sort(elems.begin(), elems.end());
    return elems;
  }
  return std::get<ElementSet>(H.s).elems;
}

bool subgroup_contains(const GroupSpec& G, const SubgroupRep& K,
                       const SubgroupRep& H) {
  if (auto* hk = std::get_if<HnfSubgroup>(&K.s)) {
    const auto& hh = std::get<HnfSubgroup>(H.s);
    std::size_t d = hk->h.size();
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<BigInt> col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = hh.h[r][j];
      if (!hnf_contains_vector(hk->h, col)) return false;
    }
    return true;
  }
  auto eh = subgroup_elements(G, H);
  auto ek = subgroup_elements(G, K);
  return std::includes(ek.begin(), ek.end(), eh.begin(), eh.end());
}

namespace {

std::vector<std::uint16_t> conjugate_set(const CayleyTable& T,
                                         const std::vector<std::uint16_t>& s,
                                         std::uint16_t g) {
  std::uint16_t gi = table_inverse(T, g);
  std::vector<std::uint16_t> out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(T.table[T.table[g][x]][gi]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool conjugate_into(const GroupSpec& G, const SubgroupRep& H,
                    const SubgroupRep& K) {
  if (G.is_abelian_p()) return subgroup_contains(G, K, H);
  CayleyTable T = G.to_table();
  auto eh = subgroup_elements(G, H);
  auto ek = subgroup_elements(G, K);
  for (std::uint16_t g = 0; g < T.table.size(); ++g) {
    auto c = conjugate_set(T, eh, g);
    if (std::includes(ek.begin(), ek.end(), c.begin(), c.end())) return true;
  }
  return false;
}

bool is_normal(const GroupSpec& G, const SubgroupRep& H) {
  if (G.is_abelian_p()) return true;
  CayleyTable T = G.to_table();
  auto eh = subgroup_elements(G, H);
  for (std::uint16_t g = 0; g < T.table.size(); ++g)
    if (conjugate_set(T, eh, g) != eh) return false;
  return true;
}

std::vector<SubgroupRep> conjugacy_class_reps(const GroupSpec& G) {
  auto all = enumerate_subgroups(G);
  if (G.is_abelian_p()) return all;
  CayleyTable T = G.to_table();
  std::vector<SubgroupRep> reps;
  std::set<std::vector<std::uint16_t>> seen;
  for (auto& H : all) {
    auto eh = subgroup_elements(G, H);
    if (seen.count(eh)) continue;
    reps.push_back(H);
    for (std::uint16_t g = 0; g < T.table.size(); ++g)
      seen.insert(conjugate_set(T, eh, g));
  }
  return reps;
}

std::vector<std::uint32_t> quotient_invariants(const GroupSpec& G,
                                               const SubgroupRep& H) {
  if (!G.is_abelian_p()) throw NonAbelianError();
  const auto& hs = std::get<HnfSubgroup>(H.s);
  const auto& A = G.abelian();
  auto diag = smith_diagonal(hs.h);
  std::vector<std::uint32_t> inv;
  for (auto& v : diag) {
    std::uint32_t e = 0;
    BigInt w = v;
    while (w % A.p == 0) { w /= A.p; ++e; }
    if (w != 1) throw Error("subgroup lattice determinant is not a p-power");
    inv.push_back(e);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

bool quotient_cyclic(const GroupSpec& G, const SubgroupRep& H) {
  if (G.is_abelian_p()) {
    auto inv = quotient_invariants(G, H);
    std::size_t nonzero = 0;
    for (auto e : inv) nonzero += e > 0;
    return nonzero <= 1;
  }
  if (!is_normal(G, H)) return false;
  CayleyTable T = G.to_table();
  auto eh = subgroup_elements(G, H);
  std::size_t index = T.table.size() / eh.size();
  // Cyclic quotient iff some coset has order equal to the index.
  for (std::uint16_t g = 0; g < T.table.size(); ++g) {
    std::uint16_t x = g;
    std::size_t k = 1;
    while (!std::binary_search(eh.begin(), eh.end(), x)) {
      x = T.table[x][g];
      ++k;
    }
    if (k == index) return true;
  }
  return false;
}

}  // namespace wbr
