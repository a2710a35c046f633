#include "bcinv/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcinv {
namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Inverse of a mod m via extended Euclid; requires gcd(a, m) == 1.
std::uint64_t mod_inverse_scaled(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  long long old_r = static_cast<long long>(a), r = static_cast<long long>(m);
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tr = old_r - q * r;
    old_r = r;
    r = tr;
    long long ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  long long mm = static_cast<long long>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

// ---------------------------------------------------------------------------
// Smith normal form over the integers.
//
// Maintains U (m x m) and V (k x k) unimodular with U*A*V = D, D diagonal
// with nonnegative entries.  Entries stay tiny at the dimensions used here
// (k^2 <= 32, values reduced mod n <= 10^4).
// ---------------------------------------------------------------------------

struct Smith {
  std::size_t m = 0, k = 0;
  std::vector<long long> U, V, D;  // row-major

  long long& u(std::size_t i, std::size_t j) { return U[i * m + j]; }
  long long& v(std::size_t i, std::size_t j) { return V[i * k + j]; }
  long long& d(std::size_t i, std::size_t j) { return D[i * k + j]; }
};

Smith smith_normal_form(std::vector<long long> A, std::size_t m,
                        std::size_t k) {
  Smith s;
  s.m = m;
  s.k = k;
  s.D = std::move(A);
  s.U.assign(m * m, 0);
  s.V.assign(k * k, 0);
  for (std::size_t i = 0; i < m; ++i) s.u(i, i) = 1;
  for (std::size_t j = 0; j < k; ++j) s.v(j, j) = 1;

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < k; ++j) std::swap(s.d(r1, j), s.d(r2, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(s.u(r1, j), s.u(r2, j));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < m; ++i) std::swap(s.d(i, c1), s.d(i, c2));
    for (std::size_t i = 0; i < k; ++i) std::swap(s.v(i, c1), s.v(i, c2));
  };
  auto row_sub = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t j = 0; j < k; ++j) s.d(dst, j) -= q * s.d(src, j);
    for (std::size_t j = 0; j < m; ++j) s.u(dst, j) -= q * s.u(src, j);
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t i = 0; i < m; ++i) s.d(i, dst) -= q * s.d(i, src);
    for (std::size_t i = 0; i < k; ++i) s.v(i, dst) -= q * s.v(i, src);
  };

  std::size_t rank = std::min(m, k);
  for (std::size_t t = 0; t < rank; ++t) {
    // pivot: smallest nonzero |entry| in the trailing submatrix
    std::size_t pi = t, pj = t;
    long long best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < k; ++j) {
        long long v = s.d(i, j) < 0 ? -s.d(i, j) : s.d(i, j);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (bool dirty = true; dirty;) {
      dirty = false;
      // clear column t below the pivot
      for (std::size_t i = t + 1; i < m; ++i) {
        while (s.d(i, t) != 0) {
          long long q = s.d(i, t) / s.d(t, t);
          row_sub(i, t, q);
          if (s.d(i, t) != 0) swap_rows(t, i);
        }
      }
      // clear row t right of the pivot (may dirty the column again)
      for (std::size_t j = t + 1; j < k; ++j) {
        while (s.d(t, j) != 0) {
          long long q = s.d(t, j) / s.d(t, t);
          col_sub(j, t, q);
          if (s.d(t, j) != 0) swap_cols(t, j);
        }
      }
      for (std::size_t i = t + 1; i < m && !dirty; ++i)
        if (s.d(i, t) != 0) dirty = true;
      if (dirty) continue;
      // divisibility: the pivot must divide the trailing submatrix
      for (std::size_t i = t + 1; i < m && !dirty; ++i)
        for (std::size_t j = t + 1; j < k && !dirty; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            row_sub(t, i, -1);  // pull row i into row t, re-reduce
            dirty = true;
          }
    }
    if (s.d(t, t) < 0) {
      for (std::size_t j = 0; j < k; ++j) s.d(t, j) = -s.d(t, j);
      for (std::size_t j = 0; j < m; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

// Solution set of A*x ≡ v (mod n): a particular solution plus generators
// whose span (with the given orders) enumerates every solution exactly once.
struct ModSolutions {
  std::size_t k = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> particular;
  std::vector<std::vector<std::uint64_t>> generators;
  std::vector<std::uint64_t> orders;  // order >= 2 for every kept generator
};

std::optional<ModSolutions> solve_mod_full(const std::vector<long long>& A,
                                           std::size_t m, std::size_t k,
                                           const std::vector<long long>& v,
                                           std::uint64_t n) {
  Smith s = smith_normal_form(A, m, k);
  long long nn = static_cast<long long>(n);

  // w = U * v, reduced into [0, n)
  std::vector<std::uint64_t> w(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += s.u(i, j) * v[j];
    w[i] = static_cast<std::uint64_t>(((acc % nn) + nn) % nn);
  }

  std::size_t rank = std::min(m, k);
  std::vector<std::uint64_t> y(k, 0);
  std::vector<std::uint64_t> periods(k, 0), counts(k, 0);

  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t di = i < rank ? static_cast<std::uint64_t>(s.d(i, i)) : 0;
    std::uint64_t g = gcd_u64(di, n);  // gcd(0, n) == n
    std::uint64_t period = n / g;
    if (i < m) {
      if (w[i] % g != 0) return std::nullopt;
      if (period > 1) {
        std::uint64_t dg = (di / g) % period;
        y[i] = (w[i] / g) % period * mod_inverse_scaled(dg, period) % period;
      }
    }
    periods[i] = period == 0 ? 1 : period;
    counts[i] = g;
  }
  for (std::size_t i = k; i < m; ++i)
    if (w[i] % n != 0) return std::nullopt;

  ModSolutions out;
  out.k = k;
  out.n = n;
  out.particular.assign(k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    long long acc = 0;
    for (std::size_t j = 0; j < k; ++j)
      acc += s.v(r, j) * static_cast<long long>(y[j]);
    out.particular[r] = static_cast<std::uint64_t>(((acc % nn) + nn) % nn);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] <= 1) continue;
    std::vector<std::uint64_t> gen(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      long long acc = s.v(r, j) * static_cast<long long>(periods[j]);
      gen[r] = static_cast<std::uint64_t>(((acc % nn) + nn) % nn);
    }
    out.generators.push_back(std::move(gen));
    out.orders.push_back(counts[j]);
  }
  return out;
}

// Odometer over the generator multiplicities; visits each solution once.
bool visit_mod_solutions(const ModSolutions& sol,
                         const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> ticks(sol.orders.size(), 0);
  std::vector<std::uint64_t> x = sol.particular;
  for (;;) {
    if (!visit(x)) return true;
    std::size_t pos = 0;
    for (; pos < ticks.size(); ++pos) {
      ++ticks[pos];
      for (std::size_t r = 0; r < sol.k; ++r)
        x[r] = (x[r] + sol.generators[pos][r]) % sol.n;
      if (ticks[pos] < sol.orders[pos]) break;
      ticks[pos] = 0;  // x already wrapped back to the particular coset
    }
    if (pos == ticks.size()) return true;
  }
}

// ---------------------------------------------------------------------------
// Factor equations per carrier
// ---------------------------------------------------------------------------

// zmod: s*g ≡ x (mod n).  Solutions are s0 + t*(n/d), t in [0, d), ascending.
bool visit_zmod_factor(std::uint64_t x, std::uint64_t g, std::uint64_t n,
                       const std::function<bool(std::uint64_t)>& visit) {
  std::uint64_t d = gcd_u64(g, n);  // gcd(0, n) == n
  if (x % d != 0) return false;
  std::uint64_t period = n / d;
  std::uint64_t s0 = 0;
  if (period > 1)
    s0 = (x / d) % period * mod_inverse_scaled((g / d) % period, period) %
         period;
  for (std::uint64_t t = 0; t < d; ++t)
    if (!visit(s0 + t * period)) break;
  return true;
}

// mat: the k^2 unknowns of s (row-major) satisfy a block linear system.
// left:  s*g = x  has equations (r,c): sum_j g[j][c] * s[r][j] = x[r][c]
// right: g*s = x  has equations (r,c): sum_j g[r][j] * s[j][c] = x[r][c]
std::vector<long long> mat_factor_system(const Ring& R, std::uint64_t gcode,
                                         bool left_side) {
  std::uint32_t k = R.dim();
  std::size_t kk = std::size_t(k) * k;
  std::vector<long long> A(kk * kk, 0);
  Element g = R.element(gcode);
  for (std::uint32_t r = 0; r < k; ++r)
    for (std::uint32_t c = 0; c < k; ++c) {
      std::size_t e = std::size_t(r) * k + c;
      for (std::uint32_t j = 0; j < k; ++j) {
        if (left_side)
          A[e * kk + (std::size_t(r) * k + j)] =
              static_cast<long long>(R.entry(g, j, c));
        else
          A[e * kk + (std::size_t(j) * k + c)] =
              static_cast<long long>(R.entry(g, r, j));
      }
    }
  return A;
}

bool visit_mat_factor(const Ring& R, std::uint64_t xcode, std::uint64_t gcode,
                      bool left_side,
                      const std::function<bool(std::uint64_t)>& visit) {
  std::uint32_t k = R.dim();
  std::size_t kk = std::size_t(k) * k;
  std::vector<long long> A = mat_factor_system(R, gcode, left_side);
  std::vector<long long> v(kk);
  Element x = R.element(xcode);
  for (std::uint32_t r = 0; r < k; ++r)
    for (std::uint32_t c = 0; c < k; ++c)
      v[std::size_t(r) * k + c] = static_cast<long long>(R.entry(x, r, c));
  auto sol = solve_mod_full(A, kk, kk, v, R.base_modulus());
  if (!sol) return false;
  visit_mod_solutions(*sol, [&](const std::vector<std::uint64_t>& s) {
    return visit(R.from_entries(s).code());
  });
  return true;
}

bool visit_factor(const Ring& R, std::uint64_t xcode, std::uint64_t gcode,
                  bool left_side,
                  const std::function<bool(std::uint64_t)>& visit);

bool visit_prod_factor(const Ring& R, std::uint64_t xcode, std::uint64_t gcode,
                       bool left_side,
                       const std::function<bool(std::uint64_t)>& visit) {
  const Ring& L = *R.left_factor();
  const Ring& Rr = *R.right_factor();
  std::uint64_t lcard = L.cardinality();
  std::uint64_t xl = xcode % lcard, xr = xcode / lcard;
  std::uint64_t gl = gcode % lcard, gr = gcode / lcard;
  auto probe = [](std::uint64_t) { return false; };
  if (!visit_factor(L, xl, gl, left_side, probe) ||
      !visit_factor(Rr, xr, gr, left_side, probe))
    return false;
  bool keep = true;
  visit_factor(L, xl, gl, left_side, [&](std::uint64_t sl) {
    visit_factor(Rr, xr, gr, left_side, [&](std::uint64_t sr) {
      keep = visit(sl + lcard * sr);
      return keep;
    });
    return keep;
  });
  return true;
}

bool visit_factor(const Ring& R, std::uint64_t xcode, std::uint64_t gcode,
                  bool left_side,
                  const std::function<bool(std::uint64_t)>& visit) {
  switch (R.spec().kind) {
    case RingSpec::Kind::zmod:
      // commutative: the left and right equations coincide
      return visit_zmod_factor(xcode, gcode, R.base_modulus(), visit);
    case RingSpec::Kind::mat:
      return visit_mat_factor(R, xcode, gcode, left_side, visit);
    case RingSpec::Kind::prod:
      return visit_prod_factor(R, xcode, gcode, left_side, visit);
  }
  // fallback: exhaustive scan over the carrier
  bool any = false;
  for (std::uint64_t s = 0; s < R.cardinality(); ++s) {
    Element se = R.element(s), ge = R.element(gcode), xe = R.element(xcode);
    Element p = left_side ? se * ge : ge * se;
    if (p == xe) {
      any = true;
      if (!visit(s)) break;
    }
  }
  return any;
}

void require_same_ring(Element x, Element g) {
  if (&x.ring() != &g.ring())
    throw std::invalid_argument("mixed-ring operands");
}

std::optional<Element> least_factor(Element x, Element g, bool left_side) {
  require_same_ring(x, g);
  const Ring& R = x.ring();
  if (x.code() == 0) return R.zero();  // 0*g = g*0 = 0, least solution
  bool found = false;
  std::uint64_t best = 0;
  visit_factor(R, x.code(), g.code(), left_side, [&](std::uint64_t s) {
    if (!found || s < best) best = s;
    found = true;
    // zmod enumerates ascending, so the first hit is already least there
    return R.spec().kind != RingSpec::Kind::zmod;
  });
  if (!found) return std::nullopt;
  return R.element(best);
}

}  // namespace

bool PrincipalIdeal::membership(Element x) const {
  require_same_ring(x, generator);
  return side == Side::left ? solve_left_factor(x, generator).has_value()
                            : solve_right_factor(x, generator).has_value();
}

std::vector<Element> PrincipalIdeal::elements() const {
  const Ring& R = generator.ring();
  std::vector<char> seen(R.cardinality(), 0);
  for (std::uint64_t r = 0; r < R.cardinality(); ++r) {
    Element re = R.element(r);
    Element m = side == Side::left ? re * generator : generator * re;
    seen[m.code()] = 1;
  }
  std::vector<Element> out;
  for (std::uint64_t c = 0; c < R.cardinality(); ++c)
    if (seen[c]) out.push_back(R.element(c));
  return out;
}

bool AnnihilatorIdeal::membership(Element x) const {
  require_same_ring(x, generator);
  const Ring& R = generator.ring();
  Element p = side == Side::right ? generator * x : x * generator;
  return p == R.zero();
}

std::vector<Element> AnnihilatorIdeal::elements() const {
  const Ring& R = generator.ring();
  std::vector<Element> out;
  for (std::uint64_t c = 0; c < R.cardinality(); ++c) {
    Element x = R.element(c);
    if (membership(x)) out.push_back(x);
  }
  return out;
}

bool trivial_intersection(const IdealRef& i1, const IdealRef& i2) {
  auto elems = [](const IdealRef& i) {
    return std::visit([](const auto& v) { return v.elements(); }, i);
  };
  auto gen = [](const IdealRef& i) {
    return std::visit([](const auto& v) { return v.generator; }, i);
  };
  const Ring& R = gen(i1).ring();
  if (&R != &gen(i2).ring())
    throw std::invalid_argument("mixed-ring operands");
  std::vector<Element> m1 = elems(i1), m2 = elems(i2);
  const std::vector<Element>& small = m1.size() <= m2.size() ? m1 : m2;
  const std::vector<Element>& large = m1.size() <= m2.size() ? m2 : m1;
  std::vector<char> flags(R.cardinality(), 0);
  for (const Element& e : large) flags[e.code()] = 1;
  for (const Element& e : small)
    if (e.code() != 0 && flags[e.code()]) return false;
  return true;
}

std::optional<Element> solve_left_factor(Element x, Element g) {
  return least_factor(x, g, /*left_side=*/true);
}

std::optional<Element> solve_right_factor(Element x, Element g) {
  return least_factor(x, g, /*left_side=*/false);
}

bool for_each_left_factor_solution(Element x, Element g,
                                   const std::function<bool(Element)>& visit) {
  require_same_ring(x, g);
  const Ring& R = x.ring();
  return visit_factor(R, x.code(), g.code(), true,
                      [&](std::uint64_t s) { return visit(R.element(s)); });
}

bool for_each_right_factor_solution(Element x, Element g,
                                    const std::function<bool(Element)>& visit) {
  require_same_ring(x, g);
  const Ring& R = x.ring();
  return visit_factor(R, x.code(), g.code(), false,
                      [&](std::uint64_t s) { return visit(R.element(s)); });
}

bool annihilator_subset(Element g1, Element g2, Side side) {
  require_same_ring(g1, g2);
  const Ring& R = g1.ring();
  Element zero = R.zero();
  for (std::uint64_t c = 0; c < R.cardinality(); ++c) {
    Element x = R.element(c);
    if (side == Side::right) {
      if (g1 * x == zero && g2 * x != zero) return false;
    } else {
      if (x * g1 == zero && x * g2 != zero) return false;
    }
  }
  return true;
}

std::optional<Element> ideal_eq_rb_rcab(Element a, Element b, Element c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  return solve_left_factor(b, c * a * b);
}

std::optional<UnitSum> unit_sum_decomposition(Element ca, Element b) {
  require_same_ring(ca, b);
  const Ring& R = ca.ring();
  std::optional<Element> s = solve_left_factor(b, ca * b);
  if (!s) return std::nullopt;
  Element t = *s;
  Element u = R.one() - t * ca;
  if (t * ca + u != R.one() || u * b != R.zero())
    throw std::logic_error("unit_sum_decomposition: certificate recheck failed");
  return UnitSum{t, u};
}

std::optional<std::vector<std::uint64_t>> solve_linear_mod(
    const std::vector<std::vector<long long>>& A,
    const std::vector<long long>& v, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("solve_linear_mod: modulus must be >= 1");
  std::size_t m = A.size();
  if (v.size() != m)
    throw std::invalid_argument("solve_linear_mod: dimension mismatch");
  std::size_t k = m == 0 ? 0 : A[0].size();
  std::vector<long long> flat;
  flat.reserve(m * k);
  for (const auto& row : A) {
    if (row.size() != k)
      throw std::invalid_argument("solve_linear_mod: ragged matrix");
    for (long long e : row) flat.push_back(((e % (long long)n) + (long long)n) % (long long)n);
  }
  std::vector<long long> vr(m);
  for (std::size_t i = 0; i < m; ++i)
    vr[i] = ((v[i] % (long long)n) + (long long)n) % (long long)n;

  auto sol = solve_mod_full(flat, m, k, vr, n);
  if (!sol) return std::nullopt;

  // substitution recheck
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < k; ++j)
      acc = (acc + static_cast<std::uint64_t>(flat[i * k + j]) %
                       n * sol->particular[j]) % n;
    if (acc != static_cast<std::uint64_t>(vr[i]) % n)
      throw std::logic_error("solve_linear_mod: substitution recheck failed");
  }
  return sol->particular;
}

}  // namespace bcinv
