#include "forcelab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

void require_square(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidArgument("matrix is not square");
  }
}

}  // namespace

IntPoly characteristic_polynomial(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  // coefficients from the highest degree down
  std::vector<mpz_class> p{1, -mpz_class(static_cast<long>(m[0][0]))};
  for (std::size_t r = 1; r < n; ++r) {
    // M_{r+1} = [[S, C], [R, a]] with S the leading r x r block
    std::vector<mpz_class> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = static_cast<long>(m[i][r]);
    std::vector<mpz_class> t{1, -mpz_class(static_cast<long>(m[r][r]))};
    std::vector<mpz_class> v = col;
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += static_cast<long>(m[r][j]) * v[j];
      t.push_back(-dot);
      std::vector<mpz_class> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += static_cast<long>(m[i][j]) * v[j];
      }
      v = std::move(next);
    }
    std::vector<mpz_class> q(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += t[i - j] * p[j];
    }
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPoly(std::move(p));
}

bool irreducible(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return false;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[s][j] != 0 && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j] != 0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t w = k ? b[0].size() : 0;
  IntMatrix out(n, std::vector<std::int64_t>(w, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw InvalidArgument("matrix shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < w; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

AlgebraicRadius::AlgebraicRadius(IntPoly char_poly, IntPoly minimal_poly, mpq_class lo, mpq_class hi)
    : char_poly_(std::move(char_poly)),
      minimal_(std::move(minimal_poly)),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      sturm_(std::make_shared<SturmSequence>(minimal_)) {
  if (!(lo_ < hi_)) throw InvalidArgument("isolating interval must have lo < hi");
  if (sturm_->count_roots(lo_, hi_) != 1) throw InvalidArgument("interval does not isolate one root");
}

void AlgebraicRadius::bisect() {
  mpq_class mid = (lo_ + hi_) / 2;
  if (sturm_->count_roots(mid, hi_) == 1) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void AlgebraicRadius::refine(const mpq_class& width) {
  if (minimal_.degree() == 1) {
    // rational root -c0/c1: shrink symmetrically around it
    mpq_class root(-minimal_.coeff(0), minimal_.coeff(1));
    root.canonicalize();
    while (hi_ - lo_ >= width) {
      lo_ = (lo_ + root) / 2;
      hi_ = (hi_ + root) / 2;
    }
    return;
  }
  while (hi_ - lo_ >= width) bisect();
}

std::string AlgebraicRadius::decimal(int digits) const {
  if (minimal_.degree() == 1) {
    mpq_class root(-minimal_.coeff(0), minimal_.coeff(1));
    root.canonicalize();
    return round_decimal(root, digits);
  }
  AlgebraicRadius copy = *this;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  copy.refine(mpq_class(1, scale));
  // an irrational root never sits on a rounding boundary, so this terminates
  while (round_decimal(copy.lo_, digits) != round_decimal(copy.hi_, digits)) copy.bisect();
  return round_decimal(copy.hi_, digits);
}

double AlgebraicRadius::approx() const {
  AlgebraicRadius copy = *this;
  copy.refine(mpq_class(1, mpz_class(1) << 64));
  mpq_class mid = (copy.lo_ + copy.hi_) / 2;
  return mid.get_d();
}

int compare(const AlgebraicRadius& a, const mpq_class& v) {
  if (a.minimal_.degree() == 1) {
    mpq_class root(-a.minimal_.coeff(0), a.minimal_.coeff(1));
    root.canonicalize();
    return cmp(root, v);
  }
  AlgebraicRadius copy = a;
  while (copy.lo_ < v && v <= copy.hi_) copy.bisect();
  return v <= copy.lo_ ? 1 : -1;
}

int compare(const AlgebraicRadius& a, const AlgebraicRadius& b) {
  AlgebraicRadius x = a;
  AlgebraicRadius y = b;
  if (x.minimal_ == y.minimal_) {
    mpq_class lo = std::max(x.lo_, y.lo_);
    mpq_class hi = std::min(x.hi_, y.hi_);
    if (lo < hi && x.sturm_->count_roots(lo, hi) == 1) return 0;
  }
  // intervals are half-open (lo, hi], so touching endpoints already separate
  for (;;) {
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    if (x.hi_ - x.lo_ >= y.hi_ - y.lo_) {
      x.bisect();
    } else {
      y.bisect();
    }
  }
}

AlgebraicRadius spectral_radius(const IntMatrix& m) {
  require_square(m);
  if (m.empty()) throw InvalidArgument("spectral radius of an empty matrix");
  for (const auto& row : m) {
    for (auto v : row) {
      if (v < 0) throw InvalidArgument("spectral radius expects a nonnegative matrix");
    }
  }
  std::int64_t min_row = INT64_MAX;
  std::int64_t max_row = 0;
  for (const auto& row : m) {
    std::int64_t s = 0;
    for (auto v : row) s += v;
    min_row = std::min(min_row, s);
    max_row = std::max(max_row, s);
  }
  IntPoly cp = characteristic_polynomial(m);
  IntPoly sf = squarefree_part(cp);
  SturmSequence sturm(sf);
  // min row sum <= rho <= max row sum
  mpq_class lo(static_cast<long>(min_row) - 1);
  mpq_class hi(static_cast<long>(max_row));
  if (sturm.count_roots(lo, hi) == 0) throw Inconsistency("no eigenvalue between the row-sum bounds");
  while (sturm.count_roots(lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (sturm.count_roots(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (const auto& f : factor_squarefree_monic(sf)) {
    SturmSequence fs(f);
    if (fs.count_roots(lo, hi) == 1) {
      if (f.degree() == 1) {
        mpq_class root(-f.coeff(0), f.coeff(1));
        root.canonicalize();
        return AlgebraicRadius(cp, f, root - 1, root + 1);
      }
      return AlgebraicRadius(cp, f, lo, hi);
    }
  }
  throw Inconsistency("no irreducible factor carries the Perron root");
}

PowerEstimate power_iteration_radius(const IntMatrix& m, double tol, int max_iter) {
  require_square(m);
  const std::size_t n = m.size();
  std::vector<long double> v(n, 1.0L);
  PowerEstimate est;
  for (int it = 1; it <= max_iter; ++it) {
    std::vector<long double> w(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = v[i];
      for (std::size_t j = 0; j < n; ++j) w[i] += static_cast<long double>(m[i][j]) * v[j];
    }
    long double lo = INFINITY, hi = 0, norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double ratio = w[i] / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      norm = std::max(norm, w[i]);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    est.lower = static_cast<double>(lo - 1);
    est.upper = static_cast<double>(hi - 1);
    est.value = static_cast<double>((lo + hi) / 2 - 1);
    est.iterations = it;
    if (hi - lo < tol) break;
  }
  return est;
}

}  // namespace forcelab
