#include "forcelab/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "forcelab/error.hpp"

namespace forcelab {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs.back() = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(out));
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const { return sgn(evaluate(x)); }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> out;
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

// Remainder of a modulo b over Q.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    mpq_class q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

IntPoly from_rat(const RatPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  std::vector<mpz_class> out;
  for (const auto& c : p) {
    mpq_class scaled = c * den;
    out.push_back(scaled.get_num());
  }
  return IntPoly(std::move(out)).primitive();
}

}  // namespace

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.coefficients();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top % b.leading() != 0) return std::nullopt;
    mpz_class q = top / b.leading();
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[static_cast<std::size_t>(k + i)] -= q * bc[static_cast<std::size_t>(i)];
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  RatPoly x = to_rat(a);
  RatPoly y = to_rat(b);
  while (!y.empty()) {
    RatPoly r = rat_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return from_rat(x);
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.degree() <= 0) return f.primitive();
  IntPoly g = gcd(f, f.derivative());
  auto q = divide_exact(f.primitive(), g);
  if (!q) throw Inconsistency("gcd does not divide its argument");
  return q->primitive();
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  seq_.push_back(to_rat(p));
  RatPoly d = to_rat(p.derivative());
  if (d.empty()) return;
  seq_.push_back(d);
  for (;;) {
    RatPoly r = rat_rem(seq_[seq_.size() - 2], seq_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const mpq_class& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : seq_) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    const int s = sgn(acc);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const mpq_class& a, const mpq_class& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

std::string round_decimal(const mpq_class& x, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = abs(x) * scale + mpq_class(1, 2);
  mpz_class n = scaled.get_num() / scaled.get_den();
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  std::string out = (x < 0 && n != 0) ? "-" : "";
  out += s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Z.

namespace {

using ModPoly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = mod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw Inconsistency("non-invertible residue");
  return mod(s0, p);
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const IntPoly& f, std::int64_t p) {
  ModPoly out;
  for (const auto& c : f.coefficients()) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

ModPoly sub(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

ModPoly add(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

// a = q b + r
void divmod(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& q, ModPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::int64_t inv = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    const std::int64_t c = r.back() * inv % p;
    const std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = mod(r[shift + i] - c * b[i], p);
    trim(r);
  }
  trim(q);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

ModPoly make_monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  const std::int64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s a + t b = 1 for coprime a, b
void ext_gcd_mod(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, q, r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Inconsistency("Hensel factors are not coprime");
  const std::int64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = std::move(s0);
  t = std::move(t0);
}

ModPoly derivative_mod(const ModPoly& a, std::int64_t p) {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(static_cast<std::int64_t>(i) % p * a[i] % p);
  trim(out);
  return out;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<ModPoly> berlekamp(const ModPoly& f, std::int64_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  // row i: x^{ip} mod f
  ModPoly xp{1};
  {
    ModPoly base{0, 1};
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) xp = rem(mul(xp, base, p), f, p);
      base = rem(mul(base, base, p), f, p);
      e >>= 1;
    }
  }
  std::vector<std::vector<std::int64_t>> q(n, std::vector<std::int64_t>(n, 0));
  ModPoly row{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) q[i][j] = row[j];
    row = rem(mul(row, xp, p), f, p);
  }
  // left null space of Q - I: solve (Q - I)^T v = 0
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[j][i] = mod(q[i][j] - (i == j ? 1 : 0), p);
  }
  std::vector<int> pivot_col_of_row;
  std::vector<int> is_pivot(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t inv = inv_mod(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f0 = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mod(a[i][j] - f0 * a[r][j], p);
    }
    is_pivot[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<ModPoly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free] >= 0) continue;
    ModPoly v(n, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (is_pivot[c] >= 0) v[c] = mod(-a[static_cast<std::size_t>(is_pivot[c])][free], p);
    }
    trim(v);
    basis.push_back(v);
  }
  const std::size_t count = basis.size();
  std::vector<ModPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == count) break;
    if (v.size() <= 1) continue;
    for (std::int64_t s = 0; s < p && factors.size() < count; ++s) {
      std::vector<ModPoly> next;
      for (const auto& u : factors) {
        if (u.size() <= 2) {
          next.push_back(u);
          continue;
        }
        ModPoly shifted = v;
        shifted[0] = mod(shifted[0] - s, p);
        trim(shifted);
        ModPoly g = gcd_mod(u, shifted, p);
        if (g.size() > 1 && g.size() < u.size()) {
          ModPoly qq, rr;
          divmod(u, g, p, qq, rr);
          next.push_back(g);
          next.push_back(make_monic(qq, p));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  if (factors.size() != count) throw Inconsistency("Berlekamp splitting incomplete");
  return factors;
}

using BigPoly = std::vector<mpz_class>;

BigPoly big_of(const ModPoly& a) {
  BigPoly out;
  for (auto c : a) out.emplace_back(static_cast<long>(c));
  return out;
}

void big_trim(BigPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigPoly big_mul(const BigPoly& a, const BigPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  BigPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) {
    c %= m;
    if (c < 0) c += m;
  }
  big_trim(out);
  return out;
}

ModPoly mod_of(const BigPoly& a, std::int64_t p) {
  ModPoly out;
  for (const auto& c : a) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

// Lifts f = g h (mod p) with g, h monic and coprime to f = G H (mod p^e).
void hensel_lift(const BigPoly& f, ModPoly g0, ModPoly h0, std::int64_t p, int e, BigPoly& g, BigPoly& h) {
  ModPoly s, t;
  ext_gcd_mod(g0, h0, p, s, t);
  g = big_of(g0);
  h = big_of(h0);
  mpz_class pk = p;
  for (int k = 1; k < e; ++k) {
    mpz_class pk1 = pk * p;
    BigPoly gh = big_mul(g, h, pk1);
    BigPoly diff(std::max(f.size(), gh.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) {
      c %= pk1;
      if (c < 0) c += pk1;
      c /= pk;
    }
    big_trim(diff);
    ModPoly err = mod_of(diff, p);
    ModPoly q, r;
    divmod(mul(t, err, p), g0, p, q, r);
    ModPoly dh = add(mul(s, err, p), mul(q, h0, p), p);
    BigPoly dg_big = big_of(r);
    BigPoly dh_big = big_of(dh);
    for (std::size_t i = 0; i < dg_big.size(); ++i) g[i] += dg_big[i] * pk;
    for (std::size_t i = 0; i < dh_big.size(); ++i) h[i] += dh_big[i] * pk;
    pk = pk1;
  }
}

IntPoly symmetric(const BigPoly& a, const mpz_class& m) {
  std::vector<mpz_class> out;
  const mpz_class half = m / 2;
  for (auto c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
    out.push_back(c);
  }
  return IntPoly(std::move(out));
}

bool less_poly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

std::vector<IntPoly> factor_squarefree_monic(const IntPoly& f) {
  if (!f.is_monic()) throw InvalidArgument("factorization expects a monic polynomial");
  if (f.degree() <= 1) return {f};

  static const std::int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                        47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103,
                                        107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163};
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (std::int64_t p : primes) {
    ModPoly fp = reduce(f, p);
    if (gcd_mod(fp, derivative_mod(fp, p), p).size() != 1) continue;
    auto factors = berlekamp(fp, p);
    if (best.empty() || factors.size() < best.size()) {
      best = std::move(factors);
      best_p = p;
    }
    if (best.size() == 1 || ++tried == 5) break;
  }
  if (best.empty()) throw Inconsistency("no prime keeps the polynomial squarefree");
  if (best.size() == 1) return {f};
  const std::int64_t p = best_p;

  // Mignotte-type bound on factor coefficients: 2^deg * ||f||_2
  mpz_class norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned long>(f.degree());
  int e = 1;
  mpz_class pe = p;
  while (pe <= 2 * bound) {
    pe *= p;
    ++e;
  }

  BigPoly target = f.coefficients();
  std::vector<BigPoly> lifted;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = mul(rest, best[j], p);
    BigPoly g, h;
    hensel_lift(target, best[i], rest, p, e, g, h);
    lifted.push_back(g);
    target = h;
  }
  lifted.push_back(target);

  std::vector<IntPoly> out;
  IntPoly remaining = f;
  std::vector<BigPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      BigPoly prod{1};
      for (auto i : pick) prod = big_mul(prod, pool[i], pe);
      IntPoly cand = symmetric(prod, pe);
      if (auto q = divide_exact(remaining, cand)) {
        out.push_back(cand);
        remaining = *q;
        std::vector<BigPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(pool[i]);
        }
        pool = std::move(keep);
        found = true;
        break;
      }
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t i = k; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (remaining.degree() > 0) out.push_back(remaining);
  std::sort(out.begin(), out.end(), less_poly);
  return out;
}

}  // namespace forcelab
