#include "forcelab/garside.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "forcelab/error.hpp"

namespace forcelab {

namespace simple {

Permutation delta(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = n - 1 - j;
  return Permutation(std::move(images));
}

Permutation generator(int n, int i) {
  auto images = Permutation::identity(n).images();
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return Permutation(std::move(images));
}

Permutation partial(const Permutation& a) {
  const int n = a.size();
  auto inv = a.inverse();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = n - 1 - inv[k];
  return Permutation(std::move(images));
}

Permutation tau(const Permutation& a) {
  const int n = a.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = n - 1 - a[n - 1 - j];
  return Permutation(std::move(images));
}

namespace {

bool starts_with(const Permutation& a, int i) { return a[i - 1] > a[i]; }

bool ends_with(const Permutation& a, int i) {
  auto inv = a.inverse();
  return inv[i - 1] > inv[i];
}

// b^-1 a for b a left divisor of a
Permutation strip_left(const Permutation& b, const Permutation& a) { return b.inverse().then(a); }

// a b^-1 for b a right divisor of a
Permutation strip_right(const Permutation& a, const Permutation& b) { return a.then(b.inverse()); }

Permutation right_meet(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  Permutation d = Permutation::identity(n);
  Permutation ra = a;
  Permutation rb = b;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (ends_with(ra, i) && ends_with(rb, i)) {
        auto s = generator(n, i);
        d = s.then(d);
        ra = strip_right(ra, s);
        rb = strip_right(rb, s);
        progress = true;
        break;
      }
    }
  }
  return d;
}

}  // namespace

bool left_divides(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  // a <= b iff every pair crossing in a also crosses in b
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (a[j] > a[k] && b[j] < b[k]) return false;
    }
  }
  return true;
}

Permutation left_meet(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  Permutation c = Permutation::identity(n);
  Permutation ra = a;
  Permutation rb = b;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(ra, i) && starts_with(rb, i)) {
        auto s = generator(n, i);
        c = c.then(s);
        ra = strip_left(s, ra);
        rb = strip_left(s, rb);
        progress = true;
        break;
      }
    }
  }
  return c;
}

Permutation left_join(const Permutation& a, const Permutation& b) {
  // a <= m iff partial(m) right-divides partial(a)
  auto d = right_meet(partial(a), partial(b));
  return delta(a.size()).then(d.inverse());
}

Permutation remainder(const Permutation& a, const Permutation& b) {
  return strip_left(a, left_join(a, b));
}

std::vector<int> spell(const Permutation& a) {
  std::vector<int> out;
  Permutation rest = a;
  const int n = a.size();
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(rest, i)) {
        out.push_back(i);
        rest = strip_left(generator(n, i), rest);
        progress = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace simple

namespace {

using Element = LeftNormalForm;

bool is_identity(const Permutation& a) {
  for (int j = 0; j < a.size(); ++j) {
    if (a[j] != j) return false;
  }
  return true;
}

Element identity_element(int n) { return Element{n, 0, {}}; }

void mul_delta_power(Element& x, int k) {
  x.infimum += k;
  if (k % 2 != 0) {
    for (auto& f : x.factors) f = simple::tau(f);
  }
}

void mul_simple(Element& x, const Permutation& a) {
  if (is_identity(a)) return;
  auto& f = x.factors;
  f.push_back(a);
  for (std::size_t j = f.size() - 1; j-- > 0;) {
    auto c = simple::left_meet(simple::partial(f[j]), f[j + 1]);
    if (is_identity(c)) break;
    f[j] = f[j].then(c);
    f[j + 1] = c.inverse().then(f[j + 1]);
  }
  const auto d = simple::delta(x.strands);
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == d) ++lead;
  x.infimum += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && is_identity(f.back())) f.pop_back();
}

Element product(const Element& x, const Element& y) {
  Element out = x;
  mul_delta_power(out, y.infimum);
  for (const auto& f : y.factors) mul_simple(out, f);
  return out;
}

Element inverse(const Element& x) {
  Element out = identity_element(x.strands);
  for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) {
    mul_simple(out, simple::partial(*it));
    mul_delta_power(out, -1);
  }
  mul_delta_power(out, -x.infimum);
  return out;
}

Element from_simple(const Permutation& a) {
  Element out = identity_element(a.size());
  mul_simple(out, a);
  return out;
}

// c^-1 x c
Element conjugate(const Element& x, const Element& c) { return product(product(inverse(c), x), c); }

std::string key_of(const Element& x) {
  std::string key = std::to_string(x.infimum);
  for (const auto& f : x.factors) {
    key.push_back('|');
    for (int v : f.images()) key.push_back(static_cast<char>('0' + v));
  }
  return key;
}

// Conjugates x into its super summit set; `conj` accumulates the conjugator.
Element super_summit(Element x, Element& conj) {
  const int n = x.strands;
  const int patience = n * (n - 1) / 2;
  for (bool improved = true; improved;) {
    improved = false;
    for (int stale = 0; stale < patience && !x.factors.empty(); ++stale) {
      Permutation a = x.infimum % 2 != 0 ? simple::tau(x.factors.front()) : x.factors.front();
      auto c = from_simple(a);
      auto y = conjugate(x, c);
      conj = product(conj, c);
      if (y.infimum > x.infimum) {
        stale = -1;
        improved = true;
      }
      x = std::move(y);
    }
    for (int stale = 0; stale < patience && !x.factors.empty(); ++stale) {
      auto c = inverse(from_simple(x.factors.back()));
      auto y = conjugate(x, c);
      conj = product(conj, c);
      if (y.supremum() < x.supremum()) {
        stale = -1;
        improved = true;
      }
      x = std::move(y);
    }
  }
  return x;
}

// Smallest c' >= c (prefix order) with inf(c'^-1 y c') >= inf(y).
Permutation close_infimum(const Element& y, Permutation c) {
  for (;;) {
    Permutation rem = y.infimum % 2 != 0 ? simple::tau(c) : c;
    for (const auto& f : y.factors) rem = simple::remainder(f, rem);
    if (simple::left_divides(rem, c)) return c;
    c = simple::left_join(c, rem);
  }
}

Permutation minimal_conjugator(const Element& y, const Element& y_inv, Permutation c) {
  for (;;) {
    auto c1 = close_infimum(y, c);
    auto c2 = close_infimum(y_inv, c1);
    if (c2 == c) return c;
    c = std::move(c2);
  }
}

}  // namespace

BraidWord LeftNormalForm::to_word() const {
  BraidWord out = half_twist(strands).power(infimum);
  std::vector<Letter> letters = out.letters();
  for (const auto& f : factors) {
    for (int i : simple::spell(f)) letters.push_back({i, 1});
  }
  return BraidWord(strands, std::move(letters));
}

LeftNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  Element x = identity_element(n);
  for (const auto& l : w.letters()) {
    auto s = simple::generator(n, l.index);
    if (l.sign > 0) {
      mul_simple(x, s);
    } else {
      mul_simple(x, simple::partial(s));
      mul_delta_power(x, -1);
    }
  }
  return x;
}

bool equal_in_group(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw InvalidArgument("strand-count mismatch");
  return normal_form(u) == normal_form(v);
}

std::string to_string(const LeftNormalForm& nf) {
  std::ostringstream out;
  out << "D^" << nf.infimum;
  for (const auto& f : nf.factors) {
    out << " . [";
    for (int j = 0; j < f.size(); ++j) out << (j ? " " : "") << f[j];
    out << ']';
  }
  return out.str();
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::equal: return "equal";
    case Outcome::not_equal: return "not-equal";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

ConjugacyVerdict conjugacy_test(const BraidWord& u, const BraidWord& v, std::size_t budget) {
  if (u.strands() != v.strands()) throw InvalidArgument("strand-count mismatch");
  const int n = u.strands();
  ConjugacyVerdict verdict;
  verdict.outcome = Outcome::not_equal;
  if (exponent_sum(u) != exponent_sum(v)) return verdict;
  if (permutation_of(u).cycle_type() != permutation_of(v).cycle_type()) return verdict;

  const Element x = normal_form(u);
  const Element y = normal_form(v);
  Element cu = identity_element(n);
  Element cv = identity_element(n);
  const Element xs = super_summit(x, cu);
  const Element ys = super_summit(y, cv);
  if (xs.infimum != ys.infimum || xs.supremum() != ys.supremum()) return verdict;

  const std::string target = key_of(ys);
  struct Node {
    Element element;
    std::size_t parent;
    Permutation step;
  };
  std::vector<Node> nodes{{xs, 0, Permutation::identity(n)}};
  std::unordered_map<std::string, std::size_t> seen{{key_of(xs), 0}};
  std::optional<std::size_t> hit;
  if (key_of(xs) == target) hit = 0;

  for (std::size_t head = 0; head < nodes.size() && !hit; ++head) {
    const Element cur = nodes[head].element;
    const Element cur_inv = inverse(cur);
    for (int i = 1; i < n && !hit; ++i) {
      auto c = minimal_conjugator(cur, cur_inv, simple::generator(n, i));
      auto z = conjugate(cur, from_simple(c));
      auto key = key_of(z);
      if (seen.count(key)) continue;
      seen.emplace(key, nodes.size());
      nodes.push_back({std::move(z), head, c});
      if (key == target) hit = nodes.size() - 1;
      if (nodes.size() > budget && !hit) {
        verdict.outcome = Outcome::unknown;
        verdict.effort = nodes.size();
        return verdict;
      }
    }
  }
  verdict.effort = nodes.size();
  if (!hit) return verdict;

  std::vector<Permutation> steps;
  for (std::size_t k = *hit; k != 0; k = nodes[k].parent) steps.push_back(nodes[k].step);
  Element w = cu;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) w = product(w, from_simple(*it));
  w = product(w, inverse(cv));
  if (!(conjugate(x, w) == y)) throw Inconsistency("conjugator found by summit search does not verify");
  verdict.outcome = Outcome::equal;
  verdict.witness = w.to_word();
  return verdict;
}

ConjugacyVerdict braid_type_equal(const BraidWord& u, const BraidWord& v, std::size_t budget) {
  if (u.strands() != v.strands()) throw InvalidArgument("strand-count mismatch");
  const int n = u.strands();
  const std::int64_t twist = static_cast<std::int64_t>(n) * (n - 1);
  const std::int64_t diff = exponent_sum(v) - exponent_sum(u);
  if (twist == 0) {
    ConjugacyVerdict trivial;
    trivial.outcome = Outcome::equal;
    trivial.witness = BraidWord(n);
    return trivial;
  }
  if (diff % twist != 0) return ConjugacyVerdict{Outcome::not_equal, std::nullopt, 0};
  const int k = static_cast<int>(diff / twist);
  return conjugacy_test(u * full_twist(n).power(k), v, budget);
}

}  // namespace forcelab
