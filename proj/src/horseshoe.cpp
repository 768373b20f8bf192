#include "forcelab/horseshoe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

// Which side passes in front is fixed so that code 10010 gives the braid
// type of s1 s2 s3 s4 s1 s2.
constexpr int kMirror = -1;

bool lyndon(const std::string& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!(w < w.substr(i) + w.substr(0, i))) return false;
  }
  return true;
}

}  // namespace

Code::Code(std::string word) : word_(std::move(word)) {
  if (word_.empty() || word_.find_first_not_of("01") != std::string::npos) {
    throw ParseError("code must be a nonempty word over {0,1}: '" + word_ + "'");
  }
}

bool Code::primitive() const {
  const std::size_t s = word_.size();
  for (std::size_t p = 1; p < s; ++p) {
    if (s % p == 0 && word_.substr(p) + word_.substr(0, p) == word_) return false;
  }
  return true;
}

std::string Code::canonical() const {
  std::string best = word_;
  for (std::size_t i = 1; i < word_.size(); ++i) best = std::min(best, word_.substr(i) + word_.substr(0, i));
  return best;
}

Code Code::rotate(int k) const {
  const int s = length();
  const auto r = static_cast<std::size_t>(((k % s) + s) % s);
  return Code(word_.substr(r) + word_.substr(0, r));
}

std::vector<Code> primitive_codes(int max_len) {
  std::vector<Code> out;
  for (int len = 1; len <= max_len; ++len) {
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string w;
      for (int i = len - 1; i >= 0; --i) w.push_back((bits >> i) & 1UL ? '1' : '0');
      if (lyndon(w)) out.emplace_back(w);
    }
  }
  return out;
}

PlanarPoint horseshoe_map(const PlanarPoint& p) {
  mpq_class x = 3 * p.x;
  mpq_class y = p.y / 3;
  if (x >= 2) return {3 - x, 1 - y};
  if (x > 1) throw InvalidArgument("point lies outside the horseshoe strips");
  return {x, y};
}

std::vector<PlanarPoint> orbit_coordinates(const Code& c) {
  if (!c.primitive()) throw InvalidArgument("code " + c.word() + " is not primitive");
  const std::string& w = c.word();
  const std::size_t s = w.size();
  // forward: x -> 3x or 3 - 3x; backward: y -> y/3 or 1 - y/3
  mpq_class ax = 1, bx = 0, ay = 1, by = 0;
  for (char ch : w) {
    if (ch == '0') {
      ax *= 3;
      bx *= 3;
      ay /= 3;
      by /= 3;
    } else {
      ax = -3 * ax;
      bx = 3 - 3 * bx;
      ay = -ay / 3;
      by = 1 - by / 3;
    }
  }
  PlanarPoint p{bx / (1 - ax), by / (1 - ay)};
  std::vector<PlanarPoint> out;
  for (std::size_t i = 0; i < s; ++i) {
    out.push_back(p);
    p = horseshoe_map(p);
  }
  if (!(p == out.front())) throw Inconsistency("horseshoe orbit does not close up");
  return out;
}

bool unimodal_less(const std::string& a, const std::string& b) {
  int ones = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return (a[i] < b[i]) == (ones % 2 == 0);
    if (a[i] == '1') ++ones;
  }
  throw InvalidArgument("itineraries agree on their common prefix");
}

BraidWord braid_from_code(const Code& c) {
  auto pts = orbit_coordinates(c);
  const int s = c.length();
  if (s == 1) return BraidWord(1);
  // stage 2 starts from the stretched points (3x, y/3)
  std::vector<double> X(static_cast<std::size_t>(s)), Y(static_cast<std::size_t>(s));
  std::vector<bool> rotating(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    X[static_cast<std::size_t>(j)] = mpq_class(3 * pts[static_cast<std::size_t>(j)].x).get_d();
    Y[static_cast<std::size_t>(j)] = mpq_class(pts[static_cast<std::size_t>(j)].y / 3).get_d();
    rotating[static_cast<std::size_t>(j)] = c.word()[static_cast<std::size_t>(j)] == '1';
  }
  auto y_at = [&](int j, double th) {
    if (!rotating[static_cast<std::size_t>(j)]) return Y[static_cast<std::size_t>(j)];
    return 0.5 + (X[static_cast<std::size_t>(j)] - 1.5) * std::sin(th) + (Y[static_cast<std::size_t>(j)] - 0.5) * std::cos(th);
  };

  struct Event {
    double theta;
    int a;
    int b;
  };
  std::vector<Event> events;
  const double pi = std::numbers::pi;
  for (int j = 0; j < s; ++j) {
    for (int k = j + 1; k < s; ++k) {
      const bool rj = rotating[static_cast<std::size_t>(j)];
      const bool rk = rotating[static_cast<std::size_t>(k)];
      if (!rj && !rk) continue;
      if (rj && rk) {
        double dx = X[static_cast<std::size_t>(j)] - X[static_cast<std::size_t>(k)];
        double dy = Y[static_cast<std::size_t>(j)] - Y[static_cast<std::size_t>(k)];
        double th = std::atan2(dx, dy);
        if (th <= 0) th += pi;
        events.push_back({th, j, k});
        continue;
      }
      int r = rj ? j : k;
      int f = rj ? k : j;
      double a = X[static_cast<std::size_t>(r)] - 1.5;
      double b = Y[static_cast<std::size_t>(r)] - 0.5;
      double xf = X[static_cast<std::size_t>(f)];
      if (!(3 - X[static_cast<std::size_t>(r)] < xf)) continue;
      // x_r = 3/2 + R cos(theta + phi) decreases through xf once
      double R = std::hypot(a, b);
      double phi = std::atan2(b, a);
      events.push_back({std::acos((xf - 1.5) / R) - phi, j, k});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) { return l.theta < r.theta; });

  std::vector<int> order(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) order[static_cast<std::size_t>(j)] = j;
  std::sort(order.begin(), order.end(), [&](int l, int r) { return pts[static_cast<std::size_t>(l)].x < pts[static_cast<std::size_t>(r)].x; });
  std::vector<int> position(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  constexpr double tie = 1e-12;
  std::vector<Letter> letters;
  std::vector<bool> done(events.size(), false);
  for (std::size_t first = 0; first < events.size();) {
    if (done[first]) {
      ++first;
      continue;
    }
    // among near-simultaneous events take the lowest adjacent pair
    std::size_t pick = events.size();
    int best = s;
    for (std::size_t e = first; e < events.size() && events[e].theta - events[first].theta < tie; ++e) {
      if (done[e]) continue;
      int pa = position[static_cast<std::size_t>(events[e].a)];
      int pb = position[static_cast<std::size_t>(events[e].b)];
      if (std::abs(pa - pb) == 1 && std::min(pa, pb) < best) {
        best = std::min(pa, pb);
        pick = e;
      }
    }
    if (pick == events.size()) throw Inconsistency("crossing strands are not adjacent in code " + c.word());
    const Event& ev = events[pick];
    int left = position[static_cast<std::size_t>(ev.a)] < position[static_cast<std::size_t>(ev.b)] ? ev.a : ev.b;
    int right = left == ev.a ? ev.b : ev.a;
    double dy = y_at(left, ev.theta) - y_at(right, ev.theta);
    if (std::abs(dy) < tie) throw Inconsistency("strands cross through each other in code " + c.word());
    letters.push_back({best + 1, (dy > 0 ? 1 : -1) * kMirror});
    std::swap(position[static_cast<std::size_t>(left)], position[static_cast<std::size_t>(right)]);
    done[pick] = true;
  }
  return BraidWord(s, std::move(letters));
}

Code sigma_code(int m, int n) {
  if (m < 1 || n < m + 2) throw InvalidArgument("sigma code needs m >= 1 and n >= m+2");
  return Code("1" + std::string(static_cast<std::size_t>(n - 1), '0') + "1" + std::string(static_cast<std::size_t>(m), '0'));
}

Code sigma_code_alternative(int m, int n) {
  if (m < 1 || n < m + 2) throw InvalidArgument("sigma code needs m >= 1 and n >= m+2");
  return Code("1" + std::string(static_cast<std::size_t>(n - 1), '0') + "1" + std::string(static_cast<std::size_t>(m - 1), '0') + "1");
}

}  // namespace forcelab
