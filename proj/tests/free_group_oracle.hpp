#pragma once

// Artin's faithful action of B_n on the free group F_n, used as an
// independent equality oracle for braid words.

#include <cmath>
#include <vector>

#include "forcelab/braid.hpp"

namespace oracle {

// Free-group word: generator x_j is j+1, its inverse -(j+1).
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int g) {
  if (!w.empty() && w.back() == -g) {
    w.pop_back();
  } else {
    w.push_back(g);
  }
}

inline FreeWord invert(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Substitute generator images into w.
inline FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int g : w) {
    const FreeWord& img = images[static_cast<std::size_t>(std::abs(g) - 1)];
    if (g > 0) {
      for (int h : img) push_reduced(out, h);
    } else {
      for (int h : invert(img)) push_reduced(out, h);
    }
  }
  return out;
}

inline std::vector<FreeWord> letter_images(int n, forcelab::Letter l) {
  std::vector<FreeWord> img;
  for (int j = 1; j <= n; ++j) img.push_back({j});
  const int i = l.index;
  if (l.sign > 0) {
    img[i - 1] = {i, i + 1, -i};
    img[i] = {i};
  } else {
    img[i - 1] = {i + 1};
    img[i] = {-(i + 1), i, i + 1};
  }
  return img;
}

inline std::vector<FreeWord> artin_action(const forcelab::BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> acc;
  for (int j = 1; j <= n; ++j) acc.push_back({j});
  for (const auto& l : w.letters()) {
    auto step = letter_images(n, l);
    for (auto& a : acc) a = substitute(a, step);
  }
  return acc;
}

inline bool same_braid(const forcelab::BraidWord& u, const forcelab::BraidWord& v) {
  return artin_action(u) == artin_action(v);
}

// Exponential growth rate of |phi^k(x_1)| + ... + |phi^k(x_n)| under the
// Artin action, estimated from the last `span` iterates before the total
// length exceeds `cap`. For a pseudo-Anosov braid this is the dilatation.
inline double growth_rate(const forcelab::BraidWord& w, std::size_t cap = 2000000, int span = 4) {
  const auto phi = artin_action(w);
  std::vector<FreeWord> acc = phi;
  std::vector<double> lengths;
  for (;;) {
    std::size_t total = 0;
    for (const auto& a : acc) total += a.size();
    lengths.push_back(static_cast<double>(total));
    if (total > cap) break;
    for (auto& a : acc) a = substitute(a, phi);
  }
  const std::size_t k = lengths.size() - 1;
  return std::pow(lengths[k] / lengths[k - static_cast<std::size_t>(span)], 1.0 / span);
}

}  // namespace oracle
