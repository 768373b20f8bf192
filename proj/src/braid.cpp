#include "forcelab/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "forcelab/error.hpp"

namespace forcelab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = j;
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw InvalidArgument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (int j = 0; j < size(); ++j) out[static_cast<std::size_t>(j)] = next[(*this)[j]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int j = 0; j < size(); ++j) out[static_cast<std::size_t>((*this)[j])] = j;
  return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int j = 0; j < size(); ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    int len = 0;
    for (int k = j; !seen[static_cast<std::size_t>(k)]; k = (*this)[k]) {
      seen[static_cast<std::size_t>(k)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_single_cycle() const {
  auto type = cycle_type();
  return type.size() == 1;
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidArgument("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw InvalidArgument("generator index " + std::to_string(l.index) +
                            " out of range for B" + std::to_string(strands_));
    }
    if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) throw InvalidArgument("strand-count mismatch");
  auto letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(strands_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

Permutation permutation_of(const BraidWord& w) {
  // position[s] = current position of the strand that started at s
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
  for (int j = 0; j < w.strands(); ++j) strand_at[static_cast<std::size_t>(j)] = j;
  for (const auto& l : w.letters()) {
    std::swap(strand_at[static_cast<std::size_t>(l.index - 1)],
              strand_at[static_cast<std::size_t>(l.index)]);
  }
  std::vector<int> images(strand_at.size());
  for (int pos = 0; pos < w.strands(); ++pos) {
    images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(pos)])] = pos;
  }
  return Permutation(std::move(images));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (const auto& l : w.letters()) sum += l.sign;
  return sum;
}

BraidWord half_twist(int strands) {
  std::vector<Letter> letters;
  for (int k = 1; k < strands; ++k) {
    for (int i = k; i >= 1; --i) letters.push_back({i, 1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord full_twist(int strands) { return half_twist(strands).power(2); }

namespace {

void require_positive(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("family parameters must satisfy m, n >= 1");
}

}  // namespace

BraidWord make_beta(int m, int n) {
  require_positive(m, n);
  std::vector<Letter> letters;
  for (int i = 1; i <= m; ++i) letters.push_back({i, 1});
  for (int i = m + 1; i <= m + n; ++i) letters.push_back({i, -1});
  return BraidWord(m + n + 1, std::move(letters));
}

BraidWord make_xi(int m, int n) {
  require_positive(m, n);
  std::vector<Letter> letters;
  for (int i = m + n; i >= 1; --i) letters.push_back({i, 1});
  for (int i = 1; i <= m + n; ++i) letters.push_back({i, 1});
  return BraidWord(m + n + 1, std::move(letters));
}

BraidWord make_sigma(int m, int n) { return free_reduce(make_beta(m, n) * make_xi(m, n)); }

BraidWord make_sigma_prime(int m, int n) {
  require_positive(m, n);
  const int strands = m + n + 1;
  // delta = s1 s2 ... s_{m+n}, one click of the cyclic rotation
  std::vector<Letter> letters;
  for (int i = 1; i <= m + n; ++i) letters.push_back({i, 1});
  if (n >= m) {
    for (int i = 1; i <= 2 * m; ++i) letters.push_back({i, 1});
  } else {
    for (int i = m - n - 1; i >= 1; --i) letters.push_back({i, 1});
    letters.push_back({1, 1});
    for (int i = 1; i <= m + n; ++i) letters.push_back({i, 1});
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::ostringstream out;
  out << 'B' << w.strands() << ':';
  for (const auto& l : w.letters()) {
    out << " s" << l.index;
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text.front() != 'B') throw ParseError("braid word must start with 'B<n>:'");
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' after strand count");
  int strands = parse_int(text.substr(1, colon - 1), "strand count");
  std::vector<Letter> letters;
  std::istringstream tokens{std::string(text.substr(colon + 1))};
  std::string tok;
  while (tokens >> tok) {
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("bad generator token '" + tok + "'");
    std::string_view body(tok);
    body.remove_prefix(1);
    int sign = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      if (body.substr(caret) != "^-1") throw ParseError("only ^-1 exponents are allowed: '" + tok + "'");
      sign = -1;
      body = body.substr(0, caret);
    }
    letters.push_back({parse_int(body, tok), sign});
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace forcelab
