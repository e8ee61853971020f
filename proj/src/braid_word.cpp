#include "dualbraid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>

namespace dualbraid {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> zero_based_images)
    : images_(std::move(zero_based_images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || hit[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::delta(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.images_[i] = (i + n - 1) % n;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(size());
  for (int i = 0; i < size(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation Permutation::power(long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  Permutation result(size());
  while (e) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (images_[i] == i) out.push_back(i + 1);
  return out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("Permutation: size mismatch");
  Permutation p(lhs.size());
  for (int i = 0; i < lhs.size(); ++i) p.images_[i] = lhs.images_[rhs.images_[i]];
  return p;
}

BraidWord::BraidWord(int strands) : n_(strands) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be positive");
}

BraidWord::BraidWord(int strands, std::vector<BandGenerator> letters) : BraidWord(strands) {
  for (const auto& g : letters) push_back(g);
}

void BraidWord::push_back(const BandGenerator& g) {
  if (!(1 <= g.lower && g.lower < g.upper && g.upper <= n_) || (g.sign != 1 && g.sign != -1))
    throw std::invalid_argument("BraidWord: band generator a(" + std::to_string(g.upper) + "," +
                                std::to_string(g.lower) + ") out of range for n=" +
                                std::to_string(n_));
  letters_.push_back(g);
}

void BraidWord::append(const BraidWord& other) {
  if (other.n_ != n_) throw std::invalid_argument("BraidWord: strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::inverse() const {
  BraidWord w(n_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

BraidWord BraidWord::power(long exponent) const {
  const BraidWord base = exponent < 0 ? inverse() : *this;
  BraidWord w(n_);
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) w.append(base);
  return w;
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  BraidWord w = lhs;
  w.append(rhs);
  return w;
}

BraidWord delta_word(int n) {
  BraidWord w(n);
  for (int i = n; i >= 2; --i) w.push_back({i, i - 1, 1});
  return w;
}

BraidWord half_twist_word(int n) {
  BraidWord w(n);
  for (int top = 1; top <= n - 1; ++top)
    for (int i = top; i >= 1; --i) w.push_back({i + 1, i, 1});
  return w;
}

BraidWord epsilon_word(int n) {
  BraidWord w = delta_word(n);
  if (n >= 2) w.push_back({2, 1, 1});
  return w;
}

BraidWord subsimple_word(int n, const std::vector<int>& descending) {
  BraidWord w(n);
  for (std::size_t m = 0; m + 1 < descending.size(); ++m) {
    if (descending[m] <= descending[m + 1])
      throw std::invalid_argument("subsimple indices must strictly decrease");
    w.push_back({descending[m], descending[m + 1], 1});
  }
  return w;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  BraidWord parse() {
    BraidWord w(n_);
    skip_space();
    if (at_end()) return w;
    w = word();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return !at_end() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_atom() {
    skip_space();
    if (at_end()) return false;
    char c = text_[pos_];
    return c == 'a' || c == 's' || c == 'd' || c == 'D' || c == 'e' || c == '[' || c == '(';
  }

  long integer(bool allow_sign) {
    skip_space();
    bool negative = false;
    if (allow_sign && !at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (LONG_MAX - 9) / 10) fail("integer too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  int index() {
    const std::size_t at = pos_;
    long v = integer(false);
    if (v < 1 || v > n_) {
      pos_ = at;
      fail("index " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
    return static_cast<int>(v);
  }

  BraidWord word() {
    BraidWord w = term();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        w.append(term());
      } else if (starts_atom()) {
        w.append(term());
      } else {
        return w;
      }
    }
  }

  BraidWord term() {
    BraidWord w = atom();
    if (peek('^')) {
      ++pos_;
      w = w.power(integer(true));
    }
    return w;
  }

  BraidWord atom() {
    skip_space();
    if (at_end()) fail("expected a generator");
    const char c = text_[pos_];
    switch (c) {
      case 'a': {
        ++pos_;
        expect('(');
        int i = index();
        expect(',');
        int j = index();
        expect(')');
        if (i == j) fail("a(i,j) needs distinct indices");
        return BraidWord(n_, {{std::max(i, j), std::min(i, j), 1}});
      }
      case 's': {
        ++pos_;
        const std::size_t at = pos_;
        long i = integer(false);
        if (i < 1 || i > n_ - 1) {
          pos_ = at;
          fail("s" + std::to_string(i) + " out of range 1.." + std::to_string(n_ - 1));
        }
        return BraidWord(n_, {{static_cast<int>(i) + 1, static_cast<int>(i), 1}});
      }
      case 'd': ++pos_; return delta_word(n_);
      case 'D': ++pos_; return half_twist_word(n_);
      case 'e': ++pos_; return epsilon_word(n_);
      case '[': {
        ++pos_;
        std::vector<int> idx{index()};
        while (peek(',')) {
          ++pos_;
          const std::size_t at = pos_;
          idx.push_back(index());
          if (idx.back() >= idx[idx.size() - 2]) {
            pos_ = at;
            fail("subsimple literal must be strictly decreasing");
          }
        }
        expect(']');
        return subsimple_word(n_, idx);
      }
      case '(': {
        ++pos_;
        BraidWord w = word();
        expect(')');
        return w;
      }
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

BraidWord parse_word(std::string_view text, int n) {
  if (n < 2) throw std::invalid_argument("parse_word: strand count must be at least 2");
  return Parser(text, n).parse();
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "a(" + std::to_string(g.upper) + "," + std::to_string(g.lower) + ")";
    if (g.sign < 0) out += "^-1";
  }
  return out;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (const auto& g : w.letters()) p = p * Permutation::transposition(w.strands(), g.upper, g.lower);
  return p;
}

long exponent_sum(const BraidWord& w) {
  long e = 0;
  for (const auto& g : w.letters()) e += g.sign;
  return e;
}

}  // namespace dualbraid
