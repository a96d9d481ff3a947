#include "freeact/word.hpp"

#include <algorithm>

#include "freeact/error.hpp"

namespace freeact {

namespace {

void check_letter(Letter x, int rank) {
  if (x == 0 || x > rank || x < -rank) {
    throw Error(ErrorKind::malformed_word,
                "letter index " + std::to_string(x) + " outside rank " + std::to_string(rank));
  }
}

// Lexicographic comparison of equal-length letter sequences in key order.
int compare_keys(std::span<const Letter> u, std::span<const Letter> v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int ku = letter_key(u[i]);
    const int kv = letter_key(v[i]);
    if (ku != kv) return ku < kv ? -1 : 1;
  }
  return 0;
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) {
  *this = reduce(std::vector<Letter>(letters));
}

Word Word::reduce(std::span<const Letter> letters, int rank) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter x : letters) {
    check_letter(x, rank);
    if (!w.letters_.empty() && w.letters_.back() == -x) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

Word Word::parse(std::string_view text, int rank) {
  if (text == "1" || text == "e" || text.empty()) return Word();
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    Letter x = 0;
    if (c >= 'a' && c <= 'z') {
      x = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      x = -(c - 'A' + 1);
    } else {
      throw Error(ErrorKind::malformed_word, "malformed word \"" + std::string(text) +
                                                 "\": bad character at position " +
                                                 std::to_string(i));
    }
    if (x > rank || x < -rank) {
      throw Error(ErrorKind::malformed_word, "malformed word \"" + std::string(text) +
                                                 "\": letter '" + std::string(1, c) +
                                                 "' exceeds rank " + std::to_string(rank));
    }
    letters.push_back(x);
  }
  return reduce(letters, rank);
}

Word Word::inverse() const {
  Word w;
  w.letters_.resize(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(),
                 [](Letter x) { return -x; });
  return w;
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

int Word::max_letter() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != -letters_.back();
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s += letter_char(x);
  return s;
}

Word operator*(const Word& u, const Word& v) {
  std::size_t cancel = 0;
  while (cancel < u.size() && cancel < v.size() &&
         u.letters_[u.size() - 1 - cancel] == -v.letters_[cancel]) {
    ++cancel;
  }
  Word w;
  w.letters_.reserve(u.size() + v.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), u.letters_.begin(), u.letters_.end() - cancel);
  w.letters_.insert(w.letters_.end(), v.letters_.begin() + cancel, v.letters_.end());
  return w;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  const int c = compare_keys(u.letters_, v.letters_);
  return c <=> 0;
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  const std::size_t n = w.size();
  while (2 * k + 1 < n && w[k] == -w[n - 1 - k]) ++k;
  std::vector<Letter> conj(w.begin(), w.begin() + k);
  std::vector<Letter> core(w.begin() + k, w.end() - k);
  return {Word::reduce(conj), Word::reduce(core)};
}

Word conjugacy_canonical(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  std::vector<Letter> best(w.begin(), w.end());
  std::vector<Letter> cand(n);
  const Word inv = w.inverse();
  for (const Word* src : {&w, &inv}) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = (*src)[(r + i) % n];
      if (compare_keys(cand, best) < 0) best = cand;
    }
  }
  return Word::reduce(best);
}

namespace {

// True iff the cyclically reduced word in `keys` is the least among its
// rotations and the rotations of its inverse.
bool is_canonical_cyclic(const std::vector<int>& keys) {
  const std::size_t n = keys.size();
  // Rotations.
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = keys[(r + i) % n];
      const int b = keys[i];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  // Inverse rotations: inverse word reads keys backwards with inverted letters.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = keys[(r + n - i) % n] ^ 1;
      const int b = keys[i];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  return true;
}

struct Enumerator {
  int rank;
  int length;
  bool cyclic;
  const std::function<bool(const Word&)>& visit;
  std::vector<int> keys;
  bool stopped = false;

  void emit() {
    if (cyclic) {
      if (keys.size() > 1 && (keys.front() ^ 1) == keys.back()) return;
      if (!is_canonical_cyclic(keys)) return;
    }
    std::vector<Letter> letters(keys.size());
    std::transform(keys.begin(), keys.end(), letters.begin(), letter_from_key);
    if (!visit(Word::reduce(letters))) stopped = true;
  }

  void grow() {
    if (stopped) return;
    if (static_cast<int>(keys.size()) == length) {
      emit();
      return;
    }
    for (int k = 0; k < 2 * rank && !stopped; ++k) {
      if (!keys.empty() && (keys.back() ^ 1) == k) continue;
      // A canonical cyclic representative starts with its least letter, so
      // no later letter may be smaller than the first one.
      if (cyclic && !keys.empty() && k < keys.front()) continue;
      keys.push_back(k);
      grow();
      keys.pop_back();
    }
  }
};

}  // namespace

void for_each_word(int rank, int max_length, WordMode mode,
                   const std::function<bool(const Word&)>& visit) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error(ErrorKind::precondition_violated, "rank must lie in 1..26");
  }
  const bool cyclic = mode == WordMode::conjugacy;
  for (int len = cyclic ? 1 : 0; len <= max_length; ++len) {
    Enumerator e{rank, len, cyclic, visit, {}, false};
    e.keys.reserve(len);
    e.grow();
    if (e.stopped) return;
  }
}

std::vector<Word> enumerate_words(int rank, int max_length, WordMode mode) {
  std::vector<Word> out;
  for_each_word(rank, max_length, mode, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

unsigned long long reduced_word_count(int rank, int k) {
  if (k == 0) return 1;
  unsigned long long count = 2ULL * rank;
  for (int i = 1; i < k; ++i) count *= 2ULL * rank - 1;
  return count;
}

std::string letter_char(Letter x) {
  return std::string(1, x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace freeact
