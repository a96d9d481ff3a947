#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freeact {

// Letter +i is the basis element a_i, -i its inverse. Zero is never a letter.
using Letter = int;

inline constexpr int kMaxRank = 26;

// Position of a letter in the canonical alphabet order a < A < b < B < ...
inline int letter_key(Letter x) { return 2 * ((x < 0 ? -x : x) - 1) + (x < 0 ? 1 : 0); }
inline Letter letter_from_key(int key) { return key % 2 == 0 ? key / 2 + 1 : -(key / 2 + 1); }

// A freely reduced word. The empty word is the identity. Words do not carry
// the ambient rank; operations that need it take it explicitly.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  // Free reduction of an arbitrary letter sequence. Letters must satisfy
  // 1 <= |x| <= rank (malformed_word otherwise).
  static Word reduce(std::span<const Letter> letters, int rank = kMaxRank);

  // "abA" = a b a^-1; "" or "1" or "e" denote the identity.
  static Word parse(std::string_view text, int rank = kMaxRank);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word pow(int k) const;
  int max_letter() const;
  bool is_cyclically_reduced() const;

  // Rendered with a-z for a_1..a_26 and A-Z for inverses; identity is "1".
  std::string str() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) = default;
  // Shortlex: length first, then lexicographic in the alphabet order above.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  Word conjugator;
  Word core;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

// Least rotation of w and of w^-1 in shortlex order; w must be cyclically
// reduced. Two cyclically reduced words represent conjugate-or-inverse
// elements iff their canonical forms agree.
Word conjugacy_canonical(const Word& w);

enum class WordMode {
  reduced,
  // One cyclically reduced representative per {conjugacy class, inverse}
  // pair, the identity excluded.
  conjugacy,
};

// Visits words of length <= max_length in shortlex order. The visitor returns
// false to stop early.
void for_each_word(int rank, int max_length, WordMode mode,
                   const std::function<bool(const Word&)>& visit);

std::vector<Word> enumerate_words(int rank, int max_length, WordMode mode);

// Number of reduced words of length exactly k: 2n(2n-1)^(k-1).
unsigned long long reduced_word_count(int rank, int k);

std::ostream& operator<<(std::ostream& os, const Word& w);

std::string letter_char(Letter x);

}  // namespace freeact
