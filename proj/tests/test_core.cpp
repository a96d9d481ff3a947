#include <random>
#include <set>

#include "doctest.h"
#include "freeact/error.hpp"
#include "freeact/scalar.hpp"
#include "freeact/word.hpp"

using namespace freeact;

namespace {

// Naive reduction: delete the first cancelling pair until none is left.
std::vector<Letter> naive_reduce(std::vector<Letter> v) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

// Sign of p + q sqrt(D) for integers by squaring, independent of Scalar.
int oracle_sign(long p, long q, long d) {
  const long long a = p, b = q;
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  const long long lhs = a * a, rhs = b * b * d;
  if (lhs == rhs) return 0;
  if (a > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(Word::reduce(std::vector<Letter>{1, -1}).empty());
  CHECK(Word::reduce(std::vector<Letter>{1, 2, -2, 1}) == Word{1, 1});
  CHECK(Word::reduce(std::vector<Letter>{1, -2, 1}).str() == "aBa");
  CHECK_THROWS_AS(Word::reduce(std::vector<Letter>{0}), Error);
  CHECK_THROWS_AS(Word::reduce(std::vector<Letter>{3}, 2), Error);
  try {
    Word::parse("ax!", 26);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::malformed_word);
  }
}

TEST_CASE("reduce agrees with naive cancellation and is a homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 12), let(1, 3), sg(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> u(len(rng)), v(len(rng));
    for (auto& x : u) x = sg(rng) ? let(rng) : -let(rng);
    for (auto& x : v) x = sg(rng) ? let(rng) : -let(rng);
    const Word ru = Word::reduce(u), rv = Word::reduce(v);
    const auto nu = naive_reduce(u);
    CHECK(std::vector<Letter>(ru.begin(), ru.end()) == nu);
    CHECK(Word::reduce(ru.letters()) == ru);
    CHECK(ru.size() <= u.size());
    std::vector<Letter> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(Word::reduce(uv) == ru * rv);
    CHECK((ru * ru.inverse()).empty());
  }
}

TEST_CASE("cyclic_reduce") {
  auto check = [](const char* w, const char* conj, const char* core) {
    const CyclicReduction r = cyclic_reduce(Word::parse(w));
    CHECK(r.conjugator.str() == conj);
    CHECK(r.core.str() == core);
    CHECK(r.conjugator * r.core * r.conjugator.inverse() == Word::parse(w));
    CHECK(r.core.is_cyclically_reduced());
  };
  check("abA", "a", "b");
  check("bab", "1", "bab");
  // Stripping a...A and then b...B leaves the single letter a.
  check("abaBA", "ab", "a");
}

TEST_CASE("scalar sign") {
  CHECK(Scalar().sign() == Sign::zero);
  CHECK(Scalar(mpq_class(3), mpq_class(1), 2).sign() == Sign::positive);
  CHECK(Scalar(mpq_class(1), mpq_class(-1), 2).sign() == Sign::negative);
  for (long d : {2L, 3L, 5L, 6L, 7L, 10L}) {
    for (long p = -9; p <= 9; ++p) {
      for (long q = -5; q <= 5; ++q) {
        CHECK(static_cast<int>(Scalar(mpq_class(p), mpq_class(q), d).sign()) ==
              oracle_sign(p, q, d));
      }
    }
  }
}

TEST_CASE("scalar parse and print") {
  CHECK(Scalar::parse("3/6") == Scalar::rational(1, 2));
  CHECK(Scalar::parse("-1/2 + 1/2*sqrt5").str() == "-1/2 + 1/2*sqrt5");
  CHECK(Scalar::parse("sqrt5") == Scalar::sqrt(5));
  CHECK(Scalar::parse("1 - sqrt2") == Scalar(1) - Scalar::sqrt(2));
  CHECK(Scalar::parse("2*sqrt1") == Scalar(3) - Scalar(1));
  CHECK_THROWS_AS(Scalar::parse("sqrt4"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse("abc"), Error);
  CHECK_THROWS_AS(Scalar::parse("0.5"), Error);
  try {
    (void)(Scalar::sqrt(2) + Scalar::sqrt(3));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::field_mismatch);
  }
}

TEST_CASE("scalar arithmetic is exact") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  auto draw = [&] {
    return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), 5);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const int ordered = (a < b) + (a == b) + (a > b);
    CHECK(ordered == 1);
    // Product of the conjugates is rational.
    const Scalar conj(a.rational_part(), -a.irrational_part(), 5);
    CHECK((a * conj).is_rational());
  }
}

TEST_CASE("golden ratio identities") {
  const Scalar alpha = Scalar::parse("-1/2 + 1/2*sqrt5");
  CHECK(alpha * alpha + alpha == Scalar(1));
  CHECK(alpha > Scalar::rational(61, 100));
  CHECK(alpha < Scalar::rational(62, 100));
}

TEST_CASE("enumerate_words") {
  const auto w1 = enumerate_words(2, 1, WordMode::reduced);
  REQUIRE(w1.size() == 5);
  CHECK(w1[0].str() == "1");
  CHECK(w1[1].str() == "a");
  CHECK(w1[2].str() == "A");
  CHECK(w1[3].str() == "b");
  CHECK(w1[4].str() == "B");
  CHECK(enumerate_words(2, 2, WordMode::reduced).size() == 17);
  const auto c2 = enumerate_words(2, 2, WordMode::conjugacy);
  std::vector<std::string> names;
  for (const Word& w : c2) names.push_back(w.str());
  CHECK(names == std::vector<std::string>{"a", "b", "aa", "ab", "aB", "bb"});
}

TEST_CASE("enumeration counts and order") {
  for (int n = 1; n <= 3; ++n) {
    const auto words = enumerate_words(n, 5, WordMode::reduced);
    std::vector<int> count(6, 0);
    for (const Word& w : words) ++count[w.size()];
    for (int k = 0; k <= 5; ++k) CHECK(count[k] == static_cast<int>(reduced_word_count(n, k)));
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
}

TEST_CASE("conjugacy enumeration matches brute-force classification") {
  for (int n = 1; n <= 3; ++n) {
    const int L = n == 3 ? 5 : 7;
    std::set<std::vector<Letter>> classes;
    for (const Word& w : enumerate_words(n, L, WordMode::reduced)) {
      if (w.empty() || !w.is_cyclically_reduced()) continue;
      // Class key: least rotation of w and w^-1 compared as Words.
      Word best = w;
      for (const Word& src : {w, w.inverse()}) {
        std::vector<Letter> v(src.begin(), src.end());
        for (std::size_t r = 0; r < v.size(); ++r) {
          std::rotate(v.begin(), v.begin() + 1, v.end());
          const Word cand = Word::reduce(v);
          if (cand < best) best = cand;
        }
      }
      classes.insert(std::vector<Letter>(best.begin(), best.end()));
    }
    const auto reps = enumerate_words(n, L, WordMode::conjugacy);
    CHECK(reps.size() == classes.size());
    for (const Word& w : reps) {
      CHECK(classes.count(std::vector<Letter>(w.begin(), w.end())) == 1);
      CHECK(conjugacy_canonical(w) == w);
    }
  }
}
