#include <doctest.h>

#include <random>
#include <set>

#include "qfree/words.hpp"

using namespace qfree;

TEST_CASE("parse and print") {
  Word w = Word::parse("abAB");
  CHECK(w.size() == 4);
  CHECK(w.str() == "abAB");
  CHECK(w.reduced());
  CHECK_FALSE(Word::parse("aAb").reduced());
  CHECK_THROWS_AS(Word::parse("a1"), Error);
  Alphabet ab("ab");
  CHECK_THROWS_AS(Word::parse("c", &ab), Error);
}

TEST_CASE("letter order is a < A < b < B") {
  auto x = [](char c) { return letter_from_char(c); };
  CHECK(x('a') < x('A'));
  CHECK(x('A') < x('b'));
  CHECK(x('b') < x('B'));
}

TEST_CASE("reduction and inverses") {
  Alphabet ab("ab");
  CHECK(free_reduce("abBA", ab).empty());
  CHECK(free_reduce("aabBAb", ab).str() == "ab");
  Word w = Word::parse("abb");
  CHECK(invert(w).str() == "BBA");
  CHECK(multiply(w, invert(w)).empty());
  CHECK(concat_unreduced(w, invert(w)).size() == 6);
  CHECK(is_cyclically_reduced(Word::parse("ab").letters()));
  CHECK_FALSE(is_cyclically_reduced(Word::parse("abA").letters()));
}

TEST_CASE("cyclic reduction recovers the conjugator") {
  std::mt19937 rng(7);
  Alphabet     ab("ab");
  auto         letters = ab.signed_letters();
  for (int t = 0; t < 300; ++t) {
    std::vector<Letter> raw;
    for (int i = rng() % 9; i > 0; --i) {
      raw.push_back(letters[rng() % letters.size()]);
    }
    Word w   = free_reduce(raw);
    auto red = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(red.core.letters()));
    CHECK(multiply(multiply(red.conjugator, red.core), invert(red.conjugator)) == w);
  }
}

TEST_CASE("least rotation against brute force") {
  std::mt19937 rng(11);
  Alphabet     ab("ab");
  auto         letters = ab.signed_letters();
  for (int t = 0; t < 300; ++t) {
    std::vector<Letter> raw;
    for (int i = 1 + rng() % 8; i > 0; --i) {
      raw.push_back(letters[rng() % 2]);  // a and A only: many ties
    }
    std::set<Word> rotations;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      rotations.insert(Word(rotate_left(raw, k)));
    }
    CHECK(Word(rotate_left(raw, least_rotation(raw))) == *rotations.begin());
  }
}

TEST_CASE("cyclic words compare up to rotation") {
  CHECK(CyclicWord::parse("bab") == CyclicWord::parse("abb"));
  CHECK(CyclicWord::parse("BabA").str() == "abAB");
  CHECK(cyclic_match(Word::parse("ABab"), CyclicWord::parse("abAB")).has_value());
  CHECK_FALSE(cyclic_match(Word::parse("ab"), CyclicWord::parse("ba")) == std::nullopt);
  CHECK_FALSE(cyclic_match(Word::parse("aa"), CyclicWord::parse("ab")).has_value());
}

TEST_CASE("substitution is graphical when nothing cancels") {
  std::map<std::string, Word> images{{"p", Word::parse("ab")}, {"q", Word::parse("b")}};
  std::vector<SignedSymbol>   w{{"p", 1}, {"q", 1}};
  auto                        s = substitute(images, w);
  CHECK(s.result.str() == "abb");
  CHECK(s.graphical);
  std::vector<SignedSymbol> v{{"p", 1}, {"q", -1}};
  CHECK_FALSE(substitute(images, v).graphical);
}

TEST_CASE("reduced words are counted exactly") {
  Alphabet ab("ab");
  // 1 + 4 + 12 + 36
  CHECK(reduced_words_up_to(ab, 3).size() == 53);
  for (auto const& w : reduced_words_up_to(ab, 3)) {
    CHECK(w.reduced());
  }
}
