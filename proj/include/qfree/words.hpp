// Free monoid with involution over a finite alphabet.
//
// A letter is a generator together with an exponent of +1 or -1.  Words are
// written as strings: a lowercase letter is a generator, the same letter in
// uppercase is its inverse, and the empty string is the identity.  "abA" is
// a * b * a^-1.

#ifndef QFREE_WORDS_HPP_
#define QFREE_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfree {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Letter {
    char   gen  = 'a';  // always lowercase
    int8_t sign = 1;

    constexpr Letter inverse() const noexcept {
      return Letter{gen, static_cast<int8_t>(-sign)};
    }
    constexpr bool cancels(Letter const& other) const noexcept {
      return gen == other.gen && sign == -other.sign;
    }
    // Total order a < A < b < B < ...
    constexpr int key() const noexcept {
      return 2 * (gen - 'a') + (sign > 0 ? 0 : 1);
    }
    char to_char() const noexcept;

    friend constexpr bool operator==(Letter const&, Letter const&) = default;
    friend constexpr bool operator<(Letter const& x, Letter const& y) noexcept {
      return x.key() < y.key();
    }
  };

  Letter letter_from_char(char c);

  class Alphabet {
   public:
    Alphabet() = default;
    // Each character must be a distinct lowercase ASCII letter.
    explicit Alphabet(std::string_view generators);

    std::string const& generators() const noexcept {
      return _gens;
    }
    std::size_t size() const noexcept {
      return _gens.size();
    }
    bool contains(char gen) const noexcept;
    // Every signed letter in the alphabet, in the a < A < b < B order.
    std::vector<Letter> signed_letters() const;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::string _gens;
  };

  class Word {
   public:
    Word() = default;
    // Stores the letters as given; the reduced flag is computed.
    explicit Word(std::vector<Letter> letters);

    // Parses the string encoding; throws Error on a character that is not an
    // ASCII letter, or that is outside `alphabet` when one is given.
    static Word parse(std::string_view text, Alphabet const* alphabet = nullptr);

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    bool reduced() const noexcept {
      return _reduced;
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    std::string str() const;

    friend bool operator==(Word const& x, Word const& y) {
      return x._letters == y._letters;
    }
    friend bool operator<(Word const& x, Word const& y);

   private:
    std::vector<Letter> _letters;
    bool                _reduced = true;
  };

  bool is_freely_reduced(std::span<Letter const> letters) noexcept;
  bool is_cyclically_reduced(std::span<Letter const> letters) noexcept;

  Word free_reduce(std::span<Letter const> letters);
  Word free_reduce(std::string_view text, Alphabet const& alphabet);
  Word invert(Word const& w);
  // Concatenation followed by free reduction.
  Word multiply(Word const& u, Word const& v);
  Word concat_unreduced(Word const& u, Word const& v);

  struct CyclicReduction {
    Word core;
    Word conjugator;  // w == conjugator * core * conjugator^-1
  };
  CyclicReduction cyclic_reduce(Word const& w);

  // Rotation of `letters` moving the first k letters to the end.
  std::vector<Letter> rotate_left(std::span<Letter const> letters,
                                  std::size_t             k);
  // Offset of the lexicographically least rotation (a < A < b < B order).
  std::size_t least_rotation(std::span<Letter const> letters);

  // A conjugacy class representative: freely and cyclically reduced and
  // stored as its least rotation.
  class CyclicWord {
   public:
    CyclicWord() = default;
    // Cyclically reduces its argument and canonicalises the rotation.
    explicit CyclicWord(Word const& w);
    static CyclicWord parse(std::string_view text,
                            Alphabet const*  alphabet = nullptr);

    Word const& representative() const noexcept {
      return _rep;
    }
    std::size_t length() const noexcept {
      return _rep.size();
    }
    bool empty() const noexcept {
      return _rep.empty();
    }
    std::string str() const {
      return _rep.str();
    }

    friend bool operator==(CyclicWord const&, CyclicWord const&) = default;
    friend bool operator<(CyclicWord const& x, CyclicWord const& y) {
      return x._rep < y._rep;
    }

   private:
    Word _rep;
  };

  // Returns k if rotating `u` left by k letters gives exactly the
  // representative of `v`, comparing letter strings without reduction.
  std::optional<std::size_t> cyclic_match(std::span<Letter const> u,
                                          CyclicWord const&       v);
  std::optional<std::size_t> cyclic_match(Word const& u, CyclicWord const& v);

  // An occurrence of a named symbol with exponent +1 or -1.
  struct SignedSymbol {
    std::string name;
    int         sign = 1;
    friend bool operator==(SignedSymbol const&, SignedSymbol const&) = default;
  };

  struct Substitution {
    Word result;      // concatenation of images, not freely reduced
    bool graphical;   // true iff the concatenation has no cancelling pair
  };

  // Monoid homomorphism extending `images`; throws Error on a missing image.
  Substitution substitute(std::map<std::string, Word> const& images,
                          std::span<SignedSymbol const>      w);

  // Every freely reduced word over `alphabet` of length at most max_len, in
  // shortlex order.
  std::vector<Word> reduced_words_up_to(Alphabet const& alphabet,
                                        std::size_t     max_len);

}  // namespace qfree

#endif  // QFREE_WORDS_HPP_
