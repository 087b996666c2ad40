#include "qfree/words.hpp"

#include <algorithm>
#include <cctype>

namespace qfree {

  char Letter::to_char() const noexcept {
    return sign > 0 ? gen : static_cast<char>(std::toupper(gen));
  }

  Letter letter_from_char(char c) {
    if (c >= 'a' && c <= 'z') {
      return Letter{c, 1};
    }
    if (c >= 'A' && c <= 'Z') {
      return Letter{static_cast<char>(std::tolower(c)), -1};
    }
    throw Error(std::string("not a letter: '") + c + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::string_view generators) : _gens(generators) {
    if (_gens.empty()) {
      throw Error("alphabet must contain at least one generator");
    }
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      char c = _gens[i];
      if (c < 'a' || c > 'z') {
        throw Error(std::string("alphabet symbol must be a lowercase letter: '")
                    + c + "'");
      }
      if (_gens.find(c, i + 1) != std::string::npos) {
        throw Error(std::string("duplicate alphabet symbol '") + c + "'");
      }
    }
  }

  bool Alphabet::contains(char gen) const noexcept {
    return _gens.find(gen) != std::string::npos;
  }

  std::vector<Letter> Alphabet::signed_letters() const {
    std::string sorted = _gens;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Letter> out;
    for (char c : sorted) {
      out.push_back({c, 1});
      out.push_back({c, -1});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Letter> letters)
      : _letters(std::move(letters)), _reduced(is_freely_reduced(_letters)) {}

  Word Word::parse(std::string_view text, Alphabet const* alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
      Letter l = letter_from_char(c);
      if (alphabet != nullptr && !alphabet->contains(l.gen)) {
        throw Error(std::string("unknown generator '") + l.gen
                    + "' (alphabet \"" + alphabet->generators() + "\")");
      }
      letters.push_back(l);
    }
    return Word(std::move(letters));
  }

  std::string Word::str() const {
    std::string out;
    out.reserve(_letters.size());
    for (auto const& l : _letters) {
      out.push_back(l.to_char());
    }
    return out;
  }

  bool operator<(Word const& x, Word const& y) {
    return std::lexicographical_compare(
        x._letters.begin(), x._letters.end(), y._letters.begin(), y._letters.end());
  }

  bool is_freely_reduced(std::span<Letter const> letters) noexcept {
    for (std::size_t i = 1; i < letters.size(); ++i) {
      if (letters[i - 1].cancels(letters[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(std::span<Letter const> letters) noexcept {
    return is_freely_reduced(letters)
           && (letters.size() < 2 || !letters.front().cancels(letters.back()));
  }

  Word free_reduce(std::span<Letter const> letters) {
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (auto const& l : letters) {
      if (!stack.empty() && stack.back().cancels(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  Word free_reduce(std::string_view text, Alphabet const& alphabet) {
    return free_reduce(Word::parse(text, &alphabet).letters());
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word concat_unreduced(Word const& u, Word const& v) {
    std::vector<Letter> out(u.letters());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
  }

  Word multiply(Word const& u, Word const& v) {
    return free_reduce(concat_unreduced(u, v).letters());
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    auto const& ls = w.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
      ++lo;
      --hi;
    }
    return CyclicReduction{
        Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi)),
        Word(std::vector<Letter>(ls.begin(), ls.begin() + lo))};
  }

  std::vector<Letter> rotate_left(std::span<Letter const> letters,
                                  std::size_t             k) {
    std::vector<Letter> out(letters.begin(), letters.end());
    if (!out.empty()) {
      std::rotate(out.begin(), out.begin() + (k % out.size()), out.end());
    }
    return out;
  }

  std::size_t least_rotation(std::span<Letter const> s) {
    // Booth's algorithm.
    std::size_t const n = s.size();
    if (n == 0) {
      return 0;
    }
    std::vector<long> fail(2 * n, -1);
    std::size_t       k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
      Letter const sj = s[j % n];
      long         i  = fail[j - k - 1];
      while (i != -1 && !(sj == s[(k + i + 1) % n])) {
        if (sj < s[(k + i + 1) % n]) {
          k = j - i - 1;
        }
        i = fail[i];
      }
      if (i == -1 && !(sj == s[(k + i + 1) % n])) {
        if (sj < s[(k + i + 1) % n]) {
          k = j;
        }
        fail[j - k] = -1;
      } else {
        fail[j - k] = i + 1;
      }
    }
    return k % n;
  }

  ////////////////////////////////////////////////////////////////////////
  // CyclicWord
  ////////////////////////////////////////////////////////////////////////

  CyclicWord::CyclicWord(Word const& w) {
    Word core = cyclic_reduce(free_reduce(w.letters())).core;
    _rep      = Word(rotate_left(core.letters(), least_rotation(core.letters())));
  }

  CyclicWord CyclicWord::parse(std::string_view text, Alphabet const* alphabet) {
    return CyclicWord(Word::parse(text, alphabet));
  }

  std::optional<std::size_t> cyclic_match(std::span<Letter const> u,
                                          CyclicWord const&       v) {
    auto const& rep = v.representative().letters();
    if (u.size() != rep.size()) {
      return std::nullopt;
    }
    std::size_t const n = u.size();
    if (n == 0) {
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = u[(k + i) % n] == rep[i];
      }
      if (ok) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> cyclic_match(Word const& u, CyclicWord const& v) {
    return cyclic_match(std::span<Letter const>(u.letters()), v);
  }

  Substitution substitute(std::map<std::string, Word> const& images,
                          std::span<SignedSymbol const>      w) {
    std::vector<Letter> out;
    for (auto const& sym : w) {
      auto it = images.find(sym.name);
      if (it == images.end()) {
        throw Error("no image for symbol '" + sym.name + "'");
      }
      Word const& img = sym.sign > 0 ? it->second : invert(it->second);
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    Word result(std::move(out));
    bool graphical = result.reduced();
    return Substitution{std::move(result), graphical};
  }

  std::vector<Word> reduced_words_up_to(Alphabet const& alphabet,
                                        std::size_t     max_len) {
    auto const        letters = alphabet.signed_letters();
    std::vector<Word> out{Word()};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& l : letters) {
          Word const& w = out[i];
          if (!w.empty() && w.letters().back().cancels(l)) {
            continue;
          }
          std::vector<Letter> next(w.letters());
          next.push_back(l);
          out.emplace_back(std::move(next));
        }
      }
      begin = end;
    }
    return out;
  }

}  // namespace qfree
