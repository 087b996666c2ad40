// Quadratic equations over a free group: raw form, standard form and the
// normalisation between them.
//
// Standard form (all coefficients freely and cyclically reduced):
//
//   orientable:      [x1,y1] ... [xg,yg] z1^-1 w1 z1 ... z(m-1)^-1 w(m-1) z(m-1) d = 1
//   non-orientable:  x1^2 ... xg^2       z1^-1 w1 z1 ... z(m-1)^-1 w(m-1) z(m-1) d = 1
//
// with [x,y] = x^-1 y^-1 x y.  When m = 0 there are neither z's nor d.

#ifndef QFREE_EQUATIONS_HPP_
#define QFREE_EQUATIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfree/words.hpp"

namespace qfree {

  // A variable occurrence or a constant letter in the body of an equation.
  struct Token {
    bool        variable = false;
    std::string name;  // variable name, or the single lowercase constant
    int         sign = 1;

    static Token var(std::string name, int sign = 1) {
      return Token{true, std::move(name), sign};
    }
    static Token constant(Letter l) {
      return Token{false, std::string(1, l.gen), l.sign};
    }
    Token inverse() const {
      return Token{variable, name, -sign};
    }
    friend bool operator==(Token const&, Token const&) = default;
  };

  using Assignment = std::map<std::string, Word>;

  // body = 1, every variable occurring exactly twice.
  struct RawQuadraticEquation {
    Alphabet                 alphabet;
    std::vector<std::string> variables;  // in order of first occurrence
    std::vector<Token>       body;

    // Throws Error if a variable does not occur exactly twice, or a
    // variable name clashes with a constant, or a constant is outside the
    // alphabet.
    void validate() const;
    std::string str() const;
  };

  struct StandardFormEquation {
    Alphabet                  alphabet;
    bool                      orientable = true;
    int                       genus      = 0;
    std::vector<CyclicWord>   coefficients;  // w1 .. w(m-1)
    std::optional<CyclicWord> d;

    int m() const noexcept {
      return static_cast<int>(coefficients.size()) + (d ? 1 : 0);
    }
    // Coefficient i in 0..m-1, where index m-1 is d.
    CyclicWord const& coefficient(int i) const;

    // Throws Error when an invariant of the standard form fails.
    void validate() const;
    std::vector<std::string> variable_names() const;
    std::vector<Token>       body() const;
    std::string              str() const;

    friend bool operator==(StandardFormEquation const&,
                           StandardFormEquation const&) = default;
  };

  // Parses "x a x^-1 b = 1".  Single-letter lowercase names in `alphabet` are
  // constants; every other name is a variable.
  RawQuadraticEquation parse_equation(std::string_view text,
                                      Alphabet const&  alphabet);

  // Builds a raw equation from tokens: names that are single lowercase
  // letters of the alphabet become constants.
  RawQuadraticEquation make_raw_equation(
      Alphabet const&                                  alphabet,
      std::vector<std::pair<std::string, int>> const& body);

  // Sends assignments of the standard-form variables to assignments of the
  // raw variables.  Standard-form variables missing from the source are
  // taken to be the identity.
  struct BackMap {
    std::map<std::string, std::vector<Token>> expressions;

    Assignment transport(Assignment const& standard) const;
  };

  // The inverse direction: standard-form variables as words in the raw
  // variables.  Only defined for variables that survive normalisation.
  struct ForwardMap {
    std::map<std::string, std::vector<Token>> expressions;

    Assignment transport(Assignment const& raw) const;
  };

  struct Normalization {
    StandardFormEquation standard;
    BackMap              back;
    ForwardMap           forward;
  };

  Normalization normalize(RawQuadraticEquation const& raw);

  int reduced_euler_characteristic(StandardFormEquation const& sf) noexcept;

  // Substitutes and freely reduces tokens; throws Error on a missing variable.
  Word evaluate(std::vector<Token> const& body, Assignment const& assignment);
  bool check_solution(RawQuadraticEquation const& eq, Assignment const& a);
  bool check_solution(StandardFormEquation const& eq, Assignment const& a);

  std::string tokens_str(std::vector<Token> const& tokens);

}  // namespace qfree

#endif  // QFREE_EQUATIONS_HPP_
