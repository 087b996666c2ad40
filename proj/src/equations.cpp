#include "qfree/equations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qfree {

  namespace {

    bool is_constant_name(std::string const& name, Alphabet const& alphabet) {
      return name.size() == 1 && name[0] >= 'a' && name[0] <= 'z'
             && alphabet.contains(name[0]);
    }

  }  // namespace

  std::string tokens_str(std::vector<Token> const& tokens) {
    std::string out;
    for (auto const& t : tokens) {
      if (!out.empty()) {
        out += ' ';
      }
      out += t.sign > 0 ? t.name : t.name + "^-1";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Raw equations
  ////////////////////////////////////////////////////////////////////////

  void RawQuadraticEquation::validate() const {
    std::map<std::string, int> count;
    for (auto const& t : body) {
      if (t.sign != 1 && t.sign != -1) {
        throw Error("exponent must be 1 or -1");
      }
      if (t.variable) {
        if (is_constant_name(t.name, alphabet)) {
          throw Error("variable '" + t.name + "' clashes with a constant");
        }
        ++count[t.name];
      } else if (t.name.size() != 1 || !alphabet.contains(t.name[0])) {
        throw Error("constant '" + t.name + "' is not in the alphabet");
      }
    }
    for (auto const& [name, c] : count) {
      if (c != 2) {
        throw Error("variable '" + name + "' occurs " + std::to_string(c)
                    + " time(s); a quadratic equation needs exactly 2");
      }
    }
    std::set<std::string> declared(variables.begin(), variables.end());
    if (declared.size() != count.size()) {
      throw Error("declared variables do not match the body");
    }
    for (auto const& [name, c] : count) {
      if (!declared.contains(name)) {
        throw Error("undeclared variable '" + name + "'");
      }
    }
  }

  std::string RawQuadraticEquation::str() const {
    return (body.empty() ? std::string("") : tokens_str(body) + " ") + "= 1";
  }

  RawQuadraticEquation make_raw_equation(
      Alphabet const&                                  alphabet,
      std::vector<std::pair<std::string, int>> const& body) {
    RawQuadraticEquation eq;
    eq.alphabet = alphabet;
    std::set<std::string> seen;
    for (auto const& [name, sign] : body) {
      if (is_constant_name(name, alphabet)) {
        eq.body.push_back(Token{false, name, sign});
      } else if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z'
                 && alphabet.contains(static_cast<char>(name[0] - 'A' + 'a'))) {
        // Word notation: "A" is a^-1.
        eq.body.push_back(Token{false, std::string(1, static_cast<char>(name[0] - 'A' + 'a')), -sign});
      } else {
        eq.body.push_back(Token::var(name, sign));
        if (seen.insert(name).second) {
          eq.variables.push_back(name);
        }
      }
    }
    eq.validate();
    return eq;
  }

  RawQuadraticEquation parse_equation(std::string_view text,
                                      Alphabet const&  alphabet) {
    auto fail = [](std::size_t pos, std::string const& what) -> Error {
      return Error("syntax error at position " + std::to_string(pos) + ": "
                   + what);
    };
    std::vector<std::pair<std::string, int>> body;
    std::size_t                              i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    bool saw_equals = false;
    while (true) {
      skip_ws();
      if (i == text.size()) {
        break;
      }
      if (text[i] == '=') {
        saw_equals = true;
        ++i;
        break;
      }
      char c = text[i];
      if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
        throw fail(i, std::string("unexpected character '") + c + "'");
      }
      std::size_t start = i;
      while (i < text.size()
             && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      std::string name(text.substr(start, i - start));
      int         sign = 1;
      if (i < text.size() && text[i] == '^') {
        if (text.substr(i, 3) != "^-1") {
          throw fail(i, "exponent must be written ^-1");
        }
        sign = -1;
        i += 3;
      }
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))
          && text[i] != '=') {
        throw fail(i, "tokens must be separated by whitespace");
      }
      body.emplace_back(std::move(name), sign);
    }
    if (!saw_equals) {
      throw fail(i, "missing \"= 1\"");
    }
    skip_ws();
    if (i == text.size() || text[i] != '1') {
      throw fail(i, "right-hand side must be 1");
    }
    ++i;
    skip_ws();
    if (i != text.size()) {
      throw fail(i, "trailing input after \"= 1\"");
    }
    return make_raw_equation(alphabet, body);
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard form
  ////////////////////////////////////////////////////////////////////////

  CyclicWord const& StandardFormEquation::coefficient(int i) const {
    if (i < 0 || i >= m()) {
      throw Error("coefficient index out of range");
    }
    return i + 1 == m() ? *d : coefficients[i];
  }

  void StandardFormEquation::validate() const {
    if (genus < 0) {
      throw Error("genus must be non-negative");
    }
    if (genus == 0 && !orientable) {
      throw Error("a genus 0 equation is orientable by definition");
    }
    if (!coefficients.empty() && !d) {
      throw Error("coefficients w_j require a final coefficient d");
    }
    auto check = [&](CyclicWord const& w, std::string const& what) {
      if (w.empty()) {
        throw Error(what + " must be nonempty");
      }
      for (auto const& l : w.representative().letters()) {
        if (!alphabet.contains(l.gen)) {
          throw Error(what + " uses a letter outside the alphabet");
        }
      }
      if (!is_cyclically_reduced(w.representative().letters())) {
        throw Error(what + " must be cyclically reduced");
      }
    };
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      check(coefficients[j], "coefficient w" + std::to_string(j + 1));
    }
    if (d) {
      check(*d, "coefficient d");
    }
  }

  std::vector<std::string> StandardFormEquation::variable_names() const {
    std::vector<std::string> out;
    for (int i = 1; i <= genus; ++i) {
      out.push_back("x" + std::to_string(i));
      if (orientable) {
        out.push_back("y" + std::to_string(i));
      }
    }
    for (std::size_t j = 1; j <= coefficients.size(); ++j) {
      out.push_back("z" + std::to_string(j));
    }
    return out;
  }

  std::vector<Token> StandardFormEquation::body() const {
    std::vector<Token> out;
    for (int i = 1; i <= genus; ++i) {
      std::string x = "x" + std::to_string(i);
      if (orientable) {
        std::string y = "y" + std::to_string(i);
        out.push_back(Token::var(x, -1));
        out.push_back(Token::var(y, -1));
        out.push_back(Token::var(x, 1));
        out.push_back(Token::var(y, 1));
      } else {
        out.push_back(Token::var(x, 1));
        out.push_back(Token::var(x, 1));
      }
    }
    auto push_word = [&](Word const& w) {
      for (auto const& l : w.letters()) {
        out.push_back(Token::constant(l));
      }
    };
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      std::string z = "z" + std::to_string(j + 1);
      out.push_back(Token::var(z, -1));
      push_word(coefficients[j].representative());
      out.push_back(Token::var(z, 1));
    }
    if (d) {
      push_word(d->representative());
    }
    return out;
  }

  std::string StandardFormEquation::str() const {
    return (m() == 0 && genus == 0 ? std::string("") : tokens_str(body()) + " ")
           + "= 1";
  }

  int reduced_euler_characteristic(StandardFormEquation const& sf) noexcept {
    return sf.orientable ? 2 - 2 * sf.genus : 2 - sf.genus;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Word evaluate(std::vector<Token> const& body, Assignment const& assignment) {
    std::vector<Letter> stack;
    auto push = [&](Letter l) {
      if (!stack.empty() && stack.back().cancels(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    };
    for (auto const& t : body) {
      if (!t.variable) {
        push(Letter{t.name[0], static_cast<int8_t>(t.sign)});
        continue;
      }
      auto it = assignment.find(t.name);
      if (it == assignment.end()) {
        throw Error("assignment is missing variable '" + t.name + "'");
      }
      auto const& ls = it->second.letters();
      if (t.sign > 0) {
        for (auto const& l : ls) {
          push(l);
        }
      } else {
        for (auto r = ls.rbegin(); r != ls.rend(); ++r) {
          push(r->inverse());
        }
      }
    }
    return Word(std::move(stack));
  }

  bool check_solution(RawQuadraticEquation const& eq, Assignment const& a) {
    return evaluate(eq.body, a).empty();
  }

  bool check_solution(StandardFormEquation const& eq, Assignment const& a) {
    return evaluate(eq.body(), a).empty();
  }

  namespace {
    Assignment transport_with(std::map<std::string, std::vector<Token>> const& ex,
                              Assignment const& source) {
      Assignment with_defaults = source;
      for (auto const& [name, tokens] : ex) {
        for (auto const& t : tokens) {
          if (t.variable) {
            with_defaults.try_emplace(t.name, Word());
          }
        }
      }
      Assignment out;
      for (auto const& [name, tokens] : ex) {
        out.emplace(name, evaluate(tokens, with_defaults));
      }
      return out;
    }
  }  // namespace

  Assignment BackMap::transport(Assignment const& standard) const {
    return transport_with(expressions, standard);
  }

  Assignment ForwardMap::transport(Assignment const& raw) const {
    return transport_with(expressions, raw);
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalisation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Variables are integer ids; constants carry their generator in `id`.
    struct NTok {
      bool var;
      int  id;
      int  sign;

      NTok inverse() const {
        return NTok{var, id, -sign};
      }
      bool cancels(NTok const& o) const {
        return var == o.var && id == o.id && sign == -o.sign;
      }
    };
    using Seq   = std::vector<NTok>;
    using Sigma = std::map<int, Seq>;

    Seq inv(Seq const& s) {
      Seq out;
      out.reserve(s.size());
      for (auto it = s.rbegin(); it != s.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return out;
    }

    Seq cat(std::initializer_list<Seq> parts) {
      Seq out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    Seq reduce(Seq const& s) {
      Seq out;
      for (auto const& t : s) {
        if (!out.empty() && out.back().cancels(t)) {
          out.pop_back();
        } else {
          out.push_back(t);
        }
      }
      return out;
    }

    Seq substitute_seq(Seq const& s, Sigma const& sigma) {
      Seq out;
      for (auto const& t : s) {
        auto it = t.var ? sigma.find(t.id) : sigma.end();
        if (it == sigma.end()) {
          out.push_back(t);
        } else if (t.sign > 0) {
          out.insert(out.end(), it->second.begin(), it->second.end());
        } else {
          auto r = inv(it->second);
          out.insert(out.end(), r.begin(), r.end());
        }
      }
      return reduce(out);
    }

    Seq slice(Seq const& s, std::size_t from, std::size_t to) {
      return Seq(s.begin() + from, s.begin() + to);
    }

    Seq v(int id, int sign = 1) {
      return Seq{NTok{true, id, sign}};
    }

    // The body is kept as   squares | handles | conjugates | rest
    // and every rewrite of the body is mirrored by a substitution recorded in
    // `back_` (raw variables as words in the current ones) and `fwd_`
    // (current variables as words in the raw ones).
    class Normalizer {
     public:
      explicit Normalizer(RawQuadraticEquation const& raw) : _alphabet(raw.alphabet) {
        std::map<std::string, int> ids;
        for (auto const& name : raw.variables) {
          int id = static_cast<int>(_raw_names.size());
          ids[name] = id;
          _raw_names.push_back(name);
          _back[name] = v(id);
          _fwd[id]    = v(id);
        }
        _next = static_cast<int>(_raw_names.size());
        for (auto const& t : raw.body) {
          if (t.variable) {
            _rest.push_back(NTok{true, ids.at(t.name), t.sign});
          } else {
            _rest.push_back(NTok{false, t.name[0], t.sign});
          }
        }
      }

      Normalization run() {
        while (true) {
          tidy();
          if (auto p = find_same_sign()) {
            if (!_handles.empty()) {
              throw std::logic_error("normalize: square found after handles");
            }
            extract_square(p->first, p->second);
          } else if (auto q = find_interleaved()) {
            extract_handle(*q);
          } else {
            break;
          }
        }
        while (!_squares.empty() && !_handles.empty()) {
          convert_handle();
        }
        while (true) {
          tidy();
          if (!has_variable()) {
            break;
          }
          extract_conjugate();
        }
        finish_constant();
        return build();
      }

     private:
      int fresh() {
        return _next++;
      }

      // back: old variable -> word in new variables; fwd_new: new variable ->
      // word in old variables.  Both are simultaneous substitutions.
      void rewrite(Sigma const& back, Sigma const& fwd_new) {
        for (auto& [name, expr] : _back) {
          expr = substitute_seq(expr, back);
        }
        std::map<int, Seq> next = _fwd;
        for (auto const& [id, _] : back) {
          next.erase(id);
        }
        for (auto const& [id, word] : fwd_new) {
          next[id] = substitute_seq(word, _fwd);
        }
        _fwd = std::move(next);
      }

      std::vector<int> block_vars() const {
        std::vector<int> out(_squares);
        for (auto const& [a, b] : _handles) {
          out.push_back(a);
          out.push_back(b);
        }
        return out;
      }

      // Moves the first k tokens of the rest to its end, conjugating the
      // block so the equation is unchanged.
      void rotate_rest(std::size_t k) {
        if (k == 0 || k >= _rest.size()) {
          return;
        }
        Seq   p = slice(_rest, 0, k);
        Seq   pinv = inv(p);
        Sigma back, fwd;
        for (int id : block_vars()) {
          back[id] = cat({p, v(id), pinv});
          fwd[id]  = cat({pinv, v(id), p});
        }
        for (auto const& c : _conj) {
          back[c.z] = cat({v(c.z), pinv});
          fwd[c.z]  = cat({v(c.z), p});
        }
        if (!back.empty()) {
          rewrite(back, fwd);
        }
        Seq rotated = slice(_rest, k, _rest.size());
        rotated.insert(rotated.end(), p.begin(), p.end());
        _rest = std::move(rotated);
      }

      void flip(int id) {
        rewrite({{id, v(id, -1)}}, {{id, v(id, -1)}});
        for (auto& t : _rest) {
          if (t.var && t.id == id) {
            t.sign = -t.sign;
          }
        }
      }

      // Free reduction of the rest; a variable whose occurrences cancel
      // leaves the equation and may take any value (we use the identity).
      void tidy() {
        while (true) {
          Seq out;
          for (auto const& t : _rest) {
            if (!out.empty() && out.back().cancels(t)) {
              if (t.var) {
                rewrite({{t.id, Seq{}}}, {});
              }
              out.pop_back();
            } else {
              out.push_back(t);
            }
          }
          _rest = std::move(out);
          if (_rest.size() >= 2 && _rest.front().cancels(_rest.back())) {
            rotate_rest(1);
            continue;
          }
          break;
        }
      }

      std::map<int, std::vector<std::size_t>> positions() const {
        std::map<int, std::vector<std::size_t>> pos;
        for (std::size_t i = 0; i < _rest.size(); ++i) {
          if (_rest[i].var) {
            pos[_rest[i].id].push_back(i);
          }
        }
        return pos;
      }

      bool has_variable() const {
        return std::any_of(_rest.begin(), _rest.end(),
                           [](NTok const& t) { return t.var; });
      }

      std::optional<std::pair<std::size_t, std::size_t>> find_same_sign() const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (auto const& [id, p] : positions()) {
          if (_rest[p[0]].sign == _rest[p[1]].sign
              && (!best || p[0] < best->first)) {
            best = std::make_pair(p[0], p[1]);
          }
        }
        return best;
      }

      struct Interleaved {
        std::size_t x1, y1, x2, y2;
      };

      std::optional<Interleaved> find_interleaved() const {
        auto pos = positions();
        std::optional<Interleaved> best;
        for (auto const& [x, px] : pos) {
          for (auto const& [y, py] : pos) {
            if (px[0] < py[0] && py[0] < px[1] && px[1] < py[1]
                && (!best || px[0] < best->x1)) {
              best = Interleaved{px[0], py[0], px[1], py[1]};
            }
          }
        }
        return best;
      }

      // x U x V  ->  y y U^-1 V   with x = y U^-1.
      void extract_square(std::size_t i, std::size_t j) {
        int x = _rest[i].id;
        if (_rest[i].sign < 0) {
          flip(x);
        }
        rotate_rest(i);
        j -= i;
        Seq u  = slice(_rest, 1, j);
        Seq vv = slice(_rest, j + 1, _rest.size());
        int y  = fresh();
        rewrite({{x, cat({v(y), inv(u)})}}, {{y, cat({v(x), u})}});
        _squares.push_back(y);
        _rest = cat({inv(u), vv});
      }

      // x U y V x^-1 W y^-1 Z  ->  [a,b] Z W V U
      // with x = M a^-1 U^-1, y = b^-1 U^-1 V^-1 and M = W V U.
      void extract_handle(Interleaved q) {
        int x = _rest[q.x1].id, y = _rest[q.y1].id;
        if (_rest[q.x1].sign < 0) {
          flip(x);
        }
        if (_rest[q.y1].sign < 0) {
          flip(y);
        }
        rotate_rest(q.x1);
        std::size_t const py1 = q.y1 - q.x1, px2 = q.x2 - q.x1, py2 = q.y2 - q.x1;
        Seq u = slice(_rest, 1, py1), vv = slice(_rest, py1 + 1, px2),
            w = slice(_rest, px2 + 1, py2), z = slice(_rest, py2 + 1, _rest.size());
        Seq m = cat({w, vv, u});
        int a = fresh(), b = fresh();
        rewrite({{x, cat({m, v(a, -1), inv(u)})}, {y, cat({v(b, -1), inv(u), inv(vv)})}},
                {{a, cat({inv(u), v(x, -1), m})}, {b, cat({inv(u), inv(vv), v(y, -1)})}});
        _rest = cat({m, v(a, -1), v(b, -1), v(a), v(b), z});
        rotate_rest(m.size());
        _rest.erase(_rest.begin(), _rest.begin() + 4);
        _handles.emplace_back(a, b);
      }

      // t^2 [a,b] -> r^2 s^2 u^2, adjacent in the block.
      void convert_handle() {
        int t = _squares.back();
        auto [a, b] = _handles.front();
        int r = fresh(), s = fresh(), u = fresh();
        Seq fs = cat({v(t), v(a, -1), v(b, -1)});
        Seq fu = cat({v(b), v(a), v(t, -1), v(a, -1)});
        Seq fr = reduce(cat({v(t), fs, inv(fu), inv(fs), inv(fs)}));
        rewrite({{t, cat({v(r), v(s), v(s), v(u), v(s, -1)})},
                 {a, cat({v(u, -1), v(s, -1)})},
                 {b, cat({v(s, -1), v(r), v(s), v(s), v(u), v(u)})}},
                {{r, fr}, {s, fs}, {u, fu}});
        _squares.pop_back();
        _squares.push_back(r);
        _squares.push_back(s);
        _squares.push_back(u);
        _handles.erase(_handles.begin());
      }

      Word constant_word(Seq const& s) const {
        std::vector<Letter> ls;
        for (auto const& t : s) {
          ls.push_back(Letter{static_cast<char>(t.id), static_cast<int8_t>(t.sign)});
        }
        return Word(std::move(ls));
      }

      Seq constant_seq(Word const& w) const {
        Seq out;
        for (auto const& l : w.letters()) {
          out.push_back(NTok{false, l.gen, l.sign});
        }
        return out;
      }

      // A z^e w z^-e B with w constant  ->  conjugate z^-1 w' z, rest B A.
      void extract_conjugate() {
        auto pos = positions();
        std::optional<std::pair<std::size_t, std::size_t>> inner;
        for (auto const& [id, p] : pos) {
          bool only_constants = true;
          for (std::size_t k = p[0] + 1; k < p[1] && only_constants; ++k) {
            only_constants = !_rest[k].var;
          }
          if (only_constants && (!inner || p[0] < inner->first)) {
            inner = std::make_pair(p[0], p[1]);
          }
        }
        if (!inner) {
          throw std::logic_error("normalize: no innermost conjugate pair");
        }
        auto [i, j] = *inner;
        int z = _rest[i].id;
        if (_rest[i].sign > 0) {
          flip(z);
        }
        rotate_rest(i);
        j -= i;
        Word w   = constant_word(slice(_rest, 1, j));
        auto cr  = cyclic_reduce(w);
        auto off = least_rotation(cr.core.letters());
        Word s(std::vector<Letter>(cr.core.letters().begin(),
                                   cr.core.letters().begin() + off));
        Word canon(rotate_left(cr.core.letters(), off));
        Seq  g = constant_seq(concat_unreduced(cr.conjugator, s));
        rewrite({{z, cat({g, v(z)})}}, {{z, cat({inv(g), v(z)})}});
        _rest.erase(_rest.begin(), _rest.begin() + j + 1);
        _conj.push_back(Conj{z, CyclicWord(canon)});
      }

      void finish_constant() {
        if (_rest.empty() && !_conj.empty()) {
          Conj last = _conj.back();
          _conj.pop_back();
          _rest = cat({v(last.z, -1), constant_seq(last.w.representative()), v(last.z)});
          rotate_rest(1);
          tidy();
        }
        if (_rest.empty()) {
          return;
        }
        auto cr = cyclic_reduce(constant_word(_rest));
        rotate_rest(cr.conjugator.size());
        tidy();
        rotate_rest(least_rotation(constant_word(_rest).letters()));
      }

      Normalization build() const {
        Normalization out;
        auto&         sf = out.standard;
        sf.alphabet      = _alphabet;
        std::map<int, std::string> names;
        if (!_squares.empty()) {
          sf.orientable = false;
          sf.genus      = static_cast<int>(_squares.size());
          for (std::size_t i = 0; i < _squares.size(); ++i) {
            names[_squares[i]] = "x" + std::to_string(i + 1);
          }
        } else {
          sf.orientable = true;
          sf.genus      = static_cast<int>(_handles.size());
          for (std::size_t i = 0; i < _handles.size(); ++i) {
            names[_handles[i].first]  = "x" + std::to_string(i + 1);
            names[_handles[i].second] = "y" + std::to_string(i + 1);
          }
        }
        for (std::size_t j = 0; j < _conj.size(); ++j) {
          names[_conj[j].z] = "z" + std::to_string(j + 1);
          sf.coefficients.push_back(_conj[j].w);
        }
        if (!_rest.empty()) {
          sf.d = CyclicWord(constant_word(_rest));
        }
        auto to_tokens = [&](Seq const& s, auto const& var_name) {
          std::vector<Token> tokens;
          for (auto const& t : s) {
            if (t.var) {
              tokens.push_back(Token::var(var_name(t.id), t.sign));
            } else {
              tokens.push_back(Token{false, std::string(1, static_cast<char>(t.id)), t.sign});
            }
          }
          return tokens;
        };
        for (auto const& [raw, expr] : _back) {
          out.back.expressions[raw] = to_tokens(expr, [&](int id) {
            auto it = names.find(id);
            if (it == names.end()) {
              throw std::logic_error("normalize: dangling variable in back map");
            }
            return it->second;
          });
        }
        for (auto const& [id, name] : names) {
          out.forward.expressions[name] =
              to_tokens(_fwd.at(id), [&](int raw) { return _raw_names.at(raw); });
        }
        sf.validate();
        return out;
      }

      struct Conj {
        int        z;
        CyclicWord w;
      };

      Alphabet                 _alphabet;
      std::vector<std::string> _raw_names;
      std::map<std::string, Seq> _back;
      std::map<int, Seq>         _fwd;
      int                        _next = 0;
      std::vector<int>           _squares;
      std::vector<std::pair<int, int>> _handles;
      std::vector<Conj>          _conj;
      Seq                        _rest;
    };

  }  // namespace

  Normalization normalize(RawQuadraticEquation const& raw) {
    raw.validate();
    return Normalizer(raw).run();
  }

}  // namespace qfree
