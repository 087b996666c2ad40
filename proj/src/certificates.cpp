#include "qfree/certificates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qfree {

  char const* condition_name(Condition c) noexcept {
    switch (c) {
      case Condition::none: return "none";
      case Condition::ii: return "ii";
      case Condition::bound_n: return "bound-n";
      case Condition::iii: return "iii";
      case Condition::iv: return "iv";
      case Condition::v: return "v";
    }
    return "?";
  }

  char const* decision_name(Decision d) noexcept {
    switch (d) {
      case Decision::sat: return "SAT";
      case Decision::unsat: return "UNSAT";
      case Decision::unknown: return "UNKNOWN";
    }
    return "?";
  }

  int literal_edge_bound(StandardFormEquation const& sf) noexcept {
    return 3 * (sf.m() - reduced_euler_characteristic(sf));
  }

  int edge_bound(StandardFormEquation const& sf) noexcept {
    return std::max(literal_edge_bound(sf), 1);
  }

  long certificate_size(Certificate const& cert) {
    long size = cert.n();
    for (auto const& b : cert.boundaries) {
      size += static_cast<long>(b.size());
    }
    for (auto const& [p, a] : cert.images) {
      size += static_cast<long>(a.size());
    }
    return size;
  }

  GluedComplex certificate_complex(Certificate const& cert) {
    return GluedComplex::build(cert.boundaries);
  }

  Certificate consolidated_certificate(std::vector<std::vector<SignedSymbol>> const& boundaries,
                                       std::map<std::string, Word> const& images) {
    Consolidation cons = consolidate(GluedComplex::build(boundaries));
    Certificate   cert;
    for (auto const& [p, path] : cons.composition) {
      std::vector<Letter> ls;
      for (auto const& s : path) {
        Word a = s.sign > 0 ? images.at(s.name) : invert(images.at(s.name));
        ls.insert(ls.end(), a.letters().begin(), a.letters().end());
      }
      cert.images[p] = Word(std::move(ls));
    }
    cert.variables = static_cast<int>(cert.images.size());
    for (auto const& d : cons.complex.discs()) {
      cert.boundaries.push_back(d.boundary);
    }
    return cert;
  }

  namespace {

    std::string symbols_str(std::vector<SignedSymbol> const& w) {
      std::string out;
      for (auto const& s : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += s.sign > 0 ? s.name : s.name + "^-1";
      }
      return out;
    }

  }  // namespace

  Verdict verify(StandardFormEquation const& sf, Certificate const& cert) {
    Verdict                                  verdict;
    std::map<Condition, std::string>         why;
    auto fail = [&](Condition c, std::string detail) {
      why.try_emplace(c, std::move(detail));
    };

    // (ii) well-formedness.
    bool images_ok = true;
    if (cert.variables != static_cast<int>(cert.images.size())) {
      fail(Condition::ii, "declared " + std::to_string(cert.variables)
                              + " variables but " + std::to_string(cert.images.size())
                              + " images are given");
    }
    for (auto const& [p, a] : cert.images) {
      if (a.empty()) {
        fail(Condition::ii, "image of " + p + " is empty");
      }
      for (auto const& l : a.letters()) {
        if (!sf.alphabet.contains(l.gen)) {
          fail(Condition::ii, "image of " + p + " uses a letter outside the alphabet");
          images_ok = false;
        }
      }
      if (!a.reduced()) {
        fail(Condition::ii, "image of " + p + " is not freely reduced");
      }
    }
    bool shape_ok = static_cast<int>(cert.boundaries.size()) == sf.m();
    if (!shape_ok) {
      fail(Condition::ii, "expected " + std::to_string(sf.m()) + " boundaries, got "
                              + std::to_string(cert.boundaries.size()));
    }
    std::map<std::string, int> count;
    bool                       glue_ok = true;
    for (std::size_t i = 0; i < cert.boundaries.size(); ++i) {
      if (cert.boundaries[i].empty()) {
        fail(Condition::ii, "boundary C" + std::to_string(i + 1) + " is empty");
        glue_ok = false;
      }
      for (auto const& s : cert.boundaries[i]) {
        if (s.sign != 1 && s.sign != -1) {
          fail(Condition::ii, "exponent of " + s.name + " must be 1 or -1");
          glue_ok = false;
        }
        ++count[s.name];
        if (!cert.images.contains(s.name)) {
          fail(Condition::ii, "no image for " + s.name);
          images_ok = false;
        }
      }
    }
    for (auto const& [p, a] : cert.images) {
      auto it = count.find(p);
      int  c  = it == count.end() ? 0 : it->second;
      if (c != 2) {
        fail(Condition::ii, p + " occurs " + std::to_string(c) + " time(s), not twice");
        glue_ok = false;
      }
    }
    for (auto const& [p, c] : count) {
      if (c != 2) {
        glue_ok = false;
      }
    }

    // Edge bound.
    if (cert.n() > edge_bound(sf)) {
      fail(Condition::bound_n, "n = " + std::to_string(cert.n()) + " exceeds "
                                   + std::to_string(edge_bound(sf)));
    }

    // (iv) boundary readings.
    if (images_ok && shape_ok) {
      for (int i = 0; i < sf.m(); ++i) {
        auto const& c = cert.boundaries[i];
        std::vector<Letter> reading;
        for (auto const& s : c) {
          Word a = s.sign > 0 ? cert.images.at(s.name) : invert(cert.images.at(s.name));
          reading.insert(reading.end(), a.letters().begin(), a.letters().end());
        }
        CyclicWord const& target = sf.coefficient(i);
        if (!cyclic_match(reading, target)) {
          std::string name = i + 1 == sf.m() ? "d" : "w" + std::to_string(i + 1);
          fail(Condition::iv, "psi(C" + std::to_string(i + 1) + ") = \""
                                  + Word(reading).str() + "\" does not read " + name
                                  + " = \"" + target.str() + "\" (C"
                                  + std::to_string(i + 1) + " = " + symbols_str(c) + ")");
          break;
        }
      }
    }

    // (v) and (iii) need a valid gluing.
    if (glue_ok) {
      GluedComplex cx = certificate_complex(cert);
      if (sf.orientable && !coherent_clockwise(cx)) {
        for (auto const& p : cx.labels()) {
          auto const& [a, b] = cx.occurrences(p);
          if (cx.at(a).sign == cx.at(b).sign) {
            fail(Condition::v, "both occurrences of " + p + " have exponent "
                                   + std::to_string(cx.at(a).sign));
            break;
          }
        }
      }
      SurfaceSummary summary = summarize(cx);
      int            total   = 0;
      bool           any_non = false;
      for (auto const& comp : summary.components) {
        total += comp.euler_characteristic;
        any_non = any_non || !comp.orientable;
      }
      int const  l       = summary.component_count() - 1;
      int const  lhs     = total - 2 * l;
      int const  chi_bar = reduced_euler_characteristic(sf);
      std::string stats  = "sum chi - 2l = " + std::to_string(lhs) + ", chi_bar = "
                          + std::to_string(chi_bar);
      if (sf.orientable) {
        if (any_non) {
          fail(Condition::iii, "a glued surface is non-orientable");
        } else if (lhs < chi_bar) {
          fail(Condition::iii, stats);
        }
      } else if (!(any_non ? lhs >= chi_bar : lhs >= chi_bar + 1)) {
        fail(Condition::iii, stats + (any_non ? "" : " (all surfaces orientable)"));
      }
      verdict.surfaces = std::move(summary);
    }

    for (Condition c : {Condition::ii, Condition::bound_n, Condition::iv, Condition::v,
                        Condition::iii}) {
      if (why.contains(c)) {
        verdict.failures.push_back(c);
      }
    }
    verdict.accepted = verdict.failures.empty();
    if (!verdict.accepted) {
      verdict.failed = verdict.failures.front();
      verdict.detail = why.at(verdict.failed);
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Step {
      int    slot;  // -1 for a constant
      int    sign;
      Letter letter;
    };

    // Odometer over the assignments of `slots`, calling f(value) with the
    // reduced value of `steps`; f returns true to stop.
    template <class F>
    bool enumerate(std::vector<Step> const& steps, std::vector<int> const& slots,
                   std::vector<Word> const& words, std::vector<Word> const& inverses,
                   std::vector<std::size_t>& choice, long& tried, F&& f) {
      for (int s : slots) {
        choice[s] = 0;
      }
      std::vector<Letter> stack;
      auto push = [&](Letter l) {
        if (!stack.empty() && stack.back().cancels(l)) {
          stack.pop_back();
        } else {
          stack.push_back(l);
        }
      };
      while (true) {
        ++tried;
        stack.clear();
        for (auto const& st : steps) {
          if (st.slot < 0) {
            push(st.letter);
            continue;
          }
          Word const& w = st.sign > 0 ? words[choice[st.slot]] : inverses[choice[st.slot]];
          for (auto const& l : w.letters()) {
            push(l);
          }
        }
        if (f(stack)) {
          return true;
        }
        std::size_t i = 0;
        while (i < slots.size() && ++choice[slots[i]] == words.size()) {
          choice[slots[i++]] = 0;
        }
        if (i == slots.size()) {
          return false;
        }
      }
    }

    std::string key_of(std::vector<Letter> const& w) {
      std::string k;
      for (auto l : w) {
        k += l.to_char();
      }
      return k;
    }

    // Meet in the middle: cut the body where the two sides share no
    // variable, tabulate the right side's values, and look up the inverse of
    // each left value.  Covers exactly the same assignments as a plain
    // odometer over all variables.
    DirectResult direct(std::vector<std::string> const& vars,
                        std::vector<Token> const& body, Alphabet const& alphabet,
                        std::size_t max_len) {
      DirectResult      out;
      auto const        words = reduced_words_up_to(alphabet, max_len);
      std::vector<Word> inverses;
      for (auto const& w : words) {
        inverses.push_back(invert(w));
      }
      std::map<std::string, int> slot;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        slot[vars[i]] = static_cast<int>(i);
      }
      std::vector<Step> steps;
      for (auto const& t : body) {
        if (t.variable) {
          steps.push_back(Step{slot.at(t.name), t.sign, {}});
        } else {
          steps.push_back(Step{-1, t.sign, Letter{t.name[0], static_cast<int8_t>(t.sign)}});
        }
      }

      auto slots_of = [&](std::size_t from, std::size_t to) {
        std::set<int> s;
        for (std::size_t i = from; i < to; ++i) {
          if (steps[i].slot >= 0) {
            s.insert(steps[i].slot);
          }
        }
        return std::vector<int>(s.begin(), s.end());
      };
      std::size_t cut = 0, best = vars.size() + 1;
      for (std::size_t c = 0; c <= steps.size(); ++c) {
        auto l = slots_of(0, c), r = slots_of(c, steps.size());
        if (l.size() + r.size() != vars.size()) {
          continue;  // a variable on both sides
        }
        if (std::max(l.size(), r.size()) < best) {
          best = std::max(l.size(), r.size());
          cut  = c;
        }
      }
      std::vector<Step> const left(steps.begin(), steps.begin() + cut);
      std::vector<Step> const right(steps.begin() + cut, steps.end());
      auto const              left_slots = slots_of(0, cut), right_slots = slots_of(cut, steps.size());

      std::vector<std::size_t>                                  choice(vars.size(), 0);
      std::unordered_map<std::string, std::vector<std::size_t>> table;
      enumerate(right, right_slots, words, inverses, choice, out.tried, [&](auto const& value) {
        table.try_emplace(key_of(value), choice);
        return false;
      });
      bool found = enumerate(left, left_slots, words, inverses, choice, out.tried,
                             [&](auto const& value) {
        auto inv = invert(Word(value));
        auto it  = table.find(key_of(inv.letters()));
        if (it == table.end()) {
          return false;
        }
        for (int s : right_slots) {
          choice[s] = it->second[s];
        }
        return true;
      });
      if (found) {
        Assignment a;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          a[vars[i]] = words[choice[i]];
        }
        out.decision   = Decision::sat;
        out.assignment = std::move(a);
      }
      return out;
    }

  }  // namespace

  DirectResult direct_search(RawQuadraticEquation const& eq, std::size_t max_len) {
    return direct(eq.variables, eq.body, eq.alphabet, max_len);
  }

  DirectResult direct_search(StandardFormEquation const& sf, std::size_t max_len) {
    return direct(sf.variable_names(), sf.body(), sf.alphabet, max_len);
  }

}  // namespace qfree
