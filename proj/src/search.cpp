// Certificate search.
//
// Any certificate refines to one whose images are single letters, so it
// suffices to pair up the letters of the coefficients.  We glue letters one
// pair at a time and keep the partial complex as a set of open surfaces,
// each remembered only by its boundary cycles (as words), its Euler genus
// eg = 2 - chi(capped) and its orientability.  Gluing two boundary letters
//
//   same cycle,  x U x^-1 V  ->  U, V          eg + 0
//   same cycle,  x U x V     ->  U^-1 V        eg + 1, non-orientable
//   two cycles,  x U | x^-1 V -> U V           eg + 2
//   two cycles,  x U | x V   ->  U V^-1        eg + 2, non-orientable
//   two surfaces                               eg1 + eg2
//
// so the total Euler genus never decreases.  Once everything is closed,
// sum chi - 2l = 2 - (total eg); we prune as soon as that drops below
// chi_bar.  Failed states are memoized on a canonical key.

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "qfree/certificates.hpp"

namespace qfree {

  namespace {

    struct Item {
      Letter l;
      int    occ;  // index into the original letter positions
    };
    using Cycle = std::vector<Item>;

    struct Comp {
      int                eg         = 0;
      bool               orientable = true;
      std::vector<Cycle> cycles;
    };

    struct State {
      std::vector<Comp> open;
      int               eg_closed  = 0;
      bool              non_closed = false;  // some closed surface is non-orientable

      int eg_total() const {
        int t = eg_closed;
        for (auto const& c : open) {
          t += c.eg;
        }
        return t;
      }
    };

    struct Pos {
      int comp, cycle, index;
    };

    Cycle inverse(Cycle const& c) {
      Cycle out;
      out.reserve(c.size());
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        out.push_back(Item{it->l.inverse(), it->occ});
      }
      return out;
    }

    Cycle rotated(Cycle const& c, int k) {
      Cycle out(c.begin() + k, c.end());
      out.insert(out.end(), c.begin(), c.begin() + k);
      return out;
    }

    Cycle concat(Cycle a, Cycle const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    // Euler-genus increase caused by gluing a and b (both letters of the
    // same generator).
    int genus_delta(State const& s, Pos a, Pos b) {
      if (a.comp != b.comp) {
        return 0;
      }
      if (a.cycle != b.cycle) {
        return 2;
      }
      auto const& c = s.open[a.comp].cycles[a.cycle];
      return c[a.index].l == c[b.index].l ? 1 : 0;
    }

    State glue(State const& s, Pos a, Pos b) {
      State out = s;
      auto& ca  = out.open[a.comp];
      if (a.comp == b.comp && a.cycle == b.cycle) {
        Cycle x = rotated(ca.cycles[a.cycle], a.index);
        int   n = static_cast<int>(x.size());
        int   t = ((b.index - a.index) % n + n) % n;
        Cycle u(x.begin() + 1, x.begin() + t);
        Cycle v(x.begin() + t + 1, x.end());
        ca.cycles.erase(ca.cycles.begin() + a.cycle);
        if (x[t].l == x[0].l) {
          ca.eg += 1;
          ca.orientable = false;
          Cycle w = concat(inverse(u), v);
          if (!w.empty()) {
            ca.cycles.push_back(std::move(w));
          }
        } else {
          for (Cycle* part : {&u, &v}) {
            if (!part->empty()) {
              ca.cycles.push_back(std::move(*part));
            }
          }
        }
      } else {
        Cycle x    = rotated(s.open[a.comp].cycles[a.cycle], a.index);
        Cycle y    = rotated(s.open[b.comp].cycles[b.cycle], b.index);
        bool  same = x[0].l == y[0].l;
        Cycle u(x.begin() + 1, x.end());
        Cycle v(y.begin() + 1, y.end());
        Cycle w = concat(u, same ? inverse(v) : v);
        if (a.comp == b.comp) {
          int hi = std::max(a.cycle, b.cycle), lo = std::min(a.cycle, b.cycle);
          ca.cycles.erase(ca.cycles.begin() + hi);
          ca.cycles.erase(ca.cycles.begin() + lo);
          ca.eg += 2;
          ca.orientable = ca.orientable && !same;
          if (!w.empty()) {
            ca.cycles.push_back(std::move(w));
          }
        } else {
          Comp cb = std::move(out.open[b.comp]);
          cb.cycles.erase(cb.cycles.begin() + b.cycle);
          ca.cycles.erase(ca.cycles.begin() + a.cycle);
          bool const both_orientable = ca.orientable && cb.orientable;
          if (same && both_orientable) {
            for (auto& c : cb.cycles) {
              c = inverse(c);
            }
          }
          ca.eg += cb.eg;
          ca.orientable = both_orientable;
          for (auto& c : cb.cycles) {
            ca.cycles.push_back(std::move(c));
          }
          if (!w.empty()) {
            ca.cycles.push_back(std::move(w));
          }
          out.open.erase(out.open.begin() + b.comp);
        }
      }
      // Close up finished surfaces.
      for (auto it = out.open.begin(); it != out.open.end();) {
        if (it->cycles.empty()) {
          out.eg_closed += it->eg;
          out.non_closed = out.non_closed || !it->orientable;
          it             = out.open.erase(it);
        } else {
          ++it;
        }
      }
      return out;
    }

    std::string letters_key(std::vector<Letter> const& ls) {
      std::size_t k = least_rotation(ls);
      std::string out;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        out.push_back(ls[(i + k) % ls.size()].to_char());
      }
      return out;
    }

    std::vector<Letter> letters_of(Cycle const& c) {
      std::vector<Letter> out;
      for (auto const& it : c) {
        out.push_back(it.l);
      }
      return out;
    }

    std::vector<Letter> inverse_letters(std::vector<Letter> const& ls) {
      std::vector<Letter> out;
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return out;
    }

    class Searcher {
     public:
      Searcher(StandardFormEquation const& sf, SearchBudget const& budget)
          : _sf(sf), _budget(budget), _start(std::chrono::steady_clock::now()) {
        _chi_bar   = reduced_euler_characteristic(sf);
        _eg_budget = 2 - _chi_bar;
      }

      SearchResult run() {
        SearchResult result;
        State        init;
        for (int i = 0; i < _sf.m(); ++i) {
          Comp  c;
          Cycle cyc;
          for (std::size_t k = 0; k < _sf.coefficient(i).length(); ++k) {
            Letter l = _sf.coefficient(i).representative()[k];
            cyc.push_back(Item{l, static_cast<int>(_origin.size())});
            _origin.push_back({i, static_cast<int>(k)});
            _letters.push_back(l);
          }
          c.cycles.push_back(std::move(cyc));
          init.open.push_back(std::move(c));
        }
        if (!balanced()) {
          result.decision = Decision::unsat;
          result.reason   = "letters cannot be paired";
          return result;
        }
        try {
          bool found = dfs(init);
          if (found) {
            result.decision    = Decision::sat;
            result.certificate = std::move(_found);
          } else if (_truncated) {
            result.decision = Decision::unknown;
            result.reason   = "certificates exist only above --max-n";
          } else if (_budget.max_n && *_budget.max_n < edge_bound(_sf)) {
            result.decision = Decision::unknown;
            result.reason   = "--max-n is below the edge bound";
          } else {
            result.decision = Decision::unsat;
            result.reason   = "search space exhausted";
          }
        } catch (BudgetExceeded const&) {
          result.decision = Decision::unknown;
          result.reason   = "budget exhausted";
        }
        _stats.memo_size = static_cast<long>(_failed.size());
        result.stats     = _stats;
        return result;
      }

     private:
      struct BudgetExceeded {};

      bool balanced() const {
        std::map<char, int> plus, minus;
        for (auto const& l : _letters) {
          (l.sign > 0 ? plus : minus)[l.gen]++;
        }
        for (auto const& l : _letters) {
          if (_sf.orientable ? plus[l.gen] != minus[l.gen]
                             : (plus[l.gen] + minus[l.gen]) % 2 != 0) {
            return false;
          }
        }
        return true;
      }

      bool compatible(Letter x, Letter y) const {
        return x.gen == y.gen && (!_sf.orientable || x.sign != y.sign);
      }

      void tick() {
        ++_stats.nodes;
        if (_budget.max_nodes && _stats.nodes > *_budget.max_nodes) {
          throw BudgetExceeded{};
        }
        if (_budget.timeout && (_stats.nodes & 255) == 0
            && std::chrono::steady_clock::now() - _start > *_budget.timeout) {
          throw BudgetExceeded{};
        }
      }

      std::string key(State const& s) const {
        std::vector<std::string> comps;
        for (auto const& c : s.open) {
          std::vector<std::string> cycles, flipped;
          for (auto const& cyc : c.cycles) {
            auto ls = letters_of(cyc);
            if (!c.orientable) {
              cycles.push_back(std::min(letters_key(ls), letters_key(inverse_letters(ls))));
            } else {
              cycles.push_back(letters_key(ls));
              flipped.push_back(letters_key(inverse_letters(ls)));
            }
          }
          auto join = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            std::string out;
            for (auto const& x : v) {
              out += x;
              out += '|';
            }
            return out;
          };
          std::string body = join(cycles);
          // Without a sign restriction on pairs, an orientable surface may
          // be turned over.
          if (c.orientable && !_sf.orientable) {
            body = std::min(body, join(flipped));
          }
          comps.push_back(std::to_string(c.eg) + (c.orientable ? "o" : "n") + ":" + body);
        }
        std::sort(comps.begin(), comps.end());
        std::string out = std::to_string(s.eg_closed) + (s.non_closed ? "n" : "o");
        for (auto const& c : comps) {
          out += '/';
          out += c;
        }
        return out;
      }

      bool accepts(State const& s) const {
        int const lhs = 2 - s.eg_total();
        if (_sf.orientable) {
          return lhs >= _chi_bar && !s.non_closed;
        }
        return s.non_closed ? lhs >= _chi_bar : lhs >= _chi_bar + 1;
      }

      bool dfs(State const& s) {
        tick();
        if (s.open.empty()) {
          return accepts(s) && leaf();
        }
        std::string k = key(s);
        if (_failed.contains(k)) {
          ++_stats.memo_hits;
          return false;
        }

        // Branch on the letter with the fewest admissible partners.
        std::vector<Pos> all;
        for (int c = 0; c < static_cast<int>(s.open.size()); ++c) {
          for (int y = 0; y < static_cast<int>(s.open[c].cycles.size()); ++y) {
            for (int i = 0; i < static_cast<int>(s.open[c].cycles[y].size()); ++i) {
              all.push_back(Pos{c, y, i});
            }
          }
        }
        auto item = [&](Pos p) -> Item const& {
          return s.open[p.comp].cycles[p.cycle][p.index];
        };
        int const        eg = s.eg_total();
        std::vector<Pos> best;
        Pos              pivot{};
        bool             have = false;
        for (auto const& p : all) {
          std::vector<Pos> partners;
          for (auto const& q : all) {
            if ((q.comp == p.comp && q.cycle == p.cycle && q.index == p.index)
                || !compatible(item(p).l, item(q).l)
                || eg + genus_delta(s, p, q) > _eg_budget) {
              continue;
            }
            partners.push_back(q);
          }
          if (!have || partners.size() < best.size()) {
            have  = true;
            pivot = p;
            best  = std::move(partners);
            if (best.empty()) {
              break;
            }
          }
        }
        for (auto const& q : best) {
          _pairs.emplace_back(item(pivot).occ, item(q).occ);
          bool ok = dfs(glue(s, pivot, q));
          if (ok) {
            return true;
          }
          _pairs.pop_back();
        }
        _failed.insert(std::move(k));
        return false;
      }

      // Builds, consolidates and checks the certificate for the current
      // pairing.
      bool leaf() {
        std::vector<std::pair<std::string, int>> label(_letters.size());
        std::map<std::string, Word>              images;
        int                                      next = 0;
        for (auto const& [o1, o2] : _pairs) {
          std::string name = "e" + std::to_string(++next);
          images[name]     = Word({_letters[o1]});
          label[o1]        = {name, 1};
          label[o2]        = {name, _letters[o2] == _letters[o1] ? 1 : -1};
        }
        std::vector<std::vector<SignedSymbol>> boundaries(_sf.m());
        for (std::size_t o = 0; o < _letters.size(); ++o) {
          boundaries[_origin[o].first].push_back(SignedSymbol{label[o].first, label[o].second});
        }
        Certificate cert = consolidated_certificate(boundaries, images);
        if (_budget.max_n && cert.n() > *_budget.max_n) {
          _truncated = true;
          return false;
        }
        Verdict v = verify(_sf, cert);
        if (!v.accepted) {
          throw std::logic_error(std::string("search produced a rejected certificate (")
                                 + condition_name(v.failed) + ": " + v.detail + ")");
        }
        _found = std::move(cert);
        return true;
      }

      StandardFormEquation const&           _sf;
      SearchBudget                          _budget;
      std::chrono::steady_clock::time_point _start;
      int                                   _chi_bar   = 2;
      int                                   _eg_budget = 0;
      std::vector<std::pair<int, int>>      _origin;  // (disc, position)
      std::vector<Letter>                   _letters;
      std::vector<std::pair<int, int>>      _pairs;
      std::unordered_set<std::string>       _failed;
      SearchStats                           _stats;
      bool                                  _truncated = false;
      std::optional<Certificate>            _found;
    };

  }  // namespace

  SearchResult search(StandardFormEquation const& sf, SearchBudget const& budget) {
    sf.validate();
    if (sf.m() == 0) {
      SearchResult r;
      r.decision    = Decision::sat;
      r.certificate = Certificate{};
      r.reason      = "no coefficients: the identity assignment solves it";
      return r;
    }
    return Searcher(sf, budget).run();
  }

}  // namespace qfree
