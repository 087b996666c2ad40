#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>

using qfree::SignedSymbol;

namespace oracle {

  std::vector<SignedSymbol> symbols(std::string const& s) {
    std::vector<SignedSymbol> out;
    for (char c : s) {
      out.push_back(SignedSymbol{std::string(1, static_cast<char>(std::tolower(c))),
                                 std::islower(static_cast<unsigned char>(c)) ? 1 : -1});
    }
    return out;
  }

  namespace {

    // Label -> list of (disc, position).
    std::map<std::string, std::vector<std::pair<int, int>>> where(Boundaries const& b) {
      std::map<std::string, std::vector<std::pair<int, int>>> w;
      for (int d = 0; d < static_cast<int>(b.size()); ++d) {
        for (int k = 0; k < static_cast<int>(b[d].size()); ++k) {
          w[b[d][k].name].emplace_back(d, k);
        }
      }
      return w;
    }

    std::vector<std::vector<int>> disc_components(Boundaries const& b) {
      auto                          w = where(b);
      std::vector<int>              comp(b.size(), -1);
      std::vector<std::vector<int>> out;
      for (int start = 0; start < static_cast<int>(b.size()); ++start) {
        if (comp[start] >= 0) {
          continue;
        }
        int             id = static_cast<int>(out.size());
        std::deque<int> q{start};
        comp[start] = id;
        out.emplace_back();
        while (!q.empty()) {
          int d = q.front();
          q.pop_front();
          out[id].push_back(d);
          for (auto const& s : b[d]) {
            for (auto [e, _] : w[s.name]) {
              if (comp[e] < 0) {
                comp[e] = id;
                q.push_back(e);
              }
            }
          }
        }
        std::sort(out[id].begin(), out[id].end());
      }
      return out;
    }

  }  // namespace

  std::vector<Piece> vef(Boundaries const& b) {
    // Corner nodes "disc:corner" joined whenever two edge ends coincide.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
    auto end_of = [&](int d, int k, bool head) {
      int  n       = static_cast<int>(b[d].size());
      bool forward = b[d][k].sign > 0;
      // The occurrence at k runs from corner k to corner k+1.
      int corner = (head == forward) ? (k + 1) % n : k;
      return std::make_pair(d, corner);
    };
    for (auto const& [label, occ] : where(b)) {
      for (bool head : {false, true}) {
        auto x = end_of(occ[0].first, occ[0].second, head);
        auto y = end_of(occ[1].first, occ[1].second, head);
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
    }
    std::vector<Piece>              out;
    std::set<std::pair<int, int>>   seen;
    for (auto const& discs : disc_components(b)) {
      int vertices = 0, sides = 0;
      for (int d : discs) {
        sides += static_cast<int>(b[d].size());
        for (int k = 0; k < static_cast<int>(b[d].size()); ++k) {
          if (seen.insert({d, k}).second) {
            ++vertices;
            std::vector<std::pair<int, int>> stack{{d, k}};
            while (!stack.empty()) {
              auto v = stack.back();
              stack.pop_back();
              for (auto const& w : adj[v]) {
                if (seen.insert(w).second) {
                  stack.push_back(w);
                }
              }
            }
          }
        }
      }
      out.push_back(Piece{discs, vertices - sides / 2 + static_cast<int>(discs.size())});
    }
    return out;
  }

  bool tree_orientable(Boundaries const& b, std::vector<int> const& discs) {
    std::set<int>             pending(discs.begin() + 1, discs.end());
    std::vector<SignedSymbol> polygon = b[discs.front()];
    auto inverse = [](std::vector<SignedSymbol> w) {
      std::reverse(w.begin(), w.end());
      for (auto& s : w) {
        s.sign = -s.sign;
      }
      return w;
    };
    while (!pending.empty()) {
      bool spliced = false;
      for (std::size_t i = 0; i < polygon.size() && !spliced; ++i) {
        for (int d : pending) {
          auto const& disc = b[d];
          auto        it   = std::find_if(disc.begin(), disc.end(), [&](auto const& s) {
            return s.name == polygon[i].name;
          });
          if (it == disc.end()) {
            continue;
          }
          // Make the disc carry the opposite exponent, then cut both open
          // at the shared edge and join them.
          std::vector<SignedSymbol> other = it->sign == polygon[i].sign ? inverse(disc) : disc;
          auto pos = std::find_if(other.begin(), other.end(),
                                  [&](auto const& s) { return s.name == polygon[i].name; });
          std::rotate(other.begin(), pos, other.end());
          std::vector<SignedSymbol> joined(polygon.begin(), polygon.begin() + i);
          joined.insert(joined.end(), other.begin() + 1, other.end());
          joined.insert(joined.end(), polygon.begin() + i + 1, polygon.end());
          polygon = std::move(joined);
          pending.erase(d);
          spliced = true;
          break;
        }
      }
      if (!spliced) {
        throw std::logic_error("tree oracle: component is not connected");
      }
    }
    std::map<std::string, std::set<int>> signs;
    std::map<std::string, int>           count;
    for (auto const& s : polygon) {
      signs[s.name].insert(s.sign);
      ++count[s.name];
    }
    for (auto const& [label, set] : signs) {
      if (count[label] == 2 && set.size() != 2) {
        return false;
      }
    }
    return true;
  }

  Boundaries random_complex(std::mt19937& rng, int max_discs, int max_length) {
    std::uniform_int_distribution<> disc_count(1, max_discs);
    int const                       nd = disc_count(rng);
    // Total letters is 2 * labels and at most nd * max_length.
    std::uniform_int_distribution<> label_count(std::max(1, (nd + 1) / 2),
                                                std::max(1, nd * max_length / 2));
    int const                                 nl = label_count(rng);
    std::vector<SignedSymbol>                 occ;
    for (int l = 0; l < nl; ++l) {
      for (int t = 0; t < 2; ++t) {
        occ.push_back(SignedSymbol{"q" + std::to_string(l), rng() % 2 ? 1 : -1});
      }
    }
    std::shuffle(occ.begin(), occ.end(), rng);
    Boundaries b(std::min<int>(nd, static_cast<int>(occ.size())));
    std::size_t i = 0;
    for (auto& d : b) {
      d.push_back(occ[i++]);
    }
    for (; i < occ.size(); ++i) {
      std::vector<int> open;
      for (int d = 0; d < static_cast<int>(b.size()); ++d) {
        if (static_cast<int>(b[d].size()) < max_length) {
          open.push_back(d);
        }
      }
      b[open[rng() % open.size()]].push_back(occ[i]);
    }
    return b;
  }

  std::set<qfree::Condition> failing_conditions(qfree::StandardFormEquation const& sf,
                                                qfree::Certificate const&           cert) {
    using qfree::Condition;
    std::set<Condition> fails;
    std::string const   gens = sf.alphabet.generators();
    auto letter_ok = [&](char c) {
      return gens.find(static_cast<char>(std::tolower(c))) != std::string::npos;
    };

    bool images_ok = true, glue_ok = true;
    bool const shape_ok = static_cast<int>(cert.boundaries.size()) == sf.m();
    if (cert.variables != static_cast<int>(cert.images.size()) || !shape_ok) {
      fails.insert(Condition::ii);
    }
    std::map<std::string, std::string> image;
    for (auto const& [p, w] : cert.images) {
      std::string s = w.str();
      image[p]      = s;
      if (s.empty()) {
        fails.insert(Condition::ii);
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!letter_ok(s[i])) {
          fails.insert(Condition::ii);
          images_ok = false;
        }
        if (i > 0 && s[i] != s[i - 1] && std::tolower(s[i]) == std::tolower(s[i - 1])) {
          fails.insert(Condition::ii);
        }
      }
    }
    std::map<std::string, int> count;
    for (auto const& c : cert.boundaries) {
      if (c.empty()) {
        fails.insert(Condition::ii);
        glue_ok = false;
      }
      for (auto const& s : c) {
        if (s.sign != 1 && s.sign != -1) {
          fails.insert(Condition::ii);
          glue_ok = false;
        }
        ++count[s.name];
        if (!image.contains(s.name)) {
          fails.insert(Condition::ii);
          images_ok = false;
        }
      }
    }
    for (auto const& [p, _] : image) {
      if (count[p] != 2) {
        fails.insert(Condition::ii);
      }
    }
    for (auto const& [p, c] : count) {
      if (c != 2) {
        glue_ok = false;
      }
    }
    if (!glue_ok) {
      fails.insert(Condition::ii);
    }

    int const chi_bar = sf.orientable ? 2 - 2 * sf.genus : 2 - sf.genus;
    if (cert.variables > std::max(3 * (sf.m() - chi_bar), 1)) {
      fails.insert(Condition::bound_n);
    }

    if (images_ok && shape_ok) {
      for (int i = 0; i < sf.m(); ++i) {
        std::string reading;
        for (auto const& s : cert.boundaries[i]) {
          std::string w = image.at(s.name);
          if (s.sign < 0) {
            std::reverse(w.begin(), w.end());
            for (char& c : w) {
              c = std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                              : static_cast<char>(std::tolower(c));
            }
          }
          reading += w;
        }
        std::string const target = sf.coefficient(i).str();
        if (reading.size() != target.size() || (reading + reading).find(target) == std::string::npos) {
          fails.insert(Condition::iv);
        }
      }
    }

    if (glue_ok) {
      if (sf.orientable) {
        for (auto const& [label, occ] : where(cert.boundaries)) {
          auto const& a = cert.boundaries[occ[0].first][occ[0].second];
          auto const& b = cert.boundaries[occ[1].first][occ[1].second];
          if (a.sign == b.sign) {
            fails.insert(Condition::v);
          }
        }
      }
      auto pieces  = vef(cert.boundaries);
      int  total   = 0;
      bool any_non = false;
      for (auto const& piece : pieces) {
        total += piece.chi;
        any_non = any_non || !tree_orientable(cert.boundaries, piece.discs);
      }
      int const lhs = total - 2 * (static_cast<int>(pieces.size()) - 1);
      bool      ok  = sf.orientable ? (!any_non && lhs >= chi_bar)
                                    : (any_non ? lhs >= chi_bar : lhs >= chi_bar + 1);
      if (!ok) {
        fails.insert(Condition::iii);
      }
    }
    return fails;
  }

  bool brute_force_packable(qfree::BinPackingInstance const& inst) {
    int const        k = static_cast<int>(inst.items.size());
    std::vector<int> bin(k, 0);
    while (true) {
      std::vector<int> load(inst.N, 0);
      for (int j = 0; j < k; ++j) {
        load[bin[j]] += inst.items[j];
      }
      if (std::all_of(load.begin(), load.end(), [&](int l) {
            return inst.exact ? l == inst.B : l <= inst.B;
          })) {
        return true;
      }
      int j = 0;
      while (j < k && ++bin[j] == inst.N) {
        bin[j++] = 0;
      }
      if (j == k) {
        return false;
      }
    }
  }

  std::vector<qfree::BinPackingInstance> all_instances(int max_k, int max_item, int max_B,
                                                       int max_N) {
    std::vector<qfree::BinPackingInstance> out;
    for (int k = 1; k <= max_k; ++k) {
      std::vector<int> items(k, 1);
      while (true) {
        for (int B = 1; B <= max_B; ++B) {
          for (int N = 1; N <= max_N; ++N) {
            out.push_back(qfree::BinPackingInstance{items, B, N, true});
          }
        }
        int j = 0;
        while (j < k && ++items[j] > max_item) {
          items[j++] = 1;
        }
        if (j == k) {
          break;
        }
      }
    }
    return out;
  }

}  // namespace oracle
