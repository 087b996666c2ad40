#include "qfree/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qfree {

  namespace {

    struct UnionFind {
      std::vector<int> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        parent[std::max(x, y)] = std::min(x, y);
        return true;
      }
    };

    // Boundaries over integer labels; the label-pair table lists both
    // occurrences of each label.
    using IntDisc = std::vector<std::pair<int, int>>;  // (label, sign)

    struct Pairing {
      std::vector<std::pair<Occurrence, Occurrence>> occ;
    };

    Pairing pair_labels(std::vector<IntDisc> const& discs, int label_count) {
      std::vector<std::vector<Occurrence>> seen(label_count);
      for (int d = 0; d < static_cast<int>(discs.size()); ++d) {
        for (int k = 0; k < static_cast<int>(discs[d].size()); ++k) {
          seen[discs[d][k].first].push_back(Occurrence{d, k});
        }
      }
      Pairing p;
      for (auto const& s : seen) {
        if (!s.empty()) {  // labels merged away during consolidation
          p.occ.emplace_back(s[0], s[1]);
        }
      }
      return p;
    }

    // Vertex class of every corner slot; slots are numbered disc by disc.
    std::vector<int> vertex_classes(std::vector<IntDisc> const& discs,
                                    Pairing const&              pairing,
                                    std::vector<std::size_t>&   base,
                                    int&                        count) {
      base.assign(discs.size() + 1, 0);
      for (std::size_t d = 0; d < discs.size(); ++d) {
        base[d + 1] = base[d] + discs[d].size();
      }
      UnionFind uf(base.back());
      auto ends = [&](Occurrence o) {
        auto const n    = discs[o.disc].size();
        int const  from = static_cast<int>(base[o.disc] + o.position);
        int const  to   = static_cast<int>(base[o.disc] + (o.position + 1) % n);
        int const  sign = discs[o.disc][o.position].second;
        return sign > 0 ? std::make_pair(from, to) : std::make_pair(to, from);
      };
      for (auto const& [a, b] : pairing.occ) {
        auto [ta, ha] = ends(a);
        auto [tb, hb] = ends(b);
        uf.unite(ta, tb);
        uf.unite(ha, hb);
      }
      std::vector<int> cls(base.back());
      std::map<int, int> renumber;
      for (std::size_t s = 0; s < cls.size(); ++s) {
        auto [it, _] = renumber.try_emplace(uf.find(static_cast<int>(s)),
                                            static_cast<int>(renumber.size()));
        cls[s] = it->second;
      }
      count = static_cast<int>(renumber.size());
      return cls;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GluedComplex
  ////////////////////////////////////////////////////////////////////////

  GluedComplex::GluedComplex(std::vector<Disc> discs) : _discs(std::move(discs)) {
    std::map<std::string, std::vector<Occurrence>> seen;
    for (int d = 0; d < static_cast<int>(_discs.size()); ++d) {
      auto const& b = _discs[d].boundary;
      if (b.empty()) {
        throw Error("disc " + std::to_string(d + 1) + " has an empty boundary");
      }
      for (int k = 0; k < static_cast<int>(b.size()); ++k) {
        if (b[k].sign != 1 && b[k].sign != -1) {
          throw Error("edge exponent must be 1 or -1");
        }
        seen[b[k].name].push_back(Occurrence{d, k});
      }
    }
    std::map<std::string, int> ids;
    for (auto const& [label, occ] : seen) {
      if (occ.size() != 2) {
        throw Error("label '" + label + "' occurs " + std::to_string(occ.size())
                    + " time(s); every label must occur exactly twice");
      }
      ids[label] = static_cast<int>(_labels.size());
      _labels.push_back(label);
      _pairs.emplace(label, std::make_pair(occ[0], occ[1]));
    }

    std::vector<IntDisc> int_discs;
    for (auto const& disc : _discs) {
      IntDisc id;
      for (auto const& s : disc.boundary) {
        id.emplace_back(ids.at(s.name), s.sign);
      }
      int_discs.push_back(std::move(id));
    }
    Pairing pairing = pair_labels(int_discs, static_cast<int>(_labels.size()));
    _vertex = vertex_classes(int_discs, pairing, _corner_base, _vertex_count);
    _vertex_degree.assign(_vertex_count, 0);
    for (int v : _vertex) {
      ++_vertex_degree[v];
    }

    UnionFind uf(_discs.size());
    for (auto const& [a, b] : pairing.occ) {
      uf.unite(a.disc, b.disc);
    }
    std::map<int, int> comp_index;
    _component_of.resize(_discs.size());
    for (int d = 0; d < static_cast<int>(_discs.size()); ++d) {
      auto [it, fresh] = comp_index.try_emplace(uf.find(d), static_cast<int>(_components.size()));
      if (fresh) {
        _components.emplace_back();
      }
      _components[it->second].push_back(d);
      _component_of[d] = it->second;
    }
  }

  GluedComplex GluedComplex::build(std::vector<std::vector<SignedSymbol>> const& boundaries) {
    std::vector<Disc> discs;
    for (auto const& b : boundaries) {
      discs.push_back(Disc{b});
    }
    return GluedComplex(std::move(discs));
  }

  std::pair<Occurrence, Occurrence> const& GluedComplex::occurrences(
      std::string const& label) const {
    auto it = _pairs.find(label);
    if (it == _pairs.end()) {
      throw Error("unknown label '" + label + "'");
    }
    return it->second;
  }

  int GluedComplex::vertex_of(int disc, int corner) const {
    return _vertex[_corner_base[disc] + corner];
  }

  ////////////////////////////////////////////////////////////////////////
  // Euler characteristic
  ////////////////////////////////////////////////////////////////////////

  Rational corner_angle(std::size_t sides) {
    auto const n = static_cast<long>(sides);
    return Rational(n - 2, n);
  }

  int euler_characteristic_gb(GluedComplex const& cx, int component) {
    std::map<int, Rational> angle_sum;  // per vertex of the component
    Rational                total = 0;
    for (int d : cx.components().at(component)) {
      auto const n     = cx.discs()[d].sides();
      Rational   angle = corner_angle(n);
      Rational   face  = 0;
      for (std::size_t k = 0; k < n; ++k) {
        face += angle;
        angle_sum[cx.vertex_of(d, static_cast<int>(k))] += angle;
      }
      total += face - Rational(static_cast<long>(n) - 2);
    }
    for (auto const& [v, s] : angle_sum) {
      total += Rational(2) - s;
    }
    // total is in units of pi; chi = total / 2.
    Rational chi = total / 2;
    if (denominator(chi) != 1) {
      throw std::logic_error("Gauss-Bonnet total is not a multiple of 2 pi");
    }
    return static_cast<int>(numerator(chi));
  }

  int euler_characteristic_vef(GluedComplex const& cx, int component) {
    std::set<int> vertices;
    long          sides = 0;
    auto const&   discs = cx.components().at(component);
    for (int d : discs) {
      auto const n = cx.discs()[d].sides();
      sides += static_cast<long>(n);
      for (std::size_t k = 0; k < n; ++k) {
        vertices.insert(cx.vertex_of(d, static_cast<int>(k)));
      }
    }
    return static_cast<int>(vertices.size()) - static_cast<int>(sides / 2)
           + static_cast<int>(discs.size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Orientability
  ////////////////////////////////////////////////////////////////////////

  Orientability orientability(GluedComplex const& cx, int component) {
    auto const&      discs = cx.components().at(component);
    Orientability    out;
    out.signs.assign(cx.discs().size(), 0);

    // Labels touching the component, ascending.
    std::vector<std::string> labels;
    for (auto const& label : cx.labels()) {
      if (cx.component_of(cx.occurrences(label).first.disc) == component) {
        labels.push_back(label);
      }
    }
    // Spanning tree: repeatedly scan labels in ascending order, fixing the
    // sign of the far disc of any pair with exactly one signed end.
    out.signs[discs.front()] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto const& label : labels) {
        auto const& [a, b] = cx.occurrences(label);
        int& sa = out.signs[a.disc];
        int& sb = out.signs[b.disc];
        if ((sa == 0) == (sb == 0)) {
          continue;
        }
        int const ea = cx.at(a).sign, eb = cx.at(b).sign;
        if (sa == 0) {
          sa = -sb * eb * ea;
        } else {
          sb = -sa * ea * eb;
        }
        grew = true;
      }
    }
    for (auto const& label : labels) {
      auto const& [a, b] = cx.occurrences(label);
      if (out.signs[a.disc] * cx.at(a).sign != -out.signs[b.disc] * cx.at(b).sign) {
        out.orientable      = false;
        out.violating_label = label;
        break;
      }
    }
    return out;
  }

  bool coherent_clockwise(GluedComplex const& cx) {
    for (auto const& label : cx.labels()) {
      auto const& [a, b] = cx.occurrences(label);
      if (cx.at(a).sign == cx.at(b).sign) {
        return false;
      }
    }
    return true;
  }

  SurfaceSummary summarize(GluedComplex const& cx) {
    SurfaceSummary out;
    for (int c = 0; c < static_cast<int>(cx.components().size()); ++c) {
      out.components.push_back(SurfaceSummary::Component{
          cx.components()[c], euler_characteristic_gb(cx, c),
          orientability(cx, c).orientable});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Consolidation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Merges one pair of edges at a degree-two vertex; false if none.
    bool merge_once(std::vector<IntDisc>&                   discs,
                    std::vector<std::vector<SignedSymbol>>& composition) {
      int const label_count = static_cast<int>(composition.size());
      Pairing   pairing     = pair_labels(discs, label_count);
      std::vector<std::size_t> base;
      int                      vcount = 0;
      auto cls = vertex_classes(discs, pairing, base, vcount);

      std::vector<std::vector<Occurrence>> corners(vcount);  // (disc, corner)
      for (int d = 0; d < static_cast<int>(discs.size()); ++d) {
        for (int k = 0; k < static_cast<int>(discs[d].size()); ++k) {
          corners[cls[base[d] + k]].push_back(Occurrence{d, k});
        }
      }
      auto before = [&](Occurrence c) {
        int n = static_cast<int>(discs[c.disc].size());
        return Occurrence{c.disc, (c.position + n - 1) % n};
      };
      auto at = [&](Occurrence o) { return discs[o.disc][o.position]; };

      for (auto const& cs : corners) {
        if (cs.size() != 2) {
          continue;
        }
        Occurrence const c1b = before(cs[0]), c1a = cs[0];
        Occurrence const c2b = before(cs[1]), c2a = cs[1];
        auto const [e, alpha] = at(c1b);
        auto const [f, beta]  = at(c1a);
        if (e == f) {
          continue;
        }
        int rsign = 0;
        if (at(c2b) == std::make_pair(e, alpha) && at(c2a) == std::make_pair(f, beta)) {
          rsign = 1;
        } else if (at(c2b) == std::make_pair(f, -beta)
                   && at(c2a) == std::make_pair(e, -alpha)) {
          rsign = -1;
        } else {
          continue;
        }
        std::set<std::pair<int, int>> spots;
        for (auto o : {c1b, c1a, c2b, c2a}) {
          spots.emplace(o.disc, o.position);
        }
        if (spots.size() != 4) {
          continue;
        }

        // r = e^alpha f^beta; the new label reuses e's slot.
        std::vector<SignedSymbol> r;
        auto append = [&](int label, int sign) {
          auto const& w = composition[label];
          if (sign > 0) {
            r.insert(r.end(), w.begin(), w.end());
          } else {
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
              r.push_back(SignedSymbol{it->name, -it->sign});
            }
          }
        };
        append(e, alpha);
        append(f, beta);
        composition[e] = std::move(r);
        composition[f].clear();

        std::set<std::pair<int, int>> drop{{c1b.disc, c1b.position},
                                           {c2b.disc, c2b.position}};
        std::map<std::pair<int, int>, int> put{{{c1a.disc, c1a.position}, 1},
                                               {{c2a.disc, c2a.position}, rsign}};
        for (int d = 0; d < static_cast<int>(discs.size()); ++d) {
          IntDisc next;
          for (int k = 0; k < static_cast<int>(discs[d].size()); ++k) {
            if (drop.contains({d, k})) {
              continue;
            }
            auto it = put.find({d, k});
            next.push_back(it == put.end() ? discs[d][k] : std::make_pair(e, it->second));
          }
          discs[d] = std::move(next);
        }
        return true;
      }
      return false;
    }

  }  // namespace

  Consolidation consolidate(GluedComplex const& cx, std::string const& prefix) {
    std::map<std::string, int> ids;
    std::vector<std::vector<SignedSymbol>> composition;
    for (auto const& label : cx.labels()) {
      ids[label] = static_cast<int>(composition.size());
      composition.push_back({SignedSymbol{label, 1}});
    }
    std::vector<IntDisc> discs;
    for (auto const& d : cx.discs()) {
      IntDisc id;
      for (auto const& s : d.boundary) {
        id.emplace_back(ids.at(s.name), s.sign);
      }
      discs.push_back(std::move(id));
    }
    while (merge_once(discs, composition)) {
    }

    Consolidation       out;
    std::map<int, std::string> names;
    std::vector<Disc>   result;
    for (auto const& d : discs) {
      Disc disc;
      for (auto const& [label, sign] : d) {
        auto [it, fresh] = names.try_emplace(label, "");
        if (fresh) {
          it->second = prefix + std::to_string(names.size());
          out.composition[it->second] = composition[label];
        }
        disc.boundary.push_back(SignedSymbol{it->second, sign});
      }
      result.push_back(std::move(disc));
    }
    out.complex = GluedComplex(std::move(result));
    return out;
  }

}  // namespace qfree
