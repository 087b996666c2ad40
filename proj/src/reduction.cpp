#include "qfree/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qfree {

  void BinPackingInstance::validate() const {
    if (items.empty()) {
      throw Error("an instance needs at least one item");
    }
    for (int r : items) {
      if (r < 1) {
        throw Error("item sizes must be positive");
      }
    }
    if (B < 1 || N < 1) {
      throw Error("bin capacity and bin count must be positive");
    }
  }

  Partition canonical(Partition part) {
    for (auto& b : part.blocks) {
      std::sort(b.begin(), b.end());
    }
    std::sort(part.blocks.begin(), part.blocks.end(), [](auto const& x, auto const& y) {
      if (x.empty() || y.empty()) {
        return !x.empty() && y.empty();
      }
      return x.front() < y.front();
    });
    return part;
  }

  bool is_valid_partition(BinPackingInstance const& inst, Partition const& part) {
    int const k = static_cast<int>(inst.items.size());
    if (static_cast<int>(part.blocks.size()) != inst.N) {
      return false;
    }
    std::vector<bool> used(k + 1, false);
    for (auto const& block : part.blocks) {
      int sum = 0;
      for (int j : block) {
        if (j < 1 || j > k || used[j]) {
          return false;
        }
        used[j] = true;
        sum += inst.items[j - 1];
      }
      if (inst.exact ? sum != inst.B : sum > inst.B) {
        return false;
      }
    }
    return std::all_of(used.begin() + 1, used.end(), [](bool u) { return u; });
  }

  ExactConversion to_exact(BinPackingInstance const& inst) {
    inst.validate();
    ExactConversion out;
    int const total = std::accumulate(inst.items.begin(), inst.items.end(), 0);
    out.padding     = inst.N * inst.B - total;
    out.instance    = inst;
    out.instance.exact = true;
    if (out.padding < 0) {
      out.feasible = false;
      return out;
    }
    out.instance.items.insert(out.instance.items.end(), out.padding, 1);
    return out;
  }

  namespace {

    class ExactSolver {
     public:
      explicit ExactSolver(BinPackingInstance const& inst)
          : _inst(inst), _order(inst.items.size()), _bin(inst.items.size(), -1),
            _load(inst.N, 0) {
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(),
                         [&](int x, int y) { return inst.items[x] > inst.items[y]; });
      }

      std::optional<Partition> run() {
        int const total = std::accumulate(_inst.items.begin(), _inst.items.end(), 0);
        if (total != _inst.N * _inst.B || !place(0)) {
          return std::nullopt;
        }
        Partition part;
        part.blocks.resize(_inst.N);
        for (std::size_t j = 0; j < _bin.size(); ++j) {
          part.blocks[_bin[j]].push_back(static_cast<int>(j) + 1);
        }
        return canonical(std::move(part));
      }

     private:
      bool place(std::size_t i) {
        if (i == _order.size()) {
          return true;
        }
        std::vector<int> sorted = _load;
        std::sort(sorted.begin(), sorted.end());
        sorted.push_back(static_cast<int>(i));
        if (_failed.contains(sorted)) {
          return false;
        }
        int const        r = _inst.items[_order[i]];
        std::set<int>    tried;  // bins with equal load are interchangeable
        for (int b = 0; b < _inst.N; ++b) {
          if (_load[b] + r > _inst.B || !tried.insert(_load[b]).second) {
            continue;
          }
          _load[b] += r;
          _bin[_order[i]] = b;
          if (place(i + 1)) {
            return true;
          }
          _load[b] -= r;
        }
        _failed.insert(std::move(sorted));
        return false;
      }

      BinPackingInstance const&  _inst;
      std::vector<int>           _order;
      std::vector<int>           _bin;
      std::vector<int>           _load;
      std::set<std::vector<int>> _failed;
    };

  }  // namespace

  std::optional<Partition> solve_exact(BinPackingInstance const& inst) {
    inst.validate();
    if (!inst.exact) {
      throw Error("solve_exact needs an exact instance");
    }
    return ExactSolver(inst).run();
  }

  std::optional<Partition> solve(BinPackingInstance const& inst) {
    if (inst.exact) {
      return solve_exact(inst);
    }
    auto conv = to_exact(inst);
    if (!conv.feasible) {
      return std::nullopt;
    }
    auto part = solve_exact(conv.instance);
    if (!part) {
      return std::nullopt;
    }
    int const k = static_cast<int>(inst.items.size());
    for (auto& b : part->blocks) {
      std::erase_if(b, [&](int j) { return j > k; });
    }
    return canonical(std::move(*part));
  }

  StandardFormEquation to_equation(BinPackingInstance const& inst) {
    inst.validate();
    if (!inst.exact) {
      throw Error("to_equation needs an exact instance (see to_exact)");
    }
    auto rep = [](char c, int n) { return std::string(static_cast<std::size_t>(n), c); };
    StandardFormEquation sf;
    sf.alphabet   = Alphabet("ab");
    sf.orientable = true;
    sf.genus      = 0;
    for (int n : inst.items) {
      sf.coefficients.push_back(CyclicWord::parse("A" + rep('B', n) + "a" + rep('b', n)));
    }
    sf.d = CyclicWord::parse(rep('B', inst.B) + rep('A', inst.N) + rep('b', inst.B)
                             + rep('a', inst.N));
    sf.validate();
    return sf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ribbons and tiled discs
  ////////////////////////////////////////////////////////////////////////

  int Ribbon::width() const {
    return std::accumulate(params.begin(), params.end(), 0);
  }

  Ribbon build_ribbon(std::vector<int> params, std::vector<int> items) {
    if (params.empty()) {
      throw Error("a ribbon needs at least one face");
    }
    for (int n : params) {
      if (n < 1) {
        throw Error("face parameters must be positive");
      }
    }
    if (items.empty()) {
      items.assign(params.size(), 0);
    }
    if (items.size() != params.size()) {
      throw Error("one item tag per face is required");
    }
    return Ribbon{std::move(params), std::move(items)};
  }

  void TiledDisc::validate() const {
    std::vector<std::vector<std::pair<int, int>>> uses(letters.size());  // (owner, sign)
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      auto const& face = faces[f];
      int const   n    = face.param;
      if (n < 1 || static_cast<int>(face.boundary.size()) != 2 * n + 2) {
        throw Error("face " + std::to_string(f) + " does not have 2n+2 sides");
      }
      for (int k = 0; k < 2 * n + 2; ++k) {
        auto [e, s]   = face.boundary[k];
        char want     = (k == 0 || k == n + 1) ? 'a' : 'b';
        int  want_s   = (k <= n) ? -1 : 1;
        if (e < 0 || e >= static_cast<int>(letters.size()) || letters[e] != want
            || s != want_s) {
          throw Error("face " + std::to_string(f) + " does not read [a,b^n]");
        }
        uses[e].emplace_back(f, s);
      }
    }
    for (auto [e, s] : outer) {
      if (e < 0 || e >= static_cast<int>(letters.size())) {
        throw Error("outer boundary uses an unknown edge");
      }
      uses[e].emplace_back(-1, s);
    }
    for (std::size_t e = 0; e < uses.size(); ++e) {
      auto const& u = uses[e];
      if (u.size() != 2) {
        throw Error("edge " + std::to_string(e) + " is not used exactly twice");
      }
      bool const along_boundary = u[0].first < 0 || u[1].first < 0;
      if (u[0].first < 0 && u[1].first < 0) {
        throw Error("edge " + std::to_string(e) + " lies twice on the boundary");
      }
      // Interior edges are read in opposite directions by their two faces;
      // a boundary edge is read the same way by its face and the boundary.
      if (along_boundary ? u[0].second != u[1].second : u[0].second == u[1].second) {
        throw Error("edge " + std::to_string(e) + " is glued incoherently");
      }
    }
  }

  std::vector<SignedSymbol> TiledDisc::boundary_word() const {
    std::vector<SignedSymbol> out;
    for (auto [e, s] : outer) {
      out.push_back(SignedSymbol{std::string(1, letters[e]), s});
    }
    return out;
  }

  TiledDisc stack_ribbons(std::vector<Ribbon> const& rows) {
    if (rows.empty()) {
      throw Error("a stack needs at least one ribbon");
    }
    int const B = rows.front().width();
    for (auto const& r : rows) {
      if (r.params.empty() || r.width() != B || r.items.size() != r.params.size()) {
        throw Error("ribbons in a stack must be nonempty and of equal width");
      }
    }
    int const N = static_cast<int>(rows.size());
    TiledDisc td;
    auto edge = [&](char c) {
      td.letters.push_back(c);
      return static_cast<int>(td.letters.size()) - 1;
    };
    std::vector<std::vector<int>> seam(N + 1, std::vector<int>(B));
    for (auto& s : seam) {
      for (auto& e : s) {
        e = edge('b');
      }
    }
    std::vector<std::vector<int>> a_edges(N);
    for (int r = 0; r < N; ++r) {
      auto const& row = rows[r];
      for (std::size_t j = 0; j <= row.params.size(); ++j) {
        a_edges[r].push_back(edge('a'));
      }
      int col = 0;
      for (std::size_t j = 0; j < row.params.size(); ++j) {
        int const       n = row.params[j];
        TiledDisc::Face face;
        face.param = n;
        face.item  = row.items[j];
        face.boundary.emplace_back(a_edges[r][j], -1);
        for (int x = col; x < col + n; ++x) {
          face.boundary.emplace_back(seam[r][x], -1);
        }
        face.boundary.emplace_back(a_edges[r][j + 1], 1);
        for (int x = col + n - 1; x >= col; --x) {
          face.boundary.emplace_back(seam[r + 1][x], 1);
        }
        td.faces.push_back(std::move(face));
        col += n;
      }
    }
    for (int r = N - 1; r >= 0; --r) {
      td.outer.emplace_back(a_edges[r].front(), -1);
    }
    for (int x = 0; x < B; ++x) {
      td.outer.emplace_back(seam[0][x], -1);
    }
    for (int r = 0; r < N; ++r) {
      td.outer.emplace_back(a_edges[r].back(), 1);
    }
    for (int x = B - 1; x >= 0; --x) {
      td.outer.emplace_back(seam[N][x], 1);
    }
    return td;
  }

  namespace {

    std::vector<ATrack> tracks_of(int vertex_count, std::vector<std::pair<int, int>> const& edges,
                                  std::vector<int> const& vertex_names) {
      std::vector<std::vector<std::pair<int, int>>> adj(vertex_count);  // (other, edge)
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        adj[edges[i].first].emplace_back(edges[i].second, i);
        adj[edges[i].second].emplace_back(edges[i].first, i);
      }
      std::vector<bool>   seen(vertex_count, false);
      std::vector<ATrack> out;
      auto walk = [&](int start) {
        ATrack           t;
        std::vector<int> stack{start};
        std::set<int>    edge_set;
        seen[start] = true;
        // Depth-first, which for valency <= 2 visits a path in order.
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          t.vertices.push_back(vertex_names[v]);
          for (auto [w, e] : adj[v]) {
            edge_set.insert(e);
            if (!seen[w]) {
              seen[w] = true;
              stack.push_back(w);
            }
          }
        }
        t.faces.assign(edge_set.begin(), edge_set.end());
        t.circular = edge_set.size() >= t.vertices.size();
        return t;
      };
      // Start paths at an end so their vertices come out in order.
      for (int v = 0; v < vertex_count; ++v) {
        if (!seen[v] && adj[v].size() <= 1) {
          out.push_back(walk(v));
        }
      }
      for (int v = 0; v < vertex_count; ++v) {
        if (!seen[v]) {
          out.push_back(walk(v));
        }
      }
      return out;
    }

  }  // namespace

  std::vector<ATrack> a_pattern(TiledDisc const& td) {
    std::map<int, int> index;
    std::vector<int>   names;
    for (int e = 0; e < static_cast<int>(td.letters.size()); ++e) {
      if (td.letters[e] == 'a') {
        index[e] = static_cast<int>(names.size());
        names.push_back(e);
      }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto const& face : td.faces) {
      edges.emplace_back(index.at(face.boundary[0].first),
                         index.at(face.boundary[face.param + 1].first));
    }
    auto tracks = tracks_of(static_cast<int>(names.size()), edges, names);
    return tracks;  // faces are face indices since edges are listed per face
  }

  std::vector<ATrack> find_circular_tracks(std::vector<ATrack> const& tracks) {
    std::vector<ATrack> out;
    std::copy_if(tracks.begin(), tracks.end(), std::back_inserter(out),
                 [](ATrack const& t) { return t.circular; });
    return out;
  }

  std::vector<ATrack> find_circular_tracks(int vertex_count,
                                           std::vector<std::pair<int, int>> const& edges) {
    std::vector<int> names(vertex_count);
    std::iota(names.begin(), names.end(), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
        throw Error("graph edge refers to an unknown vertex");
      }
    }
    return find_circular_tracks(tracks_of(vertex_count, edges, names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Peeling
  ////////////////////////////////////////////////////////////////////////

  std::vector<Ribbon> peel_decomposition(TiledDisc const& td) {
    auto invalid = [](std::string const& why) { return Error("invalid tiling: " + why); };
    td.validate();

    int a_count = 0, b_count = 0;
    for (auto [e, s] : td.outer) {
      (td.letters[e] == 'a' ? a_count : b_count)++;
    }
    int const N = a_count / 2, B = b_count / 2;
    if (N < 1 || B < 1 || a_count % 2 || b_count % 2) {
      throw invalid("boundary is not [a^N, b^B]");
    }
    // Rotate the boundary to read a^-N b^-B a^N b^B.
    auto const& outer = td.outer;
    int const   len   = static_cast<int>(outer.size());
    auto        fits  = [&](int off) {
      for (int i = 0; i < len; ++i) {
        auto [e, s] = outer[(off + i) % len];
        char want   = (i < N || (i >= N + B && i < 2 * N + B)) ? 'a' : 'b';
        int  want_s = i < N + B ? -1 : 1;
        if (td.letters[e] != want || s != want_s) {
          return false;
        }
      }
      return true;
    };
    int offset = -1;
    for (int off = 0; off < len && offset < 0; ++off) {
      if (fits(off)) {
        offset = off;
      }
    }
    if (offset < 0) {
      throw invalid("boundary is not [a^N, b^B]");
    }
    auto side = [&](int from, int count) {
      std::vector<int> out;
      for (int i = from; i < from + count; ++i) {
        out.push_back(outer[(offset + i) % len].first);
      }
      return out;
    };
    std::vector<int> left   = side(0, N);         // bottom to top
    std::vector<int> top    = side(N, B);         // left to right
    std::vector<int> right  = side(N + B, N);     // top to bottom
    std::vector<int> bottom = side(2 * N + B, B); // right to left

    std::map<int, int> face_with_left;  // left a-edge -> face
    for (int f = 0; f < static_cast<int>(td.faces.size()); ++f) {
      face_with_left[td.faces[f].boundary[0].first] = f;
    }
    std::vector<bool>   used(td.faces.size(), false);
    std::vector<Ribbon> ribbons;
    for (int row = 0; row < N; ++row) {
      int              e = left.back();
      std::vector<int> faces;
      while (true) {
        auto it = face_with_left.find(e);
        if (it == face_with_left.end()) {
          throw invalid("a-track leaves the disc");
        }
        int f = it->second;
        if (used[f]) {
          throw invalid("a-track revisits a face");
        }
        used[f] = true;
        faces.push_back(f);
        e = td.faces[f].boundary[td.faces[f].param + 1].first;
        if (e == right.front()) {
          break;
        }
        if (std::find(right.begin(), right.end(), e) != right.end()
            || std::find(left.begin(), left.end(), e) != left.end()) {
          throw invalid("a-track ends on the wrong a-edge");
        }
      }
      Ribbon           ribbon;
      std::vector<int> ribbon_top, ribbon_bottom;
      for (int f : faces) {
        auto const& face = td.faces[f];
        ribbon.params.push_back(face.param);
        ribbon.items.push_back(face.item);
        for (int k = 1; k <= face.param; ++k) {
          ribbon_top.push_back(face.boundary[k].first);
        }
        for (int k = 2 * face.param + 1; k >= face.param + 2; --k) {
          ribbon_bottom.push_back(face.boundary[k].first);
        }
      }
      if (ribbon_top != top) {
        throw invalid("region above the a-track is not a ribbon");
      }
      ribbons.push_back(std::move(ribbon));
      top = std::move(ribbon_bottom);
      left.pop_back();
      right.erase(right.begin());
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      throw invalid("faces left over after peeling");
    }
    std::reverse(bottom.begin(), bottom.end());
    if (top != bottom) {
      throw invalid("last ribbon does not meet the bottom side");
    }
    return ribbons;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness translations
  ////////////////////////////////////////////////////////////////////////

  Certificate packing_to_certificate(BinPackingInstance const& inst, Partition const& part) {
    inst.validate();
    if (!inst.exact || !is_valid_partition(inst, part)) {
      throw Error("partition does not pack the instance exactly");
    }
    std::vector<Ribbon> rows;
    for (auto const& block : part.blocks) {
      std::vector<int> params;
      for (int j : block) {
        params.push_back(inst.items[j - 1]);
      }
      rows.push_back(build_ribbon(params, block));
    }
    TiledDisc td = stack_ribbons(rows);

    int const                              k = static_cast<int>(inst.items.size());
    std::vector<std::vector<SignedSymbol>> boundaries(k + 1);
    std::map<std::string, Word>            images;
    auto label = [](int e) { return "e" + std::to_string(e + 1); };
    for (int e = 0; e < static_cast<int>(td.letters.size()); ++e) {
      images[label(e)] = Word({Letter{td.letters[e], 1}});
    }
    for (auto const& face : td.faces) {
      for (auto [e, s] : face.boundary) {
        boundaries[face.item - 1].push_back(SignedSymbol{label(e), s});
      }
    }
    for (auto it = td.outer.rbegin(); it != td.outer.rend(); ++it) {
      boundaries[k].push_back(SignedSymbol{label(it->first), -it->second});
    }
    return consolidated_certificate(boundaries, images);
  }

  Partition certificate_to_packing(BinPackingInstance const& inst, Certificate const& cert) {
    StandardFormEquation const sf = to_equation(inst);
    Verdict                    v  = verify(sf, cert);
    if (!v.accepted) {
      throw Error(std::string("certificate is not accepted (") + condition_name(v.failed)
                  + ": " + v.detail + ")");
    }
    if (v.surfaces->component_count() != 1) {
      throw Error("certificate does not glue into a single sphere");
    }

    // Refine every edge into unit edges, numbered per (label, letter).
    TiledDisc                                     td;
    std::map<std::pair<std::string, std::size_t>, int> unit;
    auto refine = [&](std::vector<SignedSymbol> const& c) {
      std::vector<std::pair<int, int>> out;
      for (auto const& s : c) {
        Word const&       w = cert.images.at(s.name);
        std::size_t const L = w.size();
        for (std::size_t t = 0; t < L; ++t) {
          std::size_t const i = s.sign > 0 ? t : L - 1 - t;
          auto [it, fresh]    = unit.try_emplace({s.name, i}, static_cast<int>(td.letters.size()));
          if (fresh) {
            td.letters.push_back(w[i].gen);
          }
          out.emplace_back(it->second, s.sign * w[i].sign);
        }
      }
      return out;
    };
    int const k = static_cast<int>(inst.items.size());
    for (int j = 0; j < k; ++j) {
      auto reading = refine(cert.boundaries[j]);
      auto start   = std::find_if(reading.begin(), reading.end(), [&](auto const& x) {
        return td.letters[x.first] == 'a' && x.second < 0;
      });
      std::rotate(reading.begin(), start, reading.end());
      td.faces.push_back(TiledDisc::Face{inst.items[j], j + 1, std::move(reading)});
    }
    auto d_disc = refine(cert.boundaries[k]);
    for (auto it = d_disc.rbegin(); it != d_disc.rend(); ++it) {
      td.outer.emplace_back(it->first, -it->second);
    }

    Partition part;
    for (auto const& r : peel_decomposition(td)) {
      part.blocks.push_back(r.items);
    }
    part = canonical(std::move(part));
    if (!is_valid_partition(inst, part)) {
      throw Error("peeled ribbons do not form an exact packing");
    }
    return part;
  }

}  // namespace qfree
