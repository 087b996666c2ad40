// Closed surfaces glued from polygonal discs.
//
// Each disc has a boundary read clockwise as a cyclic sequence of labeled,
// directed edges p^+1 / p^-1.  Every label occurs exactly twice over all
// boundaries and the two occurrences are glued respecting direction.
//
// Corner k of a disc with N sides sits just before boundary position k; the
// occurrence at position k runs from corner k to corner k+1 (mod N).

#ifndef QFREE_SURFACES_HPP_
#define QFREE_SURFACES_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qfree/words.hpp"

namespace qfree {

  using Rational = boost::multiprecision::cpp_rational;

  struct Disc {
    std::vector<SignedSymbol> boundary;

    std::size_t sides() const noexcept {
      return boundary.size();
    }
  };

  struct Occurrence {
    int disc     = 0;
    int position = 0;
    friend bool operator==(Occurrence const&, Occurrence const&) = default;
  };

  class GluedComplex {
   public:
    GluedComplex() = default;
    // Throws Error on an empty disc or a label not occurring exactly twice.
    explicit GluedComplex(std::vector<Disc> discs);
    static GluedComplex build(std::vector<std::vector<SignedSymbol>> const& boundaries);

    std::vector<Disc> const& discs() const noexcept {
      return _discs;
    }
    // Labels in ascending order.
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::pair<Occurrence, Occurrence> const& occurrences(std::string const& label) const;
    SignedSymbol const& at(Occurrence o) const {
      return _discs[o.disc].boundary[o.position];
    }

    int vertex_count() const noexcept {
      return _vertex_count;
    }
    int vertex_of(int disc, int corner) const;
    // Number of corners identified into vertex v.
    int vertex_degree(int v) const {
      return _vertex_degree[v];
    }

    // Discs grouped by connectivity, each group ascending, groups ordered by
    // their smallest disc.
    std::vector<std::vector<int>> const& components() const noexcept {
      return _components;
    }
    int component_of(int disc) const {
      return _component_of[disc];
    }

   private:
    std::vector<Disc>                                        _discs;
    std::vector<std::string>                                 _labels;
    std::map<std::string, std::pair<Occurrence, Occurrence>> _pairs;
    std::vector<std::size_t>                                 _corner_base;
    std::vector<int>                                         _vertex;  // per corner slot
    std::vector<int>                                         _vertex_degree;
    int                                                      _vertex_count = 0;
    std::vector<std::vector<int>>                            _components;
    std::vector<int>                                         _component_of;
  };

  // Angle (in units of pi) of every corner of an N-gon: (N - 2) / N.
  Rational corner_angle(std::size_t sides);

  // Combinatorial Gauss-Bonnet; throws std::logic_error if the curvature
  // total is not an integer multiple of 2 pi.
  int euler_characteristic_gb(GluedComplex const& cx, int component);
  int euler_characteristic_vef(GluedComplex const& cx, int component);

  struct Orientability {
    bool orientable = true;
    // Per disc of the complex: +1 / -1 on the component, 0 elsewhere.
    // Meaningful only when orientable.
    std::vector<int> signs;
    // First label (ascending) whose gluing breaks parity.
    std::optional<std::string> violating_label;
  };
  Orientability orientability(GluedComplex const& cx, int component);

  // Every label occurs once with exponent +1 and once with -1.
  bool coherent_clockwise(GluedComplex const& cx);

  struct SurfaceSummary {
    struct Component {
      std::vector<int> discs;
      int              euler_characteristic = 0;
      bool             orientable           = true;
    };
    std::vector<Component> components;

    int component_count() const noexcept {
      return static_cast<int>(components.size());
    }
  };
  SurfaceSummary summarize(GluedComplex const& cx);

  struct Consolidation {
    GluedComplex complex;
    // Every label of the result as a product of signed input labels.
    std::map<std::string, std::vector<SignedSymbol>> composition;
  };
  // Repeatedly merges the two distinct edges meeting at a vertex of degree
  // two.  Result labels are renamed `prefix`1, `prefix`2, ... in order of
  // first appearance.
  Consolidation consolidate(GluedComplex const& cx, std::string const& prefix = "p");

}  // namespace qfree

#endif  // QFREE_SURFACES_HPP_
