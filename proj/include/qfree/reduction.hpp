// Exact bin packing and its encoding as a genus-0 quadratic equation
//
//   prod_j z_j^-1 [a, b^n_j] z_j  =  [a^N, b^B]
//
// together with the tiled discs that translate packings into certificates
// and back.
//
// Tiled discs are drawn with a-edges pointing down and b-edges pointing
// left, so an [a,b^n]-disc read clockwise from its bottom-left corner is
//   a^-1 (left side) b^-n (top, left to right) a (right side) b^n (bottom).

#ifndef QFREE_REDUCTION_HPP_
#define QFREE_REDUCTION_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "qfree/certificates.hpp"

namespace qfree {

  struct BinPackingInstance {
    std::vector<int> items;
    int              B     = 1;  // bin capacity
    int              N     = 1;  // bin count
    bool             exact = true;

    void validate() const;
    friend bool operator==(BinPackingInstance const&, BinPackingInstance const&) = default;
  };

  // Blocks of 1-based item indices.
  struct Partition {
    std::vector<std::vector<int>> blocks;
    friend bool operator==(Partition const&, Partition const&) = default;
  };

  // Disjoint blocks covering every item, N of them, each summing to B (at
  // most B for non-exact instances).
  bool is_valid_partition(BinPackingInstance const& inst, Partition const& part);

  // Sorts each block and orders blocks by their smallest index.
  Partition canonical(Partition part);

  struct ExactConversion {
    bool               feasible = true;  // false when the items overflow N B
    int                padding  = 0;
    BinPackingInstance instance;
  };
  // Pads with N B - sum r_j unit items.
  ExactConversion to_exact(BinPackingInstance const& inst);

  std::optional<Partition> solve_exact(BinPackingInstance const& inst);
  // Either kind of instance; non-exact ones go through to_exact.
  std::optional<Partition> solve(BinPackingInstance const& inst);

  StandardFormEquation to_equation(BinPackingInstance const& inst);

  struct Ribbon {
    std::vector<int> params;  // face parameters, left to right
    std::vector<int> items;   // 1-based item per face, 0 if untagged

    int width() const;
    friend bool operator==(Ribbon const&, Ribbon const&) = default;
  };
  Ribbon build_ribbon(std::vector<int> params, std::vector<int> items = {});

  struct TiledDisc {
    struct Face {
      int param = 1;
      int item  = 0;
      // Clockwise from the bottom-left corner, so it reads a^-1 b^-n a b^n.
      std::vector<std::pair<int, int>> boundary;  // (edge, sign)
    };
    std::vector<char>                letters;  // per edge: 'a' or 'b'
    std::vector<Face>                faces;
    std::vector<std::pair<int, int>> outer;  // clockwise

    // Throws Error unless faces read [a,b^n] from their left a-edge and
    // every edge is used twice, coherently.
    void validate() const;
    std::vector<SignedSymbol> boundary_word() const;  // outer, as letters "a"/"b"
  };

  // rows[0] is the top ribbon; all rows must have the same width.
  TiledDisc stack_ribbons(std::vector<Ribbon> const& rows);

  struct ATrack {
    std::vector<int> vertices;  // a-edges
    std::vector<int> faces;
    bool             circular = false;
  };
  std::vector<ATrack> a_pattern(TiledDisc const& td);
  std::vector<ATrack> find_circular_tracks(std::vector<ATrack> const& tracks);
  // For an arbitrary graph: every component containing a cycle.
  std::vector<ATrack> find_circular_tracks(int vertex_count,
                                           std::vector<std::pair<int, int>> const& edges);

  // Ribbons from top to bottom; throws Error("invalid tiling: ...") when the
  // disc is not a stack of ribbons with boundary [a^N, b^B].
  std::vector<Ribbon> peel_decomposition(TiledDisc const& td);

  Certificate packing_to_certificate(BinPackingInstance const& inst, Partition const& part);
  Partition   certificate_to_packing(BinPackingInstance const& inst, Certificate const& cert);

}  // namespace qfree

#endif  // QFREE_REDUCTION_HPP_
