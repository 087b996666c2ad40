// Certificates of solvability for standard-form equations, their verifier,
// and two decision procedures: an exhaustive certificate search and a
// brute-force search over short assignments.
//
// A certificate is a set of variables p1..pn with nonempty images and one
// boundary word Ci over the p's per coefficient.  It is accepted when
//
//   (ii)   each p occurs exactly twice over all Ci, and images are nonempty;
//   bound  n <= max(3 (m - chi_bar), 1);
//   (iv)   psi(Ci) reads a rotation of wi exactly (of d for the last disc);
//   (v)    for orientable equations, every p occurs once with each sign;
//   (iii)  the discs glue into surfaces S0..Sl whose Euler characteristics
//          satisfy  sum chi(Si) - 2 l >= chi_bar  (with orientability rules
//          for the non-orientable case, see verify()).

#ifndef QFREE_CERTIFICATES_HPP_
#define QFREE_CERTIFICATES_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qfree/equations.hpp"
#include "qfree/surfaces.hpp"

namespace qfree {

  struct Certificate {
    int                                    variables = 0;  // declared n
    std::map<std::string, Word>            images;
    std::vector<std::vector<SignedSymbol>> boundaries;

    int n() const noexcept {
      return variables;
    }
    friend bool operator==(Certificate const&, Certificate const&) = default;
  };

  enum class Condition { none, ii, bound_n, iii, iv, v };

  char const* condition_name(Condition c) noexcept;

  struct Verdict {
    bool                          accepted = false;
    Condition                     failed   = Condition::none;  // first in check order
    std::vector<Condition>        failures;  // every failing condition that could be evaluated
    std::string                   detail;
    std::optional<SurfaceSummary> surfaces;
  };

  // The edge bound enforced by verify(): max(3 (m - chi_bar), 1).  The
  // unrounded 3 (m - chi_bar) is unattainable by single-edge spheres and
  // projective planes.
  int edge_bound(StandardFormEquation const& sf) noexcept;
  int literal_edge_bound(StandardFormEquation const& sf) noexcept;

  // Checks conditions in the order ii, bound, iv, v, iii.  For
  // non-orientable equations, (iii) holds if some component is
  // non-orientable and sum chi - 2l >= chi_bar, or all are orientable and
  // sum chi - 2l >= chi_bar + 1.
  Verdict verify(StandardFormEquation const& sf, Certificate const& cert);

  // sum |Ci| + sum |a_j| + n.
  long certificate_size(Certificate const& cert);

  // Builds a certificate from boundaries over edges with the given images,
  // merging edges at degree-two vertices and renaming them p1, p2, ...
  Certificate consolidated_certificate(std::vector<std::vector<SignedSymbol>> const& boundaries,
                                       std::map<std::string, Word> const& images);

  // Glues the certificate's boundaries (throws Error if that is not
  // possible).
  GluedComplex certificate_complex(Certificate const& cert);

  enum class Decision { sat, unsat, unknown };

  char const* decision_name(Decision d) noexcept;

  struct SearchBudget {
    std::optional<long>                      max_nodes;
    std::optional<std::chrono::milliseconds> timeout;
    // Only accept certificates with at most this many variables; below
    // edge_bound() an exhausted search answers UNKNOWN rather than UNSAT.
    std::optional<int> max_n;
  };

  struct SearchStats {
    long nodes      = 0;
    long memo_hits  = 0;
    long memo_size  = 0;
  };

  struct SearchResult {
    Decision                   decision = Decision::unknown;
    std::optional<Certificate> certificate;
    SearchStats                stats;
    std::string                reason;
  };

  // Exhaustive search for a certificate.  An equation without coefficients
  // is answered SAT with the empty certificate.
  SearchResult search(StandardFormEquation const& sf, SearchBudget const& budget = {});

  struct DirectResult {
    Decision                  decision = Decision::unknown;  // sat or unknown
    std::optional<Assignment> assignment;
    long                      tried = 0;
  };

  // Tries every assignment of freely reduced words of length <= max_len.
  // `tried` counts evaluated half-assignments (the body is split in two).
  DirectResult direct_search(RawQuadraticEquation const& eq, std::size_t max_len);
  DirectResult direct_search(StandardFormEquation const& sf, std::size_t max_len);

}  // namespace qfree

#endif  // QFREE_CERTIFICATES_HPP_
