// JSON encodings used by the command-line tool and the tests.
//
//   standard form  {"alphabet":"ab","orientable":true,"genus":0,
//                   "coefficients":["ab"],"d":"BA"}
//   raw equation   {"alphabet":"ab","body":[["x",1],["a",1],["x",-1]]}
//   certificate    {"variables":2,"images":{"p1":"a","p2":"b"},
//                   "boundaries":[["p1","p2"],["p2^-1","p1^-1"]]}
//   instance       {"items":[2,2,1,1],"B":3,"N":2,"exact":true}
//   partition      {"blocks":[[1,3],[2,4]]}

#ifndef QFREE_JSON_IO_HPP_
#define QFREE_JSON_IO_HPP_

#include <string_view>
#include <variant>

#include <json.hpp>

#include "qfree/certificates.hpp"
#include "qfree/reduction.hpp"

namespace qfree {

  using json = nlohmann::ordered_json;

  json                 to_json(StandardFormEquation const& sf);
  StandardFormEquation standard_form_from_json(json const& j);

  json                 to_json(RawQuadraticEquation const& eq);
  RawQuadraticEquation raw_from_json(json const& j, Alphabet const& fallback);

  json        to_json(Certificate const& cert);
  Certificate certificate_from_json(json const& j);

  json to_json(Verdict const& v);
  json to_json(SurfaceSummary const& s);
  json to_json(SearchResult const& r);
  json to_json(DirectResult const& r);

  json               to_json(BinPackingInstance const& inst);
  BinPackingInstance instance_from_json(json const& j);

  json      to_json(Partition const& part);
  Partition partition_from_json(json const& j);

  json       to_json(Assignment const& a);
  Assignment assignment_from_json(json const& j, Alphabet const& alphabet);

  json to_json(BackMap const& back);
  json to_json(ForwardMap const& forward);

  // {"discs","components","chi","orientable"}
  json complex_dump(GluedComplex const& cx);

  // "p3" / "p3^-1"
  SignedSymbol parse_symbol(std::string_view text);
  std::string  symbol_str(SignedSymbol const& s);

  using AnyEquation = std::variant<RawQuadraticEquation, StandardFormEquation>;

  // JSON when the first non-blank character is '{', otherwise the text
  // grammar "x a x^-1 b = 1".  JSON with "body" is raw, otherwise standard.
  AnyEquation read_equation(std::string_view text, Alphabet const& alphabet);

}  // namespace qfree

#endif  // QFREE_JSON_IO_HPP_
