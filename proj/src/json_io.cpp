#include "qfree/json_io.hpp"

#include <cctype>

namespace qfree {

  namespace {

    template <class F>
    auto guarded(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw Error(std::string("malformed ") + what + " JSON: " + e.what());
      }
    }

    json symbols_json(std::vector<SignedSymbol> const& w) {
      json out = json::array();
      for (auto const& s : w) {
        out.push_back(symbol_str(s));
      }
      return out;
    }

  }  // namespace

  SignedSymbol parse_symbol(std::string_view text) {
    SignedSymbol s;
    if (text.ends_with("^-1")) {
      s.sign = -1;
      text.remove_suffix(3);
    }
    if (text.empty()) {
      throw Error("empty symbol");
    }
    for (char c : text) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw Error("bad symbol '" + std::string(text) + "'");
      }
    }
    s.name = std::string(text);
    return s;
  }

  std::string symbol_str(SignedSymbol const& s) {
    return s.sign > 0 ? s.name : s.name + "^-1";
  }

  ////////////////////////////////////////////////////////////////////////
  // Equations
  ////////////////////////////////////////////////////////////////////////

  json to_json(StandardFormEquation const& sf) {
    json j;
    j["alphabet"]     = sf.alphabet.generators();
    j["orientable"]   = sf.orientable;
    j["genus"]        = sf.genus;
    j["coefficients"] = json::array();
    for (auto const& w : sf.coefficients) {
      j["coefficients"].push_back(w.str());
    }
    j["d"] = sf.d ? json(sf.d->str()) : json(nullptr);
    return j;
  }

  StandardFormEquation standard_form_from_json(json const& j) {
    return guarded("standard form", [&] {
      StandardFormEquation sf;
      sf.alphabet   = Alphabet(j.value("alphabet", std::string("ab")));
      sf.orientable = j.at("orientable").get<bool>();
      sf.genus      = j.at("genus").get<int>();
      if (j.contains("coefficients")) {
        for (auto const& w : j.at("coefficients")) {
          Word word = Word::parse(w.get<std::string>(), &sf.alphabet);
          if (!is_cyclically_reduced(word.letters())) {
            throw Error("coefficient \"" + word.str() + "\" is not cyclically reduced");
          }
          sf.coefficients.emplace_back(word);
        }
      }
      if (j.contains("d") && !j.at("d").is_null()) {
        Word word = Word::parse(j.at("d").get<std::string>(), &sf.alphabet);
        if (!is_cyclically_reduced(word.letters())) {
          throw Error("coefficient d = \"" + word.str() + "\" is not cyclically reduced");
        }
        sf.d = CyclicWord(word);
      }
      sf.validate();
      return sf;
    });
  }

  json to_json(RawQuadraticEquation const& eq) {
    json j;
    j["alphabet"] = eq.alphabet.generators();
    j["body"]     = json::array();
    for (auto const& t : eq.body) {
      j["body"].push_back(json::array({t.name, t.sign}));
    }
    return j;
  }

  RawQuadraticEquation raw_from_json(json const& j, Alphabet const& fallback) {
    return guarded("raw equation", [&] {
      Alphabet alphabet = j.contains("alphabet")
                              ? Alphabet(j.at("alphabet").get<std::string>())
                              : fallback;
      std::vector<std::pair<std::string, int>> body;
      for (auto const& t : j.at("body")) {
        body.emplace_back(t.at(0).get<std::string>(), t.at(1).get<int>());
      }
      return make_raw_equation(alphabet, body);
    });
  }

  AnyEquation read_equation(std::string_view text, Alphabet const& alphabet) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (json::exception const& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
      }
      if (j.contains("body")) {
        return raw_from_json(j, alphabet);
      }
      return standard_form_from_json(j);
    }
    return parse_equation(text, alphabet);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates and verdicts
  ////////////////////////////////////////////////////////////////////////

  json to_json(Certificate const& cert) {
    json j;
    j["variables"] = cert.variables;
    j["images"]    = json::object();
    for (auto const& [p, a] : cert.images) {
      j["images"][p] = a.str();
    }
    j["boundaries"] = json::array();
    for (auto const& b : cert.boundaries) {
      j["boundaries"].push_back(symbols_json(b));
    }
    return j;
  }

  Certificate certificate_from_json(json const& j) {
    return guarded("certificate", [&] {
      Certificate cert;
      for (auto const& [p, a] : j.at("images").items()) {
        cert.images[p] = Word::parse(a.get<std::string>());
      }
      cert.variables = j.value("variables", static_cast<int>(cert.images.size()));
      for (auto const& b : j.at("boundaries")) {
        std::vector<SignedSymbol> boundary;
        for (auto const& s : b) {
          boundary.push_back(parse_symbol(s.get<std::string>()));
        }
        cert.boundaries.push_back(std::move(boundary));
      }
      return cert;
    });
  }

  json to_json(SurfaceSummary const& s) {
    json j;
    j["componentCount"] = s.component_count();
    j["components"]     = json::array();
    for (auto const& c : s.components) {
      json cj;
      cj["discs"] = json::array();
      for (int d : c.discs) {
        cj["discs"].push_back(d + 1);
      }
      cj["eulerCharacteristic"] = c.euler_characteristic;
      cj["orientable"]          = c.orientable;
      j["components"].push_back(std::move(cj));
    }
    return j;
  }

  json to_json(Verdict const& v) {
    json j;
    j["accepted"]        = v.accepted;
    j["failedCondition"] = v.accepted ? json(nullptr) : json(condition_name(v.failed));
    j["failures"]        = json::array();
    for (auto c : v.failures) {
      j["failures"].push_back(condition_name(c));
    }
    j["detail"]   = v.detail;
    j["surfaces"] = v.surfaces ? to_json(*v.surfaces) : json(nullptr);
    return j;
  }

  json to_json(SearchResult const& r) {
    json j;
    j["decision"]    = decision_name(r.decision);
    j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    j["reason"]      = r.reason;
    j["stats"]       = {{"nodes", r.stats.nodes},
                        {"memoHits", r.stats.memo_hits},
                        {"memoSize", r.stats.memo_size}};
    return j;
  }

  json to_json(DirectResult const& r) {
    json j;
    j["decision"]   = decision_name(r.decision);
    j["assignment"] = r.assignment ? to_json(*r.assignment) : json(nullptr);
    j["tried"]      = r.tried;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bin packing
  ////////////////////////////////////////////////////////////////////////

  json to_json(BinPackingInstance const& inst) {
    json j;
    j["items"] = inst.items;
    j["B"]     = inst.B;
    j["N"]     = inst.N;
    j["exact"] = inst.exact;
    return j;
  }

  BinPackingInstance instance_from_json(json const& j) {
    return guarded("instance", [&] {
      BinPackingInstance inst;
      inst.items = j.at("items").get<std::vector<int>>();
      inst.B     = j.at("B").get<int>();
      inst.N     = j.at("N").get<int>();
      inst.exact = j.value("exact", true);
      inst.validate();
      return inst;
    });
  }

  json to_json(Partition const& part) {
    return json{{"blocks", part.blocks}};
  }

  Partition partition_from_json(json const& j) {
    return guarded("partition", [&] {
      return Partition{j.at("blocks").get<std::vector<std::vector<int>>>()};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Assignments and maps
  ////////////////////////////////////////////////////////////////////////

  json to_json(Assignment const& a) {
    json j = json::object();
    for (auto const& [name, w] : a) {
      j[name] = w.str();
    }
    return j;
  }

  Assignment assignment_from_json(json const& j, Alphabet const& alphabet) {
    return guarded("assignment", [&] {
      Assignment a;
      for (auto const& [name, w] : j.items()) {
        a[name] = Word::parse(w.get<std::string>(), &alphabet);
      }
      return a;
    });
  }

  json to_json(BackMap const& back) {
    json j = json::object();
    for (auto const& [name, tokens] : back.expressions) {
      j[name] = tokens_str(tokens);
    }
    return j;
  }

  json to_json(ForwardMap const& forward) {
    json j = json::object();
    for (auto const& [name, tokens] : forward.expressions) {
      j[name] = tokens_str(tokens);
    }
    return j;
  }

  json complex_dump(GluedComplex const& cx) {
    json j;
    j["discs"] = json::array();
    for (auto const& d : cx.discs()) {
      j["discs"].push_back(symbols_json(d.boundary));
    }
    j["components"] = json::array();
    j["chi"]        = json::array();
    j["orientable"] = json::array();
    for (int c = 0; c < static_cast<int>(cx.components().size()); ++c) {
      json discs = json::array();
      for (int d : cx.components()[c]) {
        discs.push_back(d + 1);
      }
      j["components"].push_back(std::move(discs));
      j["chi"].push_back(euler_characteristic_gb(cx, c));
      j["orientable"].push_back(orientability(cx, c).orientable);
    }
    return j;
  }

}  // namespace qfree
