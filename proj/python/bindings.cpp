// JSON strings in and out; the Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "qfree/json_io.hpp"

namespace py = pybind11;
using namespace qfree;

namespace {

  StandardFormEquation standard_of(std::string const& text, std::string const& alphabet) {
    auto any = read_equation(text, Alphabet(alphabet));
    if (auto* raw = std::get_if<RawQuadraticEquation>(&any)) {
      return normalize(*raw).standard;
    }
    return std::get<StandardFormEquation>(any);
  }

  std::string normalize_json(std::string const& text, std::string const& alphabet) {
    auto any = read_equation(text, Alphabet(alphabet));
    json j;
    if (auto* raw = std::get_if<RawQuadraticEquation>(&any)) {
      auto nf         = normalize(*raw);
      j["standard"]   = to_json(nf.standard);
      j["text"]       = nf.standard.str();
      j["chiBar"]     = reduced_euler_characteristic(nf.standard);
      j["backMap"]    = to_json(nf.back);
      j["forwardMap"] = to_json(nf.forward);
    } else {
      auto const& sf = std::get<StandardFormEquation>(any);
      j["standard"]  = to_json(sf);
      j["text"]      = sf.str();
      j["chiBar"]    = reduced_euler_characteristic(sf);
    }
    return j.dump();
  }

  std::string verify_json(std::string const& equation, std::string const& certificate,
                          std::string const& alphabet) {
    auto sf   = standard_of(equation, alphabet);
    auto cert = certificate_from_json(json::parse(certificate));
    auto j    = to_json(verify(sf, cert));
    j["certificateSize"] = certificate_size(cert);
    return j.dump();
  }

  std::string solve_json(std::string const& equation, std::string const& alphabet,
                         std::optional<int> max_n, std::optional<double> timeout,
                         std::optional<long> max_nodes) {
    auto         sf = standard_of(equation, alphabet);
    SearchBudget budget;
    budget.max_n     = max_n;
    budget.max_nodes = max_nodes;
    if (timeout) {
      budget.timeout = std::chrono::milliseconds(static_cast<long>(*timeout * 1000));
    }
    SearchResult r;
    {
      py::gil_scoped_release release;
      r = search(sf, budget);
    }
    return to_json(r).dump();
  }

  std::string direct_json(std::string const& equation, std::string const& alphabet,
                          std::size_t max_len) {
    auto any = read_equation(equation, Alphabet(alphabet));
    auto r   = std::visit([&](auto const& eq) { return direct_search(eq, max_len); }, any);
    return to_json(r).dump();
  }

  BinPackingInstance instance_of(std::string const& text) {
    return instance_from_json(json::parse(text));
  }

}  // namespace

PYBIND11_MODULE(_qfree, m) {
  m.doc() = "Quadratic equations in free groups";

  static py::exception<Error> error(m, "QfreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      error(e.what());
    } catch (json::exception const& e) {
      error(e.what());
    }
  });

  m.def("normalize", &normalize_json, py::arg("equation"), py::arg("alphabet") = "ab");
  m.def("verify", &verify_json, py::arg("equation"), py::arg("certificate"),
        py::arg("alphabet") = "ab");
  m.def("solve", &solve_json, py::arg("equation"), py::arg("alphabet") = "ab",
        py::arg("max_n") = py::none(), py::arg("timeout") = py::none(),
        py::arg("max_nodes") = py::none());
  m.def("direct_search", &direct_json, py::arg("equation"), py::arg("alphabet") = "ab",
        py::arg("max_len") = 3);

  m.def("binpack_solve", [](std::string const& inst) {
    auto part = solve(instance_of(inst));
    return part ? to_json(*part).dump() : json{{"blocks", nullptr}}.dump();
  });
  m.def("binpack_to_exact", [](std::string const& inst) {
    auto conv = to_exact(instance_of(inst));
    return json{{"feasible", conv.feasible},
                {"padding", conv.padding},
                {"instance", conv.feasible ? to_json(conv.instance) : json(nullptr)}}
        .dump();
  });
  m.def("to_equation", [](std::string const& inst) {
    return to_json(to_equation(instance_of(inst))).dump();
  });
  m.def("packing_to_certificate", [](std::string const& inst, std::string const& part) {
    return to_json(packing_to_certificate(instance_of(inst),
                                          partition_from_json(json::parse(part))))
        .dump();
  });
  m.def("certificate_to_packing", [](std::string const& inst, std::string const& cert) {
    return to_json(certificate_to_packing(instance_of(inst),
                                          certificate_from_json(json::parse(cert))))
        .dump();
  });
}
