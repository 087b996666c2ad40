// qfree: quadratic equations in free groups from the command line.
//
// Exit codes: 0 SAT / valid / yes, 1 UNSAT / invalid / no, 2 UNKNOWN,
// 3 usage or I/O error.  Results go to stdout (or --output) as JSON,
// diagnostics to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "qfree/json_io.hpp"

using namespace qfree;

namespace {

  constexpr int kYes = 0, kNo = 1, kUnknown = 2, kFailure = 3;

  struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string slurp(std::string const& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  json read_json(std::string const& path) {
    try {
      return json::parse(slurp(path));
    } catch (json::exception const& e) {
      throw Error(path + ": malformed JSON: " + e.what());
    }
  }

  struct Options {
    std::string output   = "-";
    std::string alphabet = "ab";
  };

  void emit(Options const& opt, json const& j) {
    if (opt.output == "-") {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream out(opt.output);
    if (!out) {
      throw IoError("cannot write " + opt.output);
    }
    out << j.dump(2) << "\n";
  }

  // A standard form, normalising raw input on the way.
  struct Loaded {
    StandardFormEquation       standard;
    std::optional<Normalization> normalization;
    std::optional<RawQuadraticEquation> raw;
  };

  Loaded load_equation(std::string const& path, Options const& opt) {
    AnyEquation any = read_equation(slurp(path), Alphabet(opt.alphabet));
    Loaded      out;
    if (auto* raw = std::get_if<RawQuadraticEquation>(&any)) {
      out.normalization = normalize(*raw);
      out.standard      = out.normalization->standard;
      out.raw           = *raw;
    } else {
      out.standard = std::get<StandardFormEquation>(any);
    }
    return out;
  }

  int cmd_normalize(std::string const& path, Options const& opt) {
    Loaded eq = load_equation(path, opt);
    json   j;
    j["standard"] = to_json(eq.standard);
    j["text"]     = eq.standard.str();
    j["chiBar"]   = reduced_euler_characteristic(eq.standard);
    if (eq.normalization) {
      j["backMap"]    = to_json(eq.normalization->back);
      j["forwardMap"] = to_json(eq.normalization->forward);
    }
    emit(opt, j);
    return kYes;
  }

  int cmd_verify(std::string const& eq_path, std::string const& cert_path,
                 Options const& opt) {
    Loaded      eq   = load_equation(eq_path, opt);
    Certificate cert = certificate_from_json(read_json(cert_path));
    Verdict     v    = verify(eq.standard, cert);
    json        j    = to_json(v);
    j["certificateSize"] = certificate_size(cert);
    emit(opt, j);
    return v.accepted ? kYes : kNo;
  }

  struct SolveFlags {
    std::optional<int>    max_n;
    std::optional<double> timeout;
    bool                  direct  = false;
    std::size_t           max_len = 3;
  };

  int cmd_solve(std::string const& path, SolveFlags const& flags, Options const& opt) {
    Loaded eq = load_equation(path, opt);
    json   j;
    j["standard"] = eq.standard.str();
    if (flags.direct) {
      DirectResult r = eq.raw ? direct_search(*eq.raw, flags.max_len)
                              : direct_search(eq.standard, flags.max_len);
      j["method"] = "direct";
      j["maxLen"] = flags.max_len;
      j.update(to_json(r));
      emit(opt, j);
      return r.decision == Decision::sat ? kYes : kUnknown;
    }
    SearchBudget budget;
    budget.max_n = flags.max_n;
    if (flags.timeout) {
      budget.timeout = std::chrono::milliseconds(static_cast<long>(*flags.timeout * 1000));
    }
    SearchResult r = search(eq.standard, budget);
    j["method"]    = "certificate-search";
    j["edgeBound"] = edge_bound(eq.standard);
    j.update(to_json(r));
    if (r.certificate) {
      j["certificateSize"] = certificate_size(*r.certificate);
    }
    emit(opt, j);
    switch (r.decision) {
      case Decision::sat: return kYes;
      case Decision::unsat: return kNo;
      case Decision::unknown: return kUnknown;
    }
    return kUnknown;
  }

  BinPackingInstance exact_or_padded(BinPackingInstance inst, bool& feasible) {
    feasible = true;
    if (inst.exact) {
      return inst;
    }
    auto conv = to_exact(inst);
    feasible  = conv.feasible;
    return conv.instance;
  }

  int cmd_binpack(std::string const& sub, std::vector<std::string> const& files,
                  Options const& opt) {
    auto need = [&](std::size_t n) {
      if (files.size() != n) {
        throw CLI::ValidationError("binpack " + sub,
                                   "expects " + std::to_string(n) + " file argument(s)");
      }
    };
    if (sub == "to-exact") {
      need(1);
      auto conv = to_exact(instance_from_json(read_json(files[0])));
      json j;
      j["feasible"] = conv.feasible;
      j["padding"]  = conv.padding;
      j["instance"] = conv.feasible ? to_json(conv.instance) : json(nullptr);
      emit(opt, j);
      return conv.feasible ? kYes : kNo;
    }
    if (sub == "solve") {
      need(1);
      auto part = solve(instance_from_json(read_json(files[0])));
      emit(opt, part ? to_json(*part) : json{{"blocks", nullptr}});
      return part ? kYes : kNo;
    }
    if (sub == "to-equation") {
      need(1);
      bool feasible = true;
      auto inst     = exact_or_padded(instance_from_json(read_json(files[0])), feasible);
      if (!feasible) {
        std::cerr << "qfree: items exceed N*B; no exact instance exists\n";
        emit(opt, json{{"infeasible", true}});
        return kNo;
      }
      emit(opt, to_json(to_equation(inst)));
      return kYes;
    }
    if (sub == "to-certificate") {
      if (files.size() != 1 && files.size() != 2) {
        need(2);
      }
      bool feasible = true;
      auto inst     = exact_or_padded(instance_from_json(read_json(files[0])), feasible);
      std::optional<Partition> part;
      if (files.size() == 2) {
        part = partition_from_json(read_json(files[1]));
      } else if (feasible) {
        part = solve_exact(inst);
      }
      if (!part) {
        std::cerr << "qfree: the instance has no exact packing\n";
        emit(opt, json{{"certificate", nullptr}});
        return kNo;
      }
      emit(opt, to_json(packing_to_certificate(inst, *part)));
      return kYes;
    }
    if (sub == "from-certificate") {
      need(2);
      bool feasible = true;
      auto inst     = exact_or_padded(instance_from_json(read_json(files[0])), feasible);
      auto cert     = certificate_from_json(read_json(files[1]));
      emit(opt, to_json(certificate_to_packing(inst, cert)));
      return kYes;
    }
    throw CLI::ValidationError("binpack", "unknown subcommand '" + sub + "'");
  }

  int cmd_random_instance(unsigned seed, int k, int max_item, int B, int N, Options const& opt) {
    std::mt19937                    rng(seed);
    std::uniform_int_distribution<> size(1, max_item);
    BinPackingInstance              inst;
    inst.B = B;
    inst.N = N;
    for (int j = 0; j < k; ++j) {
      inst.items.push_back(size(rng));
    }
    inst.exact = true;
    emit(opt, to_json(inst));
    return kYes;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic equations in free groups: normal forms, certificates, "
               "and the bin-packing reduction"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--output", opt.output, "Write JSON here instead of stdout");
  app.add_option("--alphabet", opt.alphabet, "Generators for text-grammar input")
      ->capture_default_str();

  std::string eq_path, cert_path;

  auto* normalize_cmd = app.add_subcommand("normalize", "Bring an equation to standard form");
  normalize_cmd->add_option("equation", eq_path, "Equation file, or - for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("equation", eq_path)->required();
  verify_cmd->add_option("certificate", cert_path)->required();

  SolveFlags flags;
  auto*      solve_cmd = app.add_subcommand("solve", "Decide solvability");
  solve_cmd->add_option("equation", eq_path)->required();
  solve_cmd->add_option("--max-n", flags.max_n, "Largest certificate to accept");
  solve_cmd->add_option("--timeout", flags.timeout, "Seconds before answering UNKNOWN");
  solve_cmd->add_flag("--direct", flags.direct, "Brute-force short assignments instead");
  solve_cmd->add_option("--max-len", flags.max_len, "Word length bound for --direct")
      ->capture_default_str();

  std::string              sub;
  std::vector<std::string> files;
  auto* binpack_cmd = app.add_subcommand("binpack", "Bin packing and the reduction");
  binpack_cmd
      ->add_option("action", sub,
                   "to-exact | solve | to-equation | to-certificate | from-certificate")
      ->required()
      ->check(CLI::IsMember(
          {"to-exact", "solve", "to-equation", "to-certificate", "from-certificate"}));
  binpack_cmd->add_option("files", files, "Instance file, then partition/certificate");

  unsigned seed = 0;
  int      k = 4, max_item = 3, B = 4, N = 2;
  auto*    random_cmd = app.add_subcommand("random-instance", "Emit a random exact instance");
  random_cmd->add_option("--seed", seed)->capture_default_str();
  random_cmd->add_option("--k", k)->capture_default_str();
  random_cmd->add_option("--max-item", max_item)->capture_default_str();
  random_cmd->add_option("--B", B)->capture_default_str();
  random_cmd->add_option("--N", N)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kFailure;
  }

  try {
    if (normalize_cmd->parsed()) {
      return cmd_normalize(eq_path, opt);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(eq_path, cert_path, opt);
    }
    if (solve_cmd->parsed()) {
      return cmd_solve(eq_path, flags, opt);
    }
    if (binpack_cmd->parsed()) {
      return cmd_binpack(sub, files, opt);
    }
    if (random_cmd->parsed()) {
      return cmd_random_instance(seed, k, max_item, B, N, opt);
    }
  } catch (CLI::ValidationError const& e) {
    std::cerr << "qfree: " << e.what() << "\n";
  } catch (IoError const& e) {
    std::cerr << "qfree: " << e.what() << "\n";
  } catch (std::exception const& e) {
    std::cerr << "qfree: " << e.what() << "\n";
  }
  return kFailure;
}
