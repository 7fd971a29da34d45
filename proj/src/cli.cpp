#include "butson/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "butson/errors.hpp"
#include "butson/matrix_io.hpp"
#include "butson/morphism.hpp"

namespace butson::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

BhMatrix load(const std::string& path, Streams io) {
  if (path == "-") return read_matrix(io.in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  try {
    return read_matrix(file);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

// Nothing is written until the matrix exists, so failures leave no file.
int emit(const BhMatrix& m, const std::string& output, Streams io) {
  if (output.empty() || output == "-") {
    write_matrix(io.out, m);
    return kOk;
  }
  std::ofstream file(output);
  if (!file) {
    io.err << "error: cannot write '" << output << "'\n";
    return kUsage;
  }
  write_matrix(file, m);
  return kOk;
}

std::string describe(const VerifyReport& report) {
  if (report.valid()) return "VALID";
  return "INVALID witness=(" + std::to_string(report.witness->row_i) + "," +
         std::to_string(report.witness->row_j) + ")";
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};

  CLI::App app{"Construct, reduce and verify Butson-Hadamard matrices", "butson"};
  app.require_subcommand(1);

  std::string output;

  auto* gen = app.add_subcommand("gen", "Generate a matrix");
  gen->require_subcommand(1);
  int order = 0;
  auto* gen_fourier = gen->add_subcommand("fourier", "Fourier matrix F_m");
  gen_fourier->add_option("--order", order, "Order m")->required()->check(CLI::Range(1, kMaxMatrixOrder));
  gen_fourier->add_option("-o,--output", output, "Output file (default stdout)");
  std::string kron_a;
  std::string kron_b;
  auto* gen_kron = gen->add_subcommand("kron", "Kronecker product A (x) B");
  gen_kron->add_option("a", kron_a, "Matrix file A")->required();
  gen_kron->add_option("b", kron_b, "Matrix file B")->required();
  gen_kron->add_option("-o,--output", output, "Output file (default stdout)");

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Exact Gram check of H H^* = n I");
  verify_cmd->add_option("file", verify_file, "Matrix file")->required();

  std::string reduce_file;
  int prime = 0;
  int factor = 0;
  std::string witness_file;
  bool check = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "BH(n,k) -> BH(pn,k/p) or BH(mn,k/m)");
  reduce_cmd->add_option("file", reduce_file, "Matrix file")->required();
  auto* prime_opt = reduce_cmd->add_option("--prime", prime, "Single step with prime p (p^2 | k)");
  auto* factor_opt = reduce_cmd->add_option("--factor", factor, "Remove factor m from k");
  prime_opt->excludes(factor_opt);
  reduce_cmd->add_option("--witness", witness_file, "Matrix C in BH(p,p) (default F_p)")->excludes(factor_opt);
  reduce_cmd->add_flag("--check", check, "Re-verify the result exactly");
  reduce_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string info_file;
  auto* info_cmd = app.add_subcommand("info", "Order, root order and reachable targets");
  info_cmd->add_option("file", info_file, "Matrix file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*reduce_cmd && prime_opt->count() == 0 && factor_opt->count() == 0) {
      throw CLI::RequiredError("--prime or --factor");
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_fourier) return emit(fourier(order), output, io);
    if (*gen_kron) return emit(kronecker(load(kron_a, io), load(kron_b, io)), output, io);

    if (*verify_cmd) {
      const BhMatrix m = load(verify_file, io);
      const VerifyReport report = verify(m);
      if (!report.valid()) {
        out << describe(report) << '\n';
        return kInvalid;
      }
      out << "VALID BH(" << m.order() << ',' << m.root_order() << ")\n";
      return kOk;
    }

    if (*reduce_cmd) {
      const BhMatrix h = load(reduce_file, io);
      std::optional<BhMatrix> c;
      if (!witness_file.empty()) c = load(witness_file, io);
      const BhMatrix result = factor_opt->count() ? reduce_full(h, factor) : reduce_once(h, prime, c);
      if (check) {
        const VerifyReport report = verify(result);
        if (!report.valid()) {
          err << "check failed: " << describe(report) << '\n';
          return kInvalid;
        }
      }
      return emit(result, output, io);
    }

    if (*info_cmd) {
      const BhMatrix m = load(info_file, io);
      out << "order " << m.order() << '\n' << "root_order " << m.root_order() << '\n';
      for (const auto& target : reachable_targets(m.order(), m.root_order())) {
        out << "target factor=" << target.factor << " BH(" << target.order << ',' << target.root_order
            << ")\n";
      }
      return kOk;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace butson::cli
