// Command line front end: exact q-Schur products, generic products, the
// module-to-Schur maps, Hall polynomials, generic extensions, table export,
// and the verification suites.  All outputs are JSON on stdout; exit code 0
// on success, 1 when a verification fails, 2 on invalid input.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qschur/errors.hpp"
#include "qschur/genmul.hpp"
#include "qschur/json_io.hpp"
#include "qschur/verify.hpp"

namespace {

using qschur::Json;

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

qschur::MatrixIndex parse_matrix(const std::string& text, int n, int r) {
  const qschur::MatrixIndex a = qschur::matrix_from_json(Json::parse(text));
  if (a.n() != n)
    throw qschur::PreconditionViolated("matrix size disagrees with --n");
  if (a.sum() != r)
    throw qschur::PreconditionViolated("matrix entry sum disagrees with --r");
  return a;
}

qschur::Multisegment parse_multisegment(const std::string& text, int n) {
  const Json j = Json::parse(text);
  const qschur::Multisegment m =
      j.is_array() ? qschur::multisegment_from_triples(n, j)
                   : qschur::multisegment_from_json(j);
  if (m.n() != n)
    throw qschur::PreconditionViolated("multisegment size disagrees with --n");
  return m;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the q-Schur algebra S_q(n,r)"};
  int n = 0, r = 0, jobs = 1;
  std::vector<std::uint32_t> primes;
  std::string cache;
  app.add_option("--n", n, "matrix size (at least 2)")->required();
  app.add_option("--r", r, "entry sum (at least 1)")->required();
  app.add_option("--primes", primes,
                 "explicit counting primes, comma separated")
      ->delimiter(',');
  app.add_option("--cache", cache, "structure constant cache directory")
      ->envname("QSCHUR_CACHE");
  app.add_option("--jobs", jobs, "worker threads")->envname("QSCHUR_JOBS");
  app.require_subcommand(1);

  std::string arg_a, arg_b, arg_c;
  CLI::App* mul = app.add_subcommand("mul", "polynomial product e_A e_A2");
  mul->add_option("A", arg_a)->required();
  mul->add_option("A2", arg_b)->required();
  CLI::App* gmul = app.add_subcommand("gmul", "generic product e_A o e_A2");
  gmul->add_option("A", arg_a)->required();
  gmul->add_option("A2", arg_b)->required();
  CLI::App* theta_cmd = app.add_subcommand("theta", "theta(M) as an element");
  theta_cmd->add_option("M", arg_a)->required();
  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Gamma(M) as an element");
  gamma_cmd->add_option("M", arg_a)->required();
  CLI::App* hall_cmd =
      app.add_subcommand("hall", "Hall polynomial of X over (M, N)");
  hall_cmd->add_option("X", arg_a)->required();
  hall_cmd->add_option("M", arg_b)->required();
  hall_cmd->add_option("N", arg_c)->required();
  CLI::App* genext_cmd =
      app.add_subcommand("genext", "generic extension M * N");
  genext_cmd->add_option("M", arg_a)->required();
  genext_cmd->add_option("N", arg_b)->required();
  std::string table_kind, table_out;
  CLI::App* table_cmd =
      app.add_subcommand("table", "write a full multiplication table");
  table_cmd->add_option("kind", table_kind)
      ->required()
      ->check(CLI::IsMember({"schur", "generic", "zero"}));
  table_cmd->add_option("--out", table_out, "output file")->required();
  std::string suite;
  int dim_bound = 4, samples = 50;
  std::uint32_t seed = 20240801u;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a check suite");
  verify_cmd->add_option("SUITE", suite)->required();
  verify_cmd->add_option("--dim-bound", dim_bound,
                         "module dimension cap for the module suites");
  verify_cmd->add_option("--samples", samples, "cases for sampled suites");
  verify_cmd->add_option("--seed", seed, "seed for sampled suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (n < 2 || r < 1)
      throw qschur::PreconditionViolated("need --n >= 2 and --r >= 1");
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (!is_prime(primes[i]))
        throw qschur::PreconditionViolated("--primes entries must be prime");
      for (std::size_t j = i + 1; j < primes.size(); ++j)
        if (primes[i] == primes[j])
          throw qschur::PreconditionViolated("--primes entries must be distinct");
    }
    qschur::SchurOptions options{primes, cache, jobs};

    if (mul->parsed()) {
      qschur::SchurAlgebra algebra(n, r, options);
      emit(qschur::to_json(
          algebra.multiply(parse_matrix(arg_a, n, r), parse_matrix(arg_b, n, r))));
    } else if (gmul->parsed()) {
      qschur::HallAlgebra hall;
      const qschur::GenericProduct g = qschur::generic_multiply(
          parse_matrix(arg_a, n, r), parse_matrix(arg_b, n, r), hall);
      Json out;
      out["result"] = g.is_zero() ? Json("zero") : qschur::to_json(g.matrix());
      emit(out);
    } else if (theta_cmd->parsed() || gamma_cmd->parsed()) {
      emit(qschur::to_json(qschur::theta(parse_multisegment(arg_a, n), r)));
    } else if (hall_cmd->parsed()) {
      qschur::HallAlgebra hall;
      emit(qschur::to_json(hall.hall_polynomial(parse_multisegment(arg_a, n),
                                                parse_multisegment(arg_b, n),
                                                parse_multisegment(arg_c, n))));
    } else if (genext_cmd->parsed()) {
      qschur::HallAlgebra hall;
      emit(qschur::to_json(hall.generic_extension(
          parse_multisegment(arg_a, n), parse_multisegment(arg_b, n))));
    } else if (table_cmd->parsed()) {
      Json doc;
      doc["kind"] = table_kind;
      doc["n"] = n;
      doc["r"] = r;
      Json entries = Json::object();
      if (table_kind == "schur") {
        qschur::SchurAlgebra algebra(n, r, options);
        const auto all = qschur::all_matrices(n, r);
        for (const auto& a : all)
          for (const auto& b : all)
            entries[a.str() + "|" + b.str()] =
                qschur::to_json(algebra.multiply(a, b));
      } else if (table_kind == "generic") {
        qschur::HallAlgebra hall;
        const auto uppers = qschur::upper_triangular_matrices(n, r);
        for (const auto& a : uppers)
          for (const auto& b : uppers) {
            const qschur::GenericProduct g = qschur::generic_multiply(a, b, hall);
            Json cell;
            cell["result"] =
                g.is_zero() ? Json("zero") : qschur::to_json(g.matrix());
            entries[a.str() + "|" + b.str()] = std::move(cell);
          }
      } else {
        qschur::SchurAlgebra algebra(n, r, options);
        std::vector<qschur::MatrixIndex> stricts;
        for (int s = 0; s <= r; ++s)
          for (const auto& a : qschur::strictly_upper_matrices(n, s))
            stricts.push_back(a);
        for (const auto& a : stricts)
          for (const auto& b : stricts) {
            const qschur::SchurElement product =
                qschur::specialize0(algebra.multiply(
                    qschur::l_element(qschur::Multisegment::from_matrix(a), r),
                    qschur::l_element(qschur::Multisegment::from_matrix(b), r)));
            entries[a.str() + "|" + b.str()] = qschur::to_json(product);
          }
      }
      const std::size_t count = entries.size();
      doc["entries"] = std::move(entries);
      qschur::write_json_file(table_out, doc);
      Json summary;
      summary["written"] = table_out;
      summary["entries"] = count;
      emit(summary);
    } else if (verify_cmd->parsed()) {
      qschur::VerifyOptions vopt;
      vopt.n = n;
      vopt.r = r;
      vopt.dim_bound = dim_bound;
      vopt.samples = samples;
      vopt.seed = seed;
      vopt.jobs = jobs;
      vopt.primes = primes;
      vopt.cache_dir = cache;
      const qschur::VerifyReport report = qschur::verify_suite(suite, vopt);
      emit(report.to_json());
      return report.passed() ? 0 : 1;
    }
    return 0;
  } catch (const qschur::PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qschur::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qschur::DimVectorMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qschur::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qschur::Error& e) {
    // Remaining domain errors all report a failed mathematical check
    // (interpolation, oracle, or bookkeeping assertions).
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  }
}
