#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dhyp/commands.hpp"
#include "dhyp/fiber.hpp"
#include "dhyp/fp.hpp"
#include "dhyp/grading.hpp"
#include "dhyp/pencilmap.hpp"
#include "dhyp/qcomb.hpp"
#include "dhyp/weylpair.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<long long>>;

dhyp::FpMat mat_from_rows(std::uint64_t p, const Rows& rows) {
  int n = static_cast<int>(rows.size());
  if (n == 0) throw py::value_error("matrix must be non-empty");
  dhyp::FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n) {
      throw py::value_error("matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      long long v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      long long red = v % static_cast<long long>(p);
      if (red < 0) red += static_cast<long long>(p);
      m.at(i, j) = static_cast<std::uint64_t>(red);
    }
  }
  return m;
}

dhyp::MatrixTuple tuple_from_rows(std::uint64_t p, const std::vector<Rows>& mats) {
  if (mats.empty()) throw py::value_error("tuple must contain at least one matrix");
  std::vector<dhyp::FpMat> out;
  int n = static_cast<int>(mats.front().size());
  for (const Rows& rows : mats) {
    dhyp::FpMat m = mat_from_rows(p, rows);
    if (m.rows() != n) throw py::value_error("all matrices must share one size");
    out.push_back(std::move(m));
  }
  return dhyp::make_tuple(p, n, std::move(out));
}

Rows mat_to_rows(const dhyp::FpMat& m) {
  Rows rows(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      rows[static_cast<size_t>(i)].push_back(static_cast<long long>(m.at(i, j)));
    }
  }
  return rows;
}

dhyp::QContext context_for(int n, std::optional<std::uint64_t> prime) {
  std::uint64_t p = prime ? *prime : dhyp::find_prime(n, true);
  return dhyp::QContext(dhyp::FieldCtx(p, n, dhyp::primitive_root_of_unity(p, n)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic checks for the characteristic-polynomial map on matrix tuples";

  m.def("find_prime", &dhyp::find_prime, py::arg("n"), py::arg("with_root") = false,
        "Smallest prime p > n, optionally also requiring n | p - 1.");

  m.def("primitive_root", &dhyp::primitive_root_of_unity, py::arg("p"), py::arg("n"),
        "Smallest residue of multiplicative order exactly n mod p.");

  m.def(
      "char_coeffs",
      [](std::uint64_t p, const std::vector<Rows>& mats) {
        dhyp::MatrixTuple A = tuple_from_rows(p, mats);
        dhyp::CoeffVector cv = dhyp::char_coeffs(A);
        py::dict out;
        py::tuple lead(static_cast<size_t>(cv.r) + 1);
        lead[0] = cv.n;
        for (int k = 1; k <= cv.r; ++k) lead[static_cast<size_t>(k)] = 0;
        out[lead] = 1;
        for (size_t k = 0; k < cv.indices.size(); ++k) {
          py::tuple idx(cv.indices[k].size());
          for (size_t i = 0; i < cv.indices[k].size(); ++i) idx[i] = cv.indices[k][i];
          out[idx] = cv.values[k];
        }
        return out;
      },
      py::arg("p"), py::arg("matrices"),
      "Coefficients of det(x0 I + sum x_m A_m) keyed by exponent tuple, leading term included.");

  m.def(
      "jacobian_rank",
      [](std::uint64_t p, const std::vector<Rows>& mats) {
        return dhyp::jacobian(tuple_from_rows(p, mats)).rank();
      },
      py::arg("p"), py::arg("matrices"),
      "Rank of the differential of the coefficient map at the given tuple.");

  m.def(
      "kernel_basis",
      [](std::uint64_t p, const std::vector<Rows>& mats) {
        dhyp::MatrixTuple A = tuple_from_rows(p, mats);
        std::vector<dhyp::MatrixTuple> ker =
            dhyp::kernel(dhyp::jacobian(A), p, A.n, A.r());
        std::vector<std::vector<Rows>> out;
        for (const dhyp::MatrixTuple& t : ker) {
          std::vector<Rows> slots;
          for (const dhyp::FpMat& m2 : t.mats) slots.push_back(mat_to_rows(m2));
          out.push_back(std::move(slots));
        }
        return out;
      },
      py::arg("p"), py::arg("matrices"),
      "Basis of the kernel of the differential, one matrix tuple per basis vector.");

  m.def(
      "witness_f",
      [](std::uint64_t p, const Rows& a1, const Rows& a2) {
        return dhyp::witness_f(mat_from_rows(p, a1), mat_from_rows(p, a2));
      },
      py::arg("p"), py::arg("a1"), py::arg("a2"),
      "Tr(A1 A2 A1^2 A2^2) - Tr(A2^2 A1^2 A2 A1); flips sign under transpose.");

  m.def(
      "nonconjugacy_check",
      [](std::uint64_t p, const std::vector<Rows>& mats) {
        dhyp::NonConjugacyReport rep = dhyp::nonconjugacy_check(tuple_from_rows(p, mats));
        py::dict out;
        out["certified"] = rep.certified;
        out["f_value"] = rep.f_value;
        out["detail"] = rep.detail;
        return out;
      },
      py::arg("p"), py::arg("matrices"),
      "One-sided certificate that a tuple is not conjugate to its slotwise transpose.");

  m.def(
      "q_binom",
      [](int n, int d, int a, int b, std::optional<std::uint64_t> prime) {
        return context_for(n, prime).q_binom(d, a, b);
      },
      py::arg("n"), py::arg("d"), py::arg("a"), py::arg("b"),
      py::arg("prime") = std::nullopt,
      "Gaussian binomial at a primitive n-th root of unity in F_p.");

  m.def(
      "q_trinom",
      [](int n, int d, int a, int b, int c, std::optional<std::uint64_t> prime) {
        return context_for(n, prime).q_trinom(d, a, b, c);
      },
      py::arg("n"), py::arg("d"), py::arg("a"), py::arg("b"), py::arg("c"),
      py::arg("prime") = std::nullopt,
      "Gaussian trinomial at a primitive n-th root of unity in F_p.");

  m.def(
      "dim_v_table",
      [](int n, std::optional<std::uint64_t> prime) {
        dhyp::QContext qc = context_for(n, prime);
        std::vector<std::vector<int>> table;
        for (int e1 = 0; e1 < n; ++e1) {
          std::vector<int> row;
          for (int e2 = 0; e2 < n; ++e2) row.push_back(dhyp::dim_V(qc, e1, e2));
          table.push_back(std::move(row));
        }
        return table;
      },
      py::arg("n"), py::arg("prime") = std::nullopt,
      "Graded kernel dimensions indexed by the character (e1, e2).");

  m.def(
      "run_report",
      [](const std::string& command, int n, int r, std::optional<std::uint64_t> prime,
         std::uint64_t seed, int trials, std::optional<std::string> input,
         const std::string& fmt) {
        dhyp::RunConfig cfg;
        cfg.command = command;
        cfg.n = n;
        cfg.r = r;
        cfg.prime = prime;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.input_path = std::move(input);
        cfg.format = fmt;
        std::string out;
        int code = dhyp::run_command(cfg, out);
        return py::make_tuple(code, out);
      },
      py::arg("command"), py::arg("n") = 3, py::arg("r") = 3,
      py::arg("prime") = std::nullopt, py::arg("seed") = 0, py::arg("trials") = 5,
      py::arg("input") = std::nullopt, py::arg("fmt") = "json",
      "Run one verification command; returns (exit_code, rendered report).");

  m.attr("__version__") = "0.1.0";
}
