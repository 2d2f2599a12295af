#include "dhyp/commands.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "dhyp/fiber.hpp"
#include "dhyp/fp.hpp"
#include "dhyp/grading.hpp"
#include "dhyp/pencilmap.hpp"
#include "dhyp/qcomb.hpp"
#include "dhyp/rng.hpp"
#include "dhyp/weylpair.hpp"

namespace dhyp {

namespace {

std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return acc;
}

std::uint64_t expected_rank(int n, int r) {
  std::uint64_t full = static_cast<std::uint64_t>(r) * n * n;
  std::uint64_t image = static_cast<std::uint64_t>(r - 1) * n * n + 1;
  std::uint64_t ambient = binom_u64(r + n, n) - 1;
  return std::min({full, image, ambient});
}

std::string u2s(std::uint64_t v) { return std::to_string(v); }

void validate_common(const RunConfig& cfg, int n_max) {
  if (cfg.n < 2 || cfg.n > n_max) {
    throw ConfigError("n out of range [2, " + std::to_string(n_max) + "] for " + cfg.command);
  }
  if (cfg.r < 2 || cfg.r > 8) throw ConfigError("r out of range [2, 8]");
  if (cfg.trials < 1) throw ConfigError("trials must be positive");
  if (cfg.format != "json" && cfg.format != "text") {
    throw ConfigError("format must be json or text");
  }
  if (cfg.prime) {
    if (!is_prime(*cfg.prime)) throw ConfigError("prime override is not prime");
    if (*cfg.prime <= static_cast<std::uint64_t>(cfg.n)) {
      throw ConfigError("prime override must exceed n");
    }
  }
}

nlohmann::ordered_json params_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["r"] = cfg.r;
  j["prime"] = cfg.prime ? nlohmann::ordered_json(*cfg.prime) : nlohmann::ordered_json(nullptr);
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["format"] = cfg.format;
  if (cfg.input_path) j["input"] = *cfg.input_path;
  return j;
}

QContext make_qcontext(const RunConfig& cfg) {
  std::uint64_t p = cfg.prime ? *cfg.prime : find_prime(cfg.n, true);
  std::uint64_t root;
  try {
    root = primitive_root_of_unity(p, cfg.n);
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("prime override lacks an n-th root of unity: ") + e.what());
  }
  return QContext(FieldCtx(p, cfg.n, root));
}

std::string serialize_index(const Monomial& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  s += ")";
  return s;
}

std::string serialize_coeffs_full(const CoeffVector& cv) {
  // all C(r+n, n) coefficients, leading term included, graded-lex order
  Monomial lead(static_cast<size_t>(cv.r) + 1, 0);
  lead[0] = cv.n;
  std::string s = serialize_index(lead) + "=1";
  for (size_t k = 0; k < cv.indices.size(); ++k) {
    s += " " + serialize_index(cv.indices[k]) + "=" + u2s(cv.values[k]);
  }
  return s;
}

MatrixTuple load_tuple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("r") ||
      !j.contains("matrices")) {
    throw ParseError("input must be an object with keys p, n, r, matrices");
  }
  std::uint64_t p;
  int n, r;
  try {
    p = j["p"].get<std::uint64_t>();
    n = j["n"].get<int>();
    r = j["r"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("p, n, r must be integers: ") + e.what());
  }
  if (!is_prime(p)) throw ParseError("input p is not prime");
  if (n < 1 || p <= static_cast<std::uint64_t>(n)) throw ParseError("input requires prime p > n");
  const auto& ms = j["matrices"];
  if (!ms.is_array() || static_cast<int>(ms.size()) != r) {
    throw ParseError("matrices must be an array of length r");
  }
  std::vector<FpMat> mats;
  for (const auto& mj : ms) {
    if (!mj.is_array() || static_cast<int>(mj.size()) != n) {
      throw ParseError("each matrix must have n rows");
    }
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = mj[static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ParseError("each matrix row must have n entries");
      }
      for (int jj = 0; jj < n; ++jj) {
        long long v;
        try {
          v = row[static_cast<size_t>(jj)].get<long long>();
        } catch (const nlohmann::json::exception&) {
          throw ParseError("matrix entries must be integers");
        }
        long long red = v % static_cast<long long>(p);
        if (red < 0) red += static_cast<long long>(p);
        m.at(i, jj) = static_cast<std::uint64_t>(red);
      }
    }
    mats.push_back(std::move(m));
  }
  return MatrixTuple{p, n, std::move(mats)};
}

void add_check(Report& rep, const std::string& name, const std::string& expected,
               const std::string& observed, bool pass) {
  rep.checks.push_back({name, expected, observed, pass});
}

void rank_checks(Report& rep, const RunConfig& cfg) {
  std::uint64_t p = cfg.prime ? *cfg.prime : find_prime(cfg.n, false);
  int n = cfg.n;
  int r = cfg.r;
  std::uint64_t target = expected_rank(n, r);
  SplitMix64 rng(cfg.seed);
  int best_rank = -1;
  MatrixTuple best;
  for (int t = 0; t < cfg.trials; ++t) {
    MatrixTuple A = random_tuple(p, n, r, rng);
    int rk = jacobian(A).rank();
    if (rk > best_rank) {
      best_rank = rk;
      best = A;
    }
  }
  rep.add("rank_max", u2s(target), u2s(static_cast<std::uint64_t>(best_rank)));
  FpMat J = jacobian(best);
  std::vector<MatrixTuple> ker = kernel(J, p, n, r);
  std::uint64_t expected_kernel = static_cast<std::uint64_t>(r) * n * n - target;
  rep.add("kernel_dimension", u2s(expected_kernel), u2s(ker.size()));
  std::vector<MatrixTuple> orbit = pgl_tangent(best);
  bool contained = true;
  for (const MatrixTuple& t : orbit) contained = contained && tuple_in_span(t, ker);
  rep.add_bool("pgl_contained_in_kernel", contained);
  if (r >= 3) {
    rep.add_bool("pgl_span_equals_kernel", same_tuple_span(orbit, ker));
  }
}

void grading_checks(Report& rep, const RunConfig& cfg) {
  QContext qc = make_qcontext(cfg);
  int n = qc.n();
  // dim_V table and sum
  std::string table = "[";
  int sum = 0;
  bool table_ok = true;
  for (int e1 = 0; e1 < n; ++e1) {
    if (e1) table += ",";
    table += "[";
    for (int e2 = 0; e2 < n; ++e2) {
      int d = dim_V(qc, e1, e2);
      sum += d;
      table_ok = table_ok && (d == ((e1 == 0 && e2 == 0) ? 0 : 1));
      if (e2) table += ",";
      table += std::to_string(d);
    }
    table += "]";
  }
  table += "]";
  std::string expected_table = "[";
  for (int e1 = 0; e1 < n; ++e1) {
    if (e1) expected_table += ",";
    expected_table += "[";
    for (int e2 = 0; e2 < n; ++e2) {
      if (e2) expected_table += ",";
      expected_table += (e1 == 0 && e2 == 0) ? "0" : "1";
    }
    expected_table += "]";
  }
  expected_table += "]";
  rep.add("dimv_table", expected_table, table);
  rep.add("dimv_sum", std::to_string(n * n - 1), std::to_string(sum));
  (void)table_ok;
  // commutator witnesses against every constraint row
  bool rows_ok = true;
  bool pattern_ok = true;
  const FieldCtx& f = qc.field();
  for (int e1 = 0; e1 < n; ++e1) {
    for (int e2 = 0; e2 < n; ++e2) {
      auto w = commutator_witness(qc, e1, e2);
      bool zero = !w[0] && !w[1] && !w[2];
      pattern_ok = pattern_ok && (zero == (e1 == 0 && e2 == 0));
      for (const Triple& t : enumerate_triples(e1, e2, n)) {
        auto row = constraint_row(qc, e1, e2, t);
        std::uint64_t dot = 0;
        for (int i = 0; i < 3; ++i) {
          dot = f.add(dot, f.mul(row[static_cast<size_t>(i)], w[static_cast<size_t>(i)]));
        }
        rows_ok = rows_ok && dot == 0;
      }
    }
  }
  rep.add_bool("witness_satisfies_rows", rows_ok);
  rep.add_bool("witness_nonzero_pattern", pattern_ok);
  // degree witnesses and rank-2 systems
  bool rank2_ok = true;
  for (int e1 = 0; e1 < n; ++e1) {
    for (int e2 = 0; e2 < n; ++e2) {
      if (e1 == 0 && e2 == 0) continue;
      auto [t1, t2] = degree_witnesses(e1, e2, n);
      int d1 = t1[0] + t1[1] + t1[2] - 1;
      int d2 = t2[0] + t2[1] + t2[2] - 1;
      rank2_ok = rank2_ok && ((d1 - d2) % n != 0);
      auto r1 = constraint_row_symmetric(qc, e1, e2, t1);
      auto r2 = constraint_row_symmetric(qc, e1, e2, t2);
      std::vector<std::vector<std::uint64_t>> rows = {{r1[0], r1[1], r1[2]},
                                                      {r2[0], r2[1], r2[2]}};
      rank2_ok = rank2_ok && row_rank(rows, qc.p()) == 2;
    }
  }
  rep.add_bool("rank2_certificates", rank2_ok);
  // grand cross-validation at the triple (A1, A2, A1A2)
  WeylPair wp(qc);
  MatrixTuple A{qc.p(), n, {wp.a1(), wp.a2(), wp.a3()}};
  FpMat J = jacobian(A);
  std::vector<MatrixTuple> ker = kernel(J, qc.p(), n, 3);
  rep.add("grand_kernel_dimension", std::to_string(n * n - 1), u2s(ker.size()));
  rep.add("grand_sum_matches_kernel", std::to_string(sum), u2s(ker.size()));
  std::vector<MatrixTuple> witnesses;
  for (int e1 = 0; e1 < n; ++e1) {
    for (int e2 = 0; e2 < n; ++e2) {
      if (e1 == 0 && e2 == 0) continue;
      witnesses.push_back(char_space_element(wp, e1, e2, commutator_witness(qc, e1, e2)));
    }
  }
  rep.add_bool("grand_witnesses_span_kernel", same_tuple_span(witnesses, ker));
  rep.add_bool("grand_group_invariance", verify_group_action(wp, ker));
}

void qbinom_checks(Report& rep, const RunConfig& cfg) {
  QContext qc = make_qcontext(cfg);
  int n = qc.n();
  const FieldCtx& f = qc.field();
  bool pascal = true, symmetry = true, factorization = true, ratios = true;
  for (int d = 0; d < n; ++d) {
    for (int a = 0; a <= d; ++a) {
      int b = d - a;
      symmetry = symmetry && qc.q_binom(d, a, b) == qc.q_binom(d, b, a);
      if (d >= 1) {
        std::uint64_t lhs = qc.q_binom(d, a, b);
        std::uint64_t rhs = f.add(qc.q_binom(d - 1, a - 1, b),
                                  f.mul(f.pow(f.q(), static_cast<std::uint64_t>(a)),
                                        qc.q_binom(d - 1, a, b - 1)));
        pascal = pascal && lhs == rhs;
      }
      for (int c = 0; a + c <= d; ++c) {
        int bb = d - a - c;
        std::uint64_t tri = qc.q_trinom(d, a, bb, c);
        std::uint64_t prod =
            f.mul(qc.q_binom(d, a + c, bb), qc.q_binom(a + c, a, c));
        factorization = factorization && tri == prod;
      }
    }
  }
  for (int al = 0; al <= n - 1; ++al) {
    for (int be = 0; be <= n - 1; ++be) {
      for (int ga = 0; ga <= n - 1; ++ga) {
        int s = al + be + ga;
        if (s < 1 || s > n) continue;
        try {
          ratio_triple(qc, al, be, ga);
        } catch (const std::logic_error&) {
          ratios = false;
        }
      }
    }
  }
  rep.add_bool("pascal_identity", pascal);
  rep.add_bool("symmetry", symmetry);
  rep.add_bool("binomial_factorization", factorization);
  rep.add_bool("ratio_proportionality", ratios);
  if (cfg.qbinom_args) {
    auto [d, a, b] = *cfg.qbinom_args;
    if (d < 0 || d >= n) throw ConfigError("qbinom evaluation requires 0 <= d <= n-1");
    if (a + b != d) throw ConfigError("qbinom evaluation requires a + b = d");
    std::uint64_t v = qc.q_binom(d, a, b);
    add_check(rep, "evaluate",
              "q_binom(" + std::to_string(d) + "," + std::to_string(a) + "," +
                  std::to_string(b) + ") in F_" + u2s(qc.p()),
              u2s(v), true);
  }
}

void charpoly_checks(Report& rep, const RunConfig& cfg) {
  if (!cfg.input_path) throw ConfigError("charpoly requires --input");
  MatrixTuple A = load_tuple(*cfg.input_path);
  if (A.n < 2 || A.n > 6) throw ConfigError("charpoly input n out of range [2, 6]");
  if (A.r() < 2 || A.r() > 8) throw ConfigError("charpoly input r out of range [2, 8]");
  CoeffVector cv = char_coeffs(A);
  rep.add("leading_coefficient", "1", "1");  // asserted inside char_coeffs
  MultiPoly P = det(pencil(A));
  rep.add_bool("homogeneous_degree", P.is_homogeneous(A.n));
  CoeffVector tv = char_coeffs(transpose_tuple(A));
  rep.add("coefficients_transpose_invariant", serialize_coeffs_full(cv),
          serialize_coeffs_full(tv));
}

void fiber_checks(Report& rep, const RunConfig& cfg) {
  std::uint64_t p = cfg.prime ? *cfg.prime : find_prime(cfg.n, false);
  int n = cfg.n;
  int r = cfg.r;
  SplitMix64 rng(cfg.seed);
  // transpose invariance of coefficient vectors
  bool transpose_ok = true;
  for (int t = 0; t < 20; ++t) {
    MatrixTuple A = random_tuple(p, n, r, rng);
    transpose_ok = transpose_ok && char_coeffs(A).values == char_coeffs(transpose_tuple(A)).values;
  }
  rep.add_bool("transpose_invariance", transpose_ok);
  // witness antisymmetry and nonvanishing over sampled pairs
  bool antisym = true;
  int nonzero = 0;
  const int kPairs = 50;
  for (int t = 0; t < kPairs; ++t) {
    FpMat A1 = random_matrix(p, n, rng);
    FpMat A2 = random_matrix(p, n, rng);
    std::uint64_t fv = witness_f(A1, A2);
    std::uint64_t ft = witness_f(A1.transpose(), A2.transpose());
    antisym = antisym && ft == (p - fv) % p;
    if (fv) ++nonzero;
  }
  rep.add_bool("f_antisymmetry", antisym);
  if (n == 2) {
    add_check(rep, "f_nonvanishing", "identically inconclusive (n=2)",
              nonzero == 0 ? "identically inconclusive (n=2)"
                           : "nonzero witness at n=2",
              nonzero == 0);
  } else {
    add_check(rep, "f_nonvanishing", "some nonzero witness among " +
                  std::to_string(kPairs) + " sampled pairs",
              std::to_string(nonzero) + "/" + std::to_string(kPairs) + " nonzero",
              nonzero > 0);
  }
  // non-conjugacy certificates on sampled tuples
  int certified = 0;
  const int kTuples = 20;
  bool conj_ok = true;
  for (int t = 0; t < kTuples; ++t) {
    MatrixTuple A = random_tuple(p, n, r, rng);
    NonConjugacyReport rc = nonconjugacy_check(A);
    if (rc.certified) ++certified;
    if (n == 2 && rc.certified) conj_ok = false;
  }
  if (n == 2) {
    add_check(rep, "nonconjugacy_certificates", "all inconclusive (n=2)",
              conj_ok ? "all inconclusive (n=2)" : "unexpected certificate",
              conj_ok);
  } else {
    add_check(rep, "nonconjugacy_certificates",
              "at least one certificate among " + std::to_string(kTuples) + " tuples",
              std::to_string(certified) + "/" + std::to_string(kTuples) + " certified",
              certified > 0);
  }
  // n = 2, r = 2 reconstruction round-trip (fixed-shape feature of the suite)
  bool roundtrip = true;
  for (int t = 0; t < 100; ++t) {
    MatrixTuple A = random_tuple(p, 2, 2, rng);
    roundtrip = roundtrip && reconstruct_2x2(char_coeffs(A)) == direct_invariants_2x2(A);
  }
  rep.add_bool("reconstruct_2x2_roundtrip", roundtrip);
  bool dettrace = true;
  for (int t = 0; t < 100; ++t) {
    dettrace = dettrace && det_trace_identity_2x2(random_matrix(p, 2, rng));
  }
  rep.add_bool("det_trace_identity_2x2", dettrace);
}

Report finalize(Report rep, std::chrono::steady_clock::time_point start) {
  rep.sort_checks();
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace

Report cmd_rank(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  validate_common(cfg, 6);
  Report rep;
  rep.command = "rank";
  rep.params = params_echo(cfg);
  rank_checks(rep, cfg);
  return finalize(std::move(rep), start);
}

Report cmd_grading(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  validate_common(cfg, 8);
  Report rep;
  rep.command = "grading";
  rep.params = params_echo(cfg);
  grading_checks(rep, cfg);
  return finalize(std::move(rep), start);
}

Report cmd_qbinom(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  validate_common(cfg, 8);
  Report rep;
  rep.command = "qbinom";
  rep.params = params_echo(cfg);
  qbinom_checks(rep, cfg);
  return finalize(std::move(rep), start);
}

Report cmd_charpoly(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  validate_common(cfg, 6);
  Report rep;
  rep.command = "charpoly";
  rep.params = params_echo(cfg);
  charpoly_checks(rep, cfg);
  return finalize(std::move(rep), start);
}

Report cmd_fiber(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  validate_common(cfg, 6);
  Report rep;
  rep.command = "fiber";
  rep.params = params_echo(cfg);
  fiber_checks(rep, cfg);
  return finalize(std::move(rep), start);
}

Report cmd_all(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  validate_common(cfg, 6);
  Report rep;
  rep.command = "all";
  rep.params = params_echo(cfg);
  struct Section {
    const char* prefix;
    void (*run)(Report&, const RunConfig&);
  };
  const Section sections[] = {{"rank/", rank_checks},
                              {"grading/", grading_checks},
                              {"qbinom/", qbinom_checks},
                              {"fiber/", fiber_checks}};
  for (const Section& s : sections) {
    Report sub;
    s.run(sub, cfg);
    for (Check& c : sub.checks) {
      c.name = s.prefix + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  return finalize(std::move(rep), start);
}

int run_command(const RunConfig& cfg, std::string& out) {
  try {
    Report rep;
    if (cfg.command == "rank") {
      rep = cmd_rank(cfg);
    } else if (cfg.command == "grading") {
      rep = cmd_grading(cfg);
    } else if (cfg.command == "qbinom") {
      rep = cmd_qbinom(cfg);
    } else if (cfg.command == "charpoly") {
      rep = cmd_charpoly(cfg);
    } else if (cfg.command == "fiber") {
      rep = cmd_fiber(cfg);
    } else if (cfg.command == "all") {
      rep = cmd_all(cfg);
    } else {
      throw ConfigError("unknown command: " + cfg.command);
    }
    if (cfg.format == "json") {
      out = rep.to_json().dump(2) + "\n";
    } else {
      out = rep.to_text();
    }
    return rep.verdict() ? kExitPass : kExitVerificationFailure;
  } catch (const ConfigError& e) {
    out = std::string("config error: ") + e.what() + "\n";
    return kExitUsageError;
  } catch (const ParseError& e) {
    out = std::string("parse error: ") + e.what() + "\n";
    return kExitParseError;
  }
}

}  // namespace dhyp
