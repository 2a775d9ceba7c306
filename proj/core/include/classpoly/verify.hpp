#ifndef CLASSPOLY_VERIFY_HPP
#define CLASSPOLY_VERIFY_HPP

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "classpoly/csp.hpp"
#include "classpoly/graph.hpp"
#include "classpoly/poly.hpp"

namespace classpoly {

enum class CaseStatus { kPass, kFail, kSkip };

std::string to_string(CaseStatus s);

struct CaseRecord {
  std::string graph6;       // "g1|g2" for suites over pairs
  nlohmann::json params;    // q, N, ... as applicable
  CaseStatus status = CaseStatus::kPass;
  std::string witness;      // reproducible reason for fail/skip
};

struct VerificationReport {
  std::string suite;
  nlohmann::json options;
  std::vector<CaseRecord> cases;
  double wall_seconds = 0;

  std::size_t count(CaseStatus s) const;
  bool ok() const { return count(CaseStatus::kFail) == 0; }
};

struct SuiteOptions {
  int nmin = 1;
  int nmax = 4;
  std::vector<int> qs{2, 3};
  std::vector<int> moduli{2, 3};
  double budget_elements = 2e5;   // brute-force group orders
  double budget_vectors = 1e8;    // q^(2n) for Lie centralisers
  int budget_subset_vertices = kDefaultSubsetCapVertices;
  int threads = 1;
};

/// thm-a, adj-dim, compose, degree, domination, zeta-join, crt, shifted-nonneg.
const std::vector<std::string>& suite_names();

/// Exhaustive over the declared scope; budget overruns become skip records.
/// Throws std::invalid_argument for an unknown suite or a scope that cannot
/// be enumerated (labelled graphs exist for n <= 6 only).
VerificationReport run_suite(std::string_view suite, const SuiteOptions& options);

nlohmann::json to_json(const VerificationReport& r, bool include_timing);

struct JoinZetaResult {
  XPoly series_constant;  // must be 1
  XPoly series_linear;    // Y-coefficient of Q / ((1 - X^t Y)(1 - X^(t+1) Y))
  XPoly direct;           // f of the join, by subset enumeration
  XPoly formula;          // join_f
  bool ok() const { return series_constant == XPoly(1) && series_linear == direct && direct == formula; }
};

/// Builds W_i = 1 + f_i Y mod Y^2, assembles Q from its three lines, divides
/// by (1 - X^t Y)(1 - X^(t+1) Y) with t = m1 + m2 + n1 n2, and compares the
/// Y-coefficient with f of the join.
JoinZetaResult join_zeta_first_order(const Graph& g1, const Graph& g2);
/// Same, from precomputed f-polynomials and sizes.
JoinZetaResult join_zeta_first_order(const XPoly& f1, int m1, int n1, const XPoly& f2, int m2, int n2,
                                     const XPoly& f_join);

struct BatchRecord {
  int line = 0;  // 1-based
  std::string input;
  std::string status;  // "ok", "parse-error", "budget"
  std::string error;
  std::optional<GraphPolyReport> report;
};

/// One record per non-blank input line, in input order.
std::vector<BatchRecord> run_batch(std::istream& in, const EnumerationOptions& options = {});
nlohmann::json to_json(const std::vector<BatchRecord>& records);
/// Header: line,graph6,n,m,status,eta,deg_f,f
std::string to_csv(const std::vector<BatchRecord>& records);

/// Runs fn(i) for i in [0, count) on up to threads workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace classpoly

#endif  // CLASSPOLY_VERIFY_HPP
