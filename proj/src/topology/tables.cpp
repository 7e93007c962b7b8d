#include "frameflow/topology/tables.hpp"

#include <cmath>
#include <stdexcept>

#include "frameflow/algebras.hpp"

namespace frameflow::topology {

using transitivity::Representation;

int radon_hurwitz(int n) {
  if (n < 1) throw std::invalid_argument("radon_hurwitz needs n >= 1");
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  const int c = e / 4;
  const int b = e % 4;
  return (1 << b) + 8 * c;
}

namespace {

ReductionCandidate make(int n, std::string name, int p, int c, Representation rep) {
  ReductionCandidate r;
  r.n = n;
  r.group_name = std::move(name);
  r.p = p;
  r.invariant_case = c;
  r.rep = rep;
  return r;
}

std::string product_name(int p, int q) {
  return "SO(" + std::to_string(p) + ")xSO(" + std::to_string(q) + ")";
}

}  // namespace

std::vector<ReductionCandidate> reduction_candidates(int n) {
  if (n < 3) throw std::invalid_argument("reduction_candidates needs n >= 3");
  std::vector<ReductionCandidate> out;
  if (n == 7) {
    out.push_back(make(n, "U(3)", 0, 2, Representation::lambda2));
    return out;
  }
  if (n % 2 != 0) return out;
  if (n == 8) {
    out.push_back(make(n, "G2", 0, 3, Representation::lambda3));
    for (int p = 1; p <= 3; ++p) out.push_back(make(n, product_name(p, 7 - p), p, 4, Representation::sym2_traceless));
    return out;
  }
  if (n == 134) {
    auto e7 = make(n, "E7", 0, 3, Representation::lambda3);
    e7.existence = Existence::unknown;
    e7.has_matrix_model = false;
    out.push_back(e7);
    out.push_back(make(n, "SO(132)", 0, 1, Representation::standard));
    return out;
  }
  if (n % 4 == 2) {
    out.push_back(make(n, "SO(" + std::to_string(n - 2) + ")", 0, 1, Representation::standard));
    return out;
  }
  for (int p = 1; p <= (n - 2) / 2; ++p) {
    out.push_back(make(n, product_name(p, n - 1 - p), p, 4, Representation::sym2_traceless));
  }
  return out;
}

std::vector<Matrix> candidate_algebra(const ReductionCandidate& c) {
  if (!c.has_matrix_model) throw std::invalid_argument("no matrix model shipped for " + c.group_name);
  const int m = c.n - 1;
  if (c.group_name == "U(3)") return unitary_basis(3);
  if (c.group_name == "G2") return g2_basis();
  if (c.p > 0) return block_so_basis(c.p, m - c.p);
  return stabilizer_basis(m);
}

namespace {

// |⟨a, b⟩| / (‖a‖‖b‖) for full tensor components.
double alignment(const Vector& a, const Vector& b) { return std::abs(a.dot(b)) / (a.norm() * b.norm()); }

}  // namespace

ConsistencyReport consistency_check(int n_check) {
  ConsistencyReport report;
  auto fail = [&](ConsistencyRow& row, const std::string& why) {
    row.passed = false;
    row.status = why;
  };
  for (int n = 3; n <= std::max(n_check, 134); ++n) {
    for (const auto& c : reduction_candidates(n)) {
      ConsistencyRow row;
      row.n = n;
      row.group_name = c.group_name;
      row.status = "ok";
      // residue-class facts from the vector-field count
      if (n != 134 && n % 4 == 2 && (c.invariant_case != 1 || vector_field_count(n) != 1)) {
        fail(row, "n = 2 mod 4 row must carry case 1 with one vector field");
      }
      if (n != 8 && n % 4 == 0 && (c.invariant_case != 4 || vector_field_count(n) < 3)) {
        fail(row, "n = 0 mod 4 row must carry case 4 with at least three vector fields");
      }
      if (!c.has_matrix_model) {
        if (row.passed) row.status = "skipped: no matrix model shipped";
        report.rows.push_back(row);
        continue;
      }
      if (n > n_check) continue;
      const int m = n - 1;
      const auto tensors = transitivity::fixed_tensors(candidate_algebra(c), c.rep, m);
      row.kernel_dim = static_cast<int>(tensors.size());
      for (const auto& t : tensors) row.residual = std::max(row.residual, t.residual);
      if (tensors.empty()) {
        fail(row, "no invariant recovered");
      } else if (row.residual >= 1e-8) {
        fail(row, "invariant residual too large");
      } else if (c.group_name == "U(3)") {
        if (tensors.size() != 1 || alignment(tensors[0].components, transitivity::standard_kahler_form(6)) < 1 - 1e-9) {
          fail(row, "U(3) invariant is not the standard Kaehler form");
        }
      } else if (c.group_name == "G2") {
        if (tensors.size() != 1 || alignment(tensors[0].components, transitivity::associative_three_form()) < 1 - 1e-9) {
          fail(row, "G2 invariant is not the associative 3-form");
        }
      } else if (c.p == 0 && tensors.size() != 1) {
        fail(row, "stabilizer should fix exactly one direction");
      }
      report.rows.push_back(row);
    }
  }
  for (const auto& row : report.rows) {
    if (!row.passed) {
      report.passed = false;
      report.failures.push_back("n=" + std::to_string(row.n) + " " + row.group_name + ": " + row.status);
    }
  }
  return report;
}

}  // namespace frameflow::topology
