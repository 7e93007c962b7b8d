#include "frameflow/transitivity/subgroup.hpp"

#include <stdexcept>

#include "frameflow/algebras.hpp"
#include "frameflow/errors.hpp"

namespace frameflow::transitivity {

std::vector<Matrix> bracket_closure(std::vector<Matrix> basis, double tol, int max_dim) {
  bool grew = true;
  while (grew && static_cast<int>(basis.size()) < max_dim) {
    grew = false;
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n && static_cast<int>(basis.size()) < max_dim; ++i) {
      for (std::size_t j = i + 1; j < n && static_cast<int>(basis.size()) < max_dim; ++j) {
        const Matrix r = orthogonal_residual(basis, commutator(basis[i], basis[j]));
        const double norm = r.norm();
        if (norm > tol) {
          basis.push_back(r / norm);
          grew = true;
        }
      }
    }
  }
  return basis;
}

double closure_residual(const std::vector<Matrix>& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      worst = std::max(worst, orthogonal_residual(basis, commutator(basis[i], basis[j])).norm());
    }
  }
  return worst;
}

SubgroupEstimate estimate_transitivity_group(const std::vector<Rotation>& rhos, const SubgroupOptions& opt) {
  if (rhos.empty()) throw std::invalid_argument("no generators given");
  const int m = rhos.front().dim();
  const int full_dim = m * (m - 1) / 2;
  const Matrix id = Matrix::Identity(m, m);

  // Alphabet: letter 2i is ρ_i, letter 2i+1 is ρ_i^{−1}.
  std::vector<Matrix> alphabet;
  for (const auto& r : rhos) {
    if (r.dim() != m) throw std::invalid_argument("generators have mixed dimensions");
    alphabet.push_back(r.matrix());
    alphabet.push_back(r.matrix().transpose());
  }

  SubgroupEstimate est;
  est.generator_count = static_cast<int>(rhos.size());
  std::vector<Matrix> span;
  const auto harvest = [&](const Matrix& w) {
    if ((w - id).norm() >= opt.injectivity_radius) return;
    ++est.logs_harvested;
    if (static_cast<int>(span.size()) >= full_dim) return;
    const Matrix l = logm(Rotation::unchecked(w)).matrix();
    const Matrix r = orthogonal_residual(span, l);
    const double norm = r.norm();
    if (norm > opt.span_tol) span.push_back(r / norm);
  };

  struct Word {
    Matrix value;
    int last;
  };
  std::vector<Word> level = {{id, -1}};
  for (int len = 1; len <= opt.max_word_length && est.words_examined < opt.max_words; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (int l = 0; l < static_cast<int>(alphabet.size()); ++l) {
        if (w.last >= 0 && (l ^ 1) == w.last) continue;
        if (est.words_examined >= opt.max_words) break;
        Matrix v = w.value * alphabet[static_cast<std::size_t>(l)];
        ++est.words_examined;
        harvest(v);
        next.push_back({std::move(v), l});
      }
    }
    level = std::move(next);
  }
  if (est.logs_harvested == 0) {
    throw NumericalError("insufficient data: no word within the injectivity radius");
  }
  est.algebra_basis = bracket_closure(std::move(span), opt.span_tol, full_dim);
  est.dimension = static_cast<int>(est.algebra_basis.size());
  est.closure_residual = closure_residual(est.algebra_basis);
  return est;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ergodic:
      return "ergodic";
    case Verdict::not_ergodic:
      return "not_ergodic";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict ergodicity_verdict(const SubgroupEstimate& h, int m, int min_generators) {
  if (h.dimension == m * (m - 1) / 2) return Verdict::ergodic;
  if (h.generator_count >= min_generators) return Verdict::not_ergodic;
  return Verdict::inconclusive;
}

}  // namespace frameflow::transitivity
