#include "psdp/problem_gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "psdp/psd_cone.hpp"

namespace psdp {

void GeneratorSpec::validate() const {
  if (n < 1 || m < 1)
    throw std::invalid_argument("GeneratorSpec: dimensions must be positive");
  if (optimum == OptimumKind::RankDeficient && n < 3)
    throw std::invalid_argument(
        "GeneratorSpec: rank-deficient optimum needs n >= 3");
}

Matrix random_orthogonal(Index dim, Rng& rng) {
  if (dim < 1)
    throw std::invalid_argument("random_orthogonal: dim must be positive");
  for (;;) {
    const Matrix G = rng.gaussian(dim, dim);
    if (auto Q = qr_orthogonal_factor(G)) return std::move(*Q);
    // rank-deficient draw (probability ~0): consume another dim² normals
  }
}

Vector lambda_diagonal(const GeneratorSpec& spec, Rng& rng) {
  const Index d = std::min(spec.n, spec.m);
  Vector lambda(d);
  switch (spec.problem) {
    case ProblemKind::P1:
      for (Index i = 0; i < d; ++i)
        lambda(i) = rng.truncated_normal(11.0, 1.0, 10.0, 12.0);
      break;
    case ProblemKind::P2:
      for (Index i = 0; i < d; ++i)
        lambda(i) = static_cast<double>(i + 1) + 2.0 * rng.uniform01();
      break;
    case ProblemKind::P3:
      for (Index i = 0; i < d; ++i)
        lambda(i) = 1.0 +
                    99.0 * static_cast<double>(i) /
                        static_cast<double>(spec.m + 1) +
                    2.0 * rng.uniform01();
      break;
  }
  return lambda;
}

GeneratedInstance make_instance(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const Matrix P = random_orthogonal(spec.n, rng);
  const Matrix Q = random_orthogonal(spec.m, rng);
  const Vector lambda = lambda_diagonal(spec, rng);
  Matrix Lambda = Matrix::Zero(spec.n, spec.m);
  for (Index i = 0; i < lambda.size(); ++i) Lambda(i, i) = lambda(i);
  Matrix A = P * Lambda * Q.transpose();

  Matrix x_star;
  if (spec.optimum == OptimumKind::ProjectedRandom) {
    x_star = project_psd(rng.gaussian(spec.n, spec.n)).release();
  } else {
    const Matrix V = random_orthogonal(spec.n, rng);
    Vector sigma = Vector::Zero(spec.n);
    for (Index i = 2; i < spec.n; ++i) sigma(i) = rng.uniform01();
    x_star = V.transpose() * sigma.asDiagonal() * V;
    x_star = 0.5 * (x_star + x_star.transpose());
  }

  Matrix B = x_star * A;
  PsdMatrix X0 = project_psd(rng.gaussian(spec.n, spec.n));

  ProblemInstance inst;
  inst.label = "p" + std::to_string(static_cast<int>(spec.problem)) + "-n" +
               std::to_string(spec.n) + "-m" + std::to_string(spec.m) +
               "-s" + std::to_string(spec.seed);
  inst.A = std::move(A);
  inst.B = std::move(B);
  inst.known_optimum = PsdMatrix::unchecked(std::move(x_star));
  return {std::move(inst), std::move(X0)};
}

}  // namespace psdp
