#include <cmath>

#include <doctest.h>

#include "seqclass/loss.hpp"
#include "seqclass/pattern.hpp"

using namespace seqclass;

namespace {

Pattern pat(const char* text) { return parse_pattern(text, Tokenization::chars); }

}  // namespace

TEST_CASE("loss values") {
  CHECK(loss_value(LossKind::logistic, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(loss_value(LossKind::squared_hinge, 2.0) == 0.0);
  CHECK(loss_value(LossKind::squared_hinge, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(loss_value(LossKind::squared_hinge, 1.0) == 0.0);
}

TEST_CASE("loss derivatives") {
  CHECK(loss_derivative(LossKind::logistic, 0.0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(loss_derivative(LossKind::squared_hinge, 1.0) == 0.0);
  CHECK(loss_derivative(LossKind::logistic, std::log(3.0)) ==
        doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("derivative is nonpositive everywhere") {
  for (double m = -10.0; m <= 10.0; m += 0.037) {
    CHECK(loss_derivative(LossKind::logistic, m) <= 0.0);
    CHECK(loss_derivative(LossKind::squared_hinge, m) <= 0.0);
  }
}

TEST_CASE("loss is non-increasing in the margin") {
  double prev_lr = loss_value(LossKind::logistic, -10.0);
  double prev_sh = loss_value(LossKind::squared_hinge, -10.0);
  for (double m = -10.0 + 0.05; m <= 10.0; m += 0.05) {
    double lr = loss_value(LossKind::logistic, m);
    double sh = loss_value(LossKind::squared_hinge, m);
    CHECK(lr < prev_lr);  // strictly decreasing
    CHECK(sh <= prev_sh);
    if (m < 1.0) CHECK(sh < prev_sh);
    prev_lr = lr;
    prev_sh = sh;
  }
}

TEST_CASE("derivative matches finite differences") {
  const double h = 1e-5;
  for (double m = -10.0; m <= 10.0; m += 0.1) {
    double fd = (loss_value(LossKind::logistic, m + h) -
                 loss_value(LossKind::logistic, m - h)) / (2 * h);
    CHECK(std::abs(loss_derivative(LossKind::logistic, m) - fd) <= 1e-6);
    if (std::abs(m - 1.0) > 2 * h) {
      double fd_sh = (loss_value(LossKind::squared_hinge, m + h) -
                      loss_value(LossKind::squared_hinge, m - h)) / (2 * h);
      CHECK(std::abs(loss_derivative(LossKind::squared_hinge, m) - fd_sh) <= 1e-6);
    }
  }
}

TEST_CASE("logistic loss is overflow safe") {
  double lo = loss_value(LossKind::logistic, -1000.0);
  CHECK(std::isfinite(lo));
  CHECK(lo == doctest::Approx(1000.0).epsilon(1e-9));
  double hi = loss_value(LossKind::logistic, 1000.0);
  CHECK(hi >= 0.0);
  CHECK(hi <= 1e-300);
}

TEST_CASE("regularizer value") {
  WeightMap w;
  w[pat("A")] = 2.0;
  CHECK(regularizer_value({1.0, 1.0}, w) == 2.0);
  CHECK(regularizer_value({1.0, 0.0}, w) == 2.0);  // 1/2 * 2^2

  WeightMap w2;
  w2[pat("A")] = 1.0;
  w2[pat("B")] = -1.0;
  CHECK(regularizer_value({1.0, 0.5}, w2) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("penalty slope") {
  CHECK(penalty_slope({0.0, 0.5}, 7.0, 3.5) == 3.5);
  CHECK(penalty_slope({1.0, 1.0}, 0.0, 0.4) == 0.0);  // soft threshold
  CHECK(penalty_slope({1.0, 0.0}, 2.0, 1.0) == 3.0);
  CHECK(penalty_slope({1.0, 1.0}, 0.0, 1.4) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(penalty_slope({1.0, 1.0}, 0.0, -1.4) == doctest::Approx(-0.4).epsilon(1e-12));
  CHECK(penalty_slope({2.0, 1.0}, -1.0, 0.0) == -2.0);  // sign(beta) term
}

TEST_CASE("total objective") {
  WeightMap empty;
  std::vector<double> zeros(4, 0.0);
  CHECK(total_objective(LossKind::logistic, {1.0, 0.5}, zeros, empty) ==
        doctest::Approx(4 * std::log(2.0)).epsilon(1e-12));
  CHECK(total_objective(LossKind::squared_hinge, {1.0, 0.5}, zeros, empty) == 4.0);

  std::vector<double> margins = {1.0, -1.0};
  CHECK(total_objective(LossKind::squared_hinge, {0.0, 0.5}, margins, empty) == 4.0);
}
