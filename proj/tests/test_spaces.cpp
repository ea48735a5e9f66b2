#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hankel/errors.hpp"
#include "hankel/spaces.hpp"
#include "hankel/test_functions.hpp"
#include "oracles.hpp"

using namespace hankel;
using doctest::Approx;
using cd = std::complex<double>;

namespace {

TaylorPolynomial random_poly(std::mt19937_64& g, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cd> a(deg(g) + 1);
  for (auto& c : a) c = {u(g), u(g)};
  return TaylorPolynomial(a);
}

// (α+1) ∫ (1-|z|²)^α |z|^{2k} dA = (α+1) B(k+1, α+1)
double bergman2_oracle(const TaylorPolynomial& f, double alpha) {
  double s = 0;
  for (std::size_t k = 0; k <= f.degree(); ++k) s += std::norm(f[k]) * (alpha + 1) * boost::math::beta(k + 1.0, alpha + 1.0);
  return std::sqrt(s);
}

TaylorPolynomial square(const TaylorPolynomial& f) {
  std::vector<cd> a(2 * f.degree() + 1, 0.0);
  for (std::size_t i = 0; i <= f.degree(); ++i)
    for (std::size_t j = 0; j <= f.degree(); ++j) a[i + j] += f[i] * f[j];
  return TaylorPolynomial(a);
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(TaylorPolynomial::from_real(std::vector<double>{1, 1, 1, 1}).evaluate(0.5) == cd(1.875));
  const TaylorPolynomial f({cd(2, 1), cd(3), cd(4)});
  CHECK(f.evaluate(0.0) == cd(2, 1));
  const KernelTestFunction fb(FamilySpec::h1(), 0.5, 200);
  const double closed = 0.75 / (0.85 * 0.85);
  CHECK(fb.polynomial().evaluate(0.3).real() == Approx(closed).epsilon(1e-14));
  CHECK(fb.evaluate(0.3).real() == Approx(closed).epsilon(1e-14));
  CHECK_THROWS_AS(f.evaluate(cd(1.0, 0.1)), DomainError);
}

TEST_CASE("derivative") {
  const auto d = TaylorPolynomial::from_real(std::vector<double>{1, 0, 1}).derivative();
  CHECK(d.coeffs() == std::vector<cd>{0.0, 2.0});
  CHECK(TaylorPolynomial::from_real(std::vector<double>{5}).derivative().coeffs() == std::vector<cd>{0.0});
  const auto g = TaylorPolynomial::from_real(std::vector<double>(6, 1.0)).derivative();
  for (std::size_t k = 0; k <= 4; ++k) CHECK(g[k] == cd(k + 1.0));
}

TEST_CASE("integral means") {
  for (std::size_t n : {0u, 3u, 17u})
    for (double r : {0.0, 0.4, 0.9, 1.0}) {
      const auto zn = TaylorPolynomial::monomial(n);
      CHECK(integral_mean(zn, r, std::numeric_limits<double>::infinity()) == Approx(std::pow(r, n)).epsilon(1e-14));
      CHECK(integral_mean(zn, r, 2.0) == Approx(std::pow(r, n)).epsilon(1e-14));
    }
  const auto f = TaylorPolynomial::from_real(std::vector<double>{1, 1});
  CHECK(integral_mean(f, 1.0, 2.0) == Approx(std::sqrt(1.0 + 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(integral_mean(f, 1.0, 0.0), ArgumentError);
  CHECK(integral_mean(f, 1.0, 1.0) == Approx(4.0 / std::numbers::pi).epsilon(1e-6));
  const double m3 = oracle::integrate([](double x) { return std::pow(2.0 * std::abs(std::cos(x / 2)), 3.0); }, 0.0,
                                      2 * std::numbers::pi) / (2 * std::numbers::pi);
  QuadratureScheme fine;
  fine.refinement_tolerance = 1e-13;
  CHECK(integral_mean(f, 1.0, 3.0, fine) == Approx(std::cbrt(m3)).epsilon(1e-11));
  CHECK(integral_mean(f, 1.0, 3.0) == Approx(std::cbrt(m3)).epsilon(1e-6));
}

TEST_CASE("property: integral means are non-decreasing in r") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_poly(g, 30);
    for (double p : {0.5, 1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
      double prev = 0.0;
      for (int k = 0; k <= 20; ++k) {
        const double m = integral_mean(f, k / 20.0, p);
        CHECK(m >= prev * (1 - 1e-9));
        prev = m;
      }
    }
  }
}

TEST_CASE("norm examples") {
  const TaylorPolynomial one = TaylorPolynomial::monomial(0);
  for (double p : {0.5, 1.0, 2.0, 3.5, 4.0})
    for (double a : {-0.9, -0.5, 0.0, 1.0, 2.5}) {
      CHECK(norm(one, SpaceSpec::bergman(p, a)) == Approx(1.0).epsilon(1e-8));
      CHECK(norm(one, SpaceSpec::dirichlet(p, a)) == Approx(1.0).epsilon(1e-8));
    }
  for (double p : {0.5, 1.0, 2.0, 3.0}) CHECK(norm(TaylorPolynomial::monomial(9), SpaceSpec::hardy(p)) == Approx(1.0).epsilon(1e-12));
  const auto f = TaylorPolynomial::from_real(std::vector<double>{1, 1});
  CHECK(norm(f, SpaceSpec::bergman(2, 0)) == Approx(std::sqrt(1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(norm(f, SpaceSpec::bergman(2, -1)), ArgumentError);
}

TEST_CASE("property: Parseval cross-checks for Hardy(2) and Bergman(2, alpha)") {
  std::mt19937_64 g(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(g, 100);
    double h2 = 0;
    for (const auto& c : f.coeffs()) h2 += std::norm(c);
    CHECK(norm(f, SpaceSpec::hardy(2)) == Approx(std::sqrt(h2)).epsilon(1e-10));
    for (double a : {-0.7, 0.0, 1.5}) CHECK(norm(f, SpaceSpec::bergman(2, a)) == Approx(bergman2_oracle(f, a)).epsilon(1e-10));
  }
}

TEST_CASE("Bergman(4,1) through the square of f") {
  std::mt19937_64 g(6);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_poly(g, 40);
    const double o = std::sqrt(bergman2_oracle(square(f), 1.0));
    CHECK(norm(f, SpaceSpec::bergman(4, 1)) == Approx(o).epsilon(1e-10));
  }
}

TEST_CASE("Dirichlet and log-weighted norms") {
  std::mt19937_64 g(7);
  const auto f = random_poly(g, 30);
  const double d2 = std::abs(f[0]) + bergman2_oracle(f.derivative(), 0.5);
  CHECK(norm(f, SpaceSpec::dirichlet(2, 0.5)) == Approx(d2).epsilon(1e-10));
  CHECK(norm(f, SpaceSpec::log_bergman1(0.0)) == Approx(norm(f, SpaceSpec::bergman(1, 0))).epsilon(1e-12));
  CHECK(norm(f, SpaceSpec::log_dirichlet1(0.0)) == Approx(norm(f, SpaceSpec::dirichlet(1, 0))).epsilon(1e-12));
  for (double gam : {-0.5, 0.5, 1.0}) {
    const double o = oracle::integrate_singular(
        [&](double u) { return std::pow(std::log(2.0 / u), gam) * 2.0 * (1.0 - u); }, 1.0);
    CHECK(norm(TaylorPolynomial::monomial(0), SpaceSpec::log_bergman1(gam)) == Approx(o).epsilon(1e-10));
  }
}

TEST_CASE("Bloch norms are lower estimates close to the supremum") {
  for (std::size_t n : {1u, 5u, 40u}) {
    // sup (1-r²) n r^{n-1} is attained at r² = (n-1)/(n+1).
    const double r2 = (n - 1.0) / (n + 1.0);
    const double sup = (1 - r2) * n * std::pow(std::sqrt(r2), n - 1.0);
    const double v = norm(TaylorPolynomial::monomial(n), SpaceSpec::bloch());
    CHECK(v <= sup * (1 + 1e-12));
    CHECK(v >= sup * (1 - 1e-3));
  }
  const double lb = norm(TaylorPolynomial::monomial(5), SpaceSpec::log_bloch(0.0));
  CHECK(lb == Approx(norm(TaylorPolynomial::monomial(5), SpaceSpec::bloch())).epsilon(1e-14));
}

TEST_CASE("property: growth estimate |f(z)| <= C ||f||_B log(2/(1-|z|)) with C = 2") {
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto f = random_poly(g, 40);
    const double b = norm(f, SpaceSpec::bloch());
    for (int k = 0; k < 20; ++k) {
      const double r = 1.0 - std::pow(10.0, -4.0 * u(g));
      const cd z = std::polar(r, 2 * std::numbers::pi * u(g));
      worst = std::max(worst, std::abs(f.evaluate(z)) / (b * std::log(2.0 / (1.0 - r))));
    }
  }
  MESSAGE("growth estimate worst ratio " << worst);
  CHECK(worst <= 2.0);
}

TEST_CASE("property: coefficient inequality sum |a_n|(n+1)^-(1+alpha) <= C ||f||_{D^1_alpha}, C = 2") {
  std::mt19937_64 g(9);
  double worst = 0.0;
  for (double a : {-0.75, -0.5, 0.0, 0.5, 1.0})
    for (int i = 0; i < 20; ++i) {
      const auto f = random_poly(g, 60);
      double s = 0;
      for (std::size_t n = 0; n <= f.degree(); ++n) s += std::abs(f[n]) * std::pow(n + 1.0, -(1.0 + a));
      worst = std::max(worst, s / norm(f, SpaceSpec::dirichlet(1, a)));
    }
  MESSAGE("coefficient inequality worst ratio " << worst);
  CHECK(worst <= 2.0);
}

TEST_CASE("coefficient norms") {
  const auto ones = TaylorPolynomial::from_real(std::vector<double>(10, 1.0));
  double h10 = 0;
  for (int n = 1; n <= 10; ++n) h10 += 1.0 / n;
  CHECK(coefficient_norm(ones, SpaceSpec::dirichlet(1, 0)) == Approx(h10).epsilon(1e-15));
  CHECK(h10 == Approx(2.928968253968254).epsilon(1e-15));
  for (double p : {1.5, 2.0, 4.0}) CHECK(coefficient_norm(TaylorPolynomial::monomial(0), SpaceSpec::bergman(p, 1)) == 1.0);
  std::vector<double> a(1001);
  double o = 1.0;
  for (std::size_t n = 0; n <= 1000; ++n) a[n] = 1.0 / (n + 1.0);
  for (std::size_t n = 1; n <= 1000; ++n) o += 1.0 / (n * (n + 1.0) * (n + 1.0));
  const double c = coefficient_norm(a, SpaceSpec::bergman(2, 0));
  CHECK(c == Approx(std::sqrt(o)).epsilon(1e-14));
  const double q = norm(TaylorPolynomial::from_real(a), SpaceSpec::bergman(2, 0));
  CHECK(q / c > 0.1);
  CHECK(q / c < 10.0);

  CHECK_THROWS_AS(coefficient_norm(std::vector<double>{1, -1}, SpaceSpec::dirichlet(1, 0)), PreconditionError);
  CHECK_THROWS_AS(coefficient_norm(std::vector<double>{1, 0.5, 0.6}, SpaceSpec::dirichlet(1, 0)), PreconditionError);
  CHECK_THROWS_AS(coefficient_norm(TaylorPolynomial({cd(1, 1)}), SpaceSpec::dirichlet(1, 0)), PreconditionError);
  CHECK_THROWS_AS(coefficient_norm(std::vector<double>{1}, SpaceSpec::hardy(2)), ArgumentError);
  CHECK_THROWS_AS(coefficient_norm(std::vector<double>{1}, SpaceSpec::dirichlet(1, -0.5)), ArgumentError);
  // a_0 may sit below a_1: the constant term does not affect membership.
  CHECK_NOTHROW(coefficient_norm(std::vector<double>{0, 1, 0.5}, SpaceSpec::dirichlet(1, 0)));
}

TEST_CASE("property: equivalence band and degree-doubling stability") {
  std::mt19937_64 g(10);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  const SpaceSpec spaces[] = {SpaceSpec::bergman(2, 0), SpaceSpec::bergman(4, 1), SpaceSpec::dirichlet(2, 0.5),
                              SpaceSpec::dirichlet(1, 0)};
  for (int i = 0; i < 6; ++i) {
    const double s = u(g);
    auto ratio = [&](std::size_t K, const SpaceSpec& sp) {
      std::vector<double> a(K + 1);
      for (std::size_t n = 0; n <= K; ++n) a[n] = std::pow(n + 1.0, -s);
      return norm(TaylorPolynomial::from_real(a), sp) / coefficient_norm(a, sp);
    };
    for (const auto& sp : spaces) {
      const double r1 = ratio(256, sp), r2 = ratio(512, sp);
      CAPTURE(s);
      CHECK(r1 > 0.1);
      CHECK(r1 < 10.0);
      CHECK(std::abs(r2 / r1 - 1.0) < 0.2);
    }
  }
}

TEST_CASE("test-function families") {
  const KernelTestFunction f(FamilySpec::h1(), 0.5, 60);
  CHECK(f.coefficients()[0] == 0.75);
  CHECK(f.coefficients()[1] == 0.75);
  CHECK(f.coefficients()[2] == 0.5625);
  for (double b : {0.6, 0.9, 0.99}) {
    const KernelTestFunction h(FamilySpec::h1(), b, default_truncation(b));
    CHECK(h.polynomial().evaluate(0.0).real() == Approx(1 - b * b).epsilon(1e-15));
    // Series oracle for the coefficients: (1-b²)(k+1)b^k.
    for (std::size_t k : {0u, 10u, 100u}) CHECK(h.coefficients()[k] == Approx((1 - b * b) * (k + 1) * std::pow(b, k)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(KernelTestFunction(FamilySpec::h1(), 0.9, 50), TruncationError);
  CHECK_THROWS_AS(KernelTestFunction(FamilySpec::h1(), 1.0, 500), DomainError);
  CHECK_THROWS_AS(KernelTestFunction(FamilySpec::h1(), 0.0, 500), DomainError);
  CHECK(default_truncation(0.75) == 200);
}

TEST_CASE("kernel norms: series route against quadrature route") {
  for (double b : {0.75, 0.9, 0.97}) {
    const KernelTestFunction h(FamilySpec::h1(), b, default_truncation(b));
    CHECK(h.exact_norm(SpaceSpec::hardy(1)) == Approx(1.0).epsilon(1e-12));
    CHECK(h.quadrature_norm(SpaceSpec::hardy(1)) == Approx(1.0).epsilon(1e-6));
    const KernelTestFunction bf(FamilySpec::bergman(4, 1), b, default_truncation(b));
    CHECK(bf.quadrature_norm(SpaceSpec::bergman(4, 1)) == Approx(bf.exact_norm(SpaceSpec::bergman(4, 1))).epsilon(1e-8));
    const KernelTestFunction df(FamilySpec::dirichlet(2, 0.5), b, default_truncation(b));
    CHECK(df.quadrature_norm(SpaceSpec::dirichlet(2, 0.5)) ==
          Approx(df.exact_norm(SpaceSpec::dirichlet(2, 0.5))).epsilon(1e-8));
    const KernelTestFunction d1(FamilySpec::dirichlet(1, -0.5), b, default_truncation(b));
    CHECK(d1.quadrature_norm(SpaceSpec::dirichlet(1, -0.5)) ==
          Approx(d1.exact_norm(SpaceSpec::dirichlet(1, -0.5))).epsilon(1e-8));
    // The truncated polynomial agrees with the closed form.
    CHECK(norm(bf.polynomial(), SpaceSpec::bergman(4, 1)) == Approx(bf.exact_norm(SpaceSpec::bergman(4, 1))).epsilon(1e-8));
  }
}

TEST_CASE("Bergman family norms stay in a fixed band") {
  double lo = 1e9, hi = 0;
  for (int j = 2; j <= 14; ++j) {
    const double b = 1 - std::ldexp(1.0, -j);
    const KernelTestFunction f(FamilySpec::bergman(4, 1), b, default_truncation(b));
    const double v = f.exact_norm(SpaceSpec::bergman(4, 1));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const KernelTestFunction f9(FamilySpec::bergman(4, 1), 0.9, default_truncation(0.9));
  const double q9 = f9.quadrature_norm(SpaceSpec::bergman(4, 1));
  CHECK(q9 >= lo * (1 - 1e-8));
  CHECK(q9 <= hi * (1 + 1e-8));
  CHECK(hi / lo < 1.5);
}

TEST_CASE("log coefficient function") {
  const auto f = log_coefficient_function(2);
  CHECK(f[0] == 0.0);
  CHECK(f[1].real() == Approx(1 / std::log(2.0)).epsilon(1e-15));
  CHECK(f[2].real() == Approx(1 / std::log(3.0)).epsilon(1e-15));
  for (auto [p, a, bound] : {std::tuple{2.0, 0.0, 1 / (std::log(2.0) * std::log(2.0)) + 2 / std::log(2.0)},
                             std::tuple{3.0, 1.0, 1 / std::pow(std::log(2.0), 3) + 2 / (2 * std::pow(std::log(2.0), 2))}}) {
    double prev = 0, prev_inc = 1e300;
    for (std::size_t K = 1024; K <= (std::size_t{1} << 20); K *= 2) {
      const double v = std::pow(coefficient_norm(log_coefficient_function(K), SpaceSpec::bergman(p, a)), p);
      const double inc = v - prev;
      CHECK(inc > 0);
      if (prev > 0) CHECK(inc < prev_inc);
      CHECK(v < bound);
      prev_inc = prev > 0 ? inc : prev_inc;
      prev = v;
    }
  }
}
