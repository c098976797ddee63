// A short walk through the library: build the width-2 frieze from its
// diagonal, mutate a zigzag, evaluate the cluster form in two coordinate
// systems, then sample the circle and watch the discrete form converge.

#include <cstdio>

#include "frieze_lab/frieze_lab.hpp"

using namespace frieze_lab;

int main() {
  std::vector<Rational> a{Rational(1), Rational(2)};
  auto F = diagonal_to_frieze(a);
  std::printf("frieze of width %d, period %d\n", F.width(), F.period());
  for (int r = 0; r <= F.width() + 1; ++r) {
    std::printf("  row %d:", r);
    for (int j = 0; j < F.period(); ++j) std::printf(" %s", F.at(r, j).str().c_str());
    std::printf("\n");
  }

  auto P = polygon_from_frieze(F);
  std::printf("polygon:");
  for (const auto& v : P.vertices) std::printf(" (%s, %s)", v.x.str().c_str(), v.y.str().c_str());
  std::printf("\nclosed: %s\n", is_closed(equation_of(F)) ? "yes" : "no");

  ZigzagCoords<Rational> z{ZigzagPath::diagonal(2), a};
  auto m = elementary_mutation(z, 0);
  std::printf("mutation at entry 1: (%s, %s) -> (%s, %s), start column %d, move %s\n", z.values[0].str().c_str(),
              z.values[1].str().c_str(), m.values[0].str().c_str(), m.values[1].str().c_str(), m.path.start,
              to_string(m.path.moves[0]).c_str());

  TangentVector<Rational> xi{Rational(1), Rational(0)}, eta{Rational(0), Rational(1)};
  auto w_diag = omega_diagonal(a, xi, eta);
  auto w_zig = omega_zigzag(m, pushforward(z, m.path, xi), pushforward(z, m.path, eta));
  std::printf("omega on the diagonal: %s, on the mutated zigzag: %s\n", w_diag.str().c_str(), w_zig.str().c_str());

  auto curve = ProjectiveCurve::tan_family(0.2);
  auto X = SmoothFunction::from([](const Series& x) { return sin(Series(4.0) * x) + Series(0.25) * cos(Series(2.0) * x); });
  auto Y = SmoothFunction::from([](const Series& x) { return cos(Series(6.0) * x) + Series(0.5) * sin(Series(2.0) * x); });
  auto rep = convergence_study(curve, X, Y, 0.5, {100, 200, 400, 800});
  std::printf("continuum integral %.10f, -(1/4c) omega_K %.10f\n", rep.integral, rep.kirillov_scaled);
  for (const auto& r : rep.records) std::printf("  n = %4d  discrete %.10f  error %.3e\n", r.n, r.discrete, r.err_kirillov);
  return 0;
}
