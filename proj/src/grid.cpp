#include "nephroid/grid.hpp"

namespace nephroid {

namespace {
const std::vector<double> kAlphaGrid = {0.0, 0.1, 0.2, 0.3, 0.4,
                                        0.5, 0.6, 0.7, 0.8, 0.9};
const std::vector<int> kNGrid = {1, 2, 3, 5};
const std::vector<double> kBetaGrid = {1.1, 1.5, 2.0, 5.0};
const std::vector<std::pair<double, double>> kJanowskiGrid = {
    {1.0, -1.0}, {1.0, 0.0}, {0.5, -0.5}, {1.0, 0.5}, {0.25, -1.0}};
}  // namespace

std::vector<ClassId> standard_grid() {
  std::vector<ClassId> out;
  for (auto [A, B] : kJanowskiGrid) out.push_back(ClassId::janowski(A, B));
  for (double a : kAlphaGrid) out.push_back(ClassId::starlike(a));
  out.push_back(ClassId::convex());
  for (double a : kAlphaGrid) out.push_back(ClassId::booth(a));
  for (double a : kAlphaGrid) out.push_back(ClassId::lemniscate(a));
  for (double a : kAlphaGrid) out.push_back(ClassId::exponential(a));
  out.push_back(ClassId::shifted_lemniscate());
  out.push_back(ClassId::cardioid());
  out.push_back(ClassId::rational());
  out.push_back(ClassId::lune());
  out.push_back(ClassId::sine());
  for (int n : kNGrid) out.push_back(ClassId::g1(n));
  for (int n : kNGrid) out.push_back(ClassId::g2(n));
  for (int n : kNGrid) out.push_back(ClassId::g3(n));
  for (int n : kNGrid) out.push_back(ClassId::g4(n));
  for (int n : kNGrid)
    for (double a : kAlphaGrid) out.push_back(ClassId::close_to_star(n, a));
  for (int n : kNGrid) out.push_back(ClassId::macgregor(n));
  for (int n : kNGrid)
    for (double b : kBetaGrid) out.push_back(ClassId::uralegaddi(n, b));
  return out;
}

std::vector<ClassId> representative_set() {
  return {
      ClassId::janowski(1.0, -1.0),
      ClassId::starlike(0.0),
      ClassId::convex(),
      ClassId::booth(0.0),
      ClassId::lemniscate(0.0),
      ClassId::exponential(0.0),
      ClassId::shifted_lemniscate(),
      ClassId::cardioid(),
      ClassId::rational(),
      ClassId::lune(),
      ClassId::sine(),
      ClassId::g1(1),
      ClassId::g2(1),
      ClassId::g3(1),
      ClassId::g4(1),
      ClassId::close_to_star(1, 0.0),
      ClassId::macgregor(1),
      ClassId::uralegaddi(1, 2.0),
  };
}

}  // namespace nephroid
