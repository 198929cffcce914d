#include "nephroid/classes.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace nephroid {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kRationalK = kSqrt2 + 1.0;  // pole parameter of phi_0

// alpha threshold above which the exponential family is already contained
const double kExpAlphaFull = (3.0 * std::numbers::e - 5.0) / (3.0 * std::numbers::e - 3.0);

Complex checked_div(Complex num, Complex den, const char* what) {
  if (std::abs(den) < 1e-12) {
    throw PoleProximity(std::string("denominator of ") + what + " below 1e-12");
  }
  return num / den;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

double sigma_to_rho(double sigma, int n) {
  return n == 1 ? sigma : std::pow(sigma, 1.0 / n);
}

}  // namespace

Complex cpow_int(Complex z, int n) {
  Complex p = 1.0;
  for (int i = 0; i < n; ++i) p *= z;
  return p;
}

bool is_sharp_family(ClassTag tag) {
  return tag != ClassTag::LuneMoon && tag != ClassTag::SineS;
}

ClassId ClassId::janowski(double A, double B) { return {ClassTag::Janowski, A, B, 0, 2, 1}; }
ClassId ClassId::starlike(double alpha) { return {ClassTag::StarlikeAlpha, 1, -1, alpha, 2, 1}; }
ClassId ClassId::convex() { return {ClassTag::Convex, 1, -1, 0, 2, 1}; }
ClassId ClassId::booth(double alpha) { return {ClassTag::BoothBS, 1, -1, alpha, 2, 1}; }
ClassId ClassId::lemniscate(double alpha) { return {ClassTag::LemniscateL, 1, -1, alpha, 2, 1}; }
ClassId ClassId::exponential(double alpha) { return {ClassTag::ExpAlphaE, 1, -1, alpha, 2, 1}; }
ClassId ClassId::shifted_lemniscate() { return {ClassTag::ShiftedLemRL, 1, -1, 0, 2, 1}; }
ClassId ClassId::cardioid() { return {ClassTag::CardioidC, 1, -1, 0, 2, 1}; }
ClassId ClassId::rational() { return {ClassTag::RationalR, 1, -1, 0, 2, 1}; }
ClassId ClassId::lune() { return {ClassTag::LuneMoon, 1, -1, 0, 2, 1}; }
ClassId ClassId::sine() { return {ClassTag::SineS, 1, -1, 0, 2, 1}; }
ClassId ClassId::g1(int n) { return {ClassTag::RatioG1, 1, -1, 0, 2, n}; }
ClassId ClassId::g2(int n) { return {ClassTag::RatioG2, 1, -1, 0, 2, n}; }
ClassId ClassId::g3(int n) { return {ClassTag::RatioG3, 1, -1, 0, 2, n}; }
ClassId ClassId::g4(int n) { return {ClassTag::RatioG4, 1, -1, 0, 2, n}; }
ClassId ClassId::close_to_star(int n, double alpha) { return {ClassTag::CloseToStar, 1, -1, alpha, 2, n}; }
ClassId ClassId::macgregor(int n) { return {ClassTag::MacGregorW, 1, -1, 0, 2, n}; }
ClassId ClassId::uralegaddi(int n, double beta) { return {ClassTag::UralegaddiM, 1, -1, 0, beta, n}; }

void validate(const ClassId& id) {
  auto need = [](bool ok, const char* constraint) {
    if (!ok) throw ParameterError(constraint);
  };
  switch (id.tag) {
    case ClassTag::Janowski:
      need(-1.0 <= id.B && id.B < id.A && id.A <= 1.0, "janowski: need -1 <= B < A <= 1");
      break;
    case ClassTag::StarlikeAlpha:
    case ClassTag::BoothBS:
    case ClassTag::LemniscateL:
    case ClassTag::ExpAlphaE:
      need(0.0 <= id.alpha && id.alpha < 1.0, "need 0 <= alpha < 1");
      break;
    case ClassTag::CloseToStar:
      need(0.0 <= id.alpha && id.alpha < 1.0, "cs: need 0 <= alpha < 1");
      need(id.n >= 1, "cs: need n >= 1");
      break;
    case ClassTag::RatioG1:
    case ClassTag::RatioG2:
    case ClassTag::RatioG3:
    case ClassTag::RatioG4:
    case ClassTag::MacGregorW:
      need(id.n >= 1, "need n >= 1");
      break;
    case ClassTag::UralegaddiM:
      need(id.n >= 1, "m: need n >= 1");
      need(id.beta > 1.0, "m: need beta > 1");
      break;
    default:
      break;  // parameter-free families
  }
}

std::string class_slug(const ClassId& id) {
  switch (id.tag) {
    case ClassTag::Janowski: return "janowski";
    case ClassTag::StarlikeAlpha: return "starlike";
    case ClassTag::Convex: return "convex";
    case ClassTag::BoothBS: return "bs";
    case ClassTag::LemniscateL: return "lemniscate";
    case ClassTag::ExpAlphaE: return "exp";
    case ClassTag::ShiftedLemRL: return "rl";
    case ClassTag::CardioidC: return "cardioid";
    case ClassTag::RationalR: return "rational";
    case ClassTag::LuneMoon: return "lune";
    case ClassTag::SineS: return "sine";
    case ClassTag::RatioG1: return "g1";
    case ClassTag::RatioG2: return "g2";
    case ClassTag::RatioG3: return "g3";
    case ClassTag::RatioG4: return "g4";
    case ClassTag::CloseToStar: return "cs";
    case ClassTag::MacGregorW: return "w";
    case ClassTag::UralegaddiM: return "m";
  }
  return "?";
}

std::string display_name(const ClassId& id) {
  switch (id.tag) {
    case ClassTag::Janowski: return "S*[A,B]";
    case ClassTag::StarlikeAlpha: return "S*(alpha)";
    case ClassTag::Convex: return "C";
    case ClassTag::BoothBS: return "BS*(alpha)";
    case ClassTag::LemniscateL: return "S*_L(alpha)";
    case ClassTag::ExpAlphaE: return "S*_(alpha,e)";
    case ClassTag::ShiftedLemRL: return "S*_RL";
    case ClassTag::CardioidC: return "S*_C";
    case ClassTag::RationalR: return "S*_R";
    case ClassTag::LuneMoon: return "S*_lune";
    case ClassTag::SineS: return "S*_sin";
    case ClassTag::RatioG1: return "G1";
    case ClassTag::RatioG2: return "G2";
    case ClassTag::RatioG3: return "G3";
    case ClassTag::RatioG4: return "G4";
    case ClassTag::CloseToStar: return "CS*_n(alpha)";
    case ClassTag::MacGregorW: return "W_n";
    case ClassTag::UralegaddiM: return "M_n(beta)";
  }
  return "?";
}

std::string param_string(const ClassId& id) {
  switch (id.tag) {
    case ClassTag::Janowski:
      return "A" + fmt_g(id.A) + "_B" + fmt_g(id.B);
    case ClassTag::StarlikeAlpha:
    case ClassTag::BoothBS:
    case ClassTag::LemniscateL:
    case ClassTag::ExpAlphaE:
      return "alpha" + fmt_g(id.alpha);
    case ClassTag::RatioG1:
    case ClassTag::RatioG2:
    case ClassTag::RatioG3:
    case ClassTag::RatioG4:
    case ClassTag::MacGregorW:
      return "n" + std::to_string(id.n);
    case ClassTag::CloseToStar:
      return "n" + std::to_string(id.n) + "_alpha" + fmt_g(id.alpha);
    case ClassTag::UralegaddiM:
      return "n" + std::to_string(id.n) + "_beta" + fmt_g(id.beta);
    default:
      return "std";
  }
}

DiskBound disk_bound(const ClassId& id) {
  validate(id);
  const double A = id.A, B = id.B, alpha = id.alpha, beta = id.beta;
  const int n = id.n;
  auto unit_center = [](double) { return 1.0; };

  switch (id.tag) {
    case ClassTag::Janowski:
      return {[A, B](double r) { return (1.0 - A * B * r * r) / (1.0 - B * B * r * r); },
              [A, B](double r) { return (A - B) * r / (1.0 - B * B * r * r); }};
    case ClassTag::StarlikeAlpha:
      return disk_bound(ClassId::janowski(1.0 - 2.0 * alpha, -1.0));
    case ClassTag::Convex:
      // via S*(1/2) = S*[0,-1]
      return disk_bound(ClassId::janowski(0.0, -1.0));
    case ClassTag::BoothBS:
      return {unit_center, [alpha](double r) { return r / (1.0 - alpha * r * r); }};
    case ClassTag::LemniscateL:
      return {unit_center,
              [alpha](double r) { return (1.0 - alpha) * (1.0 - std::sqrt(1.0 - r)); }};
    case ClassTag::ExpAlphaE:
      return {unit_center, [alpha](double r) { return (1.0 - alpha) * std::expm1(r); }};
    case ClassTag::ShiftedLemRL:
      return {unit_center, [](double r) {
                const double c = 2.0 * (kSqrt2 - 1.0);
                return 1.0 - kSqrt2 + (kSqrt2 - 1.0) * std::sqrt((1.0 + r) / (1.0 - c * r));
              }};
    case ClassTag::CardioidC:
      return {unit_center, [](double r) { return 2.0 * (r * r + 2.0 * r) / 3.0; }};
    case ClassTag::RationalR:
      return {unit_center, [](double r) {
                return r * (kRationalK + r) / (kRationalK * (kRationalK - r));
              }};
    case ClassTag::LuneMoon:
      return {unit_center,
              [](double r) { return 1.0 + r - std::sqrt(1.0 - r * r); }};
    case ClassTag::SineS:
      return {unit_center, [](double r) { return std::sinh(r); }};
    case ClassTag::RatioG1:
      return {unit_center, [n](double r) {
                const double s = std::pow(r, n);
                return 4.0 * n * s / (1.0 - s * s);
              }};
    case ClassTag::RatioG2:
    case ClassTag::RatioG3:
      return {unit_center, [n](double r) {
                const double s = std::pow(r, n);
                return (3.0 * n * s + n * s * s) / (1.0 - s * s);
              }};
    case ClassTag::RatioG4:
      return {[n](double r) {
                const double s = std::pow(r, n);
                return 1.0 / (1.0 - s * s);
              },
              [n](double r) {
                const double s = std::pow(r, n);
                return ((n + 1.0) * s + n * s * s) / (1.0 - s * s);
              }};
    case ClassTag::CloseToStar:
      return {[n, alpha](double r) {
                const double s = std::pow(r, n);
                return (1.0 + (1.0 - 2.0 * alpha) * s * s) / (1.0 - s * s);
              },
              [n, alpha](double r) {
                const double s = std::pow(r, n);
                return 2.0 * (1.0 + n - alpha) * s / (1.0 - s * s);
              }};
    case ClassTag::MacGregorW:
      return {unit_center, [n](double r) {
                const double s = std::pow(r, n);
                return 2.0 * n * s / (1.0 - s * s);
              }};
    case ClassTag::UralegaddiM:
      // Janowski-type disk in z^n with A = 1-2*beta, B = -1
      return {[n, beta](double r) {
                const double s = std::pow(r, n);
                return (1.0 + (1.0 - 2.0 * beta) * s * s) / (1.0 - s * s);
              },
              [n, beta](double r) {
                const double s = std::pow(r, n);
                return 2.0 * (beta - 1.0) * s / (1.0 - s * s);
              }};
  }
  throw ParameterError("unknown class tag");
}

double closed_form_radius(const ClassId& id) {
  validate(id);
  const double A = id.A, B = id.B, alpha = id.alpha, beta = id.beta;
  const int n = id.n;
  auto cap = [](double rho) { return rho < 1.0 ? rho : 1.0; };

  switch (id.tag) {
    case ClassTag::Janowski:
      return B >= 0.0 ? cap(2.0 / (3.0 * A - B)) : cap(2.0 / (3.0 * A - 5.0 * B));
    case ClassTag::StarlikeAlpha:
      return cap(2.0 / (3.0 * (1.0 - 2.0 * alpha) + 5.0));
    case ClassTag::Convex:
      return 2.0 / 5.0;
    case ClassTag::BoothBS:
      return 4.0 / (3.0 + std::sqrt(9.0 + 16.0 * alpha));
    case ClassTag::LemniscateL:
      if (alpha >= 1.0 / 3.0) return 1.0;
      return cap(4.0 * (2.0 - 3.0 * alpha) / (9.0 * (1.0 - alpha) * (1.0 - alpha)));
    case ClassTag::ExpAlphaE:
      if (alpha >= kExpAlphaFull) return 1.0;
      return cap(std::log((5.0 - 3.0 * alpha) / (3.0 - 3.0 * alpha)));
    case ClassTag::ShiftedLemRL:
      return 56.0 / (122.0 - 41.0 * kSqrt2);
    case ClassTag::CardioidC:
      return kSqrt2 - 1.0;
    case ClassTag::RationalR:
      return 1.0 / (3.0 * kSqrt2 - 3.0);
    case ClassTag::LuneMoon:
      return (std::sqrt(17.0) - 1.0) / 6.0;
    case ClassTag::SineS:
      return std::asinh(2.0 / 3.0);
    case ClassTag::RatioG1:
      return sigma_to_rho(1.0 / (3.0 * n + std::sqrt(9.0 * n * n + 1.0)), n);
    case ClassTag::RatioG2:
      return sigma_to_rho(
          4.0 / (9.0 * n + std::sqrt(81.0 * n * n + 24.0 * n + 16.0)), n);
    case ClassTag::RatioG3:
      return sigma_to_rho(
          4.0 / (9.0 * n + std::sqrt((4.0 + 9.0 * n) * (4.0 + 9.0 * n) - 48.0 * n)), n);
    case ClassTag::RatioG4:
      return sigma_to_rho(
          4.0 / (3.0 * (n + 1.0) +
                 std::sqrt((1.0 + 3.0 * n) * (1.0 + 3.0 * n) + 36.0 * n)),
          n);
    case ClassTag::CloseToStar: {
      const double c = 1.0 + n - alpha;
      return sigma_to_rho(
          2.0 / (3.0 * c + std::sqrt(9.0 * c * c + 4.0 * (4.0 - 3.0 * alpha))), n);
    }
    case ClassTag::MacGregorW:
      return sigma_to_rho(2.0 / (3.0 * n + std::sqrt(9.0 * n * n + 4.0)), n);
    case ClassTag::UralegaddiM:
      return std::pow(3.0 * beta - 2.0, -1.0 / n);
  }
  throw ParameterError("unknown class tag");
}

ExtremalQ extremal_q(const ClassId& id) {
  validate(id);
  const double A = id.A, B = id.B, alpha = id.alpha, beta = id.beta;
  const int n = id.n;
  const double pi = std::numbers::pi;

  ExtremalQ out;
  out.sharp = is_sharp_family(id.tag);

  switch (id.tag) {
    case ClassTag::Janowski:
      out.q = [A, B](Complex z) {
        return checked_div(1.0 + A * z, 1.0 + B * z, "(1+Az)/(1+Bz)");
      };
      if (B >= 0.0) out.touches.push_back({pi, 1.0 / 3.0});
      if (B <= 0.0) out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::StarlikeAlpha:
      out.q = [alpha](Complex z) {
        return checked_div(1.0 + (1.0 - 2.0 * alpha) * z, 1.0 - z, "k_alpha Q");
      };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::Convex:
      out.q = [](Complex z) { return checked_div(1.0, 1.0 - z, "1/(1-z)"); };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::BoothBS:
      out.q = [alpha](Complex z) {
        return 1.0 + checked_div(z, 1.0 - alpha * z * z, "G_alpha");
      };
      out.touches.push_back({pi, 1.0 / 3.0});
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::LemniscateL:
      out.q = [alpha](Complex z) {
        return alpha + (1.0 - alpha) * std::sqrt(1.0 + z);
      };
      out.touches.push_back({pi, 1.0 / 3.0});
      break;
    case ClassTag::ExpAlphaE:
      out.q = [alpha](Complex z) { return alpha + (1.0 - alpha) * std::exp(z); };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::ShiftedLemRL:
      out.q = [](Complex z) {
        const double c = 2.0 * (kSqrt2 - 1.0);
        return kSqrt2 -
               (kSqrt2 - 1.0) * std::sqrt(checked_div(1.0 - z, 1.0 + c * z, "phi_RL"));
      };
      out.touches.push_back({pi, 1.0 / 3.0});
      break;
    case ClassTag::CardioidC:
      out.q = [](Complex z) { return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0; };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::RationalR:
      out.q = [](Complex z) {
        return checked_div(kRationalK * kRationalK + z * z,
                           kRationalK * (kRationalK - z), "phi_0");
      };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::LuneMoon:
      out.q = [](Complex z) { return z + std::sqrt(1.0 + z * z); };
      break;
    case ClassTag::SineS:
      out.q = [](Complex z) { return 1.0 + std::sin(z); };
      break;
    case ClassTag::RatioG1:
      out.q = [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return 1.0 + checked_div(4.0 * double(n) * s, 1.0 - s * s, "Q_f1");
      };
      out.touches.push_back({pi / n, 1.0 / 3.0});
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::RatioG2:
      out.q = [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return checked_div(1.0 + 3.0 * double(n) * s + (n - 1.0) * s * s,
                           1.0 - s * s, "Q_f2");
      };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::RatioG3:
      out.q = [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return 1.0 + checked_div(2.0 * double(n) * s, 1.0 + s, "Q_f3 left") +
               checked_div(double(n) * s, 1.0 - s, "Q_f3 right");
      };
      out.touches.push_back({pi / n, 1.0 / 3.0});
      break;
    case ClassTag::RatioG4:
      out.q = [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return 1.0 + checked_div(double(n) * s, 1.0 + s, "Q_f4 left") +
               checked_div(s, 1.0 - s, "Q_f4 right");
      };
      out.touches.push_back({pi / n, 1.0 / 3.0});
      if (n == 1) out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::CloseToStar:
      out.q = [n, alpha](Complex z) {
        const Complex s = cpow_int(z, n);
        return 1.0 + checked_div(double(n) * s, 1.0 + s, "Q_cs left") +
               checked_div((n + 2.0 - 2.0 * alpha) * s, 1.0 - s, "Q_cs right");
      };
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::MacGregorW:
      out.q = [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return 1.0 + checked_div(2.0 * double(n) * s, 1.0 - s * s, "Q_fW");
      };
      out.touches.push_back({pi / n, 1.0 / 3.0});
      out.touches.push_back({0.0, 5.0 / 3.0});
      break;
    case ClassTag::UralegaddiM:
      out.q = [n, beta](Complex z) {
        const Complex s = cpow_int(z, n);
        return 1.0 - checked_div(2.0 * (beta - 1.0) * s, 1.0 - s, "Q_fM");
      };
      // the image moves left along the positive real axis; contact is at 1/3
      out.touches.push_back({0.0, 1.0 / 3.0});
      break;
  }
  return out;
}

std::function<Complex(Complex)> extremal_f(const ClassId& id) {
  validate(id);
  const double A = id.A, B = id.B, alpha = id.alpha, beta = id.beta;
  const int n = id.n;

  switch (id.tag) {
    case ClassTag::Janowski:
      if (B == 0.0) return [A](Complex z) { return z * std::exp(A * z); };
      return [A, B](Complex z) {
        return z * std::exp(((A - B) / B) * std::log(1.0 + B * z));
      };
    case ClassTag::StarlikeAlpha:
      return [alpha](Complex z) {
        return z * std::exp((2.0 * alpha - 2.0) * std::log(1.0 - z));
      };
    case ClassTag::Convex:
      return [](Complex z) { return z / (1.0 - z); };
    case ClassTag::BoothBS:
      if (alpha == 0.0) return [](Complex z) { return z * std::exp(z); };
      return [alpha](Complex z) {
        const double s = std::sqrt(alpha);
        return z * std::exp((std::log(1.0 + s * z) - std::log(1.0 - s * z)) /
                            (2.0 * s));
      };
    case ClassTag::CardioidC:
      return [](Complex z) { return z * std::exp(4.0 * z / 3.0 + z * z / 3.0); };
    case ClassTag::RationalR:
      return [](Complex z) {
        const double k = kRationalK;
        return k * k * z / ((k - z) * (k - z)) * std::exp(-z / k);
      };
    case ClassTag::RatioG1:
      return [n](Complex z) {
        const Complex s = cpow_int(z, n);
        const Complex w = (1.0 + s) / (1.0 - s);
        return z * w * w;
      };
    case ClassTag::RatioG2:
      return [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return z * (1.0 + s) / ((1.0 - s) * (1.0 - s));
      };
    case ClassTag::RatioG3:
      return [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return z * (1.0 + s) * (1.0 + s) / (1.0 - s);
      };
    case ClassTag::RatioG4:
      return [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return z * (1.0 + s) * std::exp(-std::log(1.0 - s) / double(n));
      };
    case ClassTag::CloseToStar:
      return [n, alpha](Complex z) {
        const Complex s = cpow_int(z, n);
        return z * (1.0 + s) *
               std::exp(-((n + 2.0 - 2.0 * alpha) / n) * std::log(1.0 - s));
      };
    case ClassTag::MacGregorW:
      return [n](Complex z) {
        const Complex s = cpow_int(z, n);
        return z * (1.0 + s) / (1.0 - s);
      };
    case ClassTag::UralegaddiM:
      return [n, beta](Complex z) {
        const Complex s = cpow_int(z, n);
        return z * std::exp((2.0 * (beta - 1.0) / n) * std::log(1.0 - s));
      };
    default:
      // only Q has a stated closed form; validated through q == target phi
      return {};
  }
}

}  // namespace nephroid
