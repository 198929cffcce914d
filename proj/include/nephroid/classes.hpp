#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nephroid/geometry.hpp"

namespace nephroid {

// Source-class catalogue: for each family, the disk bound on Q_f over
// |z| = r, the closed-form radius, and the extremal Q with its touch data.

enum class ClassTag {
  Janowski,
  StarlikeAlpha,
  Convex,
  BoothBS,
  LemniscateL,
  ExpAlphaE,
  ShiftedLemRL,
  CardioidC,
  RationalR,
  LuneMoon,
  SineS,
  RatioG1,
  RatioG2,
  RatioG3,
  RatioG4,
  CloseToStar,
  MacGregorW,
  UralegaddiM,
};

struct ClassId {
  ClassTag tag = ClassTag::StarlikeAlpha;
  double A = 1.0;      // Janowski upper coefficient
  double B = -1.0;     // Janowski lower coefficient
  double alpha = 0.0;  // order parameter, [0, 1)
  double beta = 2.0;   // Uralegaddi bound, > 1
  int n = 1;           // series index, >= 1

  static ClassId janowski(double A, double B);
  static ClassId starlike(double alpha = 0.0);
  static ClassId convex();
  static ClassId booth(double alpha);
  static ClassId lemniscate(double alpha = 0.0);
  static ClassId exponential(double alpha = 0.0);
  static ClassId shifted_lemniscate();
  static ClassId cardioid();
  static ClassId rational();
  static ClassId lune();
  static ClassId sine();
  static ClassId g1(int n = 1);
  static ClassId g2(int n = 1);
  static ClassId g3(int n = 1);
  static ClassId g4(int n = 1);
  static ClassId close_to_star(int n = 1, double alpha = 0.0);
  static ClassId macgregor(int n = 1);
  static ClassId uralegaddi(int n = 1, double beta = 2.0);
};

/// Throws ParameterError naming the violated constraint.
void validate(const ClassId& id);

std::string class_slug(const ClassId& id);    // CLI selector, e.g. "bs"
std::string display_name(const ClassId& id);  // e.g. "BS*(a)"
std::string param_string(const ClassId& id);  // e.g. "alpha0.1", "n2_beta1.5"

/// Center/radius of the proof's disk bound on Q_f over |z| = r.
/// Centers are real for every catalogued class. Valid on r in [0, 1).
struct DiskBound {
  std::function<double(double)> center;
  std::function<double(double)> radius;
};

DiskBound disk_bound(const ClassId& id);

/// The paper's closed-form radius, capped at 1.
double closed_form_radius(const ClassId& id);

struct TouchPoint {
  double angle;  // boundary angle of the circle |z| = rho where contact occurs
  double value;  // 1/3 or 5/3
};

struct ExtremalQ {
  std::function<Complex(Complex)> q;  // closed-form Q of the extremal function
  std::vector<TouchPoint> touches;    // declared touch points (empty if none)
  bool sharp = true;                  // false only for LuneMoon and SineS
};

ExtremalQ extremal_q(const ClassId& id);

/// Closed-form extremal f when the family states one; empty function for the
/// families where only Q is stated (LemniscateL, ExpAlphaE, ShiftedLemRL,
/// LuneMoon, SineS), which are validated by q == target phi instead.
std::function<Complex(Complex)> extremal_f(const ClassId& id);

/// False only for LuneMoon and SineS (stated radii are not sharp).
bool is_sharp_family(ClassTag tag);

/// Integer power by repeated multiplication; n >= 0.
Complex cpow_int(Complex z, int n);

}  // namespace nephroid
