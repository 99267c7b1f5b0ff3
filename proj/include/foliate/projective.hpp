#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliate/ratfunc.hpp"

namespace foliate {

/// W = Σ A_i dX_i on P² over (X0,X1,X2).
struct ProjectiveForm {
  MPoly a0, a1, a2;
};

/// Checks equal homogeneous degree d + 1, the Euler relation and the absence
/// of a common factor; returns d.
int validate_projective_form(const ProjectiveForm& w);

struct BiDegree {
  int a = 0;
  int b = 0;
  friend bool operator==(const BiDegree&, const BiDegree&) = default;
  BiDegree operator+(const BiDegree& o) const { return {a + o.a, b + o.b}; }
};

/// Variables of the bi-graded ring: X0, X1, Y0, Y1.
const VarList& hirzebruch_vars();

/// Bi-degree for X0,X1 ↦ (1,0), Y0 ↦ (0,1), Y1 ↦ (-δ,1). nullopt for zero;
/// throws NotBiHomogeneous.
std::optional<BiDegree> bidegree(const MPoly& f, int delta);

/// W = A0 dX0 + A1 dX1 + B0 dY0 + B1 dY1 on S_δ.
struct HirzebruchForm {
  int delta = 0;
  MPoly a0, a1, b0, b1;
};

/// Common bi-degree (a,b) of the form (the differential carries the weight of
/// its variable); checks both Euler relations.
BiDegree validate_hirzebruch_form(const HirzebruchForm& h);

/// (d1, d2) = (a - 2 + δ, b - 2).
BiDegree foliation_bidegree(const BiDegree& ab, int delta);

long milnor_count(long d1, long d2, long delta);

struct DiophantineSolution {
  long d1 = 0;
  long d2 = 0;
  int situation = 0;
  bool realizable = false;
};

/// 6 d1 d2 + 4 d1 + 4 d2 + 3δ d2² + 2δ d2 + 8.
long radial_equation(long d1, long d2, long delta);

/// All integer solutions of radial_equation = 0, ordered by situation.
std::vector<DiophantineSolution> solve_radial_diophantine(long delta);

/// Integer pairing on a F + b L: F·F = 0, F·L = 1, L·L = δ.
long picard_pairing(const BiDegree& c1, const BiDegree& c2, int delta);

struct TubeAudit {
  int alpha = 0;
  int beta = 0;
  /// Index of the exceptional Hirzebruch surface.
  int surface_index = -1;
  /// (α', β') of the tube around the curve L0 of the exceptional surface.
  std::optional<BiDegree> l0_child;
  /// (α', β') around a generic section, after the adapting shear.
  std::optional<BiDegree> generic_child;
  /// Self-intersection of L0 in the exceptional surface.
  long l0_self_intersection = 0;
  bool ok = false;
  std::string note;
};

TubeAudit tube_transition_audit(int alpha, int beta);

/// Cocycle and inverse checks for the four-chart atlas of S_δ.
bool s_delta_atlas_check(int delta);

}  // namespace foliate
