#pragma once

#include <vector>

#include "toroidal/formal/series.hpp"
#include "toroidal/formal/window.hpp"
#include "toroidal/lie/toroidal.hpp"
#include "toroidal/modules/module.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

/// Coefficient of x0^{p0} x^{p} y0^{q0} y^{q} in the generating-function
/// form of the bracket,
///   [a,b](y0,y) Π_{i=0..r} y_i^{-1}δ(x_i/y_i)
///   + ⟨a,b⟩ K0(y) ∂_{y0}(y0^{-1}δ(x0/y0)) Π_{i>=1} y_i^{-1}δ(x_i/y_i)
///   + ⟨a,b⟩ x0^{-1}y0^{-1}δ(x0/y0) Σ_j K_j ∂_{yj}(y_j^{-1}δ(x_j/y_j)) Π_{i!=j} x_i^{-1}y_i^{-1}δ(x_i/y_i),
/// assembled from per-variable delta kernels rather than from the mode bracket.
ToroidalElement bracket_series_coefficient(const ToroidalAlgebra& g, int a, int b, int p0, const std::vector<int>& p,
                                           int q0, const std::vector<int>& q);

/// Compares bracket_series_coefficient with the mode bracket
/// [a(n0,n), b(m0,m)] (n = -p-1, m = -q-1) for every x exponent in the window
/// and every y exponent in the same window.
Report bracket_series_report(const ToroidalAlgebra& g, int a, int b, const ExponentWindow& window);

/// The same comparison applied to w in W: a(n0,n)b(m0,m)w - b(m0,m)a(n0,n)w
/// against the assembled right side acting on w. Coefficients whose
/// products leave the valid window of a truncated module are skipped.
Report commutator_series_report(const Module& W, int a, int b, const ModuleVector& w, const ExponentWindow& window);
bool commutator_series_check(const Module& W, int a, int b, const ModuleVector& w, const ExponentWindow& window);

/// [a(x0,x), b(y0,y)]w as a series in (x0, x1..xr, y0, y1..yr). Coefficients
/// outside the valid window throw NotWithinValidWindow.
FormalSeries<ModuleVector> commutator_series(const Module& W, int a, int b, const ModuleVector& w);

/// Res_{x0} (x0 - y0)^j [a(x0,x), b(y0,y)]w, a series in (x1..xr, y0, y1..yr).
FormalSeries<ModuleVector> commutator_residue(const Module& W, int a, int b, const ModuleVector& w, int j);

}  // namespace toroidal
