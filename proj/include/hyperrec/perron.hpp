#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperrec/types.hpp"

namespace hyperrec {

struct CharacteristicData {
    Complex t1;  // larger modulus
    Complex t2;
    Complex alpha;
    Complex beta;
    Complex labeled_t1;  // the roots under their printed names
    Complex labeled_t2;
};

CharacteristicData characteristic_roots(BasicForm form, Complex z);

// ||t1| - |t2|| and the same divided by max(|t1|, |t2|).
double boundary_defect(BasicForm form, Complex z);
double relative_defect(BasicForm form, Complex z);

// Compares the labeled roots, not the sorted ones.
enum class RootRelation { t1_dominates, t2_dominates, boundary };
std::string to_string(RootRelation r);

struct RegionClassification {
    RootRelation relation = RootRelation::boundary;
    std::optional<SolutionLabel> minimal;
    std::optional<SolutionLabel> dominant;
    bool no_minimal_pair = false;
    // The roots separate but no labeled solution of the form is minimal.
    bool minimal_unlabeled = false;
    std::string zone;
};

constexpr double kDefaultBoundaryBand = 1e-3;

// Roles established by growth-rate measurement of the labeled solutions.
RegionClassification classify(BasicForm form, Complex z, Direction dir, double eps_b = kDefaultBoundaryBand);

// Roles as stated in the source text; kept for comparison.
RegionClassification classify_printed(BasicForm form, Complex z, Direction dir,
                                      double eps_b = kDefaultBoundaryBand);

struct BoundarySample {
    Complex z;
    double defect = 0.0;
};

constexpr double kBoundaryTol = 1e-10;

// Points of |t1| = |t2|. Forms 2, 5, 13 analytic; 3 and 6 by bisection on rays
// from the origin. Form 6 yields the inner loop followed by the outer loop.
std::vector<BoundarySample> trace_boundary(BasicForm form, int samples);

// The lobe r = -9 + 6 sqrt(3) cos(theta/2), |theta| <= pi/3, with (r, theta)
// polar coordinates of 8z + 1.
Complex k3_printed_curve(double theta);

// 4|z| = |1-z|^2 in polar form; outer selects the + root.
Complex k6_closed_curve(double theta, bool outer);

struct GridWindow {
    double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
};

enum class NodeStatus { classified, boundary, band, singular };
std::string to_string(NodeStatus s);

struct GridNode {
    Complex z;
    NodeStatus status = NodeStatus::classified;
    RegionClassification cls;
};

// Rows run over im ascending, re ascending within a row. Rows are computed
// by up to `workers` threads and handed to `on_row` in order.
void region_grid(BasicForm form, const GridWindow& w, double step, Direction dir,
                 const std::function<void(const std::vector<GridNode>&)>& on_row, int workers = 1,
                 double eps_b = kDefaultBoundaryBand, bool printed = false);

std::vector<GridNode> region_grid(BasicForm form, const GridWindow& w, double step, Direction dir,
                                  double eps_b = kDefaultBoundaryBand);

}  // namespace hyperrec
