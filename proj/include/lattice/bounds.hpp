#pragma once

#include <string>
#include <vector>

#include "lattice/theta1d.hpp"

namespace lattice {

enum class RegionId { Aa, Ab, Ac, Ad, Omega1, Omega2, DG, Gamma, XYrect, custom };

const char* region_name(RegionId id);
RegionId parse_region(const std::string& name);

struct ParamRange {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
};

// Named regions sample the box given by param_ranges intersected with the
// region's constraints: the outer parameter runs over a uniform grid and the
// inner parameter over the admissible slice for that outer value. DG is open,
// so both of its axes use cell midpoints. XYrect and custom are plain tensor
// grids with both ends included.
struct RegionSpec {
    std::vector<ParamRange> param_ranges;
    int resolution = 64;
    RegionId region_id = RegionId::custom;
};

struct Violation {
    std::vector<double> point;
    double slack = 0.0;
};

struct CheckReport {
    std::string lemma_id;
    long points_tested = 0;
    double min_slack = 0.0;
    std::vector<std::string> param_names;
    std::vector<double> worst_point;
    std::vector<Violation> violations;
};

constexpr double kCheckTolerance = 1e-9;
constexpr double kMonotoneStep = 1e-4;
constexpr int kDefaultGrid = 64;
constexpr double kGridClip = 12.0;

struct CheckInfo {
    std::string id;
    std::string statement;
    std::vector<std::string> params;
    // Intermediate inequality used inside an argument rather than a stated result.
    bool proof_step = false;
};

// All registered checks in their canonical order.
std::vector<CheckInfo> list_checks();

RegionSpec default_region(const std::string& lemma_id, int resolution = kDefaultGrid);

// Samples the region, evaluates slack = bound - achieved at each point
// (sign-constrained finite-difference quotient for monotonicity claims) and
// reports the minimum. Points are enumerated row-major, ascending.
CheckReport check_inequality(const std::string& lemma_id, const RegionSpec& region,
                             const SeriesTruncation& trunc = {}, double tolerance = kCheckTolerance);

// Names accepted by region_function with their argument lists.
std::vector<CheckInfo> list_region_functions();

double region_function(const std::string& name, const std::vector<double>& args,
                       const SeriesTruncation& trunc = {});

struct ConstantRow {
    std::string name;
    double computed = 0.0;
    double printed = 0.0;
    double abs_diff = 0.0;
    double allowed = 0.0;
};

// Recomputes each published constant from its defining formula.
std::vector<ConstantRow> reference_constants(const SeriesTruncation& trunc = {});

}  // namespace lattice
