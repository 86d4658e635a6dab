#pragma once
// Root-discriminant lower-bound table (totally imaginary flavor): CSV rows
// (degree, minimum root discriminant), plus header directives for the
// data source, flavor, and the asymptotic limit. Used to convert a root
// discriminant upper bound into a degree bound.

#include <string>
#include <vector>

#include "fs19/rational.hpp"

namespace fs19 {

struct DiscTableRow {
    long degree = 0;
    Rational min_root_disc;
};

struct DiscriminantTable {
    std::string source;
    std::string flavor;
    Rational asymptotic_limit;  // values approach this from below
    std::vector<DiscTableRow> rows;  // strictly increasing degree, non-decreasing value
};

DiscriminantTable parse_disc_table(const std::string& csv_text);
DiscriminantTable load_disc_table(const std::string& path);

struct DegreeBound {
    bool unbounded = false;  // bound >= asymptotic limit (or table exhausted)
    long degree = 0;         // largest degree NOT excluded by the table
};

// Largest degree whose tabulated minimum root discriminant does not exceed
// `bound`. Degrees between table rows inherit the last row at or below them
// (values are monotone). A bound below the first row excludes everything
// from the first tabulated degree up: returns first degree - 1.
DegreeBound degree_bound_from_table(const Rational& bound, const DiscriminantTable& t);

}  // namespace fs19
