#ifndef THETA_REPORT_HPP
#define THETA_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "theta/rational.hpp"

namespace theta {

struct DimensionReport {
    std::string group;
    Integer order;
    std::optional<std::size_t> num_classes;
    std::optional<Rational> d1;
    std::optional<Rational> d2;
    std::optional<Integer> dim_cpi;
    std::optional<Integer> dim_ker;
    std::optional<Integer> dim_classhat_z2;
    std::string method;
    double millis = 0;
};

/// Compact JSON with keys group, order, num_classes, d1, d2, dim_Cpi,
/// dim_ker_eps, dim_classhat_Z2, method, millis. Non-integral rationals
/// become "num/den" strings, absent values null.
std::string to_json(const DimensionReport& r);

std::string csv_header();
/// `group` is written as given; callers pass a comma-free name.
std::string to_csv_row(const DimensionReport& r);

std::string to_text(const DimensionReport& r);

}  // namespace theta

#endif
