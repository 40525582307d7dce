#pragma once

#include <array>

namespace cylbif::cli {

/// Published bifurcation periods, with the number of decimals printed.
struct PublishedPeriod {
  int two_nu;
  double T;
  int decimals;
};

inline constexpr std::array<PublishedPeriod, 24> kPublishedPeriods{{
    {0, 3.06362, 5},  {1, 2.61931, 5},  {2, 2.34104, 5},  {3, 2.14351, 5},   {4, 1.99308, 5},   {5, 1.87315, 5},
    {6, 1.77429, 5},  {7, 1.69088, 5},  {8, 1.61924, 5},  {9, 1.55650, 5},   {10, 1.50123, 5},  {11, 1.45180, 5},
    {12, 1.40735, 5}, {13, 1.36697, 5}, {14, 1.33003, 5}, {15, 1.2963, 4},   {16, 1.2650, 4},   {17, 1.23616, 5},
    {18, 1.20927, 5}, {19, 1.18411, 5}, {20, 1.16058, 5}, {40, 0.87348, 5},  {200, 0.4229, 4},  {2000, 0.13888, 5},
}};

/// Allowed deviation for an entry: 5e-5 for five printed decimals, 5e-4 for four.
constexpr double published_tolerance(const PublishedPeriod& p) { return p.decimals == 5 ? 5e-5 : 5e-4; }

}  // namespace cylbif::cli
