#pragma once

#include <span>
#include <string>

#include "alexsnn/experiments.hpp"

namespace alexsnn {

/// Standalone SVG boxplot of error vs. spike count for one (mode, alpha)
/// group, with a dashed reference line at the threshold. Cells are drawn left
/// to right in the given order, one box per spike count.
std::string boxplot_svg(std::span<const CellSummary> cells, double threshold,
                        const std::string& title);

}  // namespace alexsnn
