#pragma once

#include <string>
#include <vector>

#include "germforge/transition.hpp"

namespace germforge {

// lambda horizontal, x vertical; one dot per traced root, folds marked.
std::string diagram_svg(const BifurcationDiagram& d, const std::string& title = "");

// Transition set in the box [-box, box]^k for k <= 2, drawn where the side
// conditions allow; optional region representatives are labelled by id.
// Throws std::invalid_argument for more than two parameters.
std::string transition_svg(const TransitionSet& T, double box = 1.0,
                           const std::vector<ParameterRegion>& regions = {});

}  // namespace germforge
