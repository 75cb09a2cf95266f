#pragma once

#include <optional>
#include <string>

#include "output.hpp"

namespace zs::cli {

struct FigureParams {
    std::optional<double> sigma;
    std::optional<double> t;
    std::optional<double> from;
    std::optional<double> to;
    int threads = 1;
};

// Throws PreconditionError for an unknown id.
Figure make_figure(const std::string& id, const FigureParams& p);

}  // namespace zs::cli
