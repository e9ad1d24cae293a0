#pragma once

#include "hpl/json_io.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace hpl {

using PipelineValue = std::variant<std::monostate, Matroid, MaPoly, GenPoly>;

struct PipelineError : std::runtime_error {
    int step;
    PipelineError(int step, const std::string& msg)
        : std::runtime_error("step " + std::to_string(step) + ": " + msg), step(step)
    {
    }
};

// Runs "op args | op args | ..." left to right. File arguments are resolved
// relative to base_dir. Throws PipelineError with the 1-based step index.
PipelineValue run_pipeline(const std::string& script, const std::string& base_dir = ".");
json value_to_json(const PipelineValue& v);

// Operation names understood by run_pipeline.
std::vector<std::string> pipeline_ops();

}  // namespace hpl
