#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "eitmech/app/config.hpp"
#include "eitmech/app/experiments.hpp"

namespace eitmech::app {

// Commented block opening every CSV. Stripped of its "# " prefixes it is a
// config that reproduces the run bit for bit.
std::string run_header(const ExperimentConfig& config, Command command);

// Round-trip decimal form of a double ("%.17g").
std::string format_number(double value);

struct RunOutput {
    std::vector<std::filesystem::path> files;
    nlohmann::json summary;
};

RunOutput write_spectrum(const ExperimentConfig& config, const SpectrumResult& result,
                         const std::filesystem::path& dir);
RunOutput write_cooling(const ExperimentConfig& config, const CoolingResult& result,
                        const std::filesystem::path& dir);
RunOutput write_mapping(const ExperimentConfig& config, const MappingResult& result,
                        const std::filesystem::path& dir);
RunOutput write_entanglement(const ExperimentConfig& config, const EntanglementResult& result,
                             const std::filesystem::path& dir);
RunOutput write_rates(const ExperimentConfig& config, const RatesReport& report,
                      const std::filesystem::path& dir);

// Human-readable rates report.
std::string format_rates(const RatesReport& report);

}  // namespace eitmech::app
