#pragma once

// Named worked examples bundling family parameters with build numerics, so a
// full verification run is one command.

#include <optional>
#include <string>
#include <vector>

#include "qem/build.hpp"

namespace qem {

struct Preset {
    std::string name;
    std::string description;
    std::optional<FamilyParams> params;  // unset for the LCF shooting preset
    std::optional<LcfParams> lcf;
    std::optional<double> mu_expected;
    BuildNumerics numerics;
};

const std::vector<Preset>& presets();
const Preset& preset_by_name(const std::string& name);
QESpace build_preset(const Preset& preset);

}  // namespace qem
