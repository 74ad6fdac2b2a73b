#include "starrad/family.hpp"

namespace starrad {

const char* short_name(FunctionFamily family)
{
    switch (family) {
    case FunctionFamily::LommelF: return "f";
    case FunctionFamily::LommelG: return "g";
    case FunctionFamily::LommelH: return "h";
    case FunctionFamily::StruveU: return "u";
    case FunctionFamily::StruveV: return "v";
    case FunctionFamily::StruveW: return "w";
    }
    return "?";
}

std::optional<FunctionFamily> parse_family(std::string_view name)
{
    for (FunctionFamily family : all_families)
        if (name == short_name(family)) return family;
    return std::nullopt;
}

}  // namespace starrad
