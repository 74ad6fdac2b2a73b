#pragma once

#include <optional>
#include <string_view>

namespace starrad {

// The six normalized functions. Lommel families take mu (via
// s_{mu-1/2,1/2}); Struve families take nu.
enum class FunctionFamily { LommelF, LommelG, LommelH, StruveU, StruveV, StruveW };

inline constexpr FunctionFamily all_families[] = {
    FunctionFamily::LommelF, FunctionFamily::LommelG, FunctionFamily::LommelH,
    FunctionFamily::StruveU, FunctionFamily::StruveV, FunctionFamily::StruveW,
};

const char* short_name(FunctionFamily family);
std::optional<FunctionFamily> parse_family(std::string_view name);

constexpr bool is_lommel(FunctionFamily family)
{
    return family == FunctionFamily::LommelF || family == FunctionFamily::LommelG ||
           family == FunctionFamily::LommelH;
}

// h and w are built from s(sqrt z) and H(sqrt z).
constexpr bool is_sqrt_family(FunctionFamily family)
{
    return family == FunctionFamily::LommelH || family == FunctionFamily::StruveW;
}

}  // namespace starrad
