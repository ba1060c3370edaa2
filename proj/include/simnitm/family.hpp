#pragma once

#include <optional>
#include <string_view>

namespace simnitm {

enum class Family { ClassicBlasius, MovingWall, Gasification, FalknerSkan };

/// Normalization of the star f''(0) on the moving-wall branches.
enum class Sign { Plus, Minus };

[[nodiscard]] constexpr double sign_value(Sign s) noexcept { return s == Sign::Plus ? 1.0 : -1.0; }

std::string_view to_string(Family family) noexcept;
std::string_view to_string(Sign sign) noexcept;  // "+1" / "-1"

/// Accepts the CLI spellings: moving-wall, gasification, blasius, falkner-skan.
std::optional<Family> parse_family(std::string_view text) noexcept;

}  // namespace simnitm
