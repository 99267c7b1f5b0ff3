#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliate/resolution.hpp"

namespace foliate {

struct RegistryEntry {
  std::string name;
  std::string description;
  FoliatedChart germ;
  std::optional<RatFunc> first_integral;
  /// Reference scripts; the first is the default.
  std::vector<ResolutionScript> scripts;
};

/// Known germs: open_book, open_book_shifted_divisor, phi1, phi2, phi3,
/// linear_lambda, cart_wheel. `lambda` applies to linear_lambda only.
RegistryEntry registry_entry(const std::string& name, const Rational& lambda = 2);
std::vector<std::string> registry_names();

/// Same germ with its divisor removed.
FoliatedChart without_divisor(const FoliatedChart& c);

}  // namespace foliate
