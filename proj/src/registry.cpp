#include "foliate/registry.hpp"

namespace foliate {

namespace {

const VarList& xyz() {
  static const VarList v{"x", "y", "z"};
  return v;
}

const VarList& xy() {
  static const VarList v{"x", "y"};
  return v;
}

ScriptStep curve(std::vector<std::string> vars, std::string chart = "c0") {
  return ScriptStep::blow(CenterSpec::curve(std::move(vars), std::move(chart)));
}

ScriptStep point(std::string chart = "c0") { return ScriptStep::blow(CenterSpec::point(std::move(chart))); }

RatFunc ratio(const char* num, const char* den) { return RatFunc(parse_poly(num, xyz()), parse_poly(den, xyz())); }

}  // namespace

std::vector<std::string> registry_names() {
  return {"open_book", "open_book_shifted_divisor", "phi1", "phi2", "phi3", "linear_lambda", "cart_wheel"};
}

FoliatedChart without_divisor(const FoliatedChart& c) {
  FoliatedChart out = c;
  out.divisor.clear();
  return out;
}

RegistryEntry registry_entry(const std::string& name, const Rational& lambda) {
  RegistryEntry e;
  e.name = name;
  if (name == "open_book") {
    e.description = "y dz - z dy with the dicritical plane x = 0 in the divisor";
    e.germ = make_chart(parse_one_form("[0, -z, y]", xyz()), {"x"});
    e.first_integral = ratio("y", "z");
    e.scripts = {{curve({"y", "z"})}, {point(), curve({"y", "z"}, "c0.x")}};
  } else if (name == "open_book_shifted_divisor") {
    e.description = "open book after the shear w = z - x*y, divisor w = 0";
    e.germ = make_chart(parse_one_form("[y^2, -w, y]", VarList{"x", "y", "w"}), {"w"});
    e.first_integral = RatFunc(parse_poly("y", VarList{"x", "y", "w"}), parse_poly("w + x*y", VarList{"x", "y", "w"}));
    e.scripts = {{curve({"y", "w"})}};
  } else if (name == "phi1") {
    e.description = "first integral (x*z^2 + y^2)/(y*z)";
    e.first_integral = ratio("x*z^2 + y^2", "y*z");
    e.germ = make_chart(from_closed_rational(*e.first_integral), {});
    e.scripts = {{curve({"y", "z"}), curve({"x", "y"}, "c0.z")}};
  } else if (name == "phi2") {
    e.description = "first integral (x*y + z^2)/y";
    e.first_integral = ratio("x*y + z^2", "y");
    e.germ = make_chart(from_closed_rational(*e.first_integral), {});
    e.scripts = {{curve({"y", "z"}), curve({"y", "z"}, "c0.z")}};
  } else if (name == "phi3") {
    e.description = "first integral (x*z^2 + y^2)/z^2";
    e.first_integral = ratio("x*z^2 + y^2", "z^2");
    e.germ = make_chart(from_closed_rational(*e.first_integral), {});
    e.scripts = {{curve({"y", "z"})}};
  } else if (name == "linear_lambda") {
    e.description = "lambda*y dx - x dy with lambda = " + to_string(lambda);
    OneForm w(xy(), {MPoly::variable(xy(), 1) * lambda, -MPoly::variable(xy(), 0)});
    e.germ = make_chart(w, {});
    e.scripts = {{point()}};
  } else if (name == "cart_wheel") {
    e.description = "y dx - x dy";
    e.germ = make_chart(parse_one_form("[y, -x]", xy()), {});
    e.first_integral = RatFunc(parse_poly("y", xy()), parse_poly("x", xy()));
    e.scripts = {{point()}};
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown registry entry '" + name + "'");
  }
  return e;
}

}  // namespace foliate
