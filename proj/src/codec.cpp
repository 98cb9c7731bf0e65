#include "pvs/codec.hpp"

namespace pvs {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_object()) {
    Rational re = j.contains("re") ? rational_from_json(j["re"]) : Rational(0);
    Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
    return {std::move(re), std::move(im)};
  }
  return GaussianRational(rational_from_json(j));
}

}  // namespace pvs
