#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "toric/complex.hpp"
#include "toric/cox.hpp"
#include "toric/fan.hpp"

namespace toric {

// Fan document: line-oriented key/value text.
//
//   # optional comments
//   name cp2
//   dim 2
//   ray 1 0
//   ray 0 1
//   ray -1 -1
//   cone 0 1
//   cone 1 2
//   cone 0 2
//
// Throws ParseError with a line diagnostic on malformed input.
Fan parse_fan_document(std::istream& in);
Fan parse_fan_file(const std::string& path);

// Canonical serialization: name (if any), dim, rays, cones, in order.
std::string write_fan_document(const Fan& fan);

// Everything the classify pipeline produces for one fan.
struct ClassificationReport {
  std::string name;
  ValidationReport validation;
  std::optional<Classification> classification;
  std::vector<long long> betti;
  std::optional<QuotientPresentation> quotient;
  std::optional<HomotopyDegrees> degrees;
};

// Runs validation, classification and (when elliptic) the quotient
// presentation. Throws PreconditionFailed when the fan is valid but not
// complete or not simply connected; throws validation errors as usual.
ClassificationReport build_classification_report(const Fan& fan);

std::string validation_text(const ValidationReport& rep);
std::string validation_json(const ValidationReport& rep);
std::string report_text(const ClassificationReport& rep);
std::string report_json(const ClassificationReport& rep);

}  // namespace toric
