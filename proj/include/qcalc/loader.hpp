#pragma once

// Presentation files (YAML):
//
//   name: qfuzzy
//   generators: [a, b, {name: "b†", aliases: [bstar]}]
//   star: [[a, a], [b, "b†"]]          # optional third entry: scalar factor
//   inverses: [[K, "K^-1"]]
//   degrees: {e_a: 1}
//   relations: ["b*a = q^2*a*b - λ*b", ...]
//   theta: "e_a + e_d"
//   sigma: "1/mu"
//   extends: bqsu2                     # start from another presentation
//   star_closure: true

#include <functional>
#include <string>

#include "qcalc/expr.hpp"
#include "qcalc/freealg.hpp"

namespace qcalc {

/// Resolves `extends:` references.
using PresentationResolver = std::function<PresentationPtr(const std::string &)>;

/// Parses a presentation file into a builder. Errors carry the file line.
PresentationBuilder load_builder(const std::string &text, const std::string &origin = "<input>",
                                 const PresentationResolver &resolve = {},
                                 BracketConvention bracket = BracketConvention::Standard);
PresentationPtr load_presentation(const std::string &text, const std::string &origin = "<input>",
                                  const PresentationResolver &resolve = {});
PresentationPtr load_presentation_file(const std::string &path, const PresentationResolver &resolve = {});

/// Writes a presentation back in the file format (relations as oriented rules).
std::string emit_presentation(const Presentation &p);

} // namespace qcalc
