#pragma once

// Shipped presentations (data/*.alg), embedded at build time.

#include <functional>
#include <string>
#include <vector>

#include "qcalc/freealg.hpp"

namespace qcalc {

/// Names without extension, e.g. "qfuzzy".
std::vector<std::string> builtin_names();
/// Source text of a shipped file ("qfuzzy" or "qfuzzy.alg"); throws if absent.
const std::string &builtin_source(const std::string &name);
/// Built and cached; `extends:` resolves against other builtins.
PresentationPtr builtin(const std::string &name);
/// Loads a file path, or a builtin name when no such file exists.
PresentationPtr load_algebra(const std::string &path_or_name);

/// Memoized construction, one entry per (key, active specialization).
PresentationPtr cached_presentation(const std::string &key, const std::function<PresentationPtr()> &make);

} // namespace qcalc
