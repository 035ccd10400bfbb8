#ifndef POLARMAC_CATALOG_HPP
#define POLARMAC_CATALOG_HPP

#include <string>
#include <vector>

#include "polarmac/problem.hpp"

namespace polarmac {

/// Built-in example problems (the same content ships as fixtures/*.json).
const std::vector<std::string>& catalog_names();
const std::string& catalog_text(const std::string& name);
ProblemFile catalog_problem(const std::string& name);

}  // namespace polarmac

#endif
