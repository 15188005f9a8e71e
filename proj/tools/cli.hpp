#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bbs/scattering.hpp"
#include "bbs/tau.hpp"

namespace bbs::cli {

// "mu=2,6;L=170;I=0,0"
ActionAngle parse_angle(const std::string& text);
// "2:1000,inf:3"
Schedule parse_schedule(const std::string& text);
// positive integer or "inf"
std::int64_t parse_capacity(const std::string& text);

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Returns 0 on success, 1 on a failed verification, 2 on a
// usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bbs::cli
