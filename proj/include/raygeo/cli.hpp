// Copyright 2026 The raygeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end: verify, compute, superpose, search, demo-two-slit.

#include <iosfwd>
#include <string>
#include <vector>

#include "raygeo/io.hpp"
#include "raygeo/superposition.hpp"

namespace raygeo {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  ///< a law failed, or a search found nothing
  kExitUsage = 2,     ///< bad flags, unreadable or malformed input
  kExitDomain = 3,    ///< a mathematical precondition was violated
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TwoSlitRow {
  Ray detector;
  double quantum = 0.0;       ///< p(superposition, detector)
  double classical = 0.0;     ///< r p(y, detector) + (1 - r) p(z, detector)
  double interference = 0.0;  ///< quantum - classical
};

/// Throws Error(OrthogonalComponents) when the slit states are orthogonal.
std::vector<TwoSlitRow> two_slit_table(const SuperpositionSpec& slits, const std::vector<Ray>& detectors,
                                       const Tolerance& tol = {});

/// Shipped demo: slits (1, 0) and (0.6, 0.8) at r = 1/2, eight detectors (1, e^{ik pi/4}) / sqrt 2.
Json default_two_slit_config();

}  // namespace raygeo
