// Copyright 2026 The qpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPD_PARSE_H_
#define QPD_PARSE_H_

#include <array>
#include <string>
#include <vector>

#include "qpd/payoff.hpp"
#include "qpd/state.hpp"

namespace qpd {

// Decimal ("0.5", "-2e-3") or fraction ("1/6", "-2/3"). Fractions are
// parsed exactly and then divided once.
double parse_real(const std::string& token);

// One amplitude: "re" or "re,im", components as parse_real.
Complex parse_amplitude(const std::string& token);

// Four comma-separated reals, e.g. "1,0,1/2,0".
std::array<double, 4> parse_quad(const std::string& csv, const char* what);

StrategyProfile parse_profile(const std::string& csv);
RestrictedStateWeights parse_weights(const std::string& csv);

// 4 tokens build a restricted state, 16 tokens a general one.
PureState parse_state(const std::vector<std::string>& tokens);

}  // namespace qpd

#endif  // QPD_PARSE_H_
