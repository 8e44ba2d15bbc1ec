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

#include "qpd/parse.hpp"

#include <cmath>
#include <cstdlib>

namespace qpd {

namespace {

double parse_plain(const std::string& token) {
  if (token.empty()) throw ParseError("empty number");
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size()) {
    throw ParseError("malformed number '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("number '" + token + "' is not finite");
  }
  return value;
}

}  // namespace

double parse_real(const std::string& token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string::npos) return parse_plain(token);
  if (token.find('/', slash + 1) != std::string::npos) {
    throw ParseError("malformed fraction '" + token + "'");
  }
  const double numerator = parse_plain(token.substr(0, slash));
  const double denominator = parse_plain(token.substr(slash + 1));
  if (denominator == 0.0) {
    throw ParseError("fraction '" + token + "' divides by zero");
  }
  return numerator / denominator;
}

Complex parse_amplitude(const std::string& token) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) return Complex(parse_real(token), 0.0);
  if (token.find(',', comma + 1) != std::string::npos) {
    throw ParseError("amplitude '" + token + "' has more than two components");
  }
  return Complex(parse_real(token.substr(0, comma)),
                 parse_real(token.substr(comma + 1)));
}

std::array<double, 4> parse_quad(const std::string& csv, const char* what) {
  std::array<double, 4> values{};
  std::size_t start = 0;
  for (int t = 0; t < 4; ++t) {
    const bool last = t == 3;
    const std::size_t comma = csv.find(',', start);
    if (!last && comma == std::string::npos) {
      throw ParseError(std::string(what) + " needs 4 comma-separated values");
    }
    if (last && comma != std::string::npos) {
      throw ParseError(std::string(what) + " has more than 4 values");
    }
    const std::string token =
        last ? csv.substr(start) : csv.substr(start, comma - start);
    values[t] = parse_real(token);
    start = comma + 1;
  }
  return values;
}

StrategyProfile parse_profile(const std::string& csv) {
  const auto v = parse_quad(csv, "profile");
  return StrategyProfile(v[0], v[1], v[2], v[3]);
}

RestrictedStateWeights parse_weights(const std::string& csv) {
  const auto v = parse_quad(csv, "weights");
  return RestrictedStateWeights(v[0], v[1], v[2], v[3]);
}

PureState parse_state(const std::vector<std::string>& tokens) {
  if (tokens.size() == 4) {
    return make_restricted_state(
        parse_amplitude(tokens[0]), parse_amplitude(tokens[1]),
        parse_amplitude(tokens[2]), parse_amplitude(tokens[3]));
  }
  if (tokens.size() == 16) {
    std::vector<Complex> amps;
    amps.reserve(kDim);
    for (const std::string& token : tokens) {
      amps.push_back(parse_amplitude(token));
    }
    return make_pure_state(amps);
  }
  throw ParseError("a state takes 4 restricted or 16 general amplitudes, got " +
                   std::to_string(tokens.size()));
}

}  // namespace qpd
