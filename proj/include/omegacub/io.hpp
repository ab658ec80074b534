/*
   Copyright 2026 The omegacub Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OMEGACUB_IO_HPP
#define OMEGACUB_IO_HPP

#include <json.hpp>

#include <string>
#include <string_view>

#include "omegacub/cubature.hpp"
#include "omegacub/design.hpp"
#include "omegacub/interp.hpp"
#include "omegacub/measures.hpp"

namespace omegacub::io {

using nlohmann::json;

/// Parses a JSON document; syntax errors become InputError with line:column.
json parse_json(std::string_view text, const std::string& source = "<input>");
json read_json_file(const std::string& path);

/// {"m": 4, "k": 2, "nodes": [[0,0],[1,3],[2,1],[3,2]]}
Design design_from_json(const json& j);
json design_to_json(const Design& design);

/// {"basis": [[0,0],[0,1],...]} or {"basis": ["1","z2",...]}; "m"/"k" optional.
MonomialBasis basis_from_json(const json& j, int m, std::size_t k);
json basis_to_json(const MonomialBasis& basis);

/// {"m": 2, "k": 1, "atoms": [{"node": [0], "mass": "1/3"}, ...]}
DiscreteMeasure discrete_measure_from_json(const json& j);

/// {"p":2, "sigma2":[1,1], "alpha":[[0,0],[0,0]], "beta":[[0,0],[0,0]], "blocks":[[1],[2]]}
/// Block indices are 1-based in the file.
GaussianSpec gaussian_spec_from_json(const json& j);
json gaussian_spec_to_json(const GaussianSpec& spec);

/// {"exact": "(1/8)+(1/8)w", "approx": [re, im]} with 12-digit decimals.
json value_to_json(const CycNum& x);
json approx_to_json(std::complex<double> z);
double round12(double x);

json rule_to_json(const CubatureRule& rule, const PrecisionReport* precision = nullptr);
/// Weights are re-read from their exact strings.
CubatureRule rule_from_json(const json& j);

json indicator_to_json(const IndicatorFn& f, const RegularityReport& regularity);
json precision_to_json(const PrecisionReport& report);

/// "0,5" or "(0,5)" -> exponent vector.
Monomial parse_exponent(std::string_view text, std::size_t k);
/// "1:0,2:1,0:1" -> [(1,0),(2,1),(0,1)].
MixedExponent parse_mixed_exponent(std::string_view text);

}  // namespace omegacub::io

#endif
