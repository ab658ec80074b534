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

#include "omegacub/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "omegacub/errors.hpp"

namespace omegacub::io {

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

int int_field(const json& j, const char* key, const char* what) {
    const json& v = field(j, key, what);
    if (!v.is_number_integer()) throw InputError(std::string(what) + ": '" + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> int_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer()) throw InputError(where + "[" + std::to_string(i) + "]: expected an integer");
        out.push_back(v[i].get<int>());
    }
    return out;
}

std::vector<double> double_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) throw InputError(where + "[" + std::to_string(i) + "]: expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

std::vector<std::vector<double>> double_matrix(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array of arrays");
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(double_array(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Rational parse_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw InputError(where + ": expected an exact rational string such as \"1/3\"");
    std::string s = v.get<std::string>();
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw InputError(where + ": '" + s + "' is not a rational");
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw InputError(where + ": '" + s + "' is not a rational");
    if (q.get_den() == 0) throw InputError(where + ": zero denominator");
    q.canonicalize();
    return q;
}

Monomial monomial_from_json(const json& v, std::size_t k, const std::string& where) {
    if (v.is_string()) return Monomial::parse(v.get<std::string>(), k);
    std::vector<int> alpha = int_array(v, where);
    if (alpha.size() != k)
        throw InputError(where + ": expected " + std::to_string(k) + " exponents, got " + std::to_string(alpha.size()));
    for (int a : alpha)
        if (a < 0) throw InputError(where + ": exponents must be non-negative");
    return Monomial(std::move(alpha));
}

json exponents_to_json(const Monomial& a) { return json(std::vector<int>(a.exponents().begin(), a.exponents().end())); }

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        throw InputError(source + ":" + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON (" + what +
                         ")");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

// ---------------------------------------------------------------------------

Design design_from_json(const json& j) {
    const int m = int_field(j, "m", "design");
    const int k = int_field(j, "k", "design");
    if (k < 1) throw InputError("design: k must be >= 1");
    const json& nodes = field(j, "nodes", "design");
    if (!nodes.is_array()) throw InputError("design: 'nodes' must be an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out.emplace_back(int_array(nodes[i], "design.nodes[" + std::to_string(i) + "]"));
    return Design(m, static_cast<std::size_t>(k), std::move(out));
}

json design_to_json(const Design& design) {
    json nodes = json::array();
    for (const auto& d : design.nodes()) nodes.push_back(std::vector<int>(d.residues().begin(), d.residues().end()));
    return {{"m", design.modulus()}, {"k", design.dimension()}, {"nodes", nodes}};
}

MonomialBasis basis_from_json(const json& j, int m, std::size_t k) {
    const json* list = &j;
    if (j.is_object()) {
        if (j.contains("m") && j["m"] != m) throw InputError("basis: m does not match the design");
        if (j.contains("k") && j["k"] != k) throw InputError("basis: k does not match the design");
        list = &field(j, "basis", "basis");
    }
    if (!list->is_array()) throw InputError("basis: expected an array of monomials");
    std::vector<Monomial> monomials;
    for (std::size_t i = 0; i < list->size(); ++i)
        monomials.push_back(monomial_from_json((*list)[i], k, "basis[" + std::to_string(i) + "]"));
    return MonomialBasis(m, k, std::move(monomials));
}

json basis_to_json(const MonomialBasis& basis) {
    json out = json::array();
    for (const auto& s : basis.monomials()) out.push_back(exponents_to_json(s));
    return out;
}

DiscreteMeasure discrete_measure_from_json(const json& j) {
    const int m = int_field(j, "m", "measure");
    const int k = int_field(j, "k", "measure");
    if (k < 1) throw InputError("measure: k must be >= 1");
    const json& atoms = field(j, "atoms", "measure");
    if (!atoms.is_array()) throw InputError("measure: 'atoms' must be an array");
    std::vector<std::pair<Node, Rational>> out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const std::string where = "measure.atoms[" + std::to_string(i) + "]";
        out.emplace_back(Node(int_array(field(atoms[i], "node", where.c_str()), where + ".node")),
                         parse_rational(field(atoms[i], "mass", where.c_str()), where + ".mass"));
    }
    return DiscreteMeasure(m, static_cast<std::size_t>(k), std::move(out));
}

GaussianSpec gaussian_spec_from_json(const json& j) {
    const int p = int_field(j, "p", "gaussian");
    if (p < 1) throw InputError("gaussian: p must be >= 1");
    const auto up = static_cast<std::size_t>(p);
    auto sigma2 = double_array(field(j, "sigma2", "gaussian"), "gaussian.sigma2");
    if (sigma2.size() != up) throw InputError("gaussian: sigma2 must have p entries");
    const std::vector<std::vector<double>> zero(up, std::vector<double>(up, 0.0));
    auto alpha = j.contains("alpha") ? double_matrix(j["alpha"], "gaussian.alpha") : zero;
    auto beta = j.contains("beta") ? double_matrix(j["beta"], "gaussian.beta") : zero;
    std::vector<std::vector<int>> blocks;
    if (j.contains("blocks")) {
        const json& b = j["blocks"];
        if (!b.is_array()) throw InputError("gaussian: 'blocks' must be an array of arrays");
        for (std::size_t h = 0; h < b.size(); ++h) {
            auto block = int_array(b[h], "gaussian.blocks[" + std::to_string(h) + "]");
            for (int& v : block) --v;
            blocks.push_back(std::move(block));
        }
    } else {
        blocks.emplace_back();
        for (int v = 0; v < p; ++v) blocks.back().push_back(v);
    }
    return GaussianSpec(std::move(sigma2), std::move(alpha), std::move(beta), std::move(blocks));
}

json gaussian_spec_to_json(const GaussianSpec& spec) {
    json blocks = json::array();
    for (const auto& b : spec.blocks()) {
        json block = json::array();
        for (int v : b) block.push_back(v + 1);
        blocks.push_back(block);
    }
    return {{"p", spec.dimension()}, {"sigma2", spec.sigma2()}, {"alpha", spec.alpha()}, {"beta", spec.beta()},
            {"blocks", blocks}};
}

// ---------------------------------------------------------------------------

double round12(double x) {
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

json approx_to_json(std::complex<double> z) { return json::array({round12(z.real()), round12(z.imag())}); }

json value_to_json(const CycNum& x) { return {{"exact", x.to_string()}, {"approx", approx_to_json(x.to_complex())}}; }

json precision_to_json(const PrecisionReport& report) {
    json classes = json::array();
    json unbounded = json::array();
    for (const auto& c : report.members) {
        classes.push_back(exponents_to_json(c.representative));
        unbounded.push_back(c.unbounded);
    }
    return {{"classes", classes},
            {"unbounded", unbounded},
            {"degree", report.precision_degree},
            {"degree_unbounded", report.degree_unbounded}};
}

json rule_to_json(const CubatureRule& rule, const PrecisionReport* precision) {
    json weights = json::array();
    for (std::size_t i = 0; i < rule.approx_weights.size(); ++i) {
        if (rule.exact)
            weights.push_back(value_to_json(rule.weights[i]));
        else
            weights.push_back({{"approx", approx_to_json(rule.approx_weights[i])}});
    }
    json out = {{"design", design_to_json(rule.design)},
                {"basis", basis_to_json(rule.basis)},
                {"provenance", to_string(rule.provenance)},
                {"exact", rule.exact},
                {"weights", weights},
                {"equal_weights", rule.equal_weights}};
    if (!rule.exact) {
        out["residual"] = rule.residual;
        out["tolerance"] = rule.tolerance;
    }
    if (precision) out["precision"] = precision_to_json(*precision);
    return out;
}

CubatureRule rule_from_json(const json& j) {
    Design design = design_from_json(field(j, "design", "rule"));
    MonomialBasis basis = basis_from_json(field(j, "basis", "rule"), design.modulus(), design.dimension());
    CubatureRule rule{design, basis};
    rule.exact = j.value("exact", true);
    rule.equal_weights = j.value("equal_weights", false);
    rule.provenance = j.contains("provenance") ? provenance_from_string(j["provenance"].get<std::string>())
                                               : Provenance::Loaded;
    rule.residual = j.value("residual", 0.0);
    rule.tolerance = j.value("tolerance", 0.0);
    const json& weights = field(j, "weights", "rule");
    if (!weights.is_array() || weights.size() != design.size())
        throw InputError("rule: 'weights' must have one entry per node");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::string where = "rule.weights[" + std::to_string(i) + "]";
        if (rule.exact) {
            const json& ex = field(weights[i], "exact", where.c_str());
            if (!ex.is_string()) throw InputError(where + ".exact: expected a string");
            rule.weights.push_back(CycNum::parse(design.modulus(), ex.get<std::string>()));
            rule.approx_weights.push_back(rule.weights.back().to_complex());
        } else {
            const auto a = double_array(field(weights[i], "approx", where.c_str()), where + ".approx");
            if (a.size() != 2) throw InputError(where + ".approx: expected [re, im]");
            rule.approx_weights.emplace_back(a[0], a[1]);
        }
    }
    if (rule.exact) {
        const CycNum uniform(design.modulus(), Rational(1, static_cast<unsigned long>(design.size())));
        bool equal = true;
        for (const auto& w : rule.weights) equal = equal && (w == uniform);
        if (equal != rule.equal_weights) throw InputError("rule: 'equal_weights' contradicts the weights");
    }
    return rule;
}

json indicator_to_json(const IndicatorFn& f, const RegularityReport& regularity) {
    json coeffs = json::array();
    for (const auto& alpha : support(f)) {
        json entry = value_to_json(f.coefficient(alpha));
        entry["alpha"] = exponents_to_json(alpha);
        entry["monomial"] = alpha.to_string();
        coeffs.push_back(entry);
    }
    json witnesses = json::array();
    for (const auto& w : regularity.witnesses) witnesses.push_back(w.to_string());
    json out = {{"m", f.modulus()},
                {"k", f.dimension()},
                {"n", f.design_size()},
                {"coefficients", coeffs},
                {"support_size", coeffs.size()},
                {"regular", regularity.regular},
                {"witnesses", witnesses}};
    return out;
}

// ---------------------------------------------------------------------------

Monomial parse_exponent(std::string_view text, std::size_t k) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')' && ch != '[' && ch != ']') s.push_back(ch);
    if (!s.empty() && s[0] == 'z') return Monomial::parse(s, k);
    if (s == "1") return Monomial::one(k);
    std::vector<int> alpha;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
            throw InputError("cannot parse exponent '" + std::string(text) + "'");
        alpha.push_back(std::stoi(item));
    }
    if (alpha.size() != k)
        throw InputError("exponent '" + std::string(text) + "' has " + std::to_string(alpha.size()) +
                         " entries, expected " + std::to_string(k));
    return Monomial(std::move(alpha));
}

MixedExponent parse_mixed_exponent(std::string_view text) {
    MixedExponent e;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::stringstream ss(s);
    std::string item;
    auto number = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
            throw InputError("cannot parse exponent pairs '" + std::string(text) + "'; expected n1:m1,n2:m2,...");
        return std::stoi(t);
    };
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InputError("cannot parse exponent pairs '" + std::string(text) + "'; expected n1:m1,n2:m2,...");
        e.emplace_back(number(item.substr(0, colon)), number(item.substr(colon + 1)));
    }
    if (e.empty()) throw InputError("empty exponent pair list");
    return e;
}

}  // namespace omegacub::io
