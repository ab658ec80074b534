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

#include "omegacub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "omegacub/cubature.hpp"
#include "omegacub/errors.hpp"
#include "omegacub/io.hpp"

namespace omegacub::cli {

namespace {

using io::json;

/// Result of a command that legitimately found nothing (exit code 3).
struct NotFound {
    json payload;
    std::string text;
};

std::string fmt_complex(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(12) << io::round12(z.real()) << (io::round12(z.imag()) < 0 ? "-" : "+")
       << std::abs(io::round12(z.imag())) << "i";
    return os.str();
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

struct Measure {
    std::unique_ptr<MomentProvider> provider;
    bool gaussian = false;
};

Measure load_measure(const std::string& arg, const Design& design) {
    if (arg == "gaussian") return {std::make_unique<GaussianMoments>(), true};
    auto mu = std::make_unique<DiscreteMeasure>(io::discrete_measure_from_json(io::read_json_file(arg)));
    if (mu->modulus() != design.modulus() || mu->dimension() != design.dimension())
        throw InputError("measure '" + arg + "' does not live on the design's Omega_m^k");
    return {std::move(mu), false};
}

TermOrder load_order(const RunConfig& cfg, const Design& design) {
    if (cfg.order == "deglex") return TermOrder::deglex();
    const json j = io::read_json_file(cfg.order);
    const json& list = j.is_object() ? j.at("order") : j;
    if (!list.is_array()) throw InputError("order file: expected an array of monomials");
    std::vector<Monomial> priority;
    for (const auto& v : list) {
        if (v.is_string())
            priority.push_back(Monomial::parse(v.get<std::string>(), design.dimension()));
        else
            priority.emplace_back(v.get<std::vector<int>>());
    }
    return TermOrder::explicit_list(std::move(priority));
}

void emit(const RunConfig& cfg, std::ostream& out, const json& payload, const std::string& text) {
    if (cfg.format == Format::Json)
        out << payload.dump(2) << "\n";
    else
        out << text;
}

std::string rule_text(const CubatureRule& rule, const PrecisionReport* precision) {
    std::ostringstream os;
    os << "basis: " << rule.basis.to_string() << "  (" << to_string(rule.provenance) << ")\n";
    os << "weights" << (rule.exact ? " (exact)" : " (floating point)") << ":\n";
    for (std::size_t i = 0; i < rule.design.size(); ++i) {
        const auto r = rule.design.node(i).residues();
        std::ostringstream node;
        node << "(";
        for (std::size_t c = 0; c < r.size(); ++c) node << (c ? "," : "") << r[c];
        node << ")";
        os << "  " << pad(node.str(), 14);
        if (rule.exact) os << pad(rule.weights[i].to_string(), 24);
        os << fmt_complex(rule.approx_weights[i]) << "\n";
    }
    if (!rule.exact) os << "residual: " << rule.residual << "\n";
    os << "equal weights: " << (rule.equal_weights ? "true" : "false") << "\n";
    if (precision) {
        os << "precision classes (" << precision->members.size() << "):";
        for (const auto& c : precision->members)
            os << " " << c.representative.to_string() << (c.unbounded ? "*" : "");
        os << "\n  (* every lift of the class is exact)\n";
        os << "precision degree: " << precision->precision_degree
           << (precision->degree_unbounded ? " over reduced classes; unbounded over all exponents" : "") << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

int cmd_indicator(const RunConfig& cfg, std::ostream& out) {
    const Design design = io::design_from_json(io::read_json_file(cfg.inputs.at(0)));
    const IndicatorFn f(design);
    const RegularityReport reg = is_regular_fraction(design);
    std::ostringstream os;
    const auto supp = support(f);
    os << "design: m=" << design.modulus() << " k=" << design.dimension() << " n=" << design.size() << "\n";
    os << "indicator coefficients (" << supp.size() << " nonzero):\n";
    for (const auto& alpha : supp) {
        const CycNum& b = f.coefficient(alpha);
        os << "  " << pad(alpha.to_string(), 16) << pad(b.to_string(), 28) << fmt_complex(b.to_complex()) << "\n";
    }
    os << "regular: " << (reg.regular ? "true" : "false");
    if (!reg.regular) {
        os << ", witness " << reg.witness()->to_string() << " (all:";
        for (const auto& w : reg.witnesses) os << " " << w.to_string();
        os << ")";
    }
    os << "\n";
    emit(cfg, out, io::indicator_to_json(f, reg), os.str());
    return kOk;
}

int cmd_weights(const RunConfig& cfg, std::ostream& out) {
    const Design design = io::design_from_json(io::read_json_file(cfg.inputs.at(0)));
    const Measure measure = load_measure(cfg.inputs.at(2), design);
    const std::string& basis_arg = cfg.inputs.at(1);
    const bool automatic = basis_arg == "auto";
    const MonomialBasis basis =
        automatic ? quotient_basis(design, load_order(cfg, design))
                  : io::basis_from_json(io::read_json_file(basis_arg), design.modulus(), design.dimension());
    const CubatureRule rule = compute_weights(design, basis, *measure.provider,
                                              automatic ? Provenance::QuotientBasis : Provenance::Explicit);
    for (const auto& s : basis.monomials())
        if (!verify_exactness(rule, *measure.provider, s))
            throw InvariantError("weights: rule is not exact on its own basis monomial " + s.to_string());
    std::optional<PrecisionReport> precision;
    if (rule.equal_weights) precision = precision_basis_report(rule, *measure.provider);
    const PrecisionReport* pr = precision ? &*precision : nullptr;
    emit(cfg, out, io::rule_to_json(rule, pr), rule_text(rule, pr));
    return kOk;
}

int cmd_equal_search(const RunConfig& cfg, std::ostream& out) {
    const Design design = io::design_from_json(io::read_json_file(cfg.inputs.at(0)));
    const Measure measure = load_measure(cfg.inputs.at(1), design);
    const auto basis = equal_weight_basis_search(design, *measure.provider, load_order(cfg, design));
    if (!basis) {
        throw NotFound{{{"found", false}, {"design", io::design_to_json(design)}},
                       "none: no monomial basis of the design gives equal weights\n"};
    }
    const CubatureRule rule = compute_weights(design, *basis, *measure.provider, Provenance::EqualWeightSearch);
    if (!rule.equal_weights) throw InvariantError("equal-search: returned basis does not give equal weights");
    const PrecisionReport precision = precision_basis_report(rule, *measure.provider);
    json payload = io::rule_to_json(rule, &precision);
    payload["found"] = true;
    emit(cfg, out, payload, rule_text(rule, &precision));
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Design design = io::design_from_json(io::read_json_file(cfg.inputs.at(0)));
    const CubatureRule rule = io::rule_from_json(io::read_json_file(cfg.inputs.at(1)));
    if (!(rule.design == design)) throw InputError("verify: the rule's design differs from '" + cfg.inputs.at(0) + "'");
    const Measure measure = load_measure(cfg.inputs.at(2), design);
    if (cfg.inputs.size() < 4) throw InputError("verify: at least one exponent is required");
    if (cfg.mc && !measure.gaussian) throw InputError("verify: --mc is only available for the gaussian measure");

    std::unique_ptr<GaussianSampler> sampler;
    if (cfg.mc) sampler = std::make_unique<GaussianSampler>(GaussianSpec::standard(design.dimension()), cfg.seed);

    json rows = json::array();
    std::ostringstream os;
    os << pad("alpha", 16) << pad("exact", 8) << pad("rule", 28) << "moment";
    if (cfg.mc) os << "  mc estimate +- se";
    os << "\n";
    for (std::size_t i = 3; i < cfg.inputs.size(); ++i) {
        const Monomial alpha = io::parse_exponent(cfg.inputs[i], design.dimension());
        const bool exact = verify_exactness(rule, *measure.provider, alpha);
        json row = {{"alpha", std::vector<int>(alpha.exponents().begin(), alpha.exponents().end())},
                    {"monomial", alpha.to_string()},
                    {"exact", exact}};
        std::string rule_str, moment_str;
        if (rule.exact) {
            const CycNum rv = rule_value(rule, alpha);
            const CycNum mv = measure.provider->exact_moment(alpha, design.modulus());
            row["rule_value"] = io::value_to_json(rv);
            row["moment"] = io::value_to_json(mv);
            rule_str = rv.to_string();
            moment_str = mv.to_string();
        } else {
            row["rule_value"] = {{"approx", io::approx_to_json(rule_value_approx(rule, alpha))}};
            rule_str = fmt_complex(rule_value_approx(rule, alpha));
            moment_str = fmt_complex(measure.provider->moment(alpha));
        }
        os << pad(alpha.to_string(), 16) << pad(exact ? "true" : "false", 8) << pad(rule_str, 28) << moment_str;
        if (sampler) {
            MixedExponent e;
            for (int a : alpha.exponents()) e.emplace_back(a, 0);
            const auto est = mc_estimate_moment(*sampler, e, cfg.mc_samples);
            const double dev = std::abs(est.mean - measure.provider->moment(alpha));
            const bool consistent = dev <= std::max(cfg.tol, 4.0 * est.se());
            row["mc"] = {{"estimate", io::approx_to_json(est.mean)},
                         {"se", io::round12(est.se())},
                         {"samples", est.samples},
                         {"consistent", consistent}};
            os << "  " << fmt_complex(est.mean) << " +- " << std::setprecision(3) << est.se();
        }
        os << "\n";
        rows.push_back(row);
    }
    emit(cfg, out, {{"measure", measure.provider->name()}, {"results", rows}}, os.str());
    return kOk;
}

int cmd_null_moment(const RunConfig& cfg, std::ostream& out) {
    const GaussianSpec spec = io::gaussian_spec_from_json(io::read_json_file(cfg.inputs.at(0)));
    const MixedExponent e = io::parse_mixed_exponent(cfg.inputs.at(1));
    const NullMomentResult r = gaussian_null_moment_predicate(e, spec);
    const bool zero = r.verdict == NullMoment::ProvablyZero;
    json payload = {{"verdict", zero ? "ProvablyZero" : "Unknown"}};
    std::ostringstream os;
    os << (zero ? "ProvablyZero" : "Unknown");
    if (zero) {
        json block = json::array();
        for (int v : spec.blocks()[*r.block]) block.push_back(v + 1);
        payload["block"] = block;
        os << " (block {";
        for (std::size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << block[i].get<int>();
        os << "} is unbalanced)";
    }
    os << "\n";
    emit(cfg, out, payload, os.str());
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_order, bool with_mc) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}}));
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--tol", cfg.tol, "Floating-point tolerance")->check(CLI::PositiveNumber);
    if (with_order) sub->add_option("--order", cfg.order, "deglex, or a JSON file listing monomials in scan order");
    if (with_mc)
        sub->add_option("--mc", cfg.mc_samples, "Append Monte Carlo estimates with N samples")
            ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
            ->each([&cfg](const std::string&) { cfg.mc = true; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Interpolatory cubature on roots-of-unity designs", "omegacub"};
    app.require_subcommand(1);

    auto* ind = app.add_subcommand("indicator", "Indicator function coefficients and regular-fraction test");
    ind->add_option("design", cfg.inputs, "Design JSON file")->required()->expected(1);
    add_common(ind, cfg, false, false);

    auto* wts = app.add_subcommand("weights", "Interpolatory weights for a basis");
    wts->add_option("inputs", cfg.inputs, "DESIGN BASIS|auto MEASURE|gaussian")->required()->expected(3);
    add_common(wts, cfg, true, false);

    auto* eqs = app.add_subcommand("equal-search", "Search for a basis with equal weights");
    eqs->add_option("inputs", cfg.inputs, "DESIGN MEASURE|gaussian")->required()->expected(2);
    add_common(eqs, cfg, true, false);

    auto* ver = app.add_subcommand("verify", "Check a rule's exactness on monomials");
    ver->add_option("inputs", cfg.inputs, "DESIGN RULE MEASURE|gaussian ALPHA...")->required()->expected(4, 1 << 20);
    add_common(ver, cfg, false, true);

    auto* nul = app.add_subcommand("null-moment", "Gaussian null-moment test for z^n conj(z)^m");
    nul->add_option("inputs", cfg.inputs, "GAUSSIAN-SPEC n1:m1,n2:m2,...")->required()->expected(2);
    add_common(nul, cfg, false, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*ind) return cmd_indicator(cfg, out);
        if (*wts) return cmd_weights(cfg, out);
        if (*eqs) return cmd_equal_search(cfg, out);
        if (*ver) return cmd_verify(cfg, out);
        if (*nul) return cmd_null_moment(cfg, out);
        return kInputError;
    } catch (const NotFound& nf) {
        emit(cfg, out, nf.payload, nf.text);
        return kNotFound;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const IncorrectPairError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace omegacub::cli
