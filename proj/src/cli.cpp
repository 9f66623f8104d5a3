#include "holodisc/cli.hpp"

#include "holodisc/cascade.hpp"
#include "holodisc/criterion.hpp"
#include "holodisc/errors.hpp"
#include "holodisc/hermitian.hpp"
#include "holodisc/probe.hpp"
#include "holodisc/repweights.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace holodisc {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    R"(usage: holodisc <verb> [preset] [options]

verbs:
  describe <preset>   structural invariants (r, a, b, p) and identity suite
  cascade <preset>    strongly orthogonal cascade roots and coroots
  criterion <preset> --lambda <q> [--hw <list>]
                      exact non-vanishing decision with the per-weight table
  probe <preset> --lambda <q> [--hw <list>]
                      numerical convergence probe cross-checked against the
                      exact decision (exit code 3 when inconclusive)
  check [preset]      identity suite for one preset (default: all standard)
  table               invariants table over the standard presets

presets:
  su(p,q)  sp(n,R)  so*(2n)  so(n,2)  e6-iii  e7-vii
  raw:<family>:<rank>:<node>   expert form, family in {A,B,C,D,E6,E7}

options:
  --lambda <rational>   exact scalar parameter: p/q, integer, or finite
                        decimal (e.g. -5/2, -4, -4.5)
  --hw <list>           comma-separated pairings with the compact simple
                        coroots, optionally one c=<rational> term for the
                        central component: --hw 2,0 or --hw 1,0,c=-1/2
                        (default: all zero)
  --weight-limit <n>    cap on the enumerated weight-set size (default 1000000)
  --json                emit a JSON document instead of text
  --out <file>          also write the output bytes to <file>
  --eps-levels <n>  --eps-base <x>  --quad-tol <x>  --slope-margin <x>
  --boundary-margin <x>
                        probe configuration overrides

exit codes:
  0 success   1 usage error   2 invalid input   3 probe inconclusive
  4 internal error
)";

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ordered_json vec_json(const RationalVec& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v.coords) arr.push_back(to_string(c));
    return arr;
}

struct Options {
    std::string verb;
    std::string preset_text;
    bool has_preset = false;
    std::optional<Rational> lambda;
    std::optional<std::string> hw_text;
    std::size_t weight_limit = 1'000'000;
    bool json = false;
    std::optional<std::string> out_path;
    ProbeConfig probe_cfg;
};

long parse_long_flag(const std::string& value, const char* flag) {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw UsageError(std::string(flag) + " expects an integer, got '" + value + "'");
    return v;
}

double parse_double_flag(const std::string& value, const char* flag) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(value.c_str(), &end);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw UsageError(std::string(flag) + " expects a number, got '" + value + "'");
    return v;
}

Options parse_args(const std::vector<std::string>& args) {
    Options opts;
    std::vector<std::string> positionals;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        auto value_of = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                throw UsageError(std::string(flag) + " requires a value");
            return args[++i];
        };
        if (arg == "--json") {
            opts.json = true;
        } else if (arg == "--lambda") {
            const std::string& text = value_of("--lambda");
            try {
                opts.lambda = parse_rational(text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else if (arg == "--hw") {
            opts.hw_text = value_of("--hw");
        } else if (arg == "--weight-limit") {
            const long v = parse_long_flag(value_of("--weight-limit"), "--weight-limit");
            if (v < 1) throw UsageError("--weight-limit must be positive");
            opts.weight_limit = static_cast<std::size_t>(v);
        } else if (arg == "--out") {
            opts.out_path = value_of("--out");
        } else if (arg == "--eps-levels") {
            opts.probe_cfg.eps_levels =
                static_cast<int>(parse_long_flag(value_of("--eps-levels"), "--eps-levels"));
        } else if (arg == "--eps-base") {
            opts.probe_cfg.eps_base = parse_double_flag(value_of("--eps-base"), "--eps-base");
        } else if (arg == "--quad-tol") {
            opts.probe_cfg.quad_tol = parse_double_flag(value_of("--quad-tol"), "--quad-tol");
        } else if (arg == "--slope-margin") {
            opts.probe_cfg.slope_margin =
                parse_double_flag(value_of("--slope-margin"), "--slope-margin");
        } else if (arg == "--boundary-margin") {
            opts.probe_cfg.boundary_margin =
                parse_double_flag(value_of("--boundary-margin"), "--boundary-margin");
        } else if (arg.rfind("--", 0) == 0) {
            throw UsageError("unknown option '" + arg + "'");
        } else {
            positionals.push_back(arg);
        }
    }
    if (positionals.empty()) throw UsageError("missing verb");
    opts.verb = positionals[0];
    if (positionals.size() >= 2) {
        opts.preset_text = positionals[1];
        opts.has_preset = true;
    }
    if (positionals.size() > 2)
        throw UsageError("unexpected argument '" + positionals[2] + "'");
    return opts;
}

Preset parse_preset(const std::string& text) {
    try {
        return Preset::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

HighestWeightSpec parse_hw(const Options& opts, const HermitianStructure& hs) {
    HighestWeightSpec spec;
    if (!opts.hw_text) {
        spec.compact_pairings.assign(hs.compact_nodes().size(), 0);
        return spec;
    }
    bool central_seen = false;
    std::string_view rest = *opts.hw_text;
    while (!rest.empty()) {
        const std::size_t pos = rest.find(',');
        std::string token(rest.substr(0, pos));
        rest = pos == std::string_view::npos ? std::string_view{} : rest.substr(pos + 1);
        if (token.rfind("c=", 0) == 0) {
            if (central_seen) throw UsageError("--hw allows only one c=<rational> term");
            central_seen = true;
            try {
                spec.noncompact_pairing = parse_rational(token.substr(2));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            continue;
        }
        char* end = nullptr;
        errno = 0;
        const long v = std::strtol(token.c_str(), &end, 10);
        if (errno != 0 || end == token.c_str() || *end != '\0')
            throw UsageError("--hw expects integers or c=<rational>, got '" + token + "'");
        spec.compact_pairings.push_back(v);
    }
    return spec;
}

struct DomainBundle {
    Preset preset;
    HermitianStructure hs;
    CascadeResult cas;
    DomainInvariants inv;
};

DomainBundle build_bundle(const Preset& preset) {
    HermitianStructure hs = HermitianStructure::build(preset);
    CascadeResult cas = cascade(hs);
    DomainInvariants inv = domain_invariants(hs, cas);
    return {preset, std::move(hs), std::move(cas), std::move(inv)};
}

ordered_json invariants_json(const DomainBundle& b) {
    ordered_json doc;
    doc["preset"] = b.preset.name;
    doc["family"] = family_name(b.hs.roots().family());
    doc["rank"] = b.hs.roots().rank();
    doc["noncompact_node"] = b.hs.noncompact_node();
    doc["r"] = b.inv.r;
    if (b.inv.a) doc["a"] = *b.inv.a;
    else doc["a"] = nullptr;
    doc["b"] = b.inv.b;
    doc["p"] = b.inv.p;
    doc["complex_dimension"] = b.hs.complex_dimension();
    return doc;
}

ordered_json identities_json(const IdentityReport& report) {
    ordered_json checks = ordered_json::array();
    for (const auto& check : report.checks) {
        ordered_json entry;
        entry["name"] = check.name;
        entry["ok"] = check.ok;
        if (!check.ok) entry["detail"] = check.detail;
        checks.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["all_ok"] = report.all_ok;
    doc["checks"] = std::move(checks);
    return doc;
}

std::string a_text(const DomainInvariants& inv) {
    return inv.a ? std::to_string(*inv.a) : std::string("-");
}

int cmd_describe(const Options& opts, std::string& text) {
    const DomainBundle b = build_bundle(parse_preset(opts.preset_text));
    const IdentityReport ident = verify_domain_identities(b.hs, b.cas, b.inv);
    if (opts.json) {
        ordered_json doc = invariants_json(b);
        ordered_json gammas = ordered_json::array();
        ordered_json coroots = ordered_json::array();
        for (int i = 1; i <= b.cas.rank(); ++i) {
            gammas.push_back(vec_json(b.cas.gamma(i)));
            coroots.push_back(vec_json(b.cas.coroot(i)));
        }
        doc["gammas"] = std::move(gammas);
        doc["coroots"] = std::move(coroots);
        doc["identities"] = identities_json(ident);
        text = doc.dump(2) + "\n";
        return 0;
    }
    std::ostringstream os;
    os << "preset: " << b.preset.name << "\n";
    os << "ambient: " << family_name(b.hs.roots().family()) << "_" << b.hs.roots().rank()
       << ", noncompact node: " << b.hs.noncompact_node() << "\n";
    os << "r: " << b.inv.r << "  a: " << a_text(b.inv) << "  b: " << b.inv.b
       << "  p: " << b.inv.p << "\n";
    os << "complex dimension: " << b.hs.complex_dimension() << "\n";
    for (int i = 1; i <= b.cas.rank(); ++i)
        os << "gamma_" << i << ": " << to_string(b.cas.gamma(i)) << "\n";
    os << "identities: " << (ident.all_ok ? "all ok" : "FAILED") << "\n";
    if (!ident.all_ok)
        for (const auto& check : ident.checks)
            if (!check.ok) os << "  failed: " << check.name << " (" << check.detail << ")\n";
    text = os.str();
    return ident.all_ok ? 0 : 4;
}

int cmd_cascade(const Options& opts, std::string& text) {
    const Preset preset = parse_preset(opts.preset_text);
    const HermitianStructure hs = HermitianStructure::build(preset);
    const CascadeResult cas = cascade(hs);
    if (opts.json) {
        ordered_json doc;
        doc["preset"] = preset.name;
        doc["r"] = cas.rank();
        ordered_json gammas = ordered_json::array();
        ordered_json coroots = ordered_json::array();
        for (int i = 1; i <= cas.rank(); ++i) {
            gammas.push_back(vec_json(cas.gamma(i)));
            coroots.push_back(vec_json(cas.coroot(i)));
        }
        doc["gammas"] = std::move(gammas);
        doc["coroots"] = std::move(coroots);
        text = doc.dump(2) + "\n";
        return 0;
    }
    std::ostringstream os;
    os << "preset: " << preset.name << "\n";
    os << "r: " << cas.rank() << "\n";
    for (int i = 1; i <= cas.rank(); ++i)
        os << "gamma_" << i << ": " << to_string(cas.gamma(i))
           << "   coroot: " << to_string(cas.coroot(i)) << "\n";
    text = os.str();
    return 0;
}

ordered_json per_weight_json(const std::vector<PerWeightRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json entry;
        entry["weight"] = vec_json(row.weight);
        entry["index"] = row.index;
        entry["exponent"] = to_string(row.exponent);
        entry["satisfied"] = row.satisfied;
        arr.push_back(std::move(entry));
    }
    return arr;
}

int cmd_criterion(const Options& opts, std::string& text) {
    if (!opts.lambda) throw UsageError("criterion requires --lambda");
    const DomainBundle b = build_bundle(parse_preset(opts.preset_text));
    CriterionInput input;
    input.lambda = *opts.lambda;
    input.hw = parse_hw(opts, b.hs);
    input.weight_limit = opts.weight_limit;
    const CriterionReport report = decide(b.hs, b.cas, b.inv, input);
    if (opts.json) {
        ordered_json doc = invariants_json(b);
        doc["lambda"] = to_string(report.lambda);
        doc["lambda0"] = vec_json(highest_weight(b.hs, input.hw));
        doc["threshold"] = to_string(report.threshold);
        doc["nonzero"] = report.nonzero;
        doc["equivalence_ok"] = report.equivalence_ok;
        doc["per_weight"] = per_weight_json(report.per_weight);
        text = doc.dump(2) + "\n";
        return 0;
    }
    std::ostringstream os;
    os << "preset: " << b.preset.name << "\n";
    os << "lambda: " << to_string(report.lambda) << "\n";
    os << "threshold: " << to_string(report.threshold) << "\n";
    os << "nonzero: " << (report.nonzero ? "true" : "false") << "\n";
    os << "equivalence_ok: " << (report.equivalence_ok ? "true" : "false") << "\n";
    os << "per-weight conditions (" << report.per_weight.size() << "):\n";
    for (const auto& row : report.per_weight)
        os << "  weight " << to_string(row.weight) << "  i=" << row.index
           << "  exponent=" << to_string(row.exponent)
           << (row.satisfied ? "  satisfied" : "  NOT satisfied") << "\n";
    text = os.str();
    return 0;
}

int cmd_probe(const Options& opts, std::string& text) {
    if (!opts.lambda) throw UsageError("probe requires --lambda");
    const DomainBundle b = build_bundle(parse_preset(opts.preset_text));
    CriterionInput input;
    input.lambda = *opts.lambda;
    input.hw = parse_hw(opts, b.hs);
    input.weight_limit = opts.weight_limit;
    const ProbeCriterionReport report = probe_criterion(b.hs, b.cas, b.inv, input, opts.probe_cfg);

    // distinct-exponent diagnostics, in ascending exponent order
    std::vector<double> distinct;
    for (const auto& entry : report.entries)
        if (std::find(distinct.begin(), distinct.end(), entry.exponent) == distinct.end())
            distinct.push_back(entry.exponent);
    std::sort(distinct.begin(), distinct.end());
    std::vector<ProbeResult> diagnostics;
    for (double e : distinct) diagnostics.push_back(classify_exponent(e, opts.probe_cfg));

    if (opts.json) {
        ordered_json doc = invariants_json(b);
        doc["lambda"] = to_string(input.lambda);
        doc["threshold"] = to_string(report.decision.threshold);
        doc["nonzero"] = report.decision.nonzero;
        ordered_json entries = ordered_json::array();
        for (const auto& entry : report.entries) {
            ordered_json e;
            e["weight"] = vec_json(entry.weight);
            e["index"] = entry.index;
            e["exponent"] = format_double(entry.exponent);
            e["classification"] = to_string(entry.classification);
            entries.push_back(std::move(e));
        }
        doc["entries"] = std::move(entries);
        ordered_json diag = ordered_json::array();
        for (const auto& d : diagnostics) {
            ordered_json e;
            e["exponent"] = format_double(d.exponent);
            e["classification"] = to_string(d.classification);
            e["slope"] = format_double(d.slope_estimate);
            e["limit"] = format_double(d.limit_estimate);
            diag.push_back(std::move(e));
        }
        doc["classifications"] = std::move(diag);
        doc["overall"] = to_string(report.overall);
        if (report.agrees_with_decision) doc["agrees_with_decision"] = *report.agrees_with_decision;
        else doc["agrees_with_decision"] = nullptr;
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "preset: " << b.preset.name << "\n";
        os << "lambda: " << to_string(input.lambda) << "\n";
        os << "threshold: " << to_string(report.decision.threshold) << "\n";
        os << "nonzero (exact): " << (report.decision.nonzero ? "true" : "false") << "\n";
        os << "distinct exponents:\n";
        for (const auto& d : diagnostics)
            os << "  e=" << format_double(d.exponent) << "  " << to_string(d.classification)
               << "  slope=" << format_double(d.slope_estimate) << "\n";
        os << "overall: " << to_string(report.overall) << "\n";
        if (report.agrees_with_decision)
            os << "agrees_with_decision: " << (*report.agrees_with_decision ? "true" : "false")
               << "\n";
        else
            os << "agrees_with_decision: n/a\n";
        text = os.str();
    }
    return report.overall == Convergence::Inconclusive ? 3 : 0;
}

int cmd_check(const Options& opts, std::string& text) {
    std::vector<Preset> targets;
    if (opts.has_preset) targets.push_back(parse_preset(opts.preset_text));
    else targets = standard_presets();

    bool all_ok = true;
    ordered_json docs = ordered_json::array();
    std::ostringstream os;
    for (const Preset& preset : targets) {
        const DomainBundle b = build_bundle(preset);
        const IdentityReport ident = verify_domain_identities(b.hs, b.cas, b.inv);
        all_ok = all_ok && ident.all_ok;
        if (opts.json) {
            ordered_json doc;
            doc["preset"] = preset.name;
            doc["identities"] = identities_json(ident);
            docs.push_back(std::move(doc));
        } else {
            os << preset.name << ": " << (ident.all_ok ? "ok" : "FAILED") << "\n";
            for (const auto& check : ident.checks) {
                os << "  " << (check.ok ? "pass" : "FAIL") << "  " << check.name << "\n";
                if (!check.ok) os << "        " << check.detail << "\n";
            }
        }
    }
    if (opts.json) {
        ordered_json doc;
        doc["all_ok"] = all_ok;
        doc["presets"] = std::move(docs);
        text = doc.dump(2) + "\n";
    } else {
        os << (all_ok ? "all identities hold" : "IDENTITY FAILURES PRESENT") << "\n";
        text = os.str();
    }
    return all_ok ? 0 : 4;
}

int cmd_table(const Options& opts, std::string& text) {
    bool all_ok = true;
    if (opts.json) {
        ordered_json rows = ordered_json::array();
        for (const Preset& preset : standard_presets()) {
            const DomainBundle b = build_bundle(preset);
            const IdentityReport ident = verify_domain_identities(b.hs, b.cas, b.inv);
            all_ok = all_ok && ident.all_ok;
            ordered_json row = invariants_json(b);
            row["identities_ok"] = ident.all_ok;
            rows.push_back(std::move(row));
        }
        ordered_json doc;
        doc["rows"] = std::move(rows);
        text = doc.dump(2) + "\n";
        return all_ok ? 0 : 4;
    }
    std::ostringstream os;
    os << std::left << std::setw(10) << "preset" << std::right << std::setw(8) << "ambient"
       << std::setw(6) << "node" << std::setw(4) << "r" << std::setw(4) << "a" << std::setw(4)
       << "b" << std::setw(4) << "p" << std::setw(6) << "dim" << "  identities\n";
    for (const Preset& preset : standard_presets()) {
        const DomainBundle b = build_bundle(preset);
        const IdentityReport ident = verify_domain_identities(b.hs, b.cas, b.inv);
        all_ok = all_ok && ident.all_ok;
        os << std::left << std::setw(10) << preset.name << std::right << std::setw(8)
           << (family_name(preset.family) + "_" + std::to_string(preset.rank)) << std::setw(6)
           << preset.noncompact_node << std::setw(4) << b.inv.r << std::setw(4) << a_text(b.inv)
           << std::setw(4) << b.inv.b << std::setw(4) << b.inv.p << std::setw(6)
           << b.hs.complex_dimension() << "  " << (ident.all_ok ? "pass" : "FAIL") << "\n";
    }
    text = os.str();
    return all_ok ? 0 : 4;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 1;
        }
        if (args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
            out << kUsage;
            return 0;
        }
        const Options opts = parse_args(args);

        const bool needs_preset = opts.verb == "describe" || opts.verb == "cascade" ||
                                  opts.verb == "criterion" || opts.verb == "probe";
        if (needs_preset && !opts.has_preset)
            throw UsageError(opts.verb + " requires a preset argument");
        if (opts.verb == "table" && opts.has_preset)
            throw UsageError("table takes no preset argument");

        std::string text;
        int code;
        if (opts.verb == "describe") code = cmd_describe(opts, text);
        else if (opts.verb == "cascade") code = cmd_cascade(opts, text);
        else if (opts.verb == "criterion") code = cmd_criterion(opts, text);
        else if (opts.verb == "probe") code = cmd_probe(opts, text);
        else if (opts.verb == "check") code = cmd_check(opts, text);
        else if (opts.verb == "table") code = cmd_table(opts, text);
        else throw UsageError("unknown verb '" + opts.verb + "'");

        out << text;
        if (opts.out_path) {
            std::ofstream file(*opts.out_path, std::ios::binary);
            if (!file) throw OutputError("cannot open '" + *opts.out_path + "' for writing");
            file << text;
            if (!file) throw OutputError("failed writing '" + *opts.out_path + "'");
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 1;
    } catch (const InternalIdentityError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const MultiplicityMismatchError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace holodisc
