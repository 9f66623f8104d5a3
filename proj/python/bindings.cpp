#include "holodisc/cascade.hpp"
#include "holodisc/criterion.hpp"
#include "holodisc/errors.hpp"
#include "holodisc/hermitian.hpp"
#include "holodisc/probe.hpp"
#include "holodisc/repweights.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace holodisc;

std::vector<std::string> vec_strings(const RationalVec& v) {
    std::vector<std::string> out;
    out.reserve(v.coords.size());
    for (const auto& c : v.coords) out.push_back(to_string(c));
    return out;
}

HighestWeightSpec make_spec(const HermitianStructure& hs, const std::vector<long>& compact,
                            const std::string& central) {
    HighestWeightSpec spec;
    // an empty list means the scalar choice, like the CLI's --hw default
    if (compact.empty()) spec.compact_pairings.assign(hs.compact_nodes().size(), 0);
    else spec.compact_pairings = compact;
    spec.noncompact_pairing = parse_rational(central);
    return spec;
}

ProbeConfig make_config(int eps_levels, double eps_base, double quad_tol, double slope_margin,
                        double boundary_margin) {
    ProbeConfig cfg;
    cfg.eps_levels = eps_levels;
    cfg.eps_base = eps_base;
    cfg.quad_tol = quad_tol;
    cfg.slope_margin = slope_margin;
    cfg.boundary_margin = boundary_margin;
    cfg.validate();
    return cfg;
}

py::dict result_dict(const ProbeResult& result) {
    py::dict d;
    d["exponent"] = result.exponent;
    d["classification"] = to_string(result.classification);
    d["slope"] = result.slope_estimate;
    d["limit"] = std::isnan(result.limit_estimate) ? py::object(py::none())
                                                   : py::object(py::float_(result.limit_estimate));
    d["values"] = result.values;
    return d;
}

py::list per_weight_list(const std::vector<PerWeightRow>& rows) {
    py::list out;
    for (const auto& row : rows) {
        py::dict d;
        d["weight"] = vec_strings(row.weight);
        d["index"] = row.index;
        d["exponent"] = to_string(row.exponent);
        d["satisfied"] = row.satisfied;
        out.append(std::move(d));
    }
    return out;
}

/// One preset materialized: root system, compact/noncompact split, cascade,
/// and the derived invariants, all computed once at construction.
struct Domain {
    Preset preset;
    HermitianStructure hs;
    CascadeResult cas;
    DomainInvariants inv;

    explicit Domain(const std::string& text)
        : preset(Preset::parse(text)),
          hs(HermitianStructure::build(preset)),
          cas(cascade(hs)),
          inv(domain_invariants(hs, cas)) {}

    py::object a() const {
        return inv.a ? py::object(py::int_(*inv.a)) : py::object(py::none());
    }

    py::list gammas() const {
        py::list out;
        for (const auto& g : cas.gammas) out.append(vec_strings(g));
        return out;
    }

    py::list coroots() const {
        py::list out;
        for (const auto& h : cas.coroots) out.append(vec_strings(h));
        return out;
    }

    py::dict identities() const {
        const IdentityReport report = verify_domain_identities(hs, cas, inv);
        py::dict d;
        d["all_ok"] = report.all_ok;
        py::list checks;
        for (const auto& check : report.checks) {
            py::dict c;
            c["name"] = check.name;
            c["ok"] = check.ok;
            if (!check.ok) c["detail"] = check.detail;
            checks.append(std::move(c));
        }
        d["checks"] = std::move(checks);
        return d;
    }

    std::string threshold_str(const std::vector<long>& hw, const std::string& central) const {
        return to_string(threshold(hs, cas, inv, make_spec(hs, hw, central)));
    }

    std::size_t weight_count(const std::vector<long>& hw, const std::string& central,
                             std::size_t weight_limit) const {
        return weight_set(hs, make_spec(hs, hw, central), weight_limit).size();
    }

    py::dict max_pairing_dict(const std::vector<long>& hw, const std::string& central,
                              std::size_t weight_limit) const {
        const WeightSet ws = weight_set(hs, make_spec(hs, hw, central), weight_limit);
        const MaxPairing mp = max_pairing(hs, cas, ws);
        py::dict d;
        d["value"] = to_string(mp.value);
        d["argmax_weight"] = vec_strings(mp.argmax_weight);
        d["argmax_index"] = mp.argmax_index;
        return d;
    }

    py::dict decide_dict(const std::string& lambda_text, const std::vector<long>& hw,
                         const std::string& central, std::size_t weight_limit) const {
        CriterionInput input;
        input.lambda = parse_rational(lambda_text);
        input.hw = make_spec(hs, hw, central);
        input.weight_limit = weight_limit;
        const CriterionReport report = decide(hs, cas, inv, input);
        py::dict d;
        d["lambda"] = to_string(report.lambda);
        d["threshold"] = to_string(report.threshold);
        d["nonzero"] = report.nonzero;
        d["equivalence_ok"] = report.equivalence_ok;
        d["per_weight"] = per_weight_list(report.per_weight);
        return d;
    }

    py::dict probe_dict(const std::string& lambda_text, const std::vector<long>& hw,
                        const std::string& central, std::size_t weight_limit, int eps_levels,
                        double eps_base, double quad_tol, double slope_margin,
                        double boundary_margin) const {
        CriterionInput input;
        input.lambda = parse_rational(lambda_text);
        input.hw = make_spec(hs, hw, central);
        input.weight_limit = weight_limit;
        const ProbeCriterionReport report = probe_criterion(
            hs, cas, inv, input,
            make_config(eps_levels, eps_base, quad_tol, slope_margin, boundary_margin));
        py::dict d;
        d["threshold"] = to_string(report.decision.threshold);
        d["nonzero"] = report.decision.nonzero;
        d["overall"] = to_string(report.overall);
        d["agrees_with_decision"] = report.agrees_with_decision
                                        ? py::object(py::bool_(*report.agrees_with_decision))
                                        : py::object(py::none());
        py::list entries;
        for (const auto& entry : report.entries) {
            py::dict e;
            e["weight"] = vec_strings(entry.weight);
            e["index"] = entry.index;
            e["exponent"] = entry.exponent;
            e["classification"] = to_string(entry.classification);
            entries.append(std::move(e));
        }
        d["entries"] = std::move(entries);
        return d;
    }
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact structural invariants of Hermitian symmetric domains and the "
              "holomorphic discrete series non-vanishing criterion.";

    py::register_exception<NotHermitianError>(m, "NotHermitianError", PyExc_ValueError);
    py::register_exception<NonDominantError>(m, "NonDominantError", PyExc_ValueError);
    py::register_exception<UnsupportedTypeError>(m, "UnsupportedTypeError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);

    py::class_<Domain>(m, "Domain")
        .def(py::init<const std::string&>(), py::arg("preset"),
             "Build a domain from a preset string such as 'sp(2,R)' or 'raw:C:2:2'.")
        .def_property_readonly("name", [](const Domain& d) { return d.preset.name; })
        .def_property_readonly("family",
                               [](const Domain& d) { return family_name(d.preset.family); })
        .def_property_readonly("rank", [](const Domain& d) { return d.hs.roots().rank(); })
        .def_property_readonly("noncompact_node",
                               [](const Domain& d) { return d.hs.noncompact_node(); })
        .def_property_readonly("r", [](const Domain& d) { return d.inv.r; })
        .def_property_readonly("a", &Domain::a)
        .def_property_readonly("b", [](const Domain& d) { return d.inv.b; })
        .def_property_readonly("p", [](const Domain& d) { return d.inv.p; })
        .def_property_readonly("complex_dimension",
                               [](const Domain& d) { return d.hs.complex_dimension(); })
        .def("gammas", &Domain::gammas, "Cascade roots gamma_1..gamma_r as rational strings.")
        .def("coroots", &Domain::coroots)
        .def("identities", &Domain::identities, "Exact identity suite report.")
        .def("threshold", &Domain::threshold_str, py::arg("hw") = std::vector<long>{},
             py::arg("central") = "0",
             "Non-vanishing threshold -(Lambda0 + rho)(h_r) as a rational string.")
        .def("weight_count", &Domain::weight_count, py::arg("hw") = std::vector<long>{},
             py::arg("central") = "0", py::arg("weight_limit") = std::size_t{1'000'000})
        .def("max_pairing", &Domain::max_pairing_dict, py::arg("hw") = std::vector<long>{},
             py::arg("central") = "0", py::arg("weight_limit") = std::size_t{1'000'000},
             "Maximum of (mu, gamma_i^vee) over the weight set, with an attaining pair.")
        .def("decide", &Domain::decide_dict, py::arg("lam"), py::arg("hw") = std::vector<long>{},
             py::arg("central") = "0", py::arg("weight_limit") = std::size_t{1'000'000},
             "Exact non-vanishing decision for pi = e^{lam Lambda1} (x) pi0.")
        .def("probe", &Domain::probe_dict, py::arg("lam"), py::arg("hw") = std::vector<long>{},
             py::arg("central") = "0", py::arg("weight_limit") = std::size_t{1'000'000},
             py::arg("eps_levels") = 20, py::arg("eps_base") = 0.25,
             py::arg("quad_tol") = 1e-10, py::arg("slope_margin") = 0.02,
             py::arg("boundary_margin") = 0.05,
             "Numerical convergence probe cross-checked against the exact decision.");

    m.def("standard_presets", []() {
        std::vector<std::string> names;
        for (const Preset& preset : standard_presets()) names.push_back(preset.name);
        return names;
    });

    m.def(
        "classify_exponent",
        [](double e, int eps_levels, double eps_base, double quad_tol, double slope_margin,
           double boundary_margin) {
            return result_dict(classify_exponent(
                e, make_config(eps_levels, eps_base, quad_tol, slope_margin, boundary_margin)));
        },
        py::arg("e"), py::arg("eps_levels") = 20, py::arg("eps_base") = 0.25,
        py::arg("quad_tol") = 1e-10, py::arg("slope_margin") = 0.02,
        py::arg("boundary_margin") = 0.05,
        "Classify the endpoint behavior of int_0^1 (1-t^2)^e dt.");
}
