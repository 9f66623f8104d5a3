#include "holodisc/criterion.hpp"

#include "holodisc/errors.hpp"

#include <algorithm>

namespace holodisc {

Rational threshold(const HermitianStructure& hs, const CascadeResult& cas,
                   const DomainInvariants& inv, const HighestWeightSpec& hw) {
    const Weight lambda0 = highest_weight(hs, hw);
    const RationalVec& gamma_r = cas.gamma(cas.rank());
    const Rational direct = -pairing(lambda0 + hs.rho(), gamma_r);
    const Rational via_genus = Rational(1) - inv.p - pairing(lambda0, gamma_r);
    if (direct != via_genus)
        throw InternalIdentityError("threshold forms disagree: " + to_string(direct) + " vs " +
                                    to_string(via_genus));
    return direct;
}

std::vector<PerWeightRow> per_weight_conditions(const HermitianStructure& hs,
                                                const CascadeResult& cas,
                                                const DomainInvariants& inv,
                                                const CriterionInput& input) {
    // the genus identity pins (2 rho_P, gamma_i^vee); verify before relying
    // on the exponent formula
    for (int i = 1; i <= cas.rank(); ++i)
        if (2 * pairing(hs.rho_p(), cas.gamma(i)) != inv.p)
            throw InternalIdentityError("2*rho_P(h_i) != p while building the exponent table");

    const WeightSet ws = weight_set(hs, input.hw, input.weight_limit);
    std::vector<PerWeightRow> rows;
    rows.reserve(ws.size() * static_cast<std::size_t>(cas.rank()));
    for (std::size_t idx = 0; idx < ws.size(); ++idx) {
        const Weight mu = ws.materialize(idx);
        for (int i = 1; i <= cas.rank(); ++i) {
            PerWeightRow row;
            row.weight = mu;
            row.index = i;
            row.exponent = -(input.lambda * pairing(hs.lambda1(), cas.gamma(i)) +
                             pairing(mu, cas.gamma(i)) + 2 * pairing(hs.rho_p(), cas.gamma(i)));
            row.satisfied = row.exponent > -1;
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const PerWeightRow& a, const PerWeightRow& b) {
        if (!(a.weight == b.weight)) return a.weight < b.weight;
        return a.index < b.index;
    });
    return rows;
}

CriterionReport decide(const HermitianStructure& hs, const CascadeResult& cas,
                       const DomainInvariants& inv, const CriterionInput& input) {
    CriterionReport report;
    report.lambda = input.lambda;
    report.threshold = threshold(hs, cas, inv, input.hw);
    report.nonzero = input.lambda < report.threshold;
    report.per_weight = per_weight_conditions(hs, cas, inv, input);
    const bool all_satisfied =
        std::all_of(report.per_weight.begin(), report.per_weight.end(),
                    [](const PerWeightRow& row) { return row.satisfied; });
    report.equivalence_ok = all_satisfied == report.nonzero;
    return report;
}

} // namespace holodisc
