#include "holodisc/cascade.hpp"

#include "holodisc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holodisc {

namespace {

bool strongly_orthogonal(const RootSystem& rs, const RationalVec& beta, const RationalVec& gamma) {
    return !(beta == gamma) && !rs.is_root(beta + gamma) && !rs.is_root(beta - gamma) &&
           !(beta + gamma).is_zero() && !(beta - gamma).is_zero();
}

// Descending-height, then descending-lex tie break. Whenever the candidate
// set has a root-order maximum (it always does along the cascade), this
// ordering finds it: the maximum strictly dominates every other candidate,
// hence has strictly larger height.
bool preferred(const RootSystem& rs, int idx_a, int idx_b) {
    const Rational& ha = rs.height(idx_a);
    const Rational& hb = rs.height(idx_b);
    if (ha != hb) return ha > hb;
    return rs.positive_roots()[idx_b] < rs.positive_roots()[idx_a];
}

std::string class_name(RestrictedClass cls) {
    switch (cls) {
        case RestrictedClass::Zero: return "zero";
        case RestrictedClass::Gamma: return "gamma";
        case RestrictedClass::HalfGamma: return "half_gamma";
        case RestrictedClass::HalfPair: return "half_pair";
        case RestrictedClass::Other: return "other";
    }
    throw std::logic_error("unknown restricted class");
}

} // namespace

CascadeResult cascade(const HermitianStructure& hs) {
    const RootSystem& rs = hs.roots();

    // indices into positive_roots() of the noncompact positive roots
    std::vector<int> candidates;
    {
        const auto& noncompact = hs.noncompact_positive();
        const auto& positive = rs.positive_roots();
        for (int idx = 0; idx < static_cast<int>(positive.size()); ++idx)
            if (std::find(noncompact.begin(), noncompact.end(), positive[idx]) !=
                noncompact.end())
                candidates.push_back(idx);
    }

    std::vector<RationalVec> descending;
    while (!candidates.empty()) {
        int best = candidates.front();
        for (int idx : candidates)
            if (preferred(rs, idx, best)) best = idx;
        const RationalVec gamma = rs.positive_roots()[best];

        std::vector<int> next;
        for (int idx : candidates)
            if (strongly_orthogonal(rs, rs.positive_roots()[idx], gamma)) next.push_back(idx);
        candidates = std::move(next);
        descending.push_back(gamma);
    }

    CascadeResult out;
    out.gammas.assign(descending.rbegin(), descending.rend());
    for (const auto& gamma : out.gammas) {
        const Rational scale = Rational(2) / dot(gamma, gamma);
        out.coroots.push_back(scale * gamma);
    }
    return out;
}

RestrictedProjection restricted_projection(const CascadeResult& cas, const RationalVec& beta) {
    RestrictedProjection out;
    const int r = cas.rank();

    // strongly orthogonal roots are in particular orthogonal, so the
    // projection coefficients decouple into one pairing per cascade root
    std::vector<Rational> coeffs(r);
    out.projection.coords.assign(beta.dim(), Rational(0));
    for (int i = 0; i < r; ++i) {
        coeffs[i] = dot(beta, cas.gammas[i]) / dot(cas.gammas[i], cas.gammas[i]);
        out.projection = out.projection + coeffs[i] * cas.gammas[i];
    }

    std::vector<int> support;
    for (int i = 0; i < r; ++i)
        if (coeffs[i] != 0) support.push_back(i);

    const Rational half(1, 2);
    if (support.empty()) {
        out.cls = RestrictedClass::Zero;
        return out;
    }
    if (support.size() == 1) {
        const int i = support[0];
        const Rational& c = coeffs[i];
        if (c == 1 || c == -1) {
            out.cls = RestrictedClass::Gamma;
            out.i = i + 1;
            out.sign_i = c == 1 ? 1 : -1;
            return out;
        }
        if (c == half || c == -half) {
            out.cls = RestrictedClass::HalfGamma;
            out.i = i + 1;
            out.sign_i = c == half ? 1 : -1;
            return out;
        }
        out.cls = RestrictedClass::Other;
        return out;
    }
    if (support.size() == 2) {
        const int i = support[0], j = support[1];
        if ((coeffs[i] == half || coeffs[i] == -half) &&
            (coeffs[j] == half || coeffs[j] == -half)) {
            out.cls = RestrictedClass::HalfPair;
            out.i = i + 1;
            out.j = j + 1;
            out.sign_i = coeffs[i] == half ? 1 : -1;
            out.sign_j = coeffs[j] == half ? 1 : -1;
            return out;
        }
    }
    out.cls = RestrictedClass::Other;
    return out;
}

DomainInvariants domain_invariants(const HermitianStructure& hs, const CascadeResult& cas) {
    DomainInvariants inv;
    inv.r = cas.rank();
    if (inv.r == 0) throw MultiplicityMismatchError("empty cascade");

    for (int i = 1; i <= inv.r; ++i) {
        inv.mult_halves[i] = 0;
        for (int j = i + 1; j <= inv.r; ++j) inv.mult_pairs[{i, j}] = 0;
    }

    for (const auto& beta : hs.noncompact_positive()) {
        RestrictedProjection proj = restricted_projection(cas, beta);
        ++inv.restricted_profile[class_name(proj.cls)];
        switch (proj.cls) {
            case RestrictedClass::Gamma:
                if (proj.sign_i != 1)
                    throw MultiplicityMismatchError("negative restriction of a positive root: " +
                                                    to_string(beta));
                break;
            case RestrictedClass::HalfGamma:
                if (proj.sign_i != 1)
                    throw MultiplicityMismatchError("negative restriction of a positive root: " +
                                                    to_string(beta));
                ++inv.mult_halves[proj.i];
                break;
            case RestrictedClass::HalfPair:
                if (proj.sign_i != 1 || proj.sign_j != 1)
                    throw MultiplicityMismatchError(
                        "mixed-sign restriction of a noncompact positive root: " +
                        to_string(beta));
                ++inv.mult_pairs[{proj.i, proj.j}];
                break;
            case RestrictedClass::Zero:
            case RestrictedClass::Other:
                throw MultiplicityMismatchError("noncompact positive root " + to_string(beta) +
                                                " restricts outside the expected classes");
        }
    }

    // each gamma_i itself restricts to gamma_i: exactly r full-gamma hits
    if (inv.restricted_profile[class_name(RestrictedClass::Gamma)] != inv.r)
        throw MultiplicityMismatchError("full restrictions do not match the cascade rank");

    if (inv.r >= 2) {
        int common = inv.mult_pairs.begin()->second;
        for (const auto& [key, count] : inv.mult_pairs)
            if (count != common)
                throw MultiplicityMismatchError(
                    "pair multiplicities disagree: r_" + std::to_string(key.first) +
                    std::to_string(key.second) + " = " + std::to_string(count) + " vs " +
                    std::to_string(common));
        inv.a = common;
    }
    {
        int common = inv.mult_halves.begin()->second;
        for (const auto& [i, count] : inv.mult_halves)
            if (count != common)
                throw MultiplicityMismatchError("half multiplicities disagree: r_" +
                                                std::to_string(i) + " = " + std::to_string(count) +
                                                " vs " + std::to_string(common));
        inv.b = common;
    }

    const int a_term = inv.a ? *inv.a * inv.r * (inv.r - 1) / 2 : 0;
    const int expected_dim = inv.r + a_term + inv.r * inv.b;
    if (expected_dim != hs.complex_dimension())
        throw MultiplicityMismatchError(
            "dimension bookkeeping failed: r + a r(r-1)/2 + r b = " +
            std::to_string(expected_dim) + " but |Delta_P^+| = " +
            std::to_string(hs.complex_dimension()));

    inv.p = (inv.r - 1) * (inv.a ? *inv.a : 0) + inv.b + 2;
    return inv;
}

IdentityReport verify_domain_identities(const HermitianStructure& hs, const CascadeResult& cas,
                                        const DomainInvariants& inv) {
    IdentityReport report;
    auto add = [&report](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
        report.all_ok = report.all_ok && ok;
    };

    const Rational two(2);
    {
        bool ok = true;
        std::ostringstream detail;
        for (int i = 1; i <= cas.rank(); ++i) {
            const Rational value = two * pairing(hs.rho_p(), cas.gamma(i));
            if (value != inv.p) {
                ok = false;
                detail << "i=" << i << ": " << to_string(value) << " != " << inv.p << "; ";
            }
        }
        add("2*rho_P(h_i) = p for all i", ok, detail.str());
    }
    {
        const Rational value = pairing(hs.rho(), cas.gamma(cas.rank()));
        add("rho(h_r) = p - 1", value == inv.p - 1,
            to_string(value) + " != " + std::to_string(inv.p - 1));
    }
    {
        bool ok = true;
        std::ostringstream detail;
        for (int i = 1; i <= cas.rank(); ++i) {
            const Rational value = pairing(hs.lambda1(), cas.gamma(i));
            if (value != 1) {
                ok = false;
                detail << "i=" << i << ": " << to_string(value) << " != 1; ";
            }
        }
        add("Lambda1(h_i) = 1 for all i", ok, detail.str());
    }
    {
        const RootSystem& rs = hs.roots();
        const Rational expected =
            dot(rs.simple_roots()[hs.noncompact_node() - 1], rs.simple_roots()[hs.noncompact_node() - 1]);
        Rational longest = 0;
        for (const auto& beta : rs.positive_roots()) {
            const Rational len = dot(beta, beta);
            if (len > longest) longest = len;
        }
        bool ok = expected == longest;
        std::ostringstream detail;
        if (!ok)
            detail << "distinguished simple root is not long: " << to_string(expected) << " vs "
                   << to_string(longest) << "; ";
        for (int i = 1; i <= cas.rank(); ++i) {
            const Rational len = dot(cas.gamma(i), cas.gamma(i));
            if (len != expected) {
                ok = false;
                detail << "gamma_" << i << " has squared length " << to_string(len) << " != "
                       << to_string(expected) << "; ";
            }
        }
        add("cascade roots are long, same length as the distinguished simple root", ok,
            detail.str());
    }
    return report;
}

} // namespace holodisc
