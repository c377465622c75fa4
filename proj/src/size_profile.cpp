#include "subgrowth/size_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace subgrowth {

double FamilyTerm::count(long n) const {
    double nn = static_cast<double>(n);
    double poly = 1.0;
    for (int i = 0; i < degree; ++i) poly *= nn;
    return kappa * poly * std::pow(rho, nn);
}

std::string WeightMode::name() const {
    switch (kind) {
    case WeightKind::General: return "general";
    case WeightKind::ZConnected: return "z";
    case WeightKind::Custom: return "custom";
    }
    return "?";
}

void validate_profile(const SizeProfile& profile) {
    if (profile.alphabet_size < 2)
        throw std::invalid_argument("alphabet_size must be >= 2");
    for (const FamilyTerm& t : profile.terms) {
        if (!(t.kappa > 0.0) || !std::isfinite(t.kappa))
            throw std::invalid_argument("term kappa must be positive and finite");
        if (!(t.rho > 0.0) || !std::isfinite(t.rho))
            throw std::invalid_argument("term rho must be positive and finite");
        if (t.degree < 0 || t.degree > 2)
            throw std::invalid_argument(
                "term degree outside {0,1,2} is unsupported");
        if (t.n_start < 1)
            throw std::invalid_argument("term n_start must be >= 1");
        if (t.size_slope < 1)
            throw std::invalid_argument("term size_slope must be a positive integer");
        if (t.size(t.n_start) < 1.0)
            throw std::invalid_argument("smallest pattern size must be >= 1");
    }
}

void validate_weight(const SizeProfile& profile, const WeightMode& mode) {
    if (!std::isfinite(mode.c0) || !std::isfinite(mode.c1))
        throw std::invalid_argument("weight coefficients must be finite");
    for (const FamilyTerm& t : profile.terms) {
        // sizes grow along the family, so a negative slope coefficient can
        // only stay >= 1 on a finite term
        if (mode.c1 < 0.0 && !t.finite)
            throw std::invalid_argument(
                "weight decreasing in size is invalid for an infinite family");
        double smallest = t.size(t.n_start);
        if (mode.weight(smallest) < 1.0)
            throw std::invalid_argument(
                "weight must be >= 1 for every size in the profile");
    }
}

} // namespace subgrowth
