#pragma once

#include <string>
#include <vector>

namespace subgrowth {

// One parametric family of forbidden-pattern sizes:
// count(n) = kappa * n^degree * rho^n patterns of size size_slope*n + size_offset,
// for n = n_start, n_start+1, ...  A finite term is the single index n = n_start.
struct FamilyTerm {
    double kappa = 1.0;
    double rho = 1.0;
    int degree = 0;       // 0, 1 or 2
    long n_start = 1;
    long size_slope = 1;
    long size_offset = 0;
    bool finite = false;

    double count(long n) const;
    double size(long n) const {
        return static_cast<double>(size_slope) * static_cast<double>(n) +
               static_cast<double>(size_offset);
    }
};

// The multiset of forbidden-pattern sizes: the only input the bounds need.
struct SizeProfile {
    long alphabet_size = 2;
    std::vector<FamilyTerm> terms;
};

enum class WeightKind { General, ZConnected, Custom };

// weight(s) = c0 + c1*s applied to each pattern of size s in the series.
struct WeightMode {
    WeightKind kind = WeightKind::General;
    double c0 = 0.0;
    double c1 = 1.0;

    static WeightMode general() { return {WeightKind::General, 0.0, 1.0}; }
    static WeightMode z_connected() { return {WeightKind::ZConnected, 1.0, 0.0}; }
    static WeightMode custom(double c0, double c1) {
        return {WeightKind::Custom, c0, c1};
    }
    double weight(double size) const { return c0 + c1 * size; }
    std::string name() const;
};

// Throw std::invalid_argument on structural violations (kappa/rho <= 0,
// degree outside {0,1,2}, n_start < 1, size_slope < 1, smallest size < 1,
// alphabet_size < 2).
void validate_profile(const SizeProfile& profile);

// Additionally require weight(s) >= 1 for every size s the profile can produce.
void validate_weight(const SizeProfile& profile, const WeightMode& mode);

} // namespace subgrowth
