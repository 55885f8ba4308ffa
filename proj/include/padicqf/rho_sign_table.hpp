#pragma once

// Generated by tools/gen_rho_signs.cpp; do not edit by hand.
// Sign s in rho(pi_eta, s) = s * sigma_p * p^{s-1/2} for eta = p and eta = eps*p.

namespace padicqf {

struct RhoSignRow {
    unsigned long prime;
    int sign_p;
    int sign_eps_p;
};

inline constexpr RhoSignRow kRhoSignTable[] = {
    {3, 1, -1},
    {5, 1, -1},
    {7, 1, -1},
    {11, 1, -1},
    {13, 1, -1},
};

}  // namespace padicqf
