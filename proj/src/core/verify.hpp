#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/pick.hpp"
#include "core/rng.hpp"
#include "core/variety.hpp"

namespace tripick {

enum class CheckStatus { pass, fail, ambiguous };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    double worst_residual = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::string detail; // tolerance used, exclusion counts, failure notes
};

struct VerifyConfig {
    std::uint64_t seed = 20260809;
    double scale = 1.0; // multiplies sample counts (>0)
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;

    bool all_passed() const;
    long total_samples() const;
};

// Runs every module invariant as a named check, canonically ordered by name.
VerificationReport verify_suite(const VerifyConfig& cfg);

// shared seeded generators
NodalData random_nodal(Rng& rng, double max_mod = 0.8, double margin = 0.05, double bary_lo = 0.1,
                       double bary_hi = 0.9);
AlphaTriple random_triangle_alpha(Rng& rng);

// individual checks (the acceptance suite drives these with pinned parameters)
CheckResult check_mobius_involution(std::uint64_t seed, long n);
CheckResult check_magic_inner(std::uint64_t seed, long n);
CheckResult check_magic_interior_bound(std::uint64_t seed, long n);
CheckResult check_blaschke_winding(std::uint64_t seed, long n);
CheckResult check_graph_consistency(std::uint64_t seed, long n);
CheckResult check_region_correspondence(long grid);
CheckResult check_jacobian(long grid);
CheckResult check_basemap_roundtrip(std::uint64_t seed, long n, int max_newton_steps);
CheckResult check_rotation_normalize(std::uint64_t seed, long n_alphas, long n_samples);
CheckResult check_biholo(std::uint64_t seed, long pairs, long n_samples);
CheckResult check_interpolation_identity(std::uint64_t seed, long instances);
CheckResult check_coefficient_form(std::uint64_t seed, long instances);
CheckResult check_self_inversive(std::uint64_t seed, long instances);
CheckResult check_discriminant_vanishing(std::uint64_t seed, long instances);
CheckResult check_discriminant_mutation(std::uint64_t seed);
CheckResult check_uniqueness_equality(std::uint64_t seed, long instances, long total_samples);
CheckResult check_nodal_containment(std::uint64_t seed, long instances);
CheckResult check_normal_form(std::uint64_t seed, long n);
CheckResult check_recover_lambda(std::uint64_t seed, long n);
CheckResult check_nondegenerate_nodal(std::uint64_t seed, long n);
CheckResult check_poly_ring_laws(std::uint64_t seed, long n);
CheckResult check_poly_eval_homomorphism(std::uint64_t seed, long n);
CheckResult check_poly_discriminant_consistency(std::uint64_t seed, long n);
CheckResult check_closure_equivalence(std::uint64_t seed, long n);
CheckResult check_torus_closure(std::uint64_t seed, long n);
CheckResult check_circle_slice(std::uint64_t seed, long n);

} // namespace tripick
