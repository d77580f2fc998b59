#pragma once

// Named identity checks over the engine. Every check is an exact comparison;
// a failing identity is a report entry, never an exception.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "drasp4/ambient.hpp"
#include "drasp4/gwa.hpp"

namespace drasp4 {

inline constexpr std::uint32_t kDomainSampleSeed = 20240611;

struct ReportEntry {
  std::string suite;
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string residual;  // lhs - rhs, or a diagnostic; empty on pass
};

struct Report {
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  std::size_t num_failed() const;
  void append(const Report& other);
  /// Entries of one suite, in order.
  Report suite(std::string_view name) const;
  const ReportEntry* find(std::string_view suite, std::string_view id) const;
};

/// One line per entry: `[PASS] suite:id` or `[FAIL] suite:id residual`.
std::string render_text(const Report& r);

/// Suite names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name; "all" runs every suite.
Report run_suite(std::string_view name);

Report verify_bootstrap();
Report verify_presentation();
Report verify_lemma32();
Report verify_coefficients();
Report verify_normalized();
Report verify_appendix();
Report verify_sigma_commute();
Report verify_gwa_iso(int maxdeg = 3);
Report verify_projector();
Report verify_limit();
Report verify_domain_sample(std::uint32_t seed = kDomainSampleSeed, int pairs = 100);
Report verify_triangular(int maxdeg = 3);
Report verify_theta();
/// Commutation and invertibility data of a user-supplied skew-affine ansatz.
Report verify_ansatz(const AffineSigmaData& data);

/// Random nonzero element: 1 to 3 terms of Weyl degree <= maxdeg with
/// coefficients (affine form)/(affine form), small integer entries.
DraElem random_dra_elem(std::mt19937& rng, int maxdeg = 2);

/// Pure Weyl monomials of degree <= maxdeg in the d1 d2 x2 x1 order.
std::vector<WeylMono> weyl_monomials(int maxdeg);

}  // namespace drasp4
