#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cli/document.hpp"
#include "cli/verdict.hpp"
#include "hopfaz/en_family.hpp"

namespace hopfaz::cli {

/// Routes of en-check: the determinant criterion, theta_sigma, the F/G maps
/// and the quasitriangular dual picture.
inline const std::set<std::string> kAllRoutes{"det", "theta", "fg", "dual"};
inline const std::set<std::string> kDefaultRoutes{"det", "theta", "fg"};

inline const std::set<std::string> kAllSuites{"hopf", "cocycle", "dqt", "comodule", "integrals", "s-identities", "azumaya"};

Json params_json(const ENParams& p);

/// Adds the routes-agree check and sets verdict and exit code from the route map:
/// any failed check or split verdict is a disagreement (exit 3).
void finalize_routes(VerdictReport& rep);

VerdictReport cmd_en_check(const ENParams& p, const std::set<std::string>& routes = kDefaultRoutes);

/// Empty `suites` selects every suite the document has data for.
VerdictReport cmd_verify(const StructureConstantDocument& doc, const std::set<std::string>& suites = {});

VerdictReport cmd_table(const ENParams& p, bool include_sigma = false);

struct SweepSpec {
    std::size_t n = 1;
    Field field = Field::rational();
    /// n = 1 grid, as exact rationals; points that do not embed in the field are skipped.
    std::vector<mpq_class> alphas{1, -1, 2};
    std::vector<mpq_class> gammas{0, 1, 2};
    std::vector<mpq_class> lambdas{0, 1, mpq_class(-1, 2)};
    std::vector<mpq_class> ts{0, 1, -2};
    /// n >= 2: seeded random points.
    std::size_t points = 50;
    std::uint64_t seed = 1;
    int lo = -2;
    int hi = 2;
    std::set<std::string> routes = kDefaultRoutes;
    unsigned jobs = 1;
};

std::vector<ENParams> sweep_points(const SweepSpec& spec, std::size_t* skipped = nullptr);
VerdictReport cmd_sweep(const SweepSpec& spec);

/// E(n) with sigma(alpha, gamma, Lambda), r_A and the Clifford comodule algebra.
StructureConstantDocument export_en_document(const ENParams& p);

} // namespace hopfaz::cli
