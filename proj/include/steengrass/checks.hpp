#pragma once

#include "steengrass/grass.hpp"
#include "steengrass/wu.hpp"

#include <string>
#include <vector>

namespace steengrass {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // extra context; also used for report-only lines
};

/// apply_sym vs apply_oracle for all D_lambda with |lambda| <= 4 on all s_mu
/// with |mu| <= max_degree, at nvars = 10.
std::vector<CheckResult> run_oracle_suite(int max_degree = 6);

/// Cartan/co-Cartan, Lie bracket, the strip-power recursion identity, the
/// Hopf structure of the dual algebra, the coaction, the Hammond identities and
/// the Borel-Serre lifts.
std::vector<CheckResult> run_hopf_suite(int max_degree = 6);

/// Values pinned from the source material: the worked Grassmannian actions,
/// the alpha/beta table entries, the window example, the inverse-Kostka
/// closed form and the Wu formula. Includes one report-only line for the
/// contested composition on s_1.
std::vector<CheckResult> run_paper_suite();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace steengrass
