/*
 * Copyright 2026 The ppsign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPSIGN_APP_HPP
#define PPSIGN_APP_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "ppsign/exactalg.hpp"
#include "ppsign/oracle.hpp"
#include "ppsign/plane_partition.hpp"
#include "ppsign/signed_count.hpp"

namespace ppsign {

enum class OutputFormat { Json, Tsv, Human };

inline constexpr const char* kNodeBudgetEnv = "PPSIGN_NODE_BUDGET";
inline constexpr const char* kSubsetBudgetEnv = "PPSIGN_SUBSET_BUDGET";

struct RunConfig {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  OutputFormat format = OutputFormat::Human;
  /// Classes whose values are reported as absolute values.
  std::set<SymmetryClass> absolute_classes;
  std::uint64_t seed = 1;
  bool strict = false;
  /// Reports elapsed_ms as 0 so that repeated runs are byte-identical.
  bool deterministic = false;
};

/// Flag value if given, else the environment variable, else the fallback.
/// Throws InvalidInput for a malformed or zero environment value.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag,
                             const char* env_name, std::uint64_t fallback);

/// A class together with its natural parameters: (a, b) for the
/// transpose-complementary classes (box a x a x 2b), alpha for the cubic
/// classes (box (2 alpha)^3) and the box sides otherwise.
struct Instance {
  SymmetryClass cls = SymmetryClass::TC;
  long a = 0, b = 0, c = 0;
  long alpha = 0;
  BoxDims box() const;
  std::string params() const;
};

enum class Method { Oracle, Lgv, Formula };
std::string_view to_string(Method m);

struct MethodResult {
  Method method = Method::Oracle;
  SignedCount count;
  double elapsed_ms = 0;
  /// The method only determines the value up to sign.
  bool up_to_sign = false;
  bool skipped = false;
  std::string note;
};

/// Runs one method. Returns nullopt when the method has nothing to say for
/// this instance; a ResourceLimit is turned into a skipped result.
std::optional<MethodResult> run_method(const Instance& inst, Method m,
                                       const RunConfig& config);

/// True iff all non-skipped results agree (by absolute value where a result
/// is only known up to sign).
bool results_agree(const std::vector<MethodResult>& results);

nlohmann::json to_json(const SignedCount& c, double elapsed_ms);
nlohmann::json to_json(const PlanePartition& pp);
PlanePartition plane_partition_from_json(const BoxDims& box,
                                         const nlohmann::json& rows);

struct VerifyRow {
  Instance instance;
  std::optional<MethodResult> oracle, pipeline, formula;
  bool oracle_matches = true;
  bool pipeline_matches = true;
  bool any_skipped = false;
  double elapsed_ms = 0;
  bool ok() const { return oracle_matches && pipeline_matches; }
};

struct VerifyLimits {
  long max_a = 5;
  long max_b = 3;
  long max_alpha = 3;
  long max_side = 4;
  bool smoke = false;
};

/// Grid of instances for "tc", "stc", "cstc", "tssc", "cssc", "sc",
/// "sc-odd" or "all".
std::vector<Instance> verify_grid(const std::string& which,
                                  const VerifyLimits& limits);
VerifyRow verify_instance(const Instance& inst, const RunConfig& config);

struct IdentityOutcome {
  std::string name;
  std::map<std::string, std::string> params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Names accepted by run_identity.
const std::vector<std::string>& identity_names();

/// Runs the named identity once with `params` (missing entries take
/// defaults) or, when fuzz > 0, on `fuzz` instances drawn from `seed`.
std::vector<IdentityOutcome> run_identity(
    const std::string& name, const std::map<std::string, std::string>& params,
    int fuzz, std::uint64_t seed, const RunConfig& config = {});

/// Full command-line entry point; returns the process exit code:
/// 0 success, 1 mathematical mismatch, 2 usage or input error, 3 budget
/// exceeded under --strict.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ppsign

#endif  // PPSIGN_APP_HPP
