#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frs/foset.hpp"
#include "frs/rng.hpp"

namespace frs {

enum class MutationTarget { Foset, Hom, Ideal, Quotient };

MutationTarget mutation_target_from_name(const std::string& name);
const char* mutation_target_name(MutationTarget target);

struct MutationOutcome {
  long trials = 0;
  long detected = 0;
  long rerolls = 0;  // perturbations that landed on another valid instance
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && detected == trials; }
};

/// Generates known-valid instances, perturbs one entry, and asserts that the
/// matching checker flags the mutant with a sound witness, re-rolling
/// perturbations that produce another valid instance (bounded retries).
MutationOutcome run_mutation_harness(MutationTarget target, long trials, std::uint64_t seed,
                                     long retry_budget = 64);

/// Valid fuzzy orders for test generation: a random graded DAG closed under
/// sup-min composition (max-min transitive closure keeps exactness).
FuzzyOrderMatrix random_valid_foset(Rng& rng, int size);

}  // namespace frs
