#pragma once
// Reproduction targets: each one recomputes a cluster of results and compares
// them against pinned expectations, producing a pass/fail report with detail
// lines. Reports are deterministic: byte-identical for a fixed seed and data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modrep/group.hpp"
#include "modrep/meataxe.hpp"
#include "modrep/rep.hpp"

namespace modrep {

struct ReproResult {
  std::string id;
  std::string status;  // pass | fail | skip
  std::vector<std::string> details;
};

struct ReproReport {
  uint64_t seed = 0;
  std::vector<ReproResult> results;

  bool all_pass() const;
};

// The twenty target ids, in report order.
const std::vector<std::string>& repro_target_ids();

// Runs one target. Mass targets read <data_dir>/masses.json and
// <data_dir>/identities/<name>.json; the other targets ignore data_dir.
// Throws std::invalid_argument for an unknown id.
ReproResult run_repro_target(const std::string& id, uint64_t seed, const std::string& data_dir);

ReproReport run_repro(const std::vector<std::string>& ids, uint64_t seed,
                      const std::string& data_dir);

std::string render_repro_md(const ReproReport& report);
std::string render_repro_json(const ReproReport& report);

// Helpers shared with the command-line driver.

// Copy of rep with the group generated by its matrices attached (enumerated
// and validated); throws std::runtime_error when the closure exceeds the cap.
Representation attach_enumerated_group(const Representation& rep);

// Built-in irreducible catalog rebuilt on rep's own group object, matched by
// group order, coefficient ring, and generator names. nullopt when no
// built-in catalog fits (including when the homomorphism check rejects the
// rebuild, i.e. the file's generators satisfy different relations).
std::optional<RepCatalog> builtin_catalog_for(const Representation& rep);

// Splitting field for Brauer characters of g over GF(p): the smallest of
// GF(p), GF(p^2) whose multiplicative group contains all p-regular element
// orders; GF(p^2) only for p in {2, 3}. Throws std::invalid_argument when
// neither suffices.
Ring brauer_splitting_field(const FiniteGroup& g, unsigned p);

}  // namespace modrep
