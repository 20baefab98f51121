#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcalc/io.hpp"

namespace lcalc {

using Params = std::map<std::string, long>;

/// "n", "2g", "4n", "3" with the given parameter values.
Integer eval_int_expression(const std::string& expr, const Params& params);
/// "0", "Z", "Z^2g", "Z/4n", "Z^2 ⊕ Z/2" ("+" also separates summands).
FGAbGroup parse_group_expression(const std::string& expr, const Params& params);

struct Provenance {
  std::string kind;  // "published" or "derived"
  std::string note;
};

/// Expected groups keyed by L-slot or homotopy degree.
struct Expectation {
  std::map<int, FGAbGroup> values;
  Provenance provenance;
};

struct CatalogEntry {
  std::string name;
  std::string title;
  Params params;
  std::optional<GradedKOModule> module;
  std::optional<ComplexificationData> complex;
  std::optional<GradedMap> cofiber;     // map whose cofiber the entry describes or was built from
  std::map<int, FGAbGroup> pins;        // degree -> chosen extension where the LES leaves a choice
  bool module_from_cofiber = false;     // module groups must agree with the cofiber constraints
  bool partial = false;                 // K-data not forced; only group-determined L-slots are checked
  std::optional<Expectation> expected_l;
  std::optional<Expectation> expected_free_l;   // slots 1, 2, 3
  std::optional<Expectation> expected_cofiber;  // degrees
  std::vector<std::string> notes;
  std::string out_of_scope;  // nonempty for stubs
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct EntryReport {
  std::string entry;
  Params params;
  bool skipped = false;
  std::string summary;  // computed L-table or cofiber groups
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool pass() const;
  std::vector<std::string> failed_checks() const;
};

class Catalog {
 public:
  /// Reads catalog.json and the module documents it refers to.
  static Catalog load(const std::string& data_dir);
  /// LCALC_DATA_DIR if set, else the directory configured at build time.
  static Catalog builtin();
  static std::string default_data_dir();

  std::vector<std::string> names() const;
  /// Resolves aliases; nullopt for unknown names.
  std::optional<std::string> canonical_name(const std::string& name) const;
  /// Parameters the entry reads, with their defaults.
  Params parameters(const std::string& name) const;

  /// Throws Error on unknown names, unknown or out-of-range parameters.
  CatalogEntry entry(const std::string& name, const Params& overrides = {}) const;
  /// Overrides apply to entries that read the parameter; others ignore it.
  std::vector<CatalogEntry> entries(const Params& overrides = {}) const;

 private:
  std::string dir_;
  Json doc_;
  const Json& raw(const std::string& name) const;
};

/// Convenience wrapper over Catalog::builtin().
CatalogEntry builtin(const std::string& name, const Params& params = {});

EntryReport verify(const CatalogEntry& e);
/// Entries evaluated concurrently; reports sorted by entry name.
std::vector<EntryReport> verify_all(const std::vector<CatalogEntry>& entries);

std::string report_text(const std::vector<EntryReport>& reports);
Json report_json(const std::vector<EntryReport>& reports);

struct Mutation {
  CatalogEntry entry;
  std::string check;        // the check expected to catch it
  std::string description;  // which datum changed
};

/// Every single-datum change of the expected values of `e`.
std::vector<Mutation> mutations(const CatalogEntry& e);

}  // namespace lcalc
