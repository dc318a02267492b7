#pragma once

// Printed classification data: Table 1 (B and Markov candidates), Tables 3-5
// (verdict regions), Table 6 (connected-sections configurations) and the
// Figure 2 region picture for Case 2.0.1.

#include "torhyp/fan.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torhyp {

enum class Outcome { Hyperbolic, NotHyperbolic, Open, Unlisted };

std::string to_string(Outcome o);
Outcome parse_outcome(std::string_view text);

/// One coordinate condition such as ">=3", "<=1", "=2", "in{1,2,3}" or "*".
struct IntPredicate {
  enum class Kind { Any, Eq, Le, Ge, In };
  Kind kind = Kind::Any;
  std::vector<long> values;

  [[nodiscard]] bool holds(long x) const;
  [[nodiscard]] std::string to_string() const;
};

IntPredicate parse_predicate(std::string_view text);
/// "(>=3,=2,in{4,5})"; a bare number means equality, a trailing comma is ignored.
std::vector<IntPredicate> parse_region(std::string_view text);
bool region_holds(const std::vector<IntPredicate>& region, const std::vector<long>& coords);

/// Parameter condition "l1=0,l2>=1" with '|' separating alternatives; "" or "-" is always true.
bool condition_holds(std::string_view condition, const FamilySpec& spec);

struct TableRow {
  Outcome outcome = Outcome::Unlisted;
  std::string printed;  ///< region as encoded, e.g. "(>=3,>=4)"
  std::vector<IntPredicate> region;
  bool permutations = false;  ///< footnote 3: any permutation of the coordinates
  bool ambiguous = false;
  std::string note;
  std::string condition;  ///< extra "if ..." parameter condition

  [[nodiscard]] bool matches(const std::vector<long>& coords, const FamilySpec& spec) const;
};

struct TableBlock {
  std::string condition;  ///< the "Extra conditions" cell
  bool prior_literature = false;
  /// Open cells are everything not listed (Table 4, footnote 4).
  bool open_by_omission = false;
  /// NotHyperbolic rows override Hyperbolic rows ("not in the next column").
  bool not_hyp_precedence = false;
  std::vector<TableRow> rows;
};

/// All printed blocks of the case, with parameter-dependent bounds instantiated.
std::vector<TableBlock> table_blocks(const FamilySpec& spec);

struct TableLookup {
  Outcome outcome = Outcome::Unlisted;
  bool ambiguous = false;
  bool open_by_omission = false;
  bool conflict = false;  ///< matching rows disagree
  bool prior_literature = false;
  std::vector<std::string> matched;  ///< "Hyperbolic (>=3,>=4)" etc.
  std::vector<std::string> notes;
};

/// Tables 3-5 membership of the nef coordinates (a,b) or (d,e,f).
TableLookup table_lookup(const FamilySpec& spec, const std::vector<long>& coords);

/// Figure 2 outcome for Case 2.0.1 with l in {0, 2} and 0 <= a,b <= 8.
std::optional<Outcome> figure2_outcome(long l, long a, long b);

struct PrintedMatrix {
  IntMat matrix;
  std::string typo_note;  ///< empty when used verbatim
};

/// Table 1 matrix B (rows in the case's Picard basis order, columns in ray order).
PrintedMatrix printed_gale_matrix(const FamilySpec& spec);
/// Table 1 Markov candidate, one move per column of the printed matrix.
std::vector<IntVec> printed_markov_candidate(const FamilySpec& spec);

/// One E' choice of Table 6, in nef-generator coordinates.
struct ConfigEntry {
  std::string condition;  ///< as printed
  std::string eprime;     ///< as printed
  IntVec eprime_nef;
  /// "table" for printed entries, "proof" for alternatives read off the case proofs.
  std::string source = "table";
  std::string note = {};
};

/// Table 6 entries whose condition holds for the spec (possibly none).
std::vector<ConfigEntry> config_entries(const FamilySpec& spec);
/// Every Table 6 entry of a case, regardless of parameters.
std::vector<ConfigEntry> all_config_entries(CaseId id);

/// The printed parametrization of D in Tables 3-5.
std::string table_parametrization(CaseId id);

}  // namespace torhyp
