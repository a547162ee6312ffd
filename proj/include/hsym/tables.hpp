// Family-string parsing, full per-class records (classification + Levi +
// compact dual), markdown/JSON renderings, and the golden reference tables
// with their emit/verify machinery.
#pragma once

#include "hsym/cycles.hpp"
#include "hsym/levi.hpp"
#include "hsym/parabolic.hpp"

#include <string>
#include <vector>

namespace hsym {

/// Parses "su(p,q)", "so(2,p)", "sp(n)", "so*(2n)", "e6-1", "e7-7"
/// (aliases: "e6", "e6-3", "eiii", "e7", "evii"). Round-trips with str().
struct FamilySpec {
    HermitianFamily family;

    static FamilySpec parse(const std::string& text);
    std::string str() const { return family.name(); }
};

struct ClassRecord {
    ParabolicClass cls;
    LeviFactorization levi;
    CompactDualProduct dual;
};

std::vector<ClassRecord> classify_records(const RootSystem& rs, int r_max, bool unbalanced = false);

/// Markdown rows: | lambda | R+ | R- | Y_q | chi |.
std::string records_markdown(const RootSystem& rs, const std::vector<ClassRecord>& records);
/// JSON array of class records; shape is published in
/// schema/class_record.schema.json.
std::string records_json(const RootSystem& rs, const std::vector<ClassRecord>& records);

/// A reference table as versioned text: "# <id>" header line, a column
/// line, then one pipe-separated line per row.
struct GoldenTable {
    std::string id;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string render() const;
    static GoldenTable parse(const std::string& text);
    bool operator==(const GoldenTable&) const = default;
};

/// Table ids in emission order: T1 (c(X), r, sum N), T2 (involutions and
/// c(X)), T3 (EIII classes), T4 (EVII classes), T5 (compact duals at the
/// minimal Hodge type), X1 (low-rank exceptional class lists).
const std::vector<std::string>& table_ids();

/// Recomputes a table from scratch.
GoldenTable compute_table(const std::string& id);

struct VerifyReport {
    int tables_checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Cell-by-cell comparison of every table against the fixtures directory.
/// Throws std::invalid_argument when a fixture file is missing or malformed.
VerifyReport verify_tables(const std::string& fixtures_dir);

/// Writes <id>.txt for every table into out_dir.
void emit_tables_to_dir(const std::string& out_dir);

} // namespace hsym
