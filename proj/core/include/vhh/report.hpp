#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace vhh {

// One measured check. `tag` keys the check in the static registry; `asserted`
// distinguishes hard gates from reported-only observations.
struct CheckRow {
    std::string tag;
    std::string name;
    double measured = 0.0;
    std::string bound;     // human-readable form of the claimed bound
    double ratio = 0.0;    // measured / bound surrogate where meaningful
    bool pass = true;
    bool asserted = true;  // false: reported, never gates the suite
    std::string note;
};

struct BoundReport {
    std::string suite;
    std::vector<CheckRow> rows;

    bool pass() const;
    void add(CheckRow row);
    void write_csv(std::ostream& os) const;
    std::string to_json(std::uint64_t config_hash, double wall_ms) const;
};

// Every check tag that any suite can emit. Suites are cross-checked against
// this list so a new check cannot silently stay outside the CLI surface.
const std::vector<std::string>& tag_registry();

// Which suite owns a tag (for `report merge` conflict detection).
bool tag_known(const std::string& tag);

// Merge several JSON suite reports into one summary. Throws
// std::invalid_argument when the same tag appears under different config
// hashes (merge refused).
std::string merge_reports(const std::vector<std::string>& report_jsons);

} // namespace vhh
