#include "vhh/report.hpp"
#include "vhh/util.hpp"

#include <algorithm>
#include <json.hpp>

namespace vhh {

bool BoundReport::pass() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const CheckRow& r) { return r.pass || !r.asserted; });
}

void BoundReport::add(CheckRow row) {
    if (!tag_known(row.tag)) {
        throw StructuralError("check tag not in registry: " + row.tag);
    }
    rows.push_back(std::move(row));
}

void BoundReport::write_csv(std::ostream& os) const {
    os << "tag,name,measured,bound,ratio,asserted,pass,note\n";
    for (const auto& r : rows) {
        os << r.tag << ',' << r.name << ',' << fmt17(r.measured) << ','
           << r.bound << ',' << fmt17(r.ratio) << ','
           << (r.asserted ? "asserted" : "reported") << ','
           << (r.pass ? "pass" : "fail") << ',' << r.note << '\n';
    }
}

std::string BoundReport::to_json(std::uint64_t config_hash, double wall_ms) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["config_hash"] = config_hash;
    j["wall_ms"] = wall_ms;
    j["pass"] = pass();
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"tag", r.tag},
                             {"name", r.name},
                             {"measured", r.measured},
                             {"bound", r.bound},
                             {"ratio", r.ratio},
                             {"asserted", r.asserted},
                             {"pass", r.pass},
                             {"note", r.note}});
    }
    return j.dump(2);
}

const std::vector<std::string>& tag_registry() {
    static const std::vector<std::string> tags = {
        // cutoffs
        "chi-support", "chi-partition", "sector-partition", "support-windows",
        "gevrey-derivatives", "scale-index-algebra",
        // propagator
        "a-matrix-band", "slice-sup-band", "slice-l1-band",
        "decay-prefactor-band", "decay-exponent", "slice-mode-count",
        "partition-reassembly",
        // counting
        "sector-emptiness", "third-factor-floor", "vertex-sum-growth",
        "vertex-sum-mixed", "quadruped-sum-growth", "biped-sum-growth",
        "momentum-conservation",
        // forest
        "forest-count", "spanning-tree-count", "interpolation-psd",
        "scale-exponent-identity", "tree-exponent-identity", "power-counting",
        // arch
        "one-level-1pi", "two-level-2pi", "two-level-irreducible",
        "ring-minimax", "flyover-growth", "menger-consistency",
        // renorm
        "tadpole-band", "tadpole-temp-band", "tadpole-self-convergence",
        "counterterm-cancellation", "counterterm-size",
        "localization-exactness", "localization-idempotent",
        "remainder-suppression", "selfenergy-slope-sup", "selfenergy-slope-d1",
        "selfenergy-slope-d2", "fermi-vs-vanhove", "resolvent-series-bound",
        "resolvent-lambda-stability", "nu-fermi-consistency",
    };
    return tags;
}

bool tag_known(const std::string& tag) {
    const auto& reg = tag_registry();
    return std::find(reg.begin(), reg.end(), tag) != reg.end();
}

std::string merge_reports(const std::vector<std::string>& report_jsons) {
    if (report_jsons.empty()) {
        throw std::invalid_argument("merge: need at least one report");
    }
    nlohmann::json out;
    out["suites"] = nlohmann::json::array();
    nlohmann::json table = nlohmann::json::object();
    bool all_pass = true;
    for (const auto& text : report_jsons) {
        nlohmann::json j = nlohmann::json::parse(text);
        out["suites"].push_back({{"suite", j.at("suite")},
                                 {"config_hash", j.at("config_hash")},
                                 {"pass", j.at("pass")}});
        all_pass = all_pass && j.at("pass").get<bool>();
        for (const auto& r : j.at("rows")) {
            const std::string tag = r.at("tag").get<std::string>();
            if (table.contains(tag)) {
                auto prev = table[tag]["config_hash"].get<std::uint64_t>();
                auto cur = j.at("config_hash").get<std::uint64_t>();
                if (prev != cur) {
                    throw std::invalid_argument(
                        "merge refused: tag '" + tag + "' appears under different config hashes");
                }
            }
            table[tag] = {{"suite", j.at("suite")},
                          {"config_hash", j.at("config_hash")},
                          {"measured", r.at("measured")},
                          {"bound", r.at("bound")},
                          {"asserted", r.at("asserted")},
                          {"pass", r.at("pass")}};
        }
    }
    out["checks"] = table;
    out["pass"] = all_pass;
    return out.dump(2);
}

} // namespace vhh
