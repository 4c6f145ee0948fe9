#include "verify.hpp"

#include "holant/fixtures.hpp"

namespace holant::cli {

Json verdict_to_json(const SetVerdict& v) {
    Json j;
    j["framework"] = framework_name(v.framework);
    j["verdict"] = v.tractable ? "Tractable" : "PHard";
    j["case"] = v.case_id;
    if (v.transform) j["transform"] = matrix_to_json(*v.transform);
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.undecided) j["undecided"] = true;
    if (v.best_effort) j["best_effort"] = true;
    return j;
}

Json verify_report(bool& ok) {
    Json rows = Json::array();
    int passed = 0, failed = 0;
    for (const auto& r : run_fixture_suite()) {
        Json row{{"group", r.group}, {"name", r.name}, {"result", r.pass ? "PASS" : "FAIL"}};
        if (!r.pass) row["detail"] = r.detail;
        rows.push_back(row);
        (r.pass ? passed : failed)++;
    }
    ok = failed == 0;
    return Json{{"fixtures", rows}, {"passed", passed}, {"failed", failed}};
}

}  // namespace holant::cli
