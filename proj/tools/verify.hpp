#pragma once

#include "holant/io.hpp"

namespace holant::cli {

/// Runs the fixture suite; returns the report and sets `ok` when every fixture passed.
Json verify_report(bool& ok);

Json verdict_to_json(const SetVerdict& v);

}  // namespace holant::cli
