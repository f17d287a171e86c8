#pragma once

#include <string>

#include "kabar/portfolio.hpp"

namespace kabar {

/// One JSON object (single line, no trailing newline) describing a trial.
std::string trial_metrics_json(const TrialResult& trial);

/// One JSON object summarizing the portfolio (best trial, cut, wall time).
std::string summary_metrics_json(const PortfolioResult& result);

/// JSON lines: one object per trial followed by the summary object.
std::string metrics_jsonl(const PortfolioResult& result);

}  // namespace kabar
