#pragma once

#include <variant>
#include <vector>

#include "aucgap/config.hpp"
#include "aucgap/csv.hpp"
#include "aucgap/records.hpp"
#include "aucgap/report.hpp"

namespace aucgap {

// Typed rows of one input file; the alternative matches the config's task.
using Dataset = std::variant<std::vector<EvaluationRecord>,
                             std::vector<MulticlassRecord>,
                             std::vector<RealTargetRecord>>;

// Builds typed records from a parsed CSV. Strict: a non-numeric score, an
// unknown label literal, or a missing required cell raises ParseError with
// the 1-based line and column name; columns missing from the header raise
// ConfigError; a header-only file raises DegenerateDataError. Row order is
// preserved.
//
// Binary labels: the positive literal comes from config. When no negative
// literal is configured it is inferred, which requires the data to contain
// at most two distinct literals including the positive one.
Dataset ingest(const CsvTable& table, const AuditConfig& config);

// Full audit: validate config, read + digest the input, ingest, adapt,
// group, compute AUCs and the gap, optionally bootstrap. Does not write any
// file. Throws DegenerateDataError when no AUC at all can be computed
// (e.g. single-class data); warnings never throw.
GapReport run_audit(const AuditConfig& config);

} // namespace aucgap
