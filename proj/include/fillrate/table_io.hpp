#pragma once

#include <string>

#include "fillrate/validation.hpp"

namespace fillrate {

enum class TableFormat { Markdown, Csv };

TableFormat parse_table_format(const std::string& name);

/// Percentage rounded half-up to one decimal, as the emitted tables print.
double round_pct(double fraction);

/// Render a validation table. Columns: sigma_d, q, model_beta_pct,
/// sim_mean_pct, sim_std_pct, matches; percentages at one decimal; rows
/// sigma-major then q ascending. CSV carries a header row.
std::string emit_table(const ValidationTable& table, TableFormat format);

/// Inverse of emit_table's CSV form (values carry the one-decimal rounding).
ValidationTable parse_table_csv(const std::string& csv);

/// Machine-readable description of a table run: study parameters, seed,
/// replication count and code version.
std::string manifest_json(const ValidationTable& table, const GridOptions& opts,
                          const StudyParams& study);

}  // namespace fillrate
