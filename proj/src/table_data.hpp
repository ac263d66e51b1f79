#pragma once

#include "rreg/tables.hpp"

#include <vector>

namespace rreg::detail {

/// Rows exactly as transcribed, before canonical sorting.
std::vector<FormulaRow> transcribed_rows(FamilyId f);

} // namespace rreg::detail
