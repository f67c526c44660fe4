#pragma once

#include <string>

namespace scimap {

/// Decimal formatting with up to 6 significant digits and no trailing zeros
/// ("0.8", "0.95", "5", "0.123457"). Shared by the Pajek writer, the
/// classification CSV and the text reports so the outputs stay bit-exact.
std::string format_number(double v);

}  // namespace scimap
