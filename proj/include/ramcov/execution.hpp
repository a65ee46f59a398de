#pragma once

namespace ramcov {

/// Selects the serial reference or the OpenMP kernel. Both produce identical
/// results in identical order.
enum class Execution { serial, parallel };

}  // namespace ramcov
