#pragma once

namespace yukawa {

/// Selects between the serial reference loop and the OpenMP kernel.
/// Both produce bitwise-identical results; the serial path is kept for
/// testing and benchmarking.
enum class Execution { Serial, Parallel };

}  // namespace yukawa
