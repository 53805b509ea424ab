#pragma once

namespace periodkit {

/// Selects the OpenMP kernel or its serial reference twin.
enum class Exec { Serial, Parallel };

}  // namespace periodkit
