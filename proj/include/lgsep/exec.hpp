#pragma once

namespace lgsep {

/// Selects between the serial reference path and the OpenMP kernel of an operation.
/// Both paths must produce identical results.
enum class Execution { serial, parallel };

}  // namespace lgsep
