#pragma once

namespace tautgm {

// Keep in sync with the top-level CMake project version.
inline constexpr const char* kEngineVersion = "1.0.0";

// Chern-class convention stamped into every report. c1, c2 always denote
// Chern classes of the rank-2 *quotient* bundle on Gr(2,5), i.e. c1 -> s[1,0]
// and c2 -> s[2,0] under the Schubert identification. With the sub-bundle
// convention the derived presentation constants would differ.
inline constexpr const char* kConventionNote =
    "c1, c2 are Chern classes of the rank-2 quotient bundle on Gr(2,5): "
    "c1 = s[1,0], c2 = s[2,0]";

}  // namespace tautgm
