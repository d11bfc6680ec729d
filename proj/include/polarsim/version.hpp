#pragma once

namespace polarsim {

inline constexpr const char* kToolName = "polarsim";
inline constexpr const char* kToolVersion = "0.1.0";

// Named in every manifest; the stream layout is part of the output contract.
inline constexpr const char* kGeneratorName = "xoshiro256** (seeded via splitmix64)";

}  // namespace polarsim
