#pragma once

namespace derange {

// Orientation of an isometry: direct = determinant +1, indirect = -1.
// Shared between the hyperoctahedral and symmetric-group classifiers.
enum class Orientation { direct, indirect };

const char* to_string(Orientation o);

}  // namespace derange
