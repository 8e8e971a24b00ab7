#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

namespace ltd {

using SourceId = std::uint32_t;
using AttributeId = std::uint32_t;
using ValueId = std::uint32_t;
using FactId = std::uint32_t;

inline constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();

// One raw triple as it arrives from input: source claims that attribute has value.
struct RawClaim {
    std::string source;
    std::string attribute;
    std::string value;
};

// A source's vote on one binarized fact: positive means the source asserted
// exactly this (attribute, value); negative means it asserted a different
// value for the same attribute.
struct SourceClaim {
    SourceId source = 0;
    bool positive = false;
};

} // namespace ltd
