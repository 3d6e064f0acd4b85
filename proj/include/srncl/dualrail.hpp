#pragma once

#include <cstdint>
#include <string>

namespace srncl {

// A dual-rail signal. Rail pair (d1, d0) encodes one of four states:
// NULL (00), DATA0 (01), DATA1 (10) and the illegal state (11), which a
// healthy circuit never produces.
struct DualRailValue {
    bool d1 = false;
    bool d0 = false;

    friend bool operator==(const DualRailValue&, const DualRailValue&) = default;
};

inline constexpr DualRailValue kNull{false, false};
inline constexpr DualRailValue kData0{false, true};
inline constexpr DualRailValue kData1{true, false};
inline constexpr DualRailValue kIllegal{true, true};

enum class RailState { Bit0, Bit1, Null, Illegal };

constexpr DualRailValue encode_bit(bool b) { return b ? kData1 : kData0; }

constexpr RailState decode(DualRailValue v) {
    if (v.d1 && v.d0) return RailState::Illegal;
    if (v.d1) return RailState::Bit1;
    if (v.d0) return RailState::Bit0;
    return RailState::Null;
}

constexpr bool is_data(DualRailValue v) { return v.d1 != v.d0; }
constexpr bool is_null(DualRailValue v) { return !v.d1 && !v.d0; }
constexpr bool is_illegal(DualRailValue v) { return v.d1 && v.d0; }

// Valid only for DATA0/DATA1.
constexpr bool data_bit(DualRailValue v) { return v.d1; }

inline std::string to_string(RailState s) {
    switch (s) {
        case RailState::Bit0: return "DATA0";
        case RailState::Bit1: return "DATA1";
        case RailState::Null: return "NULL";
        case RailState::Illegal: return "ILLEGAL";
    }
    return "?";
}

}  // namespace srncl
