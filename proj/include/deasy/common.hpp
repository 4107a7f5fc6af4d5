#ifndef DEASY_COMMON_HPP
#define DEASY_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace deasy {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using VehicleId = std::uint32_t;

inline constexpr std::uint32_t kInvalidId = 0xffffffffu;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    return n > 0.0 ? Vec2{a.x / n, a.y / n} : Vec2{0.0, 0.0};
}

// Malformed input file; message carries file name and line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario cannot be simulated as configured (bad parameter, unreachable trip, ...).
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No path between the requested endpoints.
struct UnreachableError : ScenarioError {
    using ScenarioError::ScenarioError;
};

}  // namespace deasy

#endif
