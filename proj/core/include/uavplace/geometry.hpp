#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace uavplace {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

/// UAV location. The search may propose any finite point; bounds are the
/// objective's concern.
using UavPosition = Vec3;

/// Axis-aligned building occupying [0, x_b] x [0, y_b] x [0, z_b].
/// The UAV usually hovers at negative x, facing the x = 0 facade.
struct Building {
    double x_b = 20.0;
    double y_b = 50.0;
    double z_b = 200.0;
    double floor_height = 5.0;

    /// Throws ConfigError on non-positive dimensions or a height that is not
    /// a whole number of floors.
    void validate() const;
    int floor_count() const;
    bool contains(Vec3 p) const;

    friend bool operator==(const Building&, const Building&) = default;
};

enum class Distribution { SymmetricGrid, UniformPerFloor };

std::string_view to_string(Distribution d);
std::optional<Distribution> parse_distribution(std::string_view text);

/// Per-floor grid shape for the symmetric layout.
struct GridShape {
    int nx = 4;
    int ny = 5;

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Default n_x x n_y factorization: n_x is the largest divisor <= sqrt(n).
GridShape default_grid(int users_per_floor);

class UserSet {
public:
    UserSet(std::vector<Vec3> users, Distribution distribution, int users_per_floor,
            std::uint64_t seed);

    std::span<const Vec3> users() const { return users_; }
    std::size_t size() const { return users_.size(); }
    Distribution distribution() const { return distribution_; }
    int users_per_floor() const { return users_per_floor_; }
    std::uint64_t seed() const { return seed_; }

    /// Copy with every user listed twice (same order, appended).
    UserSet duplicated() const;

private:
    std::vector<Vec3> users_;
    Distribution distribution_;
    int users_per_floor_;
    std::uint64_t seed_;
};

/// Users at the cell centres of an n_x x n_y grid on every floor, at
/// mid-floor height. Throws ConfigError when the grid does not hold exactly
/// `users_per_floor` users.
UserSet generate_symmetric_users(const Building& building, int users_per_floor,
                                 std::optional<GridShape> grid = std::nullopt);

/// Users drawn uniformly over each floor's footprint at mid-floor height.
UserSet generate_uniform_users(const Building& building, int users_per_floor,
                               std::uint64_t seed);

/// How the angle in the building penetration term is measured.
enum class ThetaConvention {
    /// Elevation of the line of sight above the horizontal plane.
    Elevation,
    /// Angle between the line of sight and the normal of the face it enters
    /// through (x or y facade, or the roof/floor slab when the UAV is over
    /// the footprint).
    Incidence,
};

/// How the indoor travel distance is measured.
enum class IndoorDistanceConvention {
    /// Horizontal length of the segment from the facade entry point to the user.
    Ray,
    /// Perpendicular depth of the user behind the entry facade.
    FacadeDepth,
};

std::string_view to_string(ThetaConvention c);
std::optional<ThetaConvention> parse_theta_convention(std::string_view text);
std::string_view to_string(IndoorDistanceConvention c);
std::optional<IndoorDistanceConvention> parse_indoor_distance_convention(std::string_view text);

struct LinkConventions {
    ThetaConvention theta = ThetaConvention::Elevation;
    IndoorDistanceConvention indoor = IndoorDistanceConvention::Ray;

    friend bool operator==(const LinkConventions&, const LinkConventions&) = default;
};

struct LinkGeometry {
    double d_3d = 0.0;   ///< metres
    double theta = 0.0;  ///< degrees, [0, 90]
    double d_2d = 0.0;   ///< metres
};

/// Throws DegenerateLinkError when the UAV sits on the user.
LinkGeometry link_geometry(const UavPosition& uav, const Vec3& user, const Building& building,
                           const LinkConventions& conventions = {});

}  // namespace uavplace
