#include "uavplace/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "uavplace/error.hpp"
#include "uavplace/rng.hpp"

namespace uavplace {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

enum class EntryFace { X, Y, Footprint };

}  // namespace

void Building::validate() const {
    if (!(x_b > 0.0) || !(y_b > 0.0) || !(z_b > 0.0) || !(floor_height > 0.0)) {
        throw ConfigError("building dimensions and floor_height must be positive");
    }
    const double floors = z_b / floor_height;
    if (std::abs(floors - std::round(floors)) > 1e-9 * std::max(1.0, floors)) {
        throw ConfigError("z_b not a multiple of floor_height");
    }
}

int Building::floor_count() const {
    return static_cast<int>(std::lround(z_b / floor_height));
}

bool Building::contains(Vec3 p) const {
    return p.x >= 0.0 && p.x <= x_b && p.y >= 0.0 && p.y <= y_b && p.z >= 0.0 && p.z <= z_b;
}

std::string_view to_string(Distribution d) {
    return d == Distribution::SymmetricGrid ? "symmetric" : "uniform";
}

std::optional<Distribution> parse_distribution(std::string_view text) {
    if (text == "symmetric") return Distribution::SymmetricGrid;
    if (text == "uniform") return Distribution::UniformPerFloor;
    return std::nullopt;
}

GridShape default_grid(int users_per_floor) {
    int nx = 1;
    for (int d = 1; d * d <= users_per_floor; ++d) {
        if (users_per_floor % d == 0) nx = d;
    }
    return {nx, users_per_floor / std::max(nx, 1)};
}

UserSet::UserSet(std::vector<Vec3> users, Distribution distribution, int users_per_floor,
                 std::uint64_t seed)
    : users_(std::move(users)),
      distribution_(distribution),
      users_per_floor_(users_per_floor),
      seed_(seed) {}

UserSet UserSet::duplicated() const {
    std::vector<Vec3> twice = users_;
    twice.insert(twice.end(), users_.begin(), users_.end());
    return UserSet(std::move(twice), distribution_, users_per_floor_ * 2, seed_);
}

UserSet generate_symmetric_users(const Building& building, int users_per_floor,
                                 std::optional<GridShape> grid) {
    building.validate();
    if (users_per_floor < 1) throw ConfigError("users_per_floor must be at least 1");
    const GridShape shape = grid.value_or(default_grid(users_per_floor));
    if (shape.nx < 1 || shape.ny < 1 || shape.nx * shape.ny != users_per_floor) {
        throw ConfigError("users_per_floor " + std::to_string(users_per_floor) +
                          " does not factor into a " + std::to_string(shape.nx) + " x " +
                          std::to_string(shape.ny) + " grid");
    }

    std::vector<Vec3> users;
    users.reserve(static_cast<std::size_t>(users_per_floor) * building.floor_count());
    for (int floor = 0; floor < building.floor_count(); ++floor) {
        const double z = floor * building.floor_height + 0.5 * building.floor_height;
        for (int i = 0; i < shape.nx; ++i) {
            for (int j = 0; j < shape.ny; ++j) {
                users.push_back({(i + 0.5) * building.x_b / shape.nx,
                                 (j + 0.5) * building.y_b / shape.ny, z});
            }
        }
    }
    return UserSet(std::move(users), Distribution::SymmetricGrid, users_per_floor, 0);
}

UserSet generate_uniform_users(const Building& building, int users_per_floor,
                               std::uint64_t seed) {
    building.validate();
    if (users_per_floor < 1) throw ConfigError("users_per_floor must be at least 1");

    StreamRng rng(seed, kUserStream);
    std::vector<Vec3> users;
    users.reserve(static_cast<std::size_t>(users_per_floor) * building.floor_count());
    for (int floor = 0; floor < building.floor_count(); ++floor) {
        const double z = floor * building.floor_height + 0.5 * building.floor_height;
        for (int k = 0; k < users_per_floor; ++k) {
            const double x = rng.uniform(0.0, building.x_b);
            const double y = rng.uniform(0.0, building.y_b);
            users.push_back({x, y, z});
        }
    }
    return UserSet(std::move(users), Distribution::UniformPerFloor, users_per_floor, seed);
}

std::string_view to_string(ThetaConvention c) {
    return c == ThetaConvention::Elevation ? "elevation" : "incidence";
}

std::optional<ThetaConvention> parse_theta_convention(std::string_view text) {
    if (text == "elevation") return ThetaConvention::Elevation;
    if (text == "incidence") return ThetaConvention::Incidence;
    return std::nullopt;
}

std::string_view to_string(IndoorDistanceConvention c) {
    return c == IndoorDistanceConvention::Ray ? "ray" : "depth";
}

std::optional<IndoorDistanceConvention> parse_indoor_distance_convention(std::string_view text) {
    if (text == "ray") return IndoorDistanceConvention::Ray;
    if (text == "depth") return IndoorDistanceConvention::FacadeDepth;
    return std::nullopt;
}

LinkGeometry link_geometry(const UavPosition& uav, const Vec3& user, const Building& building,
                           const LinkConventions& conventions) {
    const Vec3 d = user - uav;
    const double d_3d = norm(d);
    if (!(d_3d > 0.0)) throw DegenerateLinkError("UAV coincides with a user");
    const double horizontal = std::hypot(d.x, d.y);

    // Entry point of the horizontal projection into the footprint rectangle,
    // as a fraction of the way from the UAV to the user.
    EntryFace face = EntryFace::Footprint;
    double t_entry = 0.0;
    const bool over_footprint =
        uav.x >= 0.0 && uav.x <= building.x_b && uav.y >= 0.0 && uav.y <= building.y_b;
    if (!over_footprint) {
        if (d.x != 0.0) {
            const double t = std::min((0.0 - uav.x) / d.x, (building.x_b - uav.x) / d.x);
            if (t > t_entry || face == EntryFace::Footprint) {
                t_entry = t;
                face = EntryFace::X;
            }
        }
        if (d.y != 0.0) {
            const double t = std::min((0.0 - uav.y) / d.y, (building.y_b - uav.y) / d.y);
            if (t > t_entry || face == EntryFace::Footprint) {
                t_entry = t;
                face = EntryFace::Y;
            }
        }
        t_entry = std::clamp(t_entry, 0.0, 1.0);
    }

    LinkGeometry g;
    g.d_3d = d_3d;

    switch (conventions.indoor) {
        case IndoorDistanceConvention::Ray:
            g.d_2d = (1.0 - t_entry) * horizontal;
            break;
        case IndoorDistanceConvention::FacadeDepth:
            if (face == EntryFace::X) {
                g.d_2d = uav.x < 0.0 ? user.x : building.x_b - user.x;
            } else if (face == EntryFace::Y) {
                g.d_2d = uav.y < 0.0 ? user.y : building.y_b - user.y;
            } else {
                g.d_2d = horizontal;
            }
            g.d_2d = std::max(g.d_2d, 0.0);
            break;
    }

    double theta_rad = 0.0;
    switch (conventions.theta) {
        case ThetaConvention::Elevation:
            theta_rad = std::asin(std::min(1.0, std::abs(d.z) / d_3d));
            break;
        case ThetaConvention::Incidence: {
            const double along_normal = face == EntryFace::X   ? std::abs(d.x)
                                        : face == EntryFace::Y ? std::abs(d.y)
                                                               : std::abs(d.z);
            theta_rad = std::acos(std::min(1.0, along_normal / d_3d));
            break;
        }
    }
    g.theta = std::clamp(theta_rad * kRadToDeg, 0.0, 90.0);
    return g;
}

}  // namespace uavplace
