#include "uavplace/objective.hpp"

#include <cmath>

#include "uavplace/error.hpp"

namespace uavplace {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

void RadioConfig::validate() const {
    if (!(bandwidth_b > 0.0) || !(noise_n > 0.0) || !(p_t_max > 0.0) || num_users_m < 1) {
        throw ConfigError("radio bandwidth, noise, max power and user count must be positive");
    }
    if (!(rate_v >= 0.0)) throw ConfigError("radio rate requirement must be non-negative");
}

double RadioConfig::snr_factor() const {
    const double exponent = rate_v * num_users_m / bandwidth_b;
    const double factor = std::exp2(exponent) - 1.0;
    if (!std::isfinite(factor)) {
        throw ConfigError("2^(v*M/B) overflows; rate requirement too high for the bandwidth");
    }
    return factor;
}

double RadioConfig::l_max_db() const {
    return 10.0 * std::log10(p_t_max / (snr_factor() * noise_n));
}

void SearchBounds::validate() const {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(lower[i] < upper[i])) throw ConfigError("search bounds need min < max on every axis");
    }
    if (!(l_max > 0.0)) throw ConfigError("l_max must be positive");
}

bool SearchBounds::contains(const Vec3& p) const {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(p[i] >= lower[i] && p[i] <= upper[i])) return false;
    }
    return true;
}

std::string_view to_string(CostUnit unit) {
    return unit == CostUnit::DbSum ? "db" : "linear";
}

std::optional<CostUnit> parse_cost_unit(std::string_view text) {
    if (text == "db") return CostUnit::DbSum;
    if (text == "linear") return CostUnit::LinearSum;
    return std::nullopt;
}

CostReport total_loss(const UavPosition& uav, const UserSet& users, const Building& building,
                      const PathLossParams& params, const LinkConventions& conventions,
                      const SearchBounds* bounds) {
    if (users.size() == 0) throw ConfigError("user set is empty");
    CostReport report;
    report.per_user_loss.reserve(users.size());
    for (const Vec3& user : users.users()) {
        const double loss = path_loss(link_geometry(uav, user, building, conventions), params).l_total;
        report.per_user_loss.push_back(loss);
        report.total_loss_db += loss;
    }
    if (bounds != nullptr) {
        report.feasible = bounds->contains(uav) && report.total_loss_db <= bounds->l_max;
    }
    return report;
}

double min_power_per_user(double loss_db, const RadioConfig& radio) {
    if (!std::isfinite(loss_db)) throw DomainError("loss must be finite");
    return radio.snr_factor() * radio.noise_n * db_to_linear(loss_db);
}

double total_power(const CostReport& report, const RadioConfig& radio) {
    double sum = 0.0;
    for (double loss : report.per_user_loss) sum += min_power_per_user(loss, radio);
    return sum;
}

double rate(double loss_db, double p_t, const RadioConfig& radio) {
    if (!(p_t >= 0.0) || !std::isfinite(loss_db)) throw DomainError("rate needs p_t >= 0 and finite loss");
    const double received = p_t / db_to_linear(loss_db);
    return radio.bandwidth_b / radio.num_users_m * std::log2(1.0 + received / radio.noise_n);
}

PlacementObjective::PlacementObjective(UserSet users, Building building, PathLossParams params,
                                       SearchBounds bounds, LinkConventions conventions,
                                       CostUnit unit)
    : users_(std::move(users)),
      building_(building),
      params_(params),
      bounds_(bounds),
      conventions_(conventions),
      unit_(unit) {
    building_.validate();
    params_.validate();
    bounds_.validate();
    if (users_.size() == 0) throw ConfigError("user set is empty");
}

double PlacementObjective::operator()(const UavPosition& uav) const {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (!bounds_.contains(uav)) return kInf;
    double db_sum = 0.0;
    double linear_sum = 0.0;
    try {
        for (const Vec3& user : users_.users()) {
            const double loss =
                path_loss(link_geometry(uav, user, building_, conventions_), params_).l_total;
            db_sum += loss;
            if (unit_ == CostUnit::LinearSum) linear_sum += db_to_linear(loss);
        }
    } catch (const DomainError&) {
        return kInf;
    }
    if (!(db_sum <= bounds_.l_max)) return kInf;
    return unit_ == CostUnit::DbSum ? db_sum : linear_sum;
}

CostReport PlacementObjective::report(const UavPosition& uav) const {
    return total_loss(uav, users_, building_, params_, conventions_, &bounds_);
}

}  // namespace uavplace
