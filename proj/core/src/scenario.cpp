#include "uavplace/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "uavplace/error.hpp"

namespace uavplace {

using json = nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) throw ParseError(path.empty() ? "<root>" : path, "expected an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (std::string_view a : allowed) known = known || item.key() == a;
        if (!known) throw ParseError(join(path, item.key()), "unknown field");
    }
}

double get_number(const json& obj, std::string_view key, const std::string& path, double fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) throw ParseError(join(path, key), "expected a number");
    return it->get<double>();
}

int get_int(const json& obj, std::string_view key, const std::string& path, int fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number_integer()) throw ParseError(join(path, key), "expected an integer");
    const auto v = it->get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw ParseError(join(path, key), "integer out of range");
    }
    return static_cast<int>(v);
}

std::uint64_t get_u64(const json& obj, std::string_view key, const std::string& path,
                      std::uint64_t fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number_unsigned()) throw ParseError(join(path, key), "expected an unsigned integer");
    return it->get<std::uint64_t>();
}

std::string get_string(const json& obj, std::string_view key, const std::string& path,
                       std::string fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_string()) throw ParseError(join(path, key), "expected a string");
    return it->get<std::string>();
}

Vec3 get_vec3(const json& obj, std::string_view key, const std::string& path, Vec3 fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_array() || it->size() != 3) throw ParseError(join(path, key), "expected [x, y, z]");
    Vec3 v;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(*it)[i].is_number()) throw ParseError(join(path, key), "expected [x, y, z]");
        v[i] = (*it)[i].get<double>();
    }
    return v;
}

template <class Enum, class Parser>
Enum get_enum(const json& obj, std::string_view key, const std::string& path, Enum fallback,
              Parser parse, std::string_view choices) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_string()) throw ParseError(join(path, key), "expected one of " + std::string(choices));
    const auto parsed = parse(it->get<std::string>());
    if (!parsed) throw ParseError(join(path, key), "expected one of " + std::string(choices));
    return *parsed;
}

const json* child(const json& obj, std::string_view key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

json vec3_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

SearchBounds read_bounds(const json& j, const std::string& path, const SearchBounds& fallback) {
    check_keys(j, path, {"lower", "upper", "l_max"});
    SearchBounds b;
    b.lower = get_vec3(j, "lower", path, fallback.lower);
    b.upper = get_vec3(j, "upper", path, fallback.upper);
    b.l_max = fallback.l_max;
    if (const json* l = child(j, "l_max"); l != nullptr && !l->is_null()) {
        b.l_max = get_number(j, "l_max", path, fallback.l_max);
    }
    return b;
}

json bounds_json(const SearchBounds& b) {
    json j;
    j["lower"] = vec3_json(b.lower);
    j["upper"] = vec3_json(b.upper);
    j["l_max"] = std::isinf(b.l_max) ? json(nullptr) : json(b.l_max);
    return j;
}

std::string axes_string(const std::array<bool, 3>& active) {
    std::string s;
    if (active[0]) s += 'x';
    if (active[1]) s += 'y';
    if (active[2]) s += 'z';
    return s;
}

std::array<bool, 3> parse_axes(const std::string& text, const std::string& path) {
    std::array<bool, 3> active{false, false, false};
    for (char c : text) {
        if (c < 'x' || c > 'z' || active[static_cast<std::size_t>(c - 'x')]) {
            throw ParseError(path, "expected a subset of \"xyz\"");
        }
        active[static_cast<std::size_t>(c - 'x')] = true;
    }
    if (!active[0] && !active[1] && !active[2]) throw ParseError(path, "no active axis");
    return active;
}

Scenario from_json(const json& root) {
    check_keys(root, "", {"schema", "name", "building", "users", "seed", "path_loss",
                          "conventions", "bounds", "radio", "cost_unit", "solver", "pso",
                          "gd", "grid"});
    const std::string schema = get_string(root, "schema", "", std::string(kScenarioSchema));
    if (schema != kScenarioSchema) {
        throw ParseError("schema", "unsupported schema '" + schema + "'");
    }

    Scenario s;
    s.name = get_string(root, "name", "", "");
    s.seed = get_u64(root, "seed", "", s.seed);

    if (const json* b = child(root, "building")) {
        check_keys(*b, "building", {"x_b", "y_b", "z_b", "floor_height"});
        s.building.x_b = get_number(*b, "x_b", "building", s.building.x_b);
        s.building.y_b = get_number(*b, "y_b", "building", s.building.y_b);
        s.building.z_b = get_number(*b, "z_b", "building", s.building.z_b);
        s.building.floor_height = get_number(*b, "floor_height", "building", s.building.floor_height);
    }

    if (const json* u = child(root, "users")) {
        check_keys(*u, "users", {"distribution", "users_per_floor", "grid"});
        s.users.distribution = get_enum(*u, "distribution", "users", s.users.distribution,
                                        parse_distribution, "symmetric|uniform");
        s.users.users_per_floor = get_int(*u, "users_per_floor", "users", s.users.users_per_floor);
        if (const json* g = child(*u, "grid"); g != nullptr && !g->is_null()) {
            if (!g->is_array() || g->size() != 2 || !(*g)[0].is_number_integer() ||
                !(*g)[1].is_number_integer()) {
                throw ParseError("users.grid", "expected [n_x, n_y]");
            }
            s.users.grid = GridShape{(*g)[0].get<int>(), (*g)[1].get<int>()};
        }
    }

    if (const json* p = child(root, "path_loss")) {
        check_keys(*p, "path_loss", {"w", "g1", "g2", "g3", "g4", "f_ghz"});
        auto& pl = s.path_loss;
        pl.w = get_number(*p, "w", "path_loss", pl.w);
        pl.g1 = get_number(*p, "g1", "path_loss", pl.g1);
        pl.g2 = get_number(*p, "g2", "path_loss", pl.g2);
        pl.g3 = get_number(*p, "g3", "path_loss", pl.g3);
        pl.g4 = get_number(*p, "g4", "path_loss", pl.g4);
        pl.f_ghz = get_number(*p, "f_ghz", "path_loss", pl.f_ghz);
    }

    if (const json* c = child(root, "conventions")) {
        check_keys(*c, "conventions", {"theta", "indoor_distance"});
        s.conventions.theta = get_enum(*c, "theta", "conventions", s.conventions.theta,
                                       parse_theta_convention, "elevation|incidence");
        s.conventions.indoor =
            get_enum(*c, "indoor_distance", "conventions", s.conventions.indoor,
                     parse_indoor_distance_convention, "ray|depth");
    }

    if (const json* b = child(root, "bounds")) s.bounds = read_bounds(*b, "bounds", s.bounds);

    if (const json* r = child(root, "radio"); r != nullptr && !r->is_null()) {
        check_keys(*r, "radio", {"bandwidth_b", "rate_v", "noise_n", "p_t_max", "num_users_m"});
        RadioConfig radio;
        radio.bandwidth_b = get_number(*r, "bandwidth_b", "radio", 0.0);
        radio.rate_v = get_number(*r, "rate_v", "radio", 0.0);
        radio.noise_n = get_number(*r, "noise_n", "radio", 0.0);
        radio.p_t_max = get_number(*r, "p_t_max", "radio", 0.0);
        radio.num_users_m = get_int(*r, "num_users_m", "radio", 0);
        s.radio = radio;
    }

    s.cost_unit = get_enum(root, "cost_unit", "", s.cost_unit, parse_cost_unit, "db|linear");
    s.solver = get_enum(root, "solver", "", s.solver, parse_solver_kind, "pso|gd|grid");

    if (const json* p = child(root, "pso")) {
        check_keys(*p, "pso", {"kappa", "phi1", "phi2", "npop", "maxit", "varmin", "varmax"});
        auto& c = s.pso;
        c.kappa = get_number(*p, "kappa", "pso", c.kappa);
        c.phi1 = get_number(*p, "phi1", "pso", c.phi1);
        c.phi2 = get_number(*p, "phi2", "pso", c.phi2);
        c.npop = get_int(*p, "npop", "pso", c.npop);
        c.maxit = get_int(*p, "maxit", "pso", c.maxit);
        c.varmin = get_vec3(*p, "varmin", "pso", c.varmin);
        c.varmax = get_vec3(*p, "varmax", "pso", c.varmax);
    }

    if (const json* g = child(root, "gd")) {
        check_keys(*g, "gd", {"max_iter", "step_tol", "fd_step", "initial_step", "armijo",
                              "max_halvings", "axes", "start"});
        auto& c = s.gd;
        c.max_iter = get_int(*g, "max_iter", "gd", c.max_iter);
        c.step_tol = get_number(*g, "step_tol", "gd", c.step_tol);
        c.fd_step = get_number(*g, "fd_step", "gd", c.fd_step);
        c.initial_step = get_number(*g, "initial_step", "gd", c.initial_step);
        c.armijo = get_number(*g, "armijo", "gd", c.armijo);
        c.max_halvings = get_int(*g, "max_halvings", "gd", c.max_halvings);
        if (child(*g, "axes") != nullptr) {
            c.active = parse_axes(get_string(*g, "axes", "gd", ""), "gd.axes");
        }
        if (const json* st = child(*g, "start"); st != nullptr && !st->is_null()) {
            s.gd_start = get_vec3(*g, "start", "gd", {});
        }
    }

    if (const json* g = child(root, "grid")) {
        check_keys(*g, "grid", {"box", "resolution", "coarse", "window", "budget"});
        auto& c = s.grid;
        if (const json* box = child(*g, "box"); box != nullptr && !box->is_null()) {
            c.box = read_bounds(*box, "grid.box", SearchBounds{});
        }
        c.resolution = get_number(*g, "resolution", "grid", c.resolution);
        if (const json* co = child(*g, "coarse"); co != nullptr && !co->is_null()) {
            c.coarse = get_number(*g, "coarse", "grid", 0.0);
        }
        c.window = get_number(*g, "window", "grid", c.window);
        c.budget = get_u64(*g, "budget", "grid", c.budget);
    }
    return s;
}

json to_json(const Scenario& s) {
    json j;
    j["schema"] = kScenarioSchema;
    j["name"] = s.name;
    j["seed"] = s.seed;
    j["building"] = {{"x_b", s.building.x_b},
                     {"y_b", s.building.y_b},
                     {"z_b", s.building.z_b},
                     {"floor_height", s.building.floor_height}};
    j["users"] = {{"distribution", to_string(s.users.distribution)},
                  {"users_per_floor", s.users.users_per_floor},
                  {"grid", s.users.grid ? json::array({s.users.grid->nx, s.users.grid->ny})
                                        : json(nullptr)}};
    const auto& pl = s.path_loss;
    j["path_loss"] = {{"w", pl.w},   {"g1", pl.g1}, {"g2", pl.g2},
                      {"g3", pl.g3}, {"g4", pl.g4}, {"f_ghz", pl.f_ghz}};
    j["conventions"] = {{"theta", to_string(s.conventions.theta)},
                        {"indoor_distance", to_string(s.conventions.indoor)}};
    j["bounds"] = bounds_json(s.bounds);
    if (s.radio) {
        j["radio"] = {{"bandwidth_b", s.radio->bandwidth_b},
                      {"rate_v", s.radio->rate_v},
                      {"noise_n", s.radio->noise_n},
                      {"p_t_max", s.radio->p_t_max},
                      {"num_users_m", s.radio->num_users_m}};
    } else {
        j["radio"] = nullptr;
    }
    j["cost_unit"] = to_string(s.cost_unit);
    j["solver"] = to_string(s.solver);
    j["pso"] = {{"kappa", s.pso.kappa}, {"phi1", s.pso.phi1},
                {"phi2", s.pso.phi2},   {"npop", s.pso.npop},
                {"maxit", s.pso.maxit}, {"varmin", vec3_json(s.pso.varmin)},
                {"varmax", vec3_json(s.pso.varmax)}};
    j["gd"] = {{"max_iter", s.gd.max_iter},
               {"step_tol", s.gd.step_tol},
               {"fd_step", s.gd.fd_step},
               {"initial_step", s.gd.initial_step},
               {"armijo", s.gd.armijo},
               {"max_halvings", s.gd.max_halvings},
               {"axes", axes_string(s.gd.active)},
               {"start", s.gd_start ? vec3_json(*s.gd_start) : json(nullptr)}};
    j["grid"] = {{"box", s.grid.box ? bounds_json(*s.grid.box) : json(nullptr)},
                 {"resolution", s.grid.resolution},
                 {"coarse", s.grid.coarse ? json(*s.grid.coarse) : json(nullptr)},
                 {"window", s.grid.window},
                 {"budget", s.grid.budget}};
    return j;
}

}  // namespace

GdConfig Scenario::baseline_gd() {
    GdConfig c;
    c.active = {true, false, false};
    return c;
}

void Scenario::validate() const {
    building.validate();
    if (users.users_per_floor < 1) throw ConfigError("users_per_floor must be at least 1");
    if (users.grid && users.grid->nx * users.grid->ny != users.users_per_floor) {
        throw ConfigError("users.grid does not hold users_per_floor users");
    }
    path_loss.validate();
    bounds.validate();
    pso_config().validate();
    gd.validate();
    if (radio) {
        radio->validate();
        const int m = users.users_per_floor * building.floor_count();
        if (radio->num_users_m != m) {
            throw ConfigError("radio.num_users_m (" + std::to_string(radio->num_users_m) +
                              ") does not match the user count (" + std::to_string(m) + ")");
        }
        (void)radio->snr_factor();
    }
    grid_box().validate();
    if (!(grid.resolution > 0.0)) throw ConfigError("grid resolution must be positive");
    if (grid.coarse && !(*grid.coarse >= grid.resolution)) {
        throw ConfigError("grid coarse spacing must be at least the resolution");
    }
}

SearchBounds Scenario::grid_box() const {
    if (grid.box) return *grid.box;
    SearchBounds box;
    box.lower = {-150.0, 0.0, 0.0};
    box.upper = {-1.0, building.y_b, building.z_b};
    box.l_max = bounds.l_max;
    return box;
}

Vec3 Scenario::gd_start_point() const {
    return gd_start.value_or(Vec3{-building.x_b, 0.5 * building.y_b, 0.5 * building.z_b});
}

PsoConfig Scenario::pso_config() const {
    PsoConfig c = pso;
    c.seed = seed;
    return c;
}

Scenario parse_scenario(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError("<document>", e.what());
    }
    Scenario s = from_json(root);
    if (s.radio && s.radio->num_users_m == 0) {
        s.radio->num_users_m = s.users.users_per_floor * s.building.floor_count();
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

std::string serialize_scenario(const Scenario& scenario, int indent) {
    return to_json(scenario).dump(indent);
}

std::string scenario_digest(const Scenario& scenario) {
    const std::string canonical = to_json(scenario).dump();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace uavplace
