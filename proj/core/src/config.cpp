#include "vhh/config.hpp"
#include "vhh/util.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vhh {

namespace {

std::vector<double> parse_double_list(const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

const char* kKeys[] = {"gamma",      "gevrey_h",   "temperature",
                       "temperature_list", "lambda", "resolution",
                       "sunshine_resolution", "workers", "seed", "out_dir"};

} // namespace

void apply_kv(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "gamma") cfg.gamma = std::stod(value);
    else if (key == "gevrey_h") cfg.gevrey_h = std::stod(value);
    else if (key == "temperature") cfg.temperature = std::stod(value);
    else if (key == "temperature_list") cfg.temperature_list = parse_double_list(value);
    else if (key == "lambda") cfg.lambda = std::stod(value);
    else if (key == "resolution") cfg.resolution = std::stoi(value);
    else if (key == "sunshine_resolution") cfg.sunshine_resolution = std::stoi(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "out_dir") cfg.out_dir = value;
    else throw std::invalid_argument("unknown config key: " + key);
}

void RunConfig::validate() const {
    if (gamma < 10.0) throw std::invalid_argument("gamma must be >= 10");
    if (gevrey_h <= 1.0) throw std::invalid_argument("gevrey_h must be > 1");
    if (temperature <= 0.0 || temperature >= 1.0)
        throw std::invalid_argument("temperature must lie in (0,1)");
    for (double t : temperature_list) {
        if (t <= 0.0 || t >= 1.0)
            throw std::invalid_argument("temperature_list entries must lie in (0,1)");
    }
    if (resolution < 8) throw std::invalid_argument("resolution must be >= 8");
    if (sunshine_resolution < 8)
        throw std::invalid_argument("sunshine_resolution must be >= 8");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

std::uint64_t RunConfig::hash() const {
    // Canonical key=value rendering; workers deliberately excluded so runs
    // with different worker counts compare equal (outputs must match anyway).
    std::ostringstream ss;
    ss << "gamma=" << fmt17(gamma) << ";gevrey_h=" << fmt17(gevrey_h)
       << ";temperature=" << fmt17(temperature) << ";temperature_list=";
    for (double t : temperature_list) ss << fmt17(t) << ',';
    ss << ";lambda=" << fmt17(lambda) << ";resolution=" << resolution
       << ";sunshine_resolution=" << sunshine_resolution << ";seed=" << seed;
    return fnv1a64(ss.str());
}

RunConfig load_config(const std::string& file_path,
                      const std::vector<std::string>& overrides) {
    RunConfig cfg;
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + file_path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash_pos = line.find('#');
            if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
            line = trim(line);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line is not key=value: " + line);
            apply_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    for (const char* key : kKeys) {
        std::string env_name = "VHH_";
        for (const char* p = key; *p; ++p) env_name += static_cast<char>(std::toupper(*p));
        if (const char* v = std::getenv(env_name.c_str())) {
            apply_kv(cfg, key, v);
        }
    }
    for (const auto& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("override is not key=value: " + ov);
        apply_kv(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

} // namespace vhh
