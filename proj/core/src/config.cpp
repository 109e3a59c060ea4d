#include "nlcl/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "nlcl/expression.hpp"

namespace nlcl {

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
    throw ConfigError(what, line);
}

double parse_double(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t len = 0;
        double d = std::stod(v, &len);
        if (len != v.size())
            fail("trailing characters in numeric value for '" + key + "'", line);
        return d;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        fail("expected a number for '" + key + "', got '" + v + "'", line);
    }
}

int parse_int(const std::string& v, const std::string& key, int line) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        fail("expected an integer for '" + key + "', got '" + v + "'", line);
    return out;
}

std::string trim(std::string s) {
    auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && issp(s.front()))
        s.erase(s.begin());
    while (!s.empty() && issp(s.back()))
        s.pop_back();
    return s;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

} // namespace

void Config::validate() const {
    if (problem.domain_b <= problem.domain_a)
        throw ConfigError("domain_b must exceed domain_a");
    if (n < 4)
        throw ConfigError("n must be at least 4");
    if (problem.lambda <= 0.0)
        throw ConfigError("lambda must be positive");
    if (problem.t_end < 0.0)
        throw ConfigError("t_end must be nonnegative");
    if (!problem.u0)
        throw ConfigError("missing required key 'initial'");
    if (problem.scheme != Scheme::local_second) {
        if (problem.kernel.coupling <= 0.0 && problem.kernel.delta <= 0.0)
            throw ConfigError("missing or nonpositive 'delta' for a nonlocal scheme");
        if (problem.kernel.power && problem.kernel.p <= -1.0)
            throw ConfigError("kernel exponent p must exceed -1");
        if (!problem.kernel.power && problem.kernel.profile.empty())
            throw ConfigError("kernel = custom requires 'profile'");
    }
    for (int m : n_list)
        if (m < 4)
            throw ConfigError("n_list entries must be at least 4");
    if (!n_list.empty() && n_ref < n_list.back())
        throw ConfigError("n_ref must be at least the largest n_list entry");
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (auto pos = s.find('#'); pos != std::string::npos)
            s.erase(pos);
        s = trim(s);
        if (s.empty())
            continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            fail("expected 'key = value'", line);
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            fail("empty key or value", line);

        try {
            if (key == "domain_a") {
                cfg.problem.domain_a = parse_double(val, key, line);
            } else if (key == "domain_b") {
                cfg.problem.domain_b = parse_double(val, key, line);
            } else if (key == "n") {
                cfg.n = parse_int(val, key, line);
            } else if (key == "bc") {
                if (val == "periodic")
                    cfg.problem.bc = Bc::periodic;
                else if (val == "outflow")
                    cfg.problem.bc = Bc::outflow;
                else
                    fail("unknown bc '" + val + "'", line);
            } else if (key == "kernel") {
                if (val == "power")
                    cfg.problem.kernel.power = true;
                else if (val == "custom")
                    cfg.problem.kernel.power = false;
                else
                    fail("kernel must be 'power' or 'custom'", line);
            } else if (key == "p") {
                cfg.problem.kernel.p = parse_double(val, key, line);
            } else if (key == "delta") {
                // either a plain number or "<c>dx" for grid-coupled horizons
                if (val.size() > 2 && val.substr(val.size() - 2) == "dx") {
                    cfg.problem.kernel.coupling =
                        parse_double(trim(val.substr(0, val.size() - 2)), key, line);
                    cfg.problem.kernel.delta = 0.0;
                } else {
                    cfg.problem.kernel.delta = parse_double(val, key, line);
                    cfg.problem.kernel.coupling = 0.0;
                }
            } else if (key == "profile") {
                cfg.problem.kernel.profile = val;
            } else if (key == "flux") {
                cfg.problem.flux = numerical_flux_from_name(val);
            } else if (key == "alpha") {
                if (val == "coupled") {
                    cfg.problem.lf_alpha_coupled = true;
                } else {
                    cfg.problem.lf_alpha = parse_double(val, key, line);
                    cfg.problem.lf_alpha_coupled = false;
                }
            } else if (key == "scheme") {
                cfg.problem.scheme = scheme_from_name(val);
            } else if (key == "limiter") {
                if (val != "minmod")
                    fail("unknown limiter '" + val + "'", line);
            } else if (key == "lambda") {
                cfg.problem.lambda = parse_double(val, key, line);
            } else if (key == "t_end") {
                cfg.problem.t_end = parse_double(val, key, line);
            } else if (key == "integrator") {
                cfg.problem.integrator = integrator_from_name(val);
            } else if (key == "cfl") {
                cfg.problem.cfl_mode = cfl_mode_from_name(val);
            } else if (key == "initial") {
                cfg.initial_selector = val;
                cfg.problem.u0 = initial_datum(val);
            } else if (key == "snapshot_times") {
                cfg.snapshot_times.clear();
                for (const std::string& item : split_list(val))
                    cfg.snapshot_times.push_back(parse_double(item, key, line));
            } else if (key == "output_prefix") {
                cfg.output_prefix = val;
            } else if (key == "n_list") {
                cfg.n_list.clear();
                for (const std::string& item : split_list(val))
                    cfg.n_list.push_back(parse_int(item, key, line));
            } else if (key == "n_ref") {
                cfg.n_ref = parse_int(val, key, line);
            } else if (key == "reference") {
                if (val == "self")
                    cfg.reference_local = false;
                else if (val == "local")
                    cfg.reference_local = true;
                else
                    fail("reference must be 'self' or 'local'", line);
            } else {
                fail("unknown key '" + key + "'", line);
            }
        } catch (ConfigError& e) {
            if (e.line_number < 0)
                throw ConfigError(e.what(), line);
            throw;
        }
    }
    cfg.validate();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace nlcl
