#include "rmhd/scenario.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace rmhd {

namespace {

struct Entry {
    std::string value;
    int line;
    bool used = false;
};

using Sections = std::map<std::string, std::map<std::string, Entry>>;

Sections tokenize(const std::string& text) {
    Sections out;
    std::istringstream in(text);
    std::string line, section;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(ln, "malformed section header");
            section = strip(line.substr(1, line.size() - 2));
            if (section.empty()) throw ParseError(ln, "empty section name");
            out[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(ln, "expected `key = value`");
        if (section.empty())
            throw ParseError(ln, "key outside any [section]");
        const std::string key = strip(line.substr(0, eq));
        const std::string val = strip(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ParseError(ln, "empty key or value");
        if (out[section].count(key))
            throw ParseError(ln, "duplicate key `" + key + "`");
        out[section][key] = Entry{val, ln};
    }
    return out;
}

double parse_number(const Entry& e, const std::string& field) {
    size_t pos = 0;
    double x;
    try {
        x = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw ParseError(e.line, field + ": not a number: `" + e.value + "`");
    }
    if (pos != e.value.size())
        throw ParseError(e.line, field + ": trailing characters in `" + e.value + "`");
    return x;
}

struct Reader {
    Sections& s;
    std::map<std::string, Entry>* sect(const std::string& name) {
        auto it = s.find(name);
        return it == s.end() ? nullptr : &it->second;
    }
    Entry* find(const std::string& section, const std::string& key) {
        auto* m = sect(section);
        if (!m) return nullptr;
        auto it = m->find(key);
        if (it == m->end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }
    double require(const std::string& section, const std::string& key) {
        Entry* e = find(section, key);
        if (!e)
            throw ValidationError(section + "." + key, "missing required key");
        return parse_number(*e, section + "." + key);
    }
    std::optional<double> optional_num(const std::string& section,
                                       const std::string& key) {
        Entry* e = find(section, key);
        if (!e) return std::nullopt;
        return parse_number(*e, section + "." + key);
    }
};

} // namespace

Scenario parse_scenario(const std::string& text) {
    Sections sections = tokenize(text);
    Reader r{sections};
    Scenario sc;

    Entry* kind = r.find("eos", "kind");
    if (!kind) throw ValidationError("eos.kind", "missing required key");
    if (kind->value == "linear") {
        sc.eos = EosSpec::linear(r.require("eos", "kappa"));
    } else if (kind->value == "anomalous_window") {
        sc.eos = EosSpec::anomalous_window(r.require("eos", "kappa_out"),
                                           r.require("eos", "kappa_in"),
                                           r.require("eos", "eps_lo"),
                                           r.require("eos", "eps_hi"),
                                           r.require("eos", "smoothing_width"));
    } else {
        throw ParseError(kind->line, "unknown eos kind `" + kind->value + "`");
    }

    sc.u1 = r.require("upstream", "u1");
    sc.h1 = r.require("upstream", "h1");
    sc.h2 = r.require("upstream", "h2");
    sc.n = r.require("upstream", "n");
    sc.p = r.optional_num("upstream", "p");
    sc.eps = r.optional_num("upstream", "eps");
    if (sc.p && sc.eps)
        throw ValidationError("upstream.p/eps", "exactly one of p or eps");
    if (!sc.p && !sc.eps)
        throw ValidationError("upstream.p/eps", "exactly one of p or eps");
    if (auto m = r.optional_num("upstream", "mu_over_4pi")) sc.mu_over_4pi = *m;
    if (!(sc.u1 > 0)) throw ValidationError("upstream.u1", "must be positive");
    if (!(sc.n > 0)) throw ValidationError("upstream.n", "must be positive");
    if (!(sc.mu_over_4pi > 0))
        throw ValidationError("upstream.mu_over_4pi", "must be positive");

    if (auto x = r.optional_num("viscosity", "xi")) sc.viscosity.xi = *x;
    if (auto x = r.optional_num("viscosity", "eta")) sc.viscosity.eta = *x;
    if (!(sc.viscosity.xi > 0) || !(sc.viscosity.eta > 0))
        throw ValidationError("viscosity", "xi and eta must be positive");

    if (auto x = r.optional_num("numerics", "grid_n"))
        sc.grid_n = static_cast<int>(*x);
    if (auto x = r.optional_num("numerics", "ode_tol")) sc.ode_tol = *x;
    if (auto x = r.optional_num("numerics", "shoot_delta")) sc.shoot_delta = *x;
    if (sc.grid_n < 32) throw ValidationError("numerics.grid_n", "must be >= 32");
    if (!(sc.ode_tol > 0) || !(sc.shoot_delta > 0))
        throw ValidationError("numerics", "tolerances must be positive");
    {
        auto ylo = r.optional_num("numerics", "y_lo");
        auto yhi = r.optional_num("numerics", "y_hi");
        auto vlo = r.optional_num("numerics", "v_lo");
        auto vhi = r.optional_num("numerics", "v_hi");
        const int have = !!ylo + !!yhi + !!vlo + !!vhi;
        if (have == 4)
            sc.locus_range = SearchBox{*ylo, *yhi, *vlo, *vhi};
        else if (have != 0)
            throw ValidationError("numerics.y_lo..v_hi",
                                  "all four range keys or none");
    }

    if (r.sect("target")) {
        sc.target = PhasePoint{r.require("target", "y"), r.require("target", "v")};
    }

    if (auto* e = r.find("outputs", "csv")) sc.csv_path = e->value;
    if (auto* e = r.find("outputs", "svg")) sc.svg_path = e->value;
    if (auto* e = r.find("outputs", "report")) sc.report_path = e->value;

    static const std::map<std::string, bool> known_sections = {
        {"eos", true},     {"upstream", true}, {"viscosity", true},
        {"numerics", true}, {"target", true},   {"outputs", true}};
    for (const auto& [name, keys] : sections) {
        if (!known_sections.count(name)) {
            const int ln = keys.empty() ? 0 : keys.begin()->second.line;
            throw ParseError(ln, "unknown section [" + name + "]");
        }
        for (const auto& [key, e] : keys)
            if (!e.used)
                throw ParseError(e.line, "unknown key `" + key + "` in [" +
                                             name + "]");
    }
    return sc;
}

FluidState upstream_state(const Scenario& sc) {
    return sc.eps ? make_fluid_state_eps(sc.u1, 0, sc.h1, sc.h2, sc.n, *sc.eps,
                                         sc.eos, sc.mu_over_4pi)
                  : make_fluid_state_p(sc.u1, 0, sc.h1, sc.h2, sc.n, *sc.p,
                                       sc.eos, sc.mu_over_4pi);
}

SearchBox default_search_box(const Scenario& sc) {
    if (sc.locus_range) return *sc.locus_range;
    return SearchBox{0.15 * sc.u1, 1.8 * sc.u1 + 0.1, -0.6, 0.6};
}

} // namespace rmhd
