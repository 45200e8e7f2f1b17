#include "eqt/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace eqt {

namespace {

std::string trim(const std::string& s)
{
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;)
        out.push_back(w);
    return out;
}

long to_int(const std::string& s, int line)
{
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
    }
}

struct RawGen {
    std::string name;
    int dim = 0;
    std::vector<std::vector<std::string>> faces;
    int line = 0;
};

// "s1 s0 v", "s 1 s 0 v" or "v"
Simplex parse_face(const std::vector<std::string>& tok, const std::map<std::string, std::size_t>& ids,
                   const std::vector<RawGen>& gens, const RawGen& owner)
{
    Word w;
    std::size_t i = 0;
    while (i + 1 < tok.size()) {
        const std::string& t = tok[i];
        if (t == "s") {
            w.push_back(static_cast<int>(to_int(tok[i + 1], owner.line)));
            i += 2;
        } else if (t.size() > 1 && t[0] == 's' && std::isdigit(static_cast<unsigned char>(t[1]))) {
            w.push_back(static_cast<int>(to_int(t.substr(1), owner.line)));
            ++i;
        } else {
            throw ParseError("line " + std::to_string(owner.line) + ": bad degeneracy token '" + t + "' in a face of " +
                             owner.name);
        }
    }
    if (i + 1 != tok.size())
        throw ParseError("line " + std::to_string(owner.line) + ": empty face in " + owner.name);
    auto it = ids.find(tok.back());
    if (it == ids.end())
        throw ValidationError("generator " + owner.name + " has a face on the unknown generator " + tok.back());
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] <= w[k + 1])
            throw ValidationError("generator " + owner.name + ": degeneracy indices must decrease");
    int gd = gens[it->second].dim;
    if (!valid_word(w, gd + static_cast<int>(w.size())))
        throw ValidationError("generator " + owner.name + ": degeneracy index out of range");
    return {w, gd, {static_cast<std::int64_t>(it->second)}};
}

Key parse_bt(const nlohmann::json& j, int rank, int dim, const std::string& gen)
{
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ValidationError("map-to-BT of " + gen + " must list " + std::to_string(dim) + " group elements");
    std::vector<Key> parts;
    for (int k = 0; k < dim; ++k) {
        const auto& p = j[static_cast<std::size_t>(k)];
        if (!p.is_array() || static_cast<int>(p.size()) != rank * k)
            throw ValidationError("map-to-BT of " + gen + ": element " + std::to_string(k) + " needs " +
                                  std::to_string(rank * k) + " integers");
        Key g;
        for (const auto& v : p) {
            if (!v.is_number_integer())
                throw ParseError("map-to-BT of " + gen + ": entries must be integers");
            g.push_back(v.get<std::int64_t>());
        }
        parts.push_back(g);
    }
    return BarSpace::join(parts);
}

}  // namespace

SpaceFile parse_space(const std::string& text, const std::string& name)
{
    std::istringstream is(text);
    std::string section;
    std::vector<RawGen> gens;
    std::vector<std::pair<int, std::string>> map_lines, filt_lines, perv_lines, allow_lines, action_lines;
    int lineno = 0;
    for (std::string line; std::getline(is, line);) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
            section = line.substr(1, line.size() - 2);
            static const std::set<std::string> known{"generators", "map-to-BT", "filtration", "perversity", "allowable",
                                                     "action"};
            if (!known.count(section))
                throw ParseError("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        if (section.empty())
            throw ParseError("line " + std::to_string(lineno) + ": data before the first section");
        if (section == "generators") {
            RawGen g;
            g.line = lineno;
            std::string head = line, rest;
            if (auto c = line.find(':'); c != std::string::npos) {
                head = line.substr(0, c);
                rest = line.substr(c + 1);
            }
            auto hw = words(head);
            if (hw.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected '<name> <degree> : faces'");
            g.name = hw[0];
            g.dim = static_cast<int>(to_int(hw[1], lineno));
            if (!rest.empty() || line.find(':') != std::string::npos) {
                std::string f;
                std::istringstream fs(rest);
                while (std::getline(fs, f, '|'))
                    g.faces.push_back(words(f));
            }
            gens.push_back(g);
        } else if (section == "map-to-BT") {
            map_lines.push_back({lineno, line});
        } else if (section == "filtration") {
            filt_lines.push_back({lineno, line});
        } else if (section == "perversity") {
            perv_lines.push_back({lineno, line});
        } else if (section == "allowable") {
            allow_lines.push_back({lineno, line});
        } else {
            action_lines.push_back({lineno, line});
        }
    }
    if (gens.empty())
        throw ParseError("no [generators] section");
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!ids.emplace(gens[i].name, i).second)
            throw ValidationError("generator " + gens[i].name + " is declared twice");
    std::vector<FiniteSpace::Gen> fg;
    for (const RawGen& g : gens) {
        FiniteSpace::Gen x{g.name, g.dim, {}};
        for (const auto& f : g.faces)
            x.faces.push_back(parse_face(f, ids, gens, g));
        fg.push_back(x);
    }
    SpaceFile out;
    try {
        out.space = std::make_shared<FiniteSpace>(fg, name);
    } catch (const IdentityViolation& e) {
        throw ValidationError(e.what());
    }
    if (!map_lines.empty()) {
        std::vector<Key> image(gens.size());
        std::vector<bool> seen(gens.size(), false);
        bool have_rank = false;
        for (auto& [ln, l] : map_lines) {
            auto w = words(l);
            if (w.size() == 2 && w[0] == "rank") {
                out.rank = static_cast<int>(to_int(w[1], ln));
                have_rank = true;
                continue;
            }
            if (!have_rank)
                throw ParseError("line " + std::to_string(ln) + ": [map-to-BT] must start with 'rank <r>'");
            auto sp = l.find_first_of(" \t");
            if (sp == std::string::npos)
                throw ParseError("line " + std::to_string(ln) + ": expected '<name> <json list>'");
            std::string gname = l.substr(0, sp);
            auto it = ids.find(gname);
            if (it == ids.end())
                throw ValidationError("map-to-BT names the unknown generator " + gname);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(l.substr(sp));
            } catch (const nlohmann::json::exception&) {
                throw ParseError("line " + std::to_string(ln) + ": malformed list for " + gname);
            }
            image[it->second] = parse_bt(j, out.rank, gens[it->second].dim, gname);
            seen[it->second] = true;
        }
        if (!have_rank)
            throw ParseError("[map-to-BT] must start with 'rank <r>'");
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!seen[i]) {
                std::vector<Key> parts;
                for (int k = 0; k < gens[i].dim; ++k)
                    parts.push_back(Key(static_cast<std::size_t>(out.rank * k), 0));
                image[i] = BarSpace::join(parts);
            }
        out.image = image;
    }
    if (!filt_lines.empty()) {
        std::vector<int> labels(gens.size(), 0);
        for (auto& [ln, l] : filt_lines) {
            auto w = words(l);
            if (w.size() != 2)
                throw ParseError("line " + std::to_string(ln) + ": expected '<name> <codimension>'");
            auto it = ids.find(w[0]);
            if (it == ids.end())
                throw ValidationError("filtration names the unknown generator " + w[0]);
            labels[it->second] = static_cast<int>(to_int(w[1], ln));
        }
        out.labels = labels;
    }
    if (!perv_lines.empty()) {
        Perversity p;
        p.p.clear();
        for (auto& [ln, l] : perv_lines)
            for (const auto& w : words(l))
                p.p.push_back(static_cast<int>(to_int(w, ln)));
        out.perversity = p;
    }
    if (!allow_lines.empty()) {
        std::vector<std::string> names;
        for (auto& [ln, l] : allow_lines)
            for (const auto& w : words(l)) {
                if (!ids.count(w))
                    throw ValidationError("allowable subset names the unknown generator " + w);
                names.push_back(w);
            }
        out.allowable = names;
    }
    for (auto& [ln, l] : action_lines) {
        if (trim(l) != "trivial")
            throw ValidationError("line " + std::to_string(ln) + ": only the trivial action is supported in files");
    }
    return out;
}

SpaceFile load_space(const std::string& source)
{
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        std::string n = source.substr(prefix.size());
        SpaceFile f;
        const std::string bundle = "sphere-bundle:";
        if (n.rfind(bundle, 0) == 0) {
            std::int64_t d = to_int(n.substr(bundle.size()), 0);
            MappedSpace m = sphere_over_circle_base(d);
            f.space = std::const_pointer_cast<FiniteSpace>(m.Y);
            f.rank = 1;
            f.image = m.image;
            return f;
        }
        if (n == "pinched-torus") {
            FilteredSpace F = pinched_torus();
            f.space = std::const_pointer_cast<FiniteSpace>(F.X);
            f.labels = F.label;
            f.perversity = Perversity::middle(2);
            return f;
        }
        try {
            f.space = builtin_space(n);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        return f;
    }
    std::ifstream in(source);
    if (!in)
        throw ParseError("cannot read " + source);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string name = source;
    if (auto s = name.find_last_of('/'); s != std::string::npos)
        name = name.substr(s + 1);
    return parse_space(ss.str(), name);
}

}  // namespace eqt
