#include "srkit/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "srkit/error.hpp"

namespace srkit::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                         std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        auto end = s.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        pos = end;
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

SimplicialComplex parse_complex_text(std::string_view text) {
    std::optional<int> n_vertices;
    std::vector<Face> facets;
    int line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!n_vertices) {
            auto toks = split_ws(line);
            if (toks.size() != 2 || toks[0] != "n")
                throw InputError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
            n_vertices = parse_int(toks[1], line_no);
            continue;
        }
        if (line == "{}") {
            facets.emplace_back();
            continue;
        }
        std::vector<Vertex> vs;
        for (auto tok : split_ws(line)) vs.push_back(parse_int(tok, line_no));
        try {
            facets.emplace_back(std::move(vs));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!n_vertices) throw InputError("complex file has no 'n <count>' header");
    return from_facets(*n_vertices, std::move(facets));
}

SimplicialComplex parse_complex_json(std::string_view text) {
    const json j = parse_json(text);
    const int n = get_field<int>(j, "n_vertices");
    std::vector<Face> facets;
    for (auto& vs : get_field<std::vector<std::vector<int>>>(j, "facets")) facets.emplace_back(std::move(vs));
    return from_facets(n, std::move(facets));
}

SimplicialComplex parse_complex(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_complex_json(text);
    return parse_complex_text(text);
}

std::string to_text(const SimplicialComplex& complex) {
    std::ostringstream os;
    os << "n " << complex.n_vertices() << '\n';
    for (const Face& f : complex.facets()) {
        if (f.empty()) {
            os << "{}\n";
            continue;
        }
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << '\n';
    }
    return os.str();
}

std::string to_json(const SimplicialComplex& complex) {
    json facets = json::array();
    for (const Face& f : complex.facets()) facets.push_back(std::vector<int>(f.begin(), f.end()));
    return json{{"facets", facets}, {"n_vertices", complex.n_vertices()}}.dump();
}

MonomialIdeal parse_monomial_ideal(std::string_view text) {
    const json j = parse_json(text);
    const int n = get_field<int>(j, "n_vars");
    std::vector<Monomial> gens;
    for (auto& e : get_field<std::vector<std::vector<int>>>(j, "generators")) gens.emplace_back(std::move(e));
    return MonomialIdeal(n, std::move(gens));
}

QuadrangleData parse_quadrangle(std::string_view text) {
    const json j = parse_json(text);
    QuadrangleData q;
    q.n_vars = get_field<int>(j, "n_vars");
    auto monomials = get_field<std::vector<std::vector<int>>>(j, "monomials");
    if (monomials.size() != 4) throw InputError("quadrangle data needs exactly 4 monomials");
    for (std::size_t i = 0; i < 4; ++i) q.monomials[i] = Monomial(std::move(monomials[i]));
    return q;
}

PSIncidence parse_incidence(std::string_view text) {
    const json j = parse_json(text);
    PSIncidence inc;
    auto quads = get_field<std::vector<std::vector<std::string>>>(j, "quadrangles");
    for (std::size_t q = 0; q < quads.size(); ++q) {
        if (quads[q].size() != 4)
            throw InputError("quadrangle " + std::to_string(q + 1) + " lists " +
                             std::to_string(quads[q].size()) + " triangles, expected 4");
        inc.quadrangles.push_back({quads[q][0], quads[q][1], quads[q][2], quads[q][3]});
    }
    return inc;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace srkit::io
