#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "srkit/codim1.hpp"
#include "srkit/corpus.hpp"
#include "srkit/error.hpp"
#include "srkit/fiberprod.hpp"
#include "srkit/homology.hpp"
#include "srkit/io.hpp"
#include "srkit/lattice.hpp"
#include "srkit/serre.hpp"

namespace srkit::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    std::string builtin;
    std::string input;
    std::string field = "q";
    std::optional<int> r;
    std::optional<int> k;
    std::string ring;
    bool verify = false;
    bool as_json = false;
};

struct Outcome {
    json doc;
    std::string human;
    int exit_code = kExitOk;
};

json face_json(const Face& f) { return std::vector<int>(f.begin(), f.end()); }

json faces_json(const std::vector<Face>& faces) {
    json out = json::array();
    for (const Face& f : faces) out.push_back(face_json(f));
    return out;
}

std::string join_faces(const std::vector<Face>& faces) {
    std::ostringstream os;
    for (std::size_t i = 0; i < faces.size(); ++i) os << (i ? " " : "") << faces[i];
    return os.str();
}

SimplicialComplex load_complex(const Options& opt) {
    if (opt.builtin.empty() == opt.input.empty())
        throw InputError("give exactly one of --builtin or --input");
    if (!opt.builtin.empty()) return builtin_from_spec(opt.builtin);
    return io::parse_complex(io::read_file(opt.input));
}

std::string source_name(const Options& opt) { return opt.builtin.empty() ? opt.input : opt.builtin; }

json betti_json(const BettiVector& b) {
    return {{"field", b.field().name()}, {"min_degree", -1}, {"dims", b.dims()}};
}

std::string betti_human(const BettiVector& b) {
    std::ostringstream os;
    os << "reduced Betti over " << b.field().name() << ":";
    for (int i = -1; i <= b.top_degree(); ++i) os << " b" << i << "=" << b.at(i);
    return os.str();
}

json partition_json(const Codim1Partition& p) {
    json adjacency = json::array();
    for (const auto& e : p.adjacency)
        adjacency.push_back({{"components", {e.lhs, e.rhs}}, {"intersection_dim", e.intersection_dimension}});
    return {{"blocks", p.blocks}, {"adjacency", adjacency}, {"equidimensional", p.equidimensional}};
}

// --- complex commands ----------------------------------------------------

Outcome cmd_info(const Options& opt) {
    const SimplicialComplex c = load_complex(opt);
    Outcome out;
    out.doc = {{"n_vertices", c.n_vertices()},
               {"dimension", c.dimension()},
               {"facets", faces_json(c.facets())},
               {"f_vector", c.f_vector()},
               {"pure", c.is_pure()},
               {"reduced_euler_characteristic", reduced_euler_characteristic(c)}};
    std::ostringstream os;
    os << source_name(opt) << ": " << c.n_vertices() << " vertices, " << c.facets().size()
       << " facets, dim " << c.dimension() << (c.is_pure() ? ", pure" : ", not pure") << "\nf-vector:";
    for (auto f : c.f_vector()) os << ' ' << f;
    os << "\nreduced Euler characteristic: " << reduced_euler_characteristic(c);
    out.human = os.str();
    return out;
}

Outcome cmd_homology(const Options& opt) {
    const SimplicialComplex c = load_complex(opt);
    const Field field = Field::parse(opt.field);
    const ChainSpectrum spectrum = chain_spectrum(c);
    const BettiVector betti = reduced_betti(spectrum, field);
    Outcome out;
    json integral = json::array();
    std::ostringstream os;
    os << betti_human(betti) << "\nintegral homology:";
    for (const auto& g : homology_over_Z(spectrum)) {
        std::vector<std::string> torsion;
        for (const auto& t : g.torsion) torsion.push_back(t.get_str());
        integral.push_back({{"degree", g.degree}, {"free_rank", g.free_rank}, {"torsion", torsion}});
        os << "\n  H~" << g.degree << " = Z^" << g.free_rank;
        for (const auto& t : torsion) os << " + Z/" << t;
    }
    out.doc = {{"betti", betti_json(betti)}, {"integral", integral}};
    out.human = os.str();
    return out;
}

Outcome cmd_serre(const Options& opt) {
    const SimplicialComplex c = load_complex(opt);
    const Field field = Field::parse(opt.field);
    Outcome out;
    if (opt.r) {
        const SerreReport report = check_serre(c, *opt.r, field);
        out.doc = {{"r", *opt.r}, {"field", field.name()}, {"holds", report.holds}, {"witness", nullptr}};
        std::ostringstream os;
        os << "S_" << *opt.r << (report.holds ? " holds" : " fails");
        if (report.witness) {
            const auto& w = *report.witness;
            out.doc["witness"] = {{"face", face_json(w.face)},
                                  {"degree", w.degree},
                                  {"link_dimension", w.link_dimension},
                                  {"betti", w.betti}};
            os << ": face " << w.face << ", H~" << w.degree << "(lk) has dimension " << w.betti
               << " (dim lk = " << w.link_dimension << ")";
            out.exit_code = kExitCheckFailed;
        }
        out.human = os.str();
        return out;
    }
    const SerreLevel level = max_serre(c, field);
    out.doc = {{"field", field.name()}, {"cohen_macaulay", level.cohen_macaulay()}, {"max_r", nullptr}};
    if (level.max_r) {
        out.doc["max_r"] = *level.max_r;
        out.human = "satisfies S_" + std::to_string(*level.max_r) + " but not S_" +
                    std::to_string(*level.max_r + 1);
    } else {
        out.human = "Cohen-Macaulay: S_r holds for every r";
    }
    return out;
}

Outcome cmd_hochster(const Options& opt) {
    const SimplicialComplex c = load_complex(opt);
    const HochsterTable table = hochster_table(c, Field::parse(opt.field));
    Outcome out;
    json rows = json::array();
    std::ostringstream os;
    os << "Hochster table over " << table.field().name() << " (entry = dim H~_{i-|G|-1}(lk G))";
    for (int i = 0; i <= table.max_degree(); ++i) {
        json row = json::array();
        os << "\n  i=" << i << ":";
        const auto entries = table.row(i);
        if (entries.empty()) os << " 0";
        for (const auto& [face, h] : entries) {
            row.push_back({{"face", face_json(face)}, {"h", h}});
            os << ' ' << face << "->" << h;
        }
        rows.push_back({{"degree", i}, {"degree_zero", table.degree_zero(i)}, {"entries", row}});
    }
    out.doc = {{"field", table.field().name()}, {"rows", rows}};
    out.human = os.str();
    return out;
}

Outcome cmd_depth(const Options& opt) {
    const SimplicialComplex c = load_complex(opt);
    const int d = depth(c, Field::parse(opt.field));
    Outcome out;
    out.doc = {{"depth", d}, {"krull_dimension", c.dimension() + 1}, {"cohen_macaulay", d == c.dimension() + 1}};
    out.human = "depth " + std::to_string(d) + ", dim " + std::to_string(c.dimension() + 1);
    return out;
}

Outcome cmd_codim1(const Options& opt) {
    const SimplicialComplex c = load_complex(opt);
    const Codim1Partition p = complex_codim1(c);
    Outcome out;
    out.doc = partition_json(p);
    std::ostringstream os;
    os << p.block_count() << " codimension-one component(s)";
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        std::vector<Face> facets;
        for (auto idx : p.blocks[b]) facets.push_back(c.facets()[idx]);
        os << "\n  block " << b << ": " << join_faces(facets);
    }
    out.human = os.str();
    return out;
}

Outcome cmd_summands(const Options& opt) {
    const SummandReport report = summand_report(load_complex(opt), Field::parse(opt.field));
    Outcome out;
    json blocks = json::array();
    for (const auto& b : report.block_facets) blocks.push_back(faces_json(b));
    out.doc = {{"r", report.summands}, {"blocks", blocks}, {"degree0_check", report.degree0_check}};
    std::ostringstream os;
    os << "r=" << report.summands << " predicted indecomposable summands of omega; degree-0 check "
       << report.degree0_check;
    for (std::size_t b = 0; b < report.block_facets.size(); ++b)
        os << "\n  block " << b << ": " << join_faces(report.block_facets[b]);
    out.human = os.str();
    return out;
}

Outcome cmd_hh_report(const Options& opt) {
    const HochsterHunekeReport r = hochster_huneke_report(load_complex(opt), Field::parse(opt.field));
    Outcome out;
    out.doc = {{"r", r.summands},
               {"connected_in_codim1", r.connected_in_codim1},
               {"omega_indecomposable", r.omega_indecomposable},
               {"end_omega_connected", r.endomorphism_ring_connected},
               {"equidimensional", r.equidimensional}};
    out.human = std::string("connected in codimension 1: ") + (r.connected_in_codim1 ? "yes" : "no") +
                "\nomega indecomposable: " + (r.omega_indecomposable ? "yes" : "no") +
                "\nEnd(omega) connected: " + (r.endomorphism_ring_connected ? "yes" : "no") +
                "\nsummands: " + std::to_string(r.summands);
    return out;
}

// --- lattice commands ----------------------------------------------------

std::string require_input(const Options& opt) {
    if (opt.input.empty()) throw InputError("--input is required");
    if (!opt.builtin.empty()) throw InputError("--builtin is not accepted here");
    return io::read_file(opt.input);
}

Outcome cmd_lattice_quad(const Options& opt) {
    const QuadrangleData quad = io::parse_quadrangle(require_input(opt));
    Outcome out;
    const QuadrangleValidation v = validate_quadrangle(quad);
    if (!v.ok) {
        out.doc = {{"valid", false}, {"diagnostics", v.diagnostics}, {"overlapping_pairs", v.overlapping_pairs}};
        out.human = "invalid quadrangle data:";
        for (const auto& d : v.diagnostics) out.human += "\n  " + d;
        out.exit_code = kExitCheckFailed;
        return out;
    }
    const DeficiencySupport support = deficiency_support(quad);
    const NonS2Report report = non_s2_top_report(quad);
    json primes = json::array();
    std::ostringstream os;
    os << "dim A = " << report.dim_ring << ", non-S2 locus dim = " << report.non_s2_dimension << "\n"
       << support.primes.size() << " minimal prime(s) of the deficiency support:";
    for (const auto& p : support.primes) {
        primes.push_back(p.vars());
        os << ' ' << p.to_string();
    }
    os << "\nconnected in codimension 1: " << (report.connected ? "yes" : "no");
    out.doc = {{"valid", true},
               {"dim_A", report.dim_ring},
               {"non_s2_dim", report.non_s2_dimension},
               {"primes", primes},
               {"partition", partition_json(report.partition)},
               {"connected", report.connected},
               {"graded_connected", report.graded_connected}};
    out.human = os.str();
    if (!report.connected) out.exit_code = kExitCheckFailed;
    return out;
}

Outcome cmd_lattice_ps(const Options& opt) {
    const PSCertificate cert = ps_connectivity_certificate(io::parse_incidence(require_input(opt)));
    Outcome out;
    json tree = json::array();
    for (const auto& e : cert.spanning_tree) tree.push_back({{"quadrangle", e.quadrangle}, {"triangle", e.triangle}});
    out.doc = {{"ok", cert.ok},
               {"generators", cert.generators},
               {"triangles", cert.triangles},
               {"spanning_tree", tree},
               {"violation", nullptr}};
    if (cert.violation) {
        out.doc["violation"] = {{"quadrangle", cert.violation->quadrangle}, {"message", cert.violation->message}};
        out.human = "counterexample: " + cert.violation->message;
        out.exit_code = kExitCheckFailed;
    } else {
        out.human = "incidence graph connected: m=" + std::to_string(cert.generators) + ", " +
                    std::to_string(cert.triangles) + " triangles, spanning tree with " +
                    std::to_string(cert.spanning_tree.size()) + " edges";
    }
    return out;
}

// --- fiber-product tables ------------------------------------------------

json sum_json(const SymSum& s) {
    json j = json::object();
    if (s.finite != 0 || s.atoms.empty()) j["finite"] = s.finite;
    if (!s.atoms.empty()) {
        json atoms = json::object();
        for (const auto& [atom, m] : s.atoms) atoms[atom.label()] = m;
        j["atoms"] = atoms;
    }
    return j;
}

json symdim_json(const SymDim& d) {
    if (!d.is_extension()) return sum_json(d.direct());
    const auto& [sub, quotient] = *d.extension_parts();
    auto part = [](const SymSum& s) { return s.is_finite() ? json(s.finite) : sum_json(s); };
    json j = d.direct().is_zero() ? json::object() : sum_json(d.direct());
    j["extension"] = {part(sub), part(quotient)};
    return j;
}

json profile_json(const LCProfile& p) {
    json rows = json::object();
    for (const auto& [i, d] : p.rows) rows[std::to_string(i)] = symdim_json(d);
    return {{"ring", std::string(1, ring_letter(p.ring))}, {"k", p.k}, {"rows", rows}};
}

Outcome cmd_fiberprod(const Options& opt) {
    if (!opt.k) throw InputError("--k is required");
    const int k = *opt.k;
    std::vector<LCProfile> profiles;
    const std::string rings = opt.ring.empty() ? (k >= 3 ? "RBCA" : "RB") : opt.ring;
    for (char ch : rings) {
        switch (ch) {
            case 'R': profiles.push_back(table_R(k)); break;
            case 'B': profiles.push_back(table_B(k)); break;
            case 'C': profiles.push_back(table_C(k)); break;
            case 'A': profiles.push_back(table_A(k)); break;
            default: throw InputError(std::string("unknown ring '") + ch + "' (expected R, B, C or A)");
        }
    }
    Outcome out;
    json tables = json::array();
    std::ostringstream os;
    for (const auto& p : profiles) {
        tables.push_back(profile_json(p));
        os << ring_letter(p.ring) << "_" << k << ":";
        for (const auto& [i, d] : p.rows) os << "  H^" << i << " = " << d.to_string();
        os << '\n';
    }
    out.doc = {{"tables", tables}};
    if (opt.verify) {
        const LesCheck check = verify_les(k);
        out.doc["les"] = {{"ok", check.ok}, {"message", check.message}, {"failing_degree", nullptr}};
        if (check.failing_degree) out.doc["les"]["failing_degree"] = *check.failing_degree;
        os << "long exact sequence: " << check.message << '\n';
        if (!check.ok) out.exit_code = kExitCheckFailed;
    }
    out.human = os.str();
    if (!out.human.empty() && out.human.back() == '\n') out.human.pop_back();
    return out;
}

Outcome cmd_corpus(const Options&) {
    Outcome out;
    json entries = json::array();
    std::ostringstream os;
    for (const auto& e : builtin_corpus()) {
        const SimplicialComplex c = builtin_from_spec(e.spec);
        entries.push_back({{"name", e.spec},
                           {"description", e.description},
                           {"n_vertices", c.n_vertices()},
                           {"facets", c.facets().size()},
                           {"dimension", c.dimension()}});
        os << e.spec << ": " << e.description << " (" << c.n_vertices() << " vertices, "
           << c.facets().size() << " facets, dim " << c.dimension() << ")\n";
    }
    out.doc = {{"builtins", entries}};
    out.human = os.str();
    out.human.pop_back();
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Serre conditions, Hochster tables and codimension-one connectedness for "
                 "Stanley-Reisner rings"};
    app.name("srkit");
    app.require_subcommand(1);
    Options opt;

    auto complex_source = [&](CLI::App* sub) {
        sub->add_option("--builtin", opt.builtin, "builtin complex, e.g. torus_7 or sphere_product:3");
        sub->add_option("--input", opt.input, "complex file (text or JSON)");
    };
    auto field_option = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field, "coefficient field: q or f:<p>");
    };
    using Handler = Outcome (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const std::string& name, const std::string& help, Handler handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", opt.as_json, "emit JSON");
        commands.emplace_back(sub, handler);
        return sub;
    };

    for (auto [name, help, handler] : std::vector<std::tuple<std::string, std::string, Handler>>{
             {"info", "complex summary", cmd_info},
             {"homology", "reduced homology", cmd_homology},
             {"hochster", "local cohomology via Hochster's formula", cmd_hochster},
             {"depth", "depth of K[Delta]", cmd_depth},
             {"codim1", "codimension-one component partition", cmd_codim1},
             {"summands", "predicted summands of the canonical module", cmd_summands},
             {"hh-report", "connectedness / indecomposability predictions", cmd_hh_report}}) {
        CLI::App* sub = add(name, help, handler);
        complex_source(sub);
        field_option(sub);
    }
    {
        CLI::App* sub = add("serre", "check S_r, or find the largest r", cmd_serre);
        complex_source(sub);
        field_option(sub);
        sub->add_option("--r", opt.r, "Serre index to check");
    }
    add("lattice-quad", "codimension-two quadrangle analysis", cmd_lattice_quad)
        ->add_option("--input", opt.input, "quadrangle JSON");
    add("lattice-ps", "quadrangle/triangle incidence certificate", cmd_lattice_ps)
        ->add_option("--input", opt.input, "incidence JSON");
    {
        CLI::App* sub = add("fiberprod", "fiber-product local cohomology tables", cmd_fiberprod);
        sub->add_option("--k", opt.k, "family index");
        sub->add_option("--ring", opt.ring, "subset of RBCA to print");
        sub->add_flag("--verify", opt.verify, "check the long exact sequence");
    }
    add("corpus", "list builtin complexes", cmd_corpus);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "srkit: " << e.what() << '\n';
        return kExitInputError;
    }

    for (const auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        try {
            Outcome result = handler(opt);
            if (opt.as_json) {
                result.doc["schema"] = kSchemaVersion;
                result.doc["command"] = sub->get_name();
                out << result.doc.dump(2) << '\n';
            } else {
                out << result.human << '\n';
            }
            return result.exit_code;
        } catch (const InputError& e) {
            err << "srkit " << sub->get_name() << ": " << e.what() << '\n';
            return kExitInputError;
        }
    }
    return kExitInputError;
}

}  // namespace srkit::cli
