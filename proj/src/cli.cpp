#include "brg/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brg/br_polynomial.hpp"
#include "brg/compositions.hpp"
#include "brg/errors.hpp"
#include "brg/flowers.hpp"
#include "brg/graph_text.hpp"

namespace brg::cli {

namespace {

void print_poly(const Poly3& p, bool json, std::ostream& out) {
    if (json)
        out << poly3_to_json(p) << "\n";
    else
        out << p.to_text() << "\n";
}

// Closed-form route: pure merged flowers and separate layouts factor into
// per-sector closed forms; merged mixed-sign flowers have none.
std::optional<Poly3> closed_form_of(const flowers::FlowerSpec& spec) {
    const auto& sectors = spec.sectors;
    if (sectors.empty()) return Poly3::constant(1, Basis::X);
    const bool uniform = std::all_of(sectors.begin(), sectors.end(), [&](const auto& s) {
        return s.sign == sectors.front().sign;
    });
    if (spec.layout == flowers::Layout::Merged && !uniform) return std::nullopt;
    if (spec.layout == flowers::Layout::Merged) {
        const int n = spec.total_petals();
        return sectors.front().sign == flowers::PetalSign::Twisted
                   ? flowers::closed_form_twisted(n)
                   : flowers::closed_form_untwisted(n);
    }
    Poly3 result = Poly3::constant(1, Basis::X);
    for (const auto& s : sectors)
        result *= s.sign == flowers::PetalSign::Twisted ? flowers::closed_form_twisted(s.count)
                                                        : flowers::closed_form_untwisted(s.count);
    return result;
}

flowers::FlowerSpec as_flower_spec(const flowers::ParsedSpec& parsed) {
    if (const auto* flower = std::get_if<flowers::FlowerSpec>(&parsed)) return *flower;
    const auto& periodic = std::get<flowers::PeriodicSpec>(parsed);
    flowers::FlowerSpec spec;
    for (int i = 1; i <= periodic.q; ++i)
        spec.sectors.push_back(flowers::Sector{
            i % 2 == 1 ? periodic.k1 : periodic.k2,
            i % 2 == 1 ? periodic.start : flowers::flip(periodic.start)});
    return spec;
}

int run_eval(const std::string& path, const std::string& method, int cap, unsigned threads,
             bool json, std::ostream& out) {
    const RibbonGraph g = parse_graph_file(path);
    Poly3 result;
    if (method == "statesum") {
        StateSumOptions opts;
        opts.max_edges = cap;
        opts.threads = threads;
        result = state_sum(g, opts);
    } else {  // auto and reduce both take the reducer, which falls back per cap
        ReduceOptions opts;
        opts.fallback_cap = cap;
        result = reduce(g, opts);
    }
    print_poly(result, json, out);
    return 0;
}

int run_flower(const std::string& spec_text, bool closed, bool statesum, int cap, bool json,
               std::ostream& out) {
    const auto parsed = flowers::parse_flower_spec(spec_text);
    const flowers::FlowerSpec spec = as_flower_spec(parsed);
    Poly3 result;
    if (statesum) {
        StateSumOptions opts;
        opts.max_edges = cap;
        result = state_sum(flowers::build_flower(spec), opts);
    } else {
        auto cf = closed_form_of(spec);
        if (cf) {
            result = *cf;
        } else if (closed) {
            throw ParseError("no closed form for a merged mixed-sign flower; use --statesum");
        } else {
            StateSumOptions opts;
            opts.max_edges = cap;
            result = state_sum(flowers::build_flower(spec), opts);
        }
    }
    print_poly(result, json, out);
    return 0;
}

int run_faces(const std::string& spec_text, std::ostream& out) {
    const auto parsed = flowers::parse_flower_spec(spec_text);
    if (const auto* periodic = std::get_if<flowers::PeriodicSpec>(&parsed)) {
        const auto fc = flowers::periodic_face_class(*periodic);
        out << "F=" << fc.face_count() << " class=" << fc.value << "\n";
        return 0;
    }
    const auto& spec = std::get<flowers::FlowerSpec>(parsed);
    if (spec.layout == flowers::Layout::Merged) {
        const auto signs = spec.signs();
        const auto fc = flowers::face_class(signs);
        out << "F=" << fc.face_count() << " class=" << fc.value << "\n";
    } else {
        // Sectors that do not interleave can bound more than two circles; the
        // Z_3 class applies to merged chains only.
        const RibbonGraph g = flowers::build_flower(spec);
        out << "F=" << boundary_components(g, SubgraphSelector::all(g)) << " class=-\n";
    }
    return 0;
}

int run_comp(long long n, long long p, long long i, std::optional<int> modulus,
             std::optional<int> residue, std::ostream& out) {
    if (modulus.has_value() != residue.has_value())
        throw ParseError("--modulus and --residue must be given together");
    compositions::Count c = modulus ? compositions::count_residue(n, p, i, *modulus, *residue)
                                    : compositions::count_odd(n, p, i);
    out << c.str() << "\n";
    return 0;
}

int run_recurrence(const std::string& family, int max_n, std::ostream& out) {
    const auto fam = family == "u" ? flowers::FlowerFamily::Untwisted
                                   : flowers::FlowerFamily::Twisted;
    const auto table = flowers::recurrence_family(fam, max_n);
    for (std::size_t i = 0; i < table.size(); ++i)
        out << "R_" << i << " = " << table[i].to_text() << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bollobas-Riordan polynomials of ribbon graphs"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate the polynomial of a ribbon graph file");
    std::string eval_file;
    std::string eval_method = "auto";
    int eval_cap = 24;
    unsigned eval_threads = 1;
    bool eval_json = false;
    eval->add_option("file", eval_file, "graph in ribbon v1 format")->required();
    eval->add_option("--method", eval_method, "auto, statesum or reduce")
        ->check(CLI::IsMember({"auto", "statesum", "reduce"}));
    eval->add_option("--cap", eval_cap, "edge cap for subset enumeration");
    eval->add_option("--threads", eval_threads, "worker threads for the state sum");
    eval->add_flag("--json", eval_json, "emit the JSON polynomial form");

    auto* flower = app.add_subcommand("flower", "polynomial of a flower family");
    std::string flower_spec;
    bool flower_closed = false, flower_statesum = false, flower_json = false;
    int flower_cap = 24;
    flower->add_option("--spec", flower_spec, "flower spec, e.g. u5, t3, 3+,2-;merged")
        ->required();
    auto* closed_flag = flower->add_flag("--closed", flower_closed, "force the closed form");
    flower->add_flag("--statesum", flower_statesum, "force the subgraph sum")
        ->excludes(closed_flag);
    flower->add_option("--cap", flower_cap, "edge cap for subset enumeration");
    flower->add_flag("--json", flower_json, "emit the JSON polynomial form");

    auto* faces = app.add_subcommand("faces", "face count and Z3 class of a flower");
    std::string faces_spec;
    faces->add_option("--spec", faces_spec, "flower spec")->required();

    auto* comp = app.add_subcommand("comp", "composition counts with constrained parts");
    long long comp_n = 0, comp_p = 0, comp_i = 0;
    std::optional<int> comp_modulus, comp_residue;
    comp->add_option("--n", comp_n, "target integer")->required();
    comp->add_option("--p", comp_p, "number of parts")->required();
    comp->add_option("--i", comp_i, "constrained part count")->required();
    comp->add_option("--modulus", comp_modulus, "part class modulus D");
    comp->add_option("--residue", comp_residue, "part class residue d");

    auto* recurrence = app.add_subcommand("recurrence", "flower polynomial table R_0..R_N");
    std::string rec_family;
    int rec_max_n = 0;
    recurrence->add_option("--family", rec_family, "u (untwisted) or t (twisted)")
        ->required()
        ->check(CLI::IsMember({"u", "t"}));
    recurrence->add_option("--max-n", rec_max_n, "last index of the table")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval->parsed())
            return run_eval(eval_file, eval_method, eval_cap, eval_threads, eval_json, out);
        if (flower->parsed())
            return run_flower(flower_spec, flower_closed, flower_statesum, flower_cap,
                              flower_json, out);
        if (faces->parsed()) return run_faces(faces_spec, out);
        if (comp->parsed()) return run_comp(comp_n, comp_p, comp_i, comp_modulus, comp_residue, out);
        if (recurrence->parsed()) return run_recurrence(rec_family, rec_max_n, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace brg::cli
