#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grmod/parser.hpp"
#include "grmod/segre.hpp"

namespace {

using namespace grmod;

struct Options {
    std::string input;
    long max_degree = 20;
    std::string format = "text";
    unsigned threads = 1;
    std::string output;
    std::string cache_dir;
    std::string field;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Report& report, const Options& opt) {
    std::ostringstream ss;
    if (opt.format == "csv")
        report.render_csv(ss);
    else if (opt.format == "kv")
        report.render_kv(ss);
    else
        report.render_text(ss);
    if (opt.output.empty()) {
        std::cout << ss.str();
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::runtime_error("cannot open report path: " + opt.output);
        out << ss.str();
    }
}

// content-addressed on-disk store for reduced bases; the key digests the
// generators, the module order data, and the field
std::string cache_digest(const Submodule<Rational>& sub) {
    std::ostringstream ss;
    const auto& F = sub.ambient;
    ss << F->rank;
    for (long s : F->shifts) ss << "," << s;
    ss << ";";
    for (unsigned w : F->ring->weights) ss << w << ",";
    ss << ";QQ;";
    for (const auto& g : sub.generators) ss << g.str() << "\n";
    std::uint64_t h = 1469598103934665603ull;
    for (char c : ss.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

GroebnerBasis<Rational> cached_groebner(const Submodule<Rational>& sub, const Options& opt,
                                        ReportSection& section) {
    if (opt.cache_dir.empty()) return groebner(sub);
    std::filesystem::create_directories(opt.cache_dir);
    std::filesystem::path entry =
        std::filesystem::path(opt.cache_dir) / (cache_digest(sub) + ".gb");
    const auto& F = sub.ambient;
    // one element per line; tab-separated "<slot> <terms>" segments, each
    // term "<p/q>:<e1>.<e2>..." with exact rational coefficients
    if (std::filesystem::exists(entry)) {
        std::ifstream in(entry);
        std::string line;
        GroebnerBasis<Rational> gb;
        gb.ambient = F;
        gb.block_split = F->rank;
        gb.reduced = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ModuleElement<Rational> elem = ModuleElement<Rational>::zero(F);
            std::istringstream segments(line);
            std::string segment;
            while (std::getline(segments, segment, '\t')) {
                auto sp = segment.find(' ');
                std::size_t pos = std::stoul(segment.substr(0, sp));
                Polynomial<Rational> poly(F->ring);
                std::istringstream terms(segment.substr(sp + 1));
                std::string term;
                while (std::getline(terms, term, ',')) {
                    auto colon_at = term.find(':');
                    Rational coeff(term.substr(0, colon_at));
                    coeff.canonicalize();
                    Monomial mono = Monomial::one(F->ring->nvars());
                    std::istringstream exps(term.substr(colon_at + 1));
                    std::string e;
                    std::size_t v = 0;
                    while (std::getline(exps, e, '.'))
                        mono.exponents[v++] = static_cast<unsigned>(std::stoul(e));
                    poly = poly + Polynomial<Rational>::term(F->ring, mono, coeff);
                }
                elem = elem + ModuleElement<Rational>::from_component(F, pos, poly);
            }
            gb.elements.push_back(std::move(elem));
        }
        section.add_data("cache", "hit " + entry.filename().string());
        return gb;
    }
    auto gb = groebner(sub);
    std::ofstream out(entry);
    for (const auto& g : gb.elements) {
        bool first_slot = true;
        for (std::size_t s = 0; s < F->rank; ++s) {
            auto c = g.component(s);
            if (c.is_zero()) continue;
            if (!first_slot) out << "\t";
            out << s << " ";
            bool first_term = true;
            for (const auto& [mono, coeff] : c.terms()) {
                if (!first_term) out << ",";
                out << FieldOps<Rational>::str(coeff) << ":";
                for (std::size_t v = 0; v < mono.exponents.size(); ++v)
                    out << (v ? "." : "") << mono.exponents[v];
                first_term = false;
            }
            first_slot = false;
        }
        out << "\n";
    }
    section.add_data("cache", "miss " + entry.filename().string());
    return gb;
}

SegreData<Rational> segre_from_file(const MaterializedFile<Rational>& mat,
                                    const PresentationFile& file) {
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    SegreData<Rational> data{mat.algebra, *mat.bracket, {}, ModuleElement<Rational>::zero(
                                                               mat.bracket->presentation.free)};
    if (mat.algebra.relations.size() != 1 || mat.algebra.ring->nvars() != 5)
        throw std::runtime_error("input is not the Segre fixture");
    for (std::size_t v = 0; v < 5; ++v)
        data.partials.push_back(mat.algebra.relations.front().derivative(v));
    auto it = mat.elements.find("w");
    if (it == mat.elements.end())
        throw std::runtime_error("input does not declare the special element w");
    data.special_vector = it->second;
    (void)file;
    return data;
}

int run_verify_paper(const Options& opt) {
    auto file = parse_input(read_file(opt.input));
    if (file.doc.prime)
        throw std::runtime_error("verify-paper requires exact coefficients (field QQ)");
    auto mat = materialize<Rational>(file);
    auto data = segre_from_file(mat, file);
    SuiteConfig config;
    config.degree_bound = opt.max_degree;
    config.oracle_bound = std::min<long>(opt.max_degree, 20);
    config.threads = opt.threads;
    auto report = verify_paper(data, config);
    emit(report, opt);
    return report.ok() ? 0 : 1;
}

int run_hilbert(const Options& opt, const std::string& module) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    Report report;
    auto& section = report.add_section("hilbert");
    HilbertSeries series;
    if (module == "nprime") {
        if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
        series = hilbert_of_presentation(mat.bracket->presentation);
    } else if (module == "ring") {
        FreeModulePtr line = make_free_module(mat.algebra.ring, 1);
        std::vector<ModuleElement<Rational>> gens;
        for (const auto& r : mat.algebra.relations)
            gens.push_back(ModuleElement<Rational>::from_component(line, 0, r));
        series = hilbert_of_presentation(
            Presentation<Rational>(line, Submodule<Rational>(line, std::move(gens))));
    } else if (module == "m") {
        auto data = segre_from_file(mat, file);
        auto m = compute_M(data);
        auto sFU = hilbert_of_presentation(data.nprime.presentation);
        auto sFV = hilbert_of_presentation(Presentation<Rational>(data.ambient(), m.V));
        series = series_sub(sFU, sFV).shifted(m.hilbert_shift);
    } else {
        throw std::runtime_error("unknown module '" + module + "' (expected nprime, ring, or m)");
    }
    auto norm = series.normalized();
    section.add_data("series", norm.str());
    std::vector<SeriesRow> rows;
    for (auto [d, c] : expand(series, opt.max_degree).coefficients) rows.push_back({d, c});
    section.series.push_back({module, std::move(rows)});
    emit(report, opt);
    return 0;
}

int run_gb(const Options& opt, const std::string& module) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    if (module != "nprime") throw std::runtime_error("gb supports the bracket module only");
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    Report report;
    auto& section = report.add_section("gb");
    auto gb = cached_groebner(mat.bracket->presentation.relations, opt, section);
    section.add_data("elements", std::to_string(gb.elements.size()));
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        section.add_data("g" + std::to_string(i + 1), gb.elements[i].str());
    emit(report, opt);
    return 0;
}

int run_member(const Options& opt, const std::string& element, const std::string& scale) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    auto it = mat.elements.find(element);
    if (it == mat.elements.end()) throw std::runtime_error("unknown element '" + element + "'");
    Submodule<Rational> target = mat.bracket->presentation.relations;
    std::string target_name = "U";
    if (!scale.empty()) {
        gpa::ExprParser parser(gpa::Lexer(scale, 1), 1);
        auto p = gpa::eval_poly<Rational>(parser.parse(), mat.algebra.ring);
        std::vector<ModuleElement<Rational>> gens = target.generators;
        const auto& F = mat.bracket->presentation.free;
        for (std::size_t s = 0; s < F->rank; ++s)
            gens.push_back(ModuleElement<Rational>::from_component(F, s, p));
        target = Submodule<Rational>(F, std::move(gens));
        target_name = "(" + scale + ")F+U";
    }
    Report report;
    auto& section = report.add_section("member");
    bool in = is_member(it->second, groebner(target));
    section.add_check(element + "-in-" + target_name, in);
    section.add_data("element", it->second.str());
    emit(report, opt);
    return 0;
}

int run_colon(const Options& opt, const std::string& poly) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    gpa::ExprParser parser(gpa::Lexer(poly, 1), 1);
    auto f = gpa::eval_poly<Rational>(parser.parse(), mat.algebra.ring);
    Report report;
    auto& section = report.add_section("colon");
    const auto& U = mat.bracket->presentation.relations;
    auto C = colon(U, f);
    section.add_data("generators", std::to_string(C.generators.size()));
    section.add_check("colon-equals-u", submodules_equal(C, U));
    emit(report, opt);
    return 0;
}

int run_intersect(const Options& opt, const std::string& pa, const std::string& pb) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    auto scaled = [&](const std::string& text) {
        gpa::ExprParser parser(gpa::Lexer(text, 1), 1);
        auto p = gpa::eval_poly<Rational>(parser.parse(), mat.algebra.ring);
        const auto& F = mat.bracket->presentation.free;
        std::vector<ModuleElement<Rational>> gens = mat.bracket->presentation.relations.generators;
        for (std::size_t s = 0; s < F->rank; ++s)
            gens.push_back(ModuleElement<Rational>::from_component(F, s, p));
        return Submodule<Rational>(F, std::move(gens));
    };
    Report report;
    auto& section = report.add_section("intersect");
    auto inter = intersect(scaled(pa), scaled(pb));
    section.add_data("generators", std::to_string(inter.generators.size()));
    emit(report, opt);
    return 0;
}

int run_nprime(const Options& opt) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    Report report;
    auto& section = report.add_section("nprime");
    const auto& F = mat.bracket->presentation.free;
    section.add_data("rank", std::to_string(F->rank));
    std::ostringstream shifts;
    for (long s : F->shifts) shifts << s << " ";
    section.add_data("shifts", shifts.str());
    std::map<long, int> histogram;
    for (const auto& g : mat.bracket->presentation.relations.generators)
        ++histogram[*g.degree()];
    for (auto [d, n] : histogram)
        section.add_data("relations-degree-" + std::to_string(d), std::to_string(n));
    emit(report, opt);
    return 0;
}

int run_oracle(const Options& opt) {
    auto file = parse_input(read_file(opt.input));
    auto mat = materialize<Rational>(file);
    if (!mat.bracket) throw std::runtime_error("input declares no bracket-module");
    Report report;
    auto& section = report.add_section("oracle");
    auto dims = dims_oracle(mat.bracket->presentation, opt.max_degree, opt.threads);
    std::vector<SeriesRow> rows;
    for (auto [d, c] : dims.coefficients) rows.push_back({d, c});
    section.series.push_back({"nprime", std::move(rows)});
    auto gb_dims = expand(hilbert_of_presentation(mat.bracket->presentation), opt.max_degree);
    section.add_check("agrees-with-groebner", dims == gb_dims);
    emit(report, opt);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-module verification engine"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("GRMOD_THREADS"))
        opt.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (const char* env = std::getenv("GRMOD_REPORT")) opt.output = env;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "input .gpa file")->required();
        cmd->add_option("--max-degree", opt.max_degree, "expansion bound");
        cmd->add_option("--format", opt.format, "text | csv | kv")
            ->check(CLI::IsMember({"text", "csv", "kv"}));
        cmd->add_option("--threads", opt.threads, "worker thread budget");
        cmd->add_option("--output", opt.output, "report path (default stdout)");
        cmd->add_option("--cache-dir", opt.cache_dir, "basis cache directory");
    };

    std::string module = "nprime", element = "w", scale, poly_a, poly_b;

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    add_common(verify);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a module");
    add_common(hilbert);
    hilbert->add_option("--module", module, "nprime | ring | m");
    auto* gb = app.add_subcommand("gb", "reduced basis of the relation module");
    add_common(gb);
    gb->add_option("--module", module, "nprime");
    auto* member = app.add_subcommand("member", "membership of a named element");
    add_common(member);
    member->add_option("--element", element, "element name from the input file");
    member->add_option("--scale", scale, "test against (p)F+U for this polynomial p");
    auto* colon_cmd = app.add_subcommand("colon", "colon module (U : f)");
    add_common(colon_cmd);
    colon_cmd->add_option("--poly", poly_a, "the divisor f")->required();
    auto* inter = app.add_subcommand("intersect", "intersection of scaled modules");
    add_common(inter);
    inter->add_option("--poly-a", poly_a, "first scale polynomial")->required();
    inter->add_option("--poly-b", poly_b, "second scale polynomial")->required();
    auto* nprime = app.add_subcommand("nprime", "bracket-module presentation summary");
    add_common(nprime);
    auto* oracle = app.add_subcommand("oracle", "linear-algebra dimension cross-check");
    add_common(oracle);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify_paper(opt);
        if (hilbert->parsed()) return run_hilbert(opt, module);
        if (gb->parsed()) return run_gb(opt, module);
        if (member->parsed()) return run_member(opt, element, scale);
        if (colon_cmd->parsed()) return run_colon(opt, poly_a);
        if (inter->parsed()) return run_intersect(opt, poly_a, poly_b);
        if (nprime->parsed()) return run_nprime(opt);
        if (oracle->parsed()) return run_oracle(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
