// curvachay: curvature toolkit for Cayley graphs of finitely presented
// groups. Subcommands: curvature, verify, ball, eliminate, spectrum.
//
// Exit codes: 0 ok, 1 violated claim, 2 input error, 3 budget exceeded.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "curvachay/ball.hpp"
#include "curvachay/curvature_matrix.hpp"
#include "curvachay/elimination.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/jacobi.hpp"
#include "curvachay/monotonicity.hpp"
#include "curvachay/ollivier.hpp"
#include "curvachay/presets.hpp"
#include "curvachay/theorems.hpp"
#include "curvachay/todd_coxeter.hpp"
#include "curvachay/transport.hpp"
#include "curvachay/verify.hpp"

using namespace curvachay;

namespace {

struct InputOptions {
    std::string raach;
    std::string group;
    std::string file;
    std::string preset;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--raach", in.raach, "inline raach body, e.g. \"a:2,b:3; commute (a,b)\"");
    cmd->add_option("--group", in.group, "inline presentation, e.g. \"<a,b | a^4, b^-1 a^2>\"");
    cmd->add_option("--file", in.file, "file containing a full presentation declaration");
    cmd->add_option("--preset", in.preset, "builtin presentation name (see data/presentations)");
}

Presentation load_presentation(const InputOptions& in) {
    int given = !in.raach.empty() + !in.group.empty() + !in.file.empty() + !in.preset.empty();
    if (given != 1) throw InvalidInput("exactly one of --raach/--group/--file/--preset is required");
    if (!in.raach.empty()) return parse_presentation("raach { " + in.raach + " }");
    if (!in.group.empty()) return parse_presentation("group " + in.group);
    if (!in.preset.empty()) {
        auto text = preset_text(in.preset);
        if (!text) throw InvalidInput("unknown preset '" + in.preset + "'");
        return parse_presentation(*text);
    }
    std::ifstream is(in.file);
    if (!is) throw InvalidInput("cannot open file: " + in.file);
    std::stringstream buffer;
    buffer << is.rdbuf();
    return parse_presentation(buffer.str());
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw InvalidInput("cannot open output file: " + path);
    return file;
}

std::string cell(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
    return to_fraction_string(q) + " (" + buf + ")";
}

std::string cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

LaplacianKind kind_from_flag(const std::string& flag) {
    if (flag == "norm") return LaplacianKind::normalized();
    if (flag == "nonnorm") return LaplacianKind::non_normalized();
    throw InvalidInput("--laplacian must be norm or nonnorm");
}

// ---------------------------------------------------------------------------
// curvature
// ---------------------------------------------------------------------------

struct Row {
    std::string label;
    std::optional<Rational> exact_closed;
    std::optional<Rational> exact_brute;
    std::optional<double> float_closed;
    std::optional<double> float_brute;
    bool match = true;
};

void emit_rows(std::ostream& os, const std::vector<Row>& rows, const std::string& format) {
    auto num = [](const std::optional<Rational>& r, const std::optional<double>& f) {
        if (r) return cell(*r);
        if (f) return cell(*f);
        return std::string();
    };
    if (format == "table") {
        os << "quantity | closed form | exact/brute | match\n";
        for (const Row& r : rows)
            os << r.label << " | " << num(r.exact_closed, r.float_closed) << " | "
               << num(r.exact_brute, r.float_brute) << " | " << (r.match ? "yes" : "NO") << "\n";
        return;
    }
    if (format == "csv") {
        os << "quantity,closed_rational,closed_float,brute_rational,brute_float,match\n";
        for (const Row& r : rows) {
            auto fl = [](const std::optional<double>& f, const std::optional<Rational>& r2) {
                if (f) return cell(*f);
                if (r2) return cell(to_double(*r2));
                return std::string();
            };
            os << r.label << ',' << (r.exact_closed ? to_fraction_string(*r.exact_closed) : "") << ','
               << fl(r.float_closed, r.exact_closed) << ','
               << (r.exact_brute ? to_fraction_string(*r.exact_brute) : "") << ','
               << fl(r.float_brute, r.exact_brute) << ',' << (r.match ? "yes" : "no") << "\n";
        }
        return;
    }
    if (format == "json") {
        for (const Row& r : rows) {
            os << "{\"quantity\":\"" << r.label << "\",\"closed_rational\":"
               << (r.exact_closed ? "\"" + to_fraction_string(*r.exact_closed) + "\"" : "null")
               << ",\"closed_float\":"
               << (r.float_closed ? cell(*r.float_closed)
                                  : (r.exact_closed ? cell(to_double(*r.exact_closed)) : "null"))
               << ",\"brute_rational\":"
               << (r.exact_brute ? "\"" + to_fraction_string(*r.exact_brute) + "\"" : "null")
               << ",\"brute_float\":"
               << (r.float_brute ? cell(*r.float_brute)
                                 : (r.exact_brute ? cell(to_double(*r.exact_brute)) : "null"))
               << ",\"match\":" << (r.match ? "true" : "false") << "}\n";
        }
        return;
    }
    throw InvalidInput("--format must be table, json or csv");
}

int cmd_curvature(const InputOptions& in, std::string laplacian, int radius, int max_cosets,
                  const std::string& format, unsigned seed, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    Presentation p = load_presentation(in);

    if (laplacian.empty()) laplacian = p.is_raach() ? "norm" : "nonnorm";
    LaplacianKind kind = kind_from_flag(laplacian);
    if (format == "table")
        os << "# curvachay curvature seed=" << seed << " laplacian=" << laplacian
           << " radius=" << radius << "\n";

    if (p.is_raach()) {
        if (radius < 4) throw InvalidInput("edge curvature needs --radius >= 4");
        const DefiningGraph& h = *p.defining_graph;
        AssociatedPair ap = associated_pair(h);
        BallWithElements b = ball_with_elements(p, radius, BallOptions{std::max(radius, 5), 2'000'000});
        std::vector<int> at = sstar_ball_vertices(h, b);
        int d = ap.size();
        bool norm = laplacian == "norm";
        bool all_match = true;
        std::vector<Row> rows;

        for (int i = 0; i < d; ++i) {
            Rational closed = thm_or_raach(h, i);
            Rational brute = kappa_lly_transport(b.graph, b.graph.root, at[i]);
            Row r;
            r.label = "kappa(" + ap.vertices[i].label + ")";
            r.match = closed == brute;
            all_match = all_match && r.match;
            if (!norm) {
                closed *= d;
                brute *= d;
            }
            r.exact_closed = closed;
            r.exact_brute = brute;
            rows.push_back(std::move(r));
        }

        BeClosedForm be = thm_be_raach(h);
        double brute_k = bakry_emery(b.graph, b.graph.root,
                                     norm ? LaplacianKind::normalized() : LaplacianKind::non_normalized())
                             .value;
        double matrix_k = norm ? be.curvature / d : be.curvature;
        Row krow;
        krow.label = "K(e)";
        krow.float_closed = be.closed_form ? std::optional<double>(norm ? *be.closed_form / d
                                                                        : *be.closed_form)
                                           : std::optional<double>(matrix_k);
        krow.float_brute = brute_k;
        krow.match = std::fabs(matrix_k - brute_k) <= 1e-8;
        all_match = all_match && krow.match;
        rows.push_back(std::move(krow));
        emit_rows(os, rows, format);
        return all_match ? 0 : 1;
    }

    CosetTable t = todd_coxeter(p, max_cosets);
    LocalGraph g = cayley_from_cosets(t);
    if (g.edges().empty()) throw InvalidInput("the group is trivial or all generators collapse");
    std::vector<Row> rows;
    double kmin = 0, kmax = 0;
    for (int v = 0; v < g.n(); ++v) {
        double k = bakry_emery(g, v, kind).value;
        kmin = v == 0 ? k : std::min(kmin, k);
        kmax = v == 0 ? k : std::max(kmax, k);
    }
    Row order_row;
    order_row.label = "group order";
    order_row.exact_brute = Rational(g.n());
    rows.push_back(std::move(order_row));
    Row krow;
    krow.label = "K (all vertices)";
    krow.float_brute = kmin;
    krow.match = kmax - kmin <= 1e-9;
    rows.push_back(std::move(krow));
    for (const auto& e : g.edges()) {
        Row r;
        r.label = "kappa(" + g.name(e.u) + "--" + g.name(e.v) + ")";
        r.exact_brute = kappa_lly_laplacian(g, e.u, e.v, kind).value;
        rows.push_back(std::move(r));
    }
    emit_rows(os, rows, format);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, int max_gens, int max_cosets, int words, unsigned seed,
               const std::string& pairs, const std::string& out_path) {
    if (pairs != "builtin") throw InvalidInput("only the builtin quotient pairs are available");
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    bool known = false;
    VerifyReport report;
    auto want = [&](const char* name) {
        bool match = suite == name;
        known = known || match;
        return match || suite == "all";
    };
    if (want("or")) report.merge(verify_or(max_gens));
    if (want("be")) report.merge(verify_be(max_gens));
    if (want("cycles")) report.merge(verify_cycles(max_gens));
    if (want("eliminations")) report.merge(verify_eliminations(max_gens, words, seed));
    if (want("monotonicity")) report.merge(verify_monotonicity(max_cosets, seed));
    if (!known && suite != "all") throw InvalidInput("unknown suite: " + suite);

    report.write_jsonl(os);
    std::cerr << "# suite=" << suite << " seed=" << seed << " checks=" << report.checked()
              << " violations=" << report.violations() << "\n";
    return report.violations() == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ball / eliminate / spectrum
// ---------------------------------------------------------------------------

int cmd_ball(const InputOptions& in, int radius, int max_cosets, const std::string& format,
             const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    Presentation p = load_presentation(in);
    LocalGraph g = p.is_raach() ? ball(p, radius, BallOptions{std::max(radius, 5), 2'000'000})
                                : cayley_from_cosets(todd_coxeter(p, max_cosets));
    if (format == "json")
        os << g.to_json() << "\n";
    else
        os << g.to_dot();
    return 0;
}

int cmd_eliminate(const InputOptions& in, const std::string& r4, const std::string& rinf,
                  unsigned seed, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    Presentation p = load_presentation(in);
    if (!p.is_raach()) throw InvalidInput("eliminate requires a raach presentation");
    const DefiningGraph& h = *p.defining_graph;
    if (r4.empty() == rinf.empty()) throw InvalidInput("exactly one of --r4/--rinf is required");
    std::string name = r4.empty() ? rinf : r4;
    int gen = h.index_of(name);
    if (gen < 0) throw InvalidInput("unknown generator: " + name);
    Elimination e = r4.empty() ? eliminate_rinf(h, gen) : eliminate_r4(h, gen);

    Presentation q = presentation_from_graph(e.transformed);
    os << "# curvachay eliminate seed=" << seed << "\n";
    os << "# transformed: " << to_text(q) << "\n";
    os << "# associated pair: " << associated_pair_to_json(associated_pair(e.transformed)) << "\n";
    os << "word | image | round trip | same element\n";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(1, 8), pick(0, h.size() - 1), sign(0, 1);
    bool all_ok = true;

    // canonical sample first, when two other generators are available:
    // s0^-1 s1 s0^2 s2^-1 s0 for order 4, s0^-2 s1 s0^2 s2 s0 otherwise
    std::vector<Word> demos;
    {
        std::vector<int> others;
        for (int i = 0; i < h.size(); ++i)
            if (i != gen) others.push_back(i);
        if (others.size() >= 2) {
            Word w;
            int s1v = others[0], s2v = others[1];
            if (!r4.empty()) {
                w.letters = {{gen, -1}, {s1v, 1}, {gen, 1}, {gen, 1}, {s2v, -1}, {gen, 1}};
            } else {
                w.letters = {{gen, -1}, {gen, -1}, {s1v, 1}, {gen, 1}, {gen, 1}, {s2v, 1}, {gen, 1}};
            }
            demos.push_back(std::move(w));
        }
    }
    for (int demo = 0; demo < 5; ++demo) {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.letters.push_back({pick(rng), sign(rng) ? 1 : -1});
        demos.push_back(std::move(w));
    }
    for (const Word& w : demos) {
        Word fw = e.forward(w);
        Word back = e.backward(fw);
        bool same = normal_form(p, back) == normal_form(p, w);
        all_ok = all_ok && same;
        os << word_to_text(p, w) << " | " << word_to_text(q, fw) << " | " << word_to_text(p, back)
           << " | " << (same ? "yes" : "NO") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_spectrum(const InputOptions& in, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    Presentation p = load_presentation(in);
    if (!p.is_raach()) throw InvalidInput("spectrum requires a raach presentation");
    AssociatedPair ap = associated_pair(*p.defining_graph);
    SpectralSummary s = spectrum_of_associated_pair(ap);
    os << "# spectrum of the negated pair Laplacian, ascending\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        os << "lambda_" << i + 1 << " = " << cell(s.values[i]) << (i == 1 ? "   <- lambda2" : "")
           << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature toolkit for Cayley graphs of finitely presented groups"};
    app.require_subcommand(1);

    InputOptions in;
    std::string laplacian;
    std::string format = "dot";
    std::string curvature_format = "table";
    std::string out_path;
    std::string suite = "all";
    std::string pairs = "builtin";
    std::string r4, rinf;
    int radius = 4;
    int max_cosets = 100000;
    int max_gens = 3;
    int words = 1000;
    unsigned seed = 1;

    CLI::App* curvature = app.add_subcommand("curvature", "closed-form and exact brute-force curvatures");
    add_input_flags(curvature, in);
    curvature->add_option("--laplacian", laplacian, "norm | nonnorm (default depends on input kind)");
    curvature->add_option("--radius", radius, "ball radius for brute-force edge curvature");
    curvature->add_option("--max-cosets", max_cosets, "coset enumeration budget");
    curvature->add_option("--format", curvature_format, "table | json | csv");
    curvature->add_option("--seed", seed, "seed recorded in the output header");
    curvature->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("suite", suite, "or | be | cycles | eliminations | monotonicity | all");
    verify->add_option("--max-gens", max_gens, "family size bound");
    verify->add_option("--max-cosets", max_cosets, "coset enumeration budget");
    verify->add_option("--words", words, "random words per elimination case");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--pairs", pairs, "quotient pair set for the monotonicity suite");
    verify->add_option("--out", out_path, "write the JSON lines to a file");

    CLI::App* ball_cmd = app.add_subcommand("ball", "dump a Cayley ball or a finite Cayley graph");
    add_input_flags(ball_cmd, in);
    ball_cmd->add_option("--radius", radius, "ball radius (raach inputs)");
    ball_cmd->add_option("--max-cosets", max_cosets, "coset enumeration budget (group inputs)");
    ball_cmd->add_option("--format", format, "dot | json");
    ball_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* eliminate = app.add_subcommand("eliminate", "replace an order-4/infinity generator");
    add_input_flags(eliminate, in);
    eliminate->add_option("--r4", r4, "order-4 generator to eliminate");
    eliminate->add_option("--rinf", rinf, "order-infinity generator to eliminate");
    eliminate->add_option("--seed", seed, "seed for the demo words");
    eliminate->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* spectrum = app.add_subcommand("spectrum", "spectrum of the associated pair Laplacian");
    add_input_flags(spectrum, in);
    spectrum->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(curvature))
            return cmd_curvature(in, laplacian, radius, max_cosets, curvature_format, seed, out_path);
        if (app.got_subcommand(verify))
            return cmd_verify(suite, max_gens, max_cosets, words, seed, pairs, out_path);
        if (app.got_subcommand(ball_cmd)) return cmd_ball(in, radius, max_cosets, format, out_path);
        if (app.got_subcommand(eliminate)) return cmd_eliminate(in, r4, rinf, seed, out_path);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(in, out_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
