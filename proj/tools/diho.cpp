// diho: compute directed homology algebras of finite precubical sets.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "diho/builders.hpp"
#include "diho/category.hpp"
#include "diho/dihomology.hpp"
#include "diho/simplicial.hpp"

namespace {

using namespace diho;
using dihomology::DimensionMatrix;
using dihomology::QuotientMode;
using precubical::PrecubicalSet;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitTruncation = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PrecubicalSet load_complex(const std::string& path) {
    return precubical::parse_json(read_file(path));
}

struct Options {
    std::string mode = "ideal";
    std::string format = "pretty";
    std::optional<std::size_t> max_len;
    std::size_t cap = 2;
    unsigned jobs = 1;
    std::string restrict_list;
};

unsigned env_jobs() {
    const char* v = std::getenv("DIHO_JOBS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void print_matrix(const DimensionMatrix& m, const std::string& format) {
    if (format == "json")
        std::cout << m.to_json();
    else
        std::cout << m.pretty();
}

precubical::PathWord parse_path_spec(const PrecubicalSet& c, const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return {spec.substr(1), {}};
    precubical::PathWord p;
    p.edges = split_commas(spec);
    if (p.edges.size() == 1 && spec.find(',') == std::string::npos) {
        // allow dot-joined edge lists as printed in path listings
        p.edges.clear();
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, '.'))
            if (!item.empty()) p.edges.push_back(item);
    }
    if (p.edges.empty()) throw ValidationError("empty path spec: " + spec);
    p.start = c.edge_start(p.edges.front());
    return p;
}

int run_validate(const std::string& file) {
    PrecubicalSet c = load_complex(file);
    auto violations = precubical::validate(c);
    if (violations.empty()) {
        std::cout << "ok: " << c.cells(0).size() << " vertices, " << c.cells(1).size()
                  << " edges, " << c.cells(2).size() << " two-cells\n";
        return kExitOk;
    }
    for (const auto& v : violations) std::cerr << "[" << v.cell << "] " << v.message << "\n";
    return kExitValidation;
}

int run_paths(const std::string& file, const std::string& from, const std::string& to,
              const Options& opt) {
    PrecubicalSet c = load_complex(file);
    precubical::require_valid(c);
    std::size_t cap = opt.max_len ? *opt.max_len : c.cells(1).size();
    if (!opt.max_len && !precubical::is_acyclic(c))
        throw ValidationError("cyclic complex: pass --max-len");
    auto paths = precubical::enumerate_paths(c, from, to, cap);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["from"] = from;
        doc["to"] = to;
        doc["max_len"] = cap;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : paths) arr.push_back(p.edges);
        doc["paths"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& p : paths) std::cout << tracealg::path_word_id(p) << "\n";
    }
    return kExitOk;
}

int run_algebra(const std::string& file, const Options& opt) {
    PrecubicalSet c = load_complex(file);
    auto pa = tracealg::path_algebra(c, opt.max_len);
    print_matrix(dihomology::path_matrix(pa), opt.format);
    return kExitOk;
}

int run_ha0(const std::string& file, const Options& opt) {
    PrecubicalSet c = load_complex(file);
    print_matrix(dihomology::ha0_matrix(c), opt.format);
    return kExitOk;
}

int run_ha1(const std::string& file, const Options& opt) {
    PrecubicalSet c = load_complex(file);
    auto h = dihomology::ha1(c, dihomology::parse_mode(opt.mode), opt.max_len, opt.jobs);
    DimensionMatrix m = opt.restrict_list.empty()
                            ? h.dimension_matrix()
                            : dihomology::restricted_matrix(h, split_commas(opt.restrict_list));
    if (h.truncated())
        std::cout << "# length-filtered at cap " << h.max_len()
                  << " (cyclic complex; no stabilization claim)\n";
    print_matrix(m, opt.format);
    return kExitOk;
}

int run_classes(const std::string& file, const std::string& p, const std::string& q,
                const std::string& op, const Options& opt) {
    PrecubicalSet c = load_complex(file);
    auto h = dihomology::ha1(c, dihomology::parse_mode(opt.mode), opt.max_len, opt.jobs);
    auto pw = parse_path_spec(c, p);
    auto qw = parse_path_spec(c, q);
    if (op == "equal") {
        std::cout << (h.class_equal(pw, qw) ? "true" : "false") << "\n";
    } else if (op == "mul") {
        auto prod = h.multiply_classes(h.base().element(pw), h.base().element(qw));
        std::cout << prod.to_string() << "\n";
    } else {
        throw ValidationError("unknown --op: " + op + " (equal|mul)");
    }
    return kExitOk;
}

int run_les(const std::string& file1, const std::string& file2, const Options& opt) {
    PrecubicalSet c1 = load_complex(file1);
    PrecubicalSet c2 = load_complex(file2);
    auto rep = simplicial::disjoint_union_les_report(c1, c2, dihomology::parse_mode(opt.mode),
                                                     opt.cap, opt.max_len);
    if (opt.format == "json") {
        std::cout << rep.to_json();
    } else {
        std::cout << "HA1 of the union:\n" << rep.combined.pretty();
        std::cout << "block sum matches: " << (rep.block_sum_ok ? "yes" : "no") << "\n";
        for (const auto& pos : rep.degree1)
            std::cout << "exact " << pos.at << ": " << (pos.exact ? "yes" : "no")
                      << (pos.detail.empty() ? "" : " (" + pos.detail + ")") << "\n";
        std::cout << "fold surjective (level 0/1): "
                  << (rep.fold_surjective_level0 ? "yes" : "no") << "/"
                  << (rep.fold_surjective_level1 ? "yes" : "no") << "\n";
    }
    return rep.all_ok() ? kExitOk : kExitValidation;
}

// --- examples: rebuild every worked example, self-checking embedded values.

DimensionMatrix ranks_matrix(const std::vector<std::string>& order,
                             const std::vector<std::vector<std::size_t>>& ranks) {
    DimensionMatrix m;
    m.order = order;
    m.entries.assign(order.size(), std::vector<DimensionMatrix::Entry>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) m.entries[i][j].rank = ranks[i][j];
    return m;
}

const std::vector<std::string> kNine = {"1", "2", "3", "4", "5", "6", "7", "8", "9"};

DimensionMatrix golden_path_9x9() {
    return ranks_matrix(kNine, {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                {1, 1, 0, 0, 0, 0, 0, 0, 0},
                                {1, 1, 1, 0, 0, 0, 0, 0, 0},
                                {1, 0, 0, 1, 0, 0, 0, 0, 0},
                                {2, 1, 0, 1, 1, 0, 0, 0, 0},
                                {3, 2, 1, 1, 1, 1, 0, 0, 0},
                                {1, 0, 0, 1, 0, 0, 1, 0, 0},
                                {3, 1, 0, 2, 1, 0, 1, 1, 0},
                                {6, 3, 1, 3, 2, 1, 1, 1, 1}});
}

DimensionMatrix golden_local_left() {
    auto m = golden_path_9x9();
    m.entries[8][4].rank = 1; // (9,5)
    m.entries[4][0].rank = 1; // (5,1)
    return m;
}

DimensionMatrix golden_local_right() {
    auto m = golden_path_9x9();
    m.entries[7][3].rank = 1; // (8,4)
    m.entries[5][1].rank = 1; // (6,2)
    return m;
}

DimensionMatrix golden_ideal_left() {
    auto m = golden_local_left();
    m.entries[8][0].rank = 3; // (9,1)
    m.entries[8][1].rank = 2; // (9,2)
    m.entries[8][3].rank = 2; // (9,4)
    m.entries[5][0].rank = 2; // (6,1)
    m.entries[7][0].rank = 2; // (8,1)
    return m;
}

DimensionMatrix golden_ideal_right() {
    auto m = golden_local_right();
    m.entries[8][0].rank = 4; // (9,1)
    m.entries[8][1].rank = 2; // (9,2)
    m.entries[8][3].rank = 2; // (9,4)
    m.entries[5][0].rank = 2; // (6,1)
    m.entries[7][0].rank = 2; // (8,1)
    return m;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw Error("self-check failed: " + what);
}

int example_square(bool filled, const Options& opt) {
    PrecubicalSet c = filled ? precubical::filled_square() : precubical::empty_square();
    if (opt.format != "json") std::cout << "path algebra:\n";
    auto pa = tracealg::path_algebra(c);
    auto pm = dihomology::path_matrix(pa);
    print_matrix(pm, opt.format);
    check(pm == ranks_matrix({"1", "2", "3", "4"},
                             {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {2, 1, 1, 1}}),
          "path matrix");
    auto h = dihomology::ha1(c, dihomology::parse_mode(opt.mode), {}, opt.jobs);
    if (opt.format != "json") std::cout << "HA1 (" << opt.mode << " mode):\n";
    auto m = h.dimension_matrix();
    print_matrix(m, opt.format);
    auto expected = filled ? ranks_matrix({"1", "2", "3", "4"}, {{1, 0, 0, 0},
                                                                 {1, 1, 0, 0},
                                                                 {1, 0, 1, 0},
                                                                 {1, 1, 1, 1}})
                           : pm;
    check(m == expected, filled ? "filled-square HA1" : "empty-square HA1");
    std::cout << "self-check: ok\n";
    return kExitOk;
}

int example_two_holes(bool left_side, const Options& opt) {
    PrecubicalSet c = left_side ? precubical::two_holes_left() : precubical::two_holes_right();
    auto pa = tracealg::path_algebra(c);
    auto pm = dihomology::path_matrix(pa);
    if (opt.format != "json") std::cout << "path algebra:\n";
    print_matrix(pm, opt.format);
    check(pm == golden_path_9x9(), "9x9 path matrix");
    QuotientMode mode = dihomology::parse_mode(opt.mode);
    auto h = dihomology::ha1(c, mode, {}, opt.jobs);
    auto m = h.dimension_matrix();
    if (opt.format != "json") std::cout << "HA1 (" << opt.mode << " mode):\n";
    print_matrix(m, opt.format);
    DimensionMatrix expected;
    if (mode == QuotientMode::ideal)
        expected = left_side ? golden_ideal_left() : golden_ideal_right();
    else if (mode == QuotientMode::local)
        expected = left_side ? golden_local_left() : golden_local_right();
    if (!expected.order.empty()) check(m == expected, "two-holes HA1");
    if (mode == QuotientMode::local) {
        auto ideal = dihomology::ha1(c, QuotientMode::ideal, {}, opt.jobs).dimension_matrix();
        std::cout << "note: the two-sided closure reduces further at padded grades:";
        for (std::size_t i = 0; i < m.order.size(); ++i)
            for (std::size_t j = 0; j < m.order.size(); ++j)
                if (ideal.entries[i][j].rank != m.entries[i][j].rank)
                    std::cout << " (" << m.order[i] << "," << m.order[j] << ") "
                              << m.entries[i][j].rank << "->" << ideal.entries[i][j].rank;
        std::cout << "\n";
    }
    std::cout << "self-check: ok\n";
    return kExitOk;
}

int example_loop(const Options& opt) {
    std::size_t cap = opt.max_len.value_or(5);
    PrecubicalSet c = precubical::loop_graph();
    auto h = dihomology::ha1(c, dihomology::parse_mode(opt.mode), cap, opt.jobs);
    std::cout << "# length-filtered at cap " << cap << "\n";
    auto m = h.dimension_matrix();
    print_matrix(m, opt.format);
    check(m.entries[0][0].rank == cap + 1, "loop dimension == cap+1");
    if (cap >= 3) {
        auto t = [&](std::size_t k) {
            precubical::PathWord p{"u", std::vector<precubical::CellId>(k, "t")};
            return h.base().element(p);
        };
        check(h.multiply_classes(t(1), t(2)) == t(3), "class multiplication adds lengths");
    }
    std::cout << "self-check: ok\n";
    return kExitOk;
}

int example_kronecker(const Options& opt) {
    using exactalg::CategoryPresentation;
    CategoryPresentation cat = exactalg::free_category(
        {"1", "2"}, {{"alpha", "1", "2"}, {"beta", "1", "2"}});
    auto alg = exactalg::convolution_algebra(cat);
    DimensionMatrix m;
    m.order = {"1", "2"};
    m.entries.assign(2, std::vector<DimensionMatrix::Entry>(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m.entries[i][j].rank = alg->dim({m.order[i], m.order[j]});
    print_matrix(m, opt.format);
    check(m == ranks_matrix({"1", "2"}, {{1, 2}, {0, 1}}), "Kronecker dimension matrix");
    // One multiplication in matrix form: x = a e1 + b alpha + c beta + d e2.
    auto elem = [&](int a, int b, int c, int d) {
        exactalg::AlgebraElement e;
        e.add_term("id(1)", a);
        e.add_term("alpha", b);
        e.add_term("beta", c);
        e.add_term("id(2)", d);
        return e;
    };
    auto prod = alg->multiply(elem(2, 3, 5, 7), elem(11, 13, 17, 19));
    check(prod == elem(2 * 11, 2 * 13 + 3 * 19, 2 * 17 + 5 * 19, 7 * 19),
          "Kronecker product formula");
    std::cout << "self-check: ok\n";
    return kExitOk;
}

int example_hollow_cube(const Options& opt) {
    PrecubicalSet c = precubical::hollow_cube();
    auto pa = tracealg::path_algebra(c);
    check(pa.algebra->dim({"8", "1"}) == 6, "six paths 8->1");
    auto h = dihomology::ha1(c, dihomology::parse_mode(opt.mode), {}, opt.jobs);
    auto m = h.dimension_matrix();
    print_matrix(m, opt.format);
    check(m.at("8", "1").rank == 1, "all six boundary paths are homologous");
    std::cout << "self-check: ok\n";
    return kExitOk;
}

int example_half_circles(const Options& opt) {
    PrecubicalSet circle = precubical::two_half_circles();
    std::size_t cap = opt.max_len.value_or(4);
    auto ambient = simplicial::trace_complex(circle, cap);
    auto cu = precubical::subcomplex(circle, {"1", "2", "u"});
    auto cv = precubical::subcomplex(circle, {"1", "2", "v"});
    auto tu = simplicial::trace_complex(cu, {}, {}, "u:");
    auto tv = simplicial::trace_complex(cv, {}, {}, "v:");
    auto fold = simplicial::fold_map_h(tu, tv, ambient, cap);
    auto ker = exactalg::kernel(fold.h[0]);
    std::size_t kernel_dim = 0;
    for (const auto& [g, basis] : ker) kernel_dim += basis.rank();
    std::cout << "degree-1 coproduct dimension: "
              << fold.coproduct.complex.levels[0]->total_dim() << "\n";
    std::cout << "kernel of h dimension: " << kernel_dim << "\n";
    // Mismatched glue words lie in the kernel; matched ones do not.
    check(!fold.h[0].image("u:u|v:v").is_zero(), "u then v survives");
    check(fold.h[0].image("u:u|v:e(1)").is_zero(), "mismatched junction dies");
    std::size_t surj = 0;
    auto span = exactalg::image_span(fold.h[0]);
    for (const auto& g : ambient.paths.algebra->grades())
        surj += span.count(g) ? span.at(g).rank() : 0;
    check(surj == ambient.paths.algebra->total_dim(), "h surjective in degree 1");
    std::cout << "self-check: ok\n";
    return kExitOk;
}

int run_examples(const std::string& name, bool emit_complex, const Options& opt) {
    if (emit_complex) {
        PrecubicalSet c = [&] {
            if (name == "empty_square") return precubical::empty_square();
            if (name == "filled_square") return precubical::filled_square();
            if (name == "two_holes_left") return precubical::two_holes_left();
            if (name == "two_holes_right") return precubical::two_holes_right();
            if (name == "loop") return precubical::loop_graph();
            if (name == "hollow_cube") return precubical::hollow_cube();
            if (name == "half_circles") return precubical::two_half_circles();
            throw ValidationError("no complex to emit for example: " + name);
        }();
        std::cout << precubical::serialize_json(c);
        return kExitOk;
    }
    if (name == "empty_square") return example_square(false, opt);
    if (name == "filled_square") return example_square(true, opt);
    if (name == "two_holes_left") return example_two_holes(true, opt);
    if (name == "two_holes_right") return example_two_holes(false, opt);
    if (name == "loop") return example_loop(opt);
    if (name == "kronecker") return example_kronecker(opt);
    if (name == "hollow_cube") return example_hollow_cube(opt);
    if (name == "half_circles") return example_half_circles(opt);
    if (name == "all") {
        for (const char* n : {"empty_square", "filled_square", "two_holes_left",
                              "two_holes_right", "loop", "kronecker", "hollow_cube",
                              "half_circles"}) {
            std::cout << "== " << n << "\n";
            int rc = run_examples(n, false, opt);
            if (rc != kExitOk) return rc;
        }
        return kExitOk;
    }
    throw ValidationError("unknown example: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed homology algebras of finite precubical sets"};
    app.require_subcommand(1);

    Options opt;
    opt.jobs = env_jobs();
    std::string file, file2, from, to, p, q, op = "equal", name = "all";
    bool emit_complex = false;

    auto add_common = [&](CLI::App* cmd, bool with_mode = true) {
        cmd->add_option("--format", opt.format, "pretty or json")
            ->check(CLI::IsMember({"pretty", "json"}));
        cmd->add_option("--max-len", opt.max_len, "path length cap (mandatory for cyclic)");
        cmd->add_option("--jobs", opt.jobs, "per-grade parallelism");
        if (with_mode)
            cmd->add_option("--mode", opt.mode, "quotient mode")
                ->check(CLI::IsMember({"ideal", "image", "local"}));
    };

    auto* validate = app.add_subcommand("validate", "check the precubical identities");
    validate->add_option("file", file)->required();

    auto* paths = app.add_subcommand("paths", "enumerate edge paths");
    paths->add_option("file", file)->required();
    paths->add_option("--from", from)->required();
    paths->add_option("--to", to)->required();
    add_common(paths, false);

    auto* algebra = app.add_subcommand("algebra", "path-algebra dimension matrix");
    algebra->add_option("file", file)->required();
    add_common(algebra, false);

    auto* ha0 = app.add_subcommand("ha0", "reachability algebra");
    ha0->add_option("file", file)->required();
    add_common(ha0, false);

    auto* ha1 = app.add_subcommand("ha1", "first directed homology algebra");
    ha1->add_option("file", file)->required();
    ha1->add_option("--restrict", opt.restrict_list, "comma-separated vertex subset");
    add_common(ha1);

    auto* classes = app.add_subcommand("classes", "homology class arithmetic");
    classes->add_option("file", file)->required();
    classes->add_option("--p", p, "path: edges joined with '.', or @v for a constant")
        ->required();
    classes->add_option("--q", q)->required();
    classes->add_option("--op", op, "equal or mul")->check(CLI::IsMember({"equal", "mul"}));
    add_common(classes);

    auto* les = app.add_subcommand("les", "disjoint-union long-exact-sequence report");
    les->add_option("file1", file)->required();
    les->add_option("file2", file2)->required();
    les->add_option("--cap", opt.cap, "coproduct word cap");
    add_common(les);

    auto* examples = app.add_subcommand("examples", "run the built-in worked examples");
    examples->add_option("--name", name,
                         "empty_square|filled_square|two_holes_left|two_holes_right|loop|"
                         "kronecker|hollow_cube|half_circles|all");
    examples->add_flag("--emit-complex", emit_complex, "print the complex JSON and exit");
    examples->add_option("--cap", opt.cap, "coproduct word cap");
    add_common(examples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadFlags;
    }

    try {
        if (*validate) return run_validate(file);
        if (*paths) return run_paths(file, from, to, opt);
        if (*algebra) return run_algebra(file, opt);
        if (*ha0) return run_ha0(file, opt);
        if (*ha1) return run_ha1(file, opt);
        if (*classes) return run_classes(file, p, q, op, opt);
        if (*les) return run_les(file, file2, opt);
        if (*examples) return run_examples(name, emit_complex, opt);
    } catch (const TruncationError& e) {
        std::cerr << "truncation overflow: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitBadFlags;
}
