#include "thetaring/cli.hpp"

#include "thetaring/catalog.hpp"
#include "thetaring/decompose.hpp"
#include "thetaring/error.hpp"
#include "thetaring/io.hpp"
#include "thetaring/random.hpp"
#include "thetaring/theta.hpp"
#include "thetaring/toric.hpp"
#include "thetaring/witnesses.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace thetaring::cli {

namespace {

    using nlohmann::json;

    // `-` reads standard input.
    std::string slurp(const std::filesystem::path & path)
    {
        if (path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw GraphError("cannot open " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    struct Input {
        std::string text;
        Graph graph;
    };

    Input load(const std::string & path)
    {
        Input in;
        in.text = slurp(path);
        in.graph = parse_edge_list(std::string_view(in.text));
        return in;
    }

    json witness_json(const ForbiddenWitness & w)
    {
        json paths = json::array();
        for (const auto & p : w.theta.paths)
            paths.push_back(p.vertices);
        json chords = json::array();
        for (auto [u, v] : w.theta.chords)
            chords.push_back({u, v});
        return {{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}, {"terminals", {w.theta.x, w.theta.y}},
            {"paths", paths}, {"chords", chords}};
    }

    void print_witness(std::ostream & out, const ForbiddenWitness & w)
    {
        out << "witness: " << to_string(w.kind) << "\nvertices:";
        for (Vertex v : w.vertices)
            out << ' ' << v;
        out << "\nterminals: " << w.theta.x << ' ' << w.theta.y << '\n';
        for (const auto & p : w.theta.paths) {
            out << "path:";
            for (Vertex v : p.vertices)
                out << ' ' << v;
            out << '\n';
        }
    }

    json orientation_json(const OrientedGraph & d)
    {
        json arcs = json::array();
        for (const auto & a : d.arcs())
            arcs.push_back({a.tail, a.head});
        return arcs;
    }

    class Report {
    public:
        Report(std::string command, const std::vector<std::string> & args) : start_(std::chrono::steady_clock::now())
        {
            body_["command"] = std::move(command);
            body_["argv"] = args;
        }

        json & operator[](const char * key) { return body_[key]; }

        void emit(std::ostream & out)
        {
            auto elapsed = std::chrono::steady_clock::now() - start_;
            body_["timing_ms"] = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
            out << body_.dump(2) << '\n';
        }

    private:
        json body_;
        std::chrono::steady_clock::time_point start_;
    };

    json input_json(const std::string & path, const Input & in)
    {
        return {{"path", path}, {"digest", digest(in.text)}, {"n", in.graph.order()}, {"m", in.graph.size()}};
    }

    int cmd_recognize(const std::string & path, bool as_json, const std::vector<std::string> & args, std::ostream & out)
    {
        Report report("recognize", args);
        auto in = load(path);
        report["input"] = input_json(path, in);
        auto r = recognize_theta_ring(in.graph);
        if (as_json) {
            json res{{"theta_ring", r.theta_ring()}};
            if (r.tree)
                res["tree"] = to_json(*r.tree);
            else
                res["witness"] = witness_json(*r.witness);
            report["result"] = res;
            report.emit(out);
        } else if (r.tree) {
            out << "theta-ring: yes\nleaves: " << r.tree->leaf_count() << "\ntree: " << to_json(*r.tree).dump() << '\n';
        } else {
            out << "theta-ring: no\n";
            print_witness(out, *r.witness);
        }
        return r.theta_ring() ? ok : negative;
    }

    int cmd_forbidden(const std::string & path, bool as_json, const std::vector<std::string> & args, std::ostream & out)
    {
        Report report("forbidden", args);
        auto in = load(path);
        report["input"] = input_json(path, in);
        auto w = classify_forbidden(in.graph);
        if (as_json) {
            json res{{"present", w.has_value()}};
            if (w)
                res["witness"] = witness_json(*w);
            report["result"] = res;
            report.emit(out);
        } else if (w) {
            print_witness(out, *w);
        } else {
            out << "witness: none\n";
        }
        return w ? negative : ok;
    }

    int cmd_toric(const std::string & path, const std::string & orientation_path, std::optional<std::uint64_t> seed, bool as_json,
        const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
    {
        Report report("toric", args);
        auto in = load(path);
        report["input"] = input_json(path, in);
        OrientedGraph d;
        std::string source;
        if (!orientation_path.empty()) {
            auto text = slurp(orientation_path);
            d = parse_orientation(std::string_view(text), in.graph);
            source = "file";
            report["orientation_input"] = {{"path", orientation_path}, {"digest", digest(text)}};
        } else if (seed) {
            Rng rng(*seed);
            d = random_acyclic_orientation(rng, in.graph);
            source = "random_acyclic";
            report["seed"] = *seed;
        } else {
            d = OrientedGraph::from_mask(in.graph, 0);
            source = "low_to_high";
        }
        report["mode"] = {{"orientation_source", source}};

        json res{{"height", height(d)}, {"orientation", orientation_json(d)}};
        json gens = json::array();
        for (const auto & b : generating_set(d))
            gens.push_back(to_string(b));
        res["generators"] = gens;
        int code;
        if (has_oriented_cycle(d)) {
            res["mu"] = nullptr;
            res["is_ci"] = nullptr;
            res["error"] = "unsupported_orientation";
            code = unsupported_orientation;
        } else {
            int mu = minimal_generator_count(d);
            res["mu"] = mu;
            res["is_ci"] = mu == height(d);
            code = mu == height(d) ? ok : negative;
        }
        if (as_json) {
            report["result"] = res;
            report.emit(out);
        } else {
            out << "height: " << res["height"].get<int>() << '\n';
            if (code == unsupported_orientation) {
                err << "unsupported_orientation: orientation contains an oriented cycle\n";
            } else {
                out << "mu: " << res["mu"].get<int>() << "\nis_ci: " << (res["is_ci"].get<bool>() ? "true" : "false") << '\n';
            }
            out << "generators:\n";
            for (const auto & g : gens)
                out << "  " << g.get<std::string>() << '\n';
        }
        return code;
    }

    int cmd_cio(const std::string & path, const std::string & mode_name, int threads, bool as_json,
        const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
    {
        Report report("cio", args);
        auto in = load(path);
        report["input"] = input_json(path, in);
        CioMode mode = mode_name == "all_supported" ? CioMode::all_supported : CioMode::acyclic_only;
        report["mode"] = {{"orientations", mode_name}};
        auto r = cio_search(in.graph, mode, threads);
        for (const auto & w : r.warnings)
            err << "warning: " << w << '\n';
        if (as_json) {
            json res{{"witness_found", r.witness_found}, {"height", r.height}, {"examined", r.examined},
                {"skipped_cyclic", r.skipped_cyclic}, {"warnings", r.warnings}};
            if (r.witness_found) {
                res["index"] = r.index;
                res["mu"] = r.mu;
                res["orientation"] = orientation_json(*r.orientation);
            } else {
                res["status"] = "no_witness_found";
                res["evidence_only"] = true;
            }
            report["result"] = res;
            report.emit(out);
        } else if (r.witness_found) {
            out << "witness: orientation " << r.index << "\nmu: " << r.mu << "\nheight: " << r.height << '\n'
                << to_orientation_text(*r.orientation);
        } else {
            out << "no_witness_found\nexamined: " << r.examined << " acyclic orientations (oriented-cycle orientations skipped; "
                << "evidence, not proof)\n";
        }
        return r.witness_found ? negative : ok;
    }

    int cmd_gen(const std::string & family, const std::vector<std::string> & params, std::uint64_t seed, int pieces,
        bool bipartite, bool orientation, std::ostream & out, std::ostream & err)
    {
        std::vector<int> nums;
        if (family != "witness")
            for (const auto & p : params) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(p, &used);
                } catch (const std::exception &) {
                    used = 0;
                }
                if (used != p.size())
                    throw PreconditionError(PreconditionError::Reason::invalid_parameters, "parameter `" + p + "` is not an integer");
                nums.push_back(v);
            }
        auto need = [&](std::size_t count) {
            if (nums.size() != count)
                throw PreconditionError(PreconditionError::Reason::invalid_parameters,
                    family + " takes " + std::to_string(count) + " integer parameters");
        };
        if (family == "theta") {
            need(3);
            out << to_edge_list(make_theta(nums[0], nums[1], nums[2]));
        } else if (family == "prism") {
            need(3);
            out << to_edge_list(make_prism(nums[0], nums[1], nums[2]));
        } else if (family == "pyramid") {
            need(3);
            out << to_edge_list(make_pyramid(nums[0], nums[1], nums[2]));
        } else if (family == "wheel") {
            if (nums.empty())
                throw PreconditionError(PreconditionError::Reason::invalid_parameters, "wheel takes k and optional attachments");
            std::vector<int> att(nums.begin() + 1, nums.end());
            if (att.empty())
                for (int i = 0; i < nums[0]; ++i)
                    att.push_back(i);
            out << to_edge_list(make_theta_partial_wheel(nums[0], att));
        } else if (family == "cliquesum") {
            Rng rng(seed);
            err << "seed: " << seed << '\n';
            out << to_edge_list(random_theta_ring(rng, pieces));
        } else if (family == "chordal") {
            need(1);
            Rng rng(seed);
            err << "seed: " << seed << '\n';
            out << to_edge_list(random_chordal(rng, nums[0]));
        } else if (family == "catalog") {
            need(1);
            for (const auto & g : bipartite ? all_bipartite_graphs(nums[0]) : all_graphs(nums[0]))
                out << to_graph6(g) << '\n';
        } else if (family == "witness") {
            if (params.size() != 1)
                throw PreconditionError(PreconditionError::Reason::invalid_parameters, "witness takes a name");
            auto w = oriented_witness(params[0]);
            if (!w)
                throw PreconditionError(PreconditionError::Reason::invalid_parameters, "unknown witness " + params[0]);
            out << (orientation ? to_orientation_text(w->digraph) : to_edge_list(w->digraph.base()));
        } else {
            throw PreconditionError(PreconditionError::Reason::invalid_parameters, "unknown family " + family);
        }
        return ok;
    }

    int cmd_selftest(const SelftestOptions & opts, bool as_json, const std::vector<std::string> & args, std::ostream & out,
        std::ostream & err)
    {
        Report report("selftest", args);
        std::vector<std::string> problems;
        auto rows = run_selftest(opts, &problems);
        bool pass = problems.empty();
        if (as_json) {
            json table = json::array();
            for (const auto & r : rows)
                table.push_back({{"n", r.n}, {"graphs", r.graphs}, {"theta_ring", r.theta_ring}, {"forbidden", r.forbidden},
                    {"disagreements", r.disagreements}, {"cio_checked", r.cio_checked}, {"cio_disagreements", r.cio_disagreements}});
            report["mode"] = {{"max_n", opts.max_n}, {"cio_max_n", opts.cio_max_n}, {"catalog", opts.catalog ? opts.catalog->string() : ""}};
            report["result"] = {{"pass", pass}, {"rows", table}, {"problems", problems}};
            report.emit(out);
        } else {
            for (const auto & r : rows)
                out << "n=" << r.n << " graphs=" << r.graphs << " theta_ring=" << r.theta_ring << " forbidden=" << r.forbidden
                    << " disagreements=" << r.disagreements << " cio_checked=" << r.cio_checked
                    << " cio_disagreements=" << r.cio_disagreements << '\n';
            out << (pass ? "selftest: pass\n" : "selftest: FAIL\n");
        }
        for (const auto & p : problems)
            err << p << '\n';
        return pass ? ok : negative;
    }

} // namespace

std::vector<std::string> check_graph(const Graph & g, bool with_cio, bool * theta_ring)
{
    std::vector<std::string> issues;
    auto name = to_graph6(g);
    auto bf = is_theta_ring_bruteforce(g);
    auto cf = classify_forbidden(g);
    auto rec = recognize_theta_ring(g);
    if (bf.theta_ring != !cf.has_value() || bf.theta_ring != rec.theta_ring())
        issues.push_back(name + ": brute force, forbidden search and recognizer disagree");
    if (rec.tree && !verify_tree(*rec.tree, g))
        issues.push_back(name + ": decomposition tree does not rebuild the graph");
    if (cf) {
        if (cf->kind == WitnessKind::generic_chorded_theta)
            issues.push_back(name + ": minimum witness is not one of the four families");
        if (!is_simple_chorded_theta(cf->theta, g) || !transversal_triangles(cf->theta, g).empty())
            issues.push_back(name + ": witness is not a simple chorded-theta without transversal triangle");
    }
    if (with_cio && cio_search(g, CioMode::acyclic_only, 1).witness_found == bf.theta_ring)
        issues.push_back(name + ": orientation search disagrees with theta-ring status");
    if (theta_ring)
        *theta_ring = bf.theta_ring;
    return issues;
}

std::vector<SelftestRow> run_selftest(const SelftestOptions & options, std::vector<std::string> * problems)
{
    std::vector<std::vector<Graph>> by_n(std::max(0, options.max_n + 1));
    if (options.catalog) {
        for (auto & g : read_graph6_catalog(*options.catalog))
            if (g.order() <= options.max_n)
                by_n[g.order()].push_back(std::move(g));
    } else {
        for (int n = 0; n <= options.max_n; ++n)
            by_n[n] = all_graphs(n);
    }

    std::vector<SelftestRow> rows;
    std::mutex lock;
    for (int n = 0; n <= options.max_n; ++n) {
        const auto & graphs = by_n[n];
        SelftestRow row;
        row.n = n;
        row.graphs = static_cast<int>(graphs.size());
        bool with_cio = n <= options.cio_max_n;
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (std::size_t i = next++; i < graphs.size(); i = next++) {
                bool ring = false;
                auto issues = check_graph(graphs[i], with_cio, &ring);
                std::lock_guard guard(lock);
                (ring ? row.theta_ring : row.forbidden)++;
                auto is_cio = [](const std::string & s) { return s.find("orientation search") != std::string::npos; };
                bool cio_issue = std::any_of(issues.begin(), issues.end(), is_cio);
                bool other_issue = !std::all_of(issues.begin(), issues.end(), is_cio);
                row.disagreements += other_issue;
                row.cio_checked += with_cio;
                row.cio_disagreements += cio_issue;
                if (problems)
                    problems->insert(problems->end(), issues.begin(), issues.end());
            }
        };
        int workers = std::max(1, std::min(worker_count(options.threads), row.graphs));
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < workers; ++i)
                pool.emplace_back(work);
            for (auto & t : pool)
                t.join();
        }
        rows.push_back(row);
    }
    if (problems)
        std::sort(problems->begin(), problems->end());
    return rows;
}

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Theta-ring graph recognition and toric ideal checks", "theta_ring"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a JSON report");

    std::string path, orientation_path, mode = "acyclic_only", family;
    std::vector<std::string> params;
    std::optional<std::uint64_t> random_seed;
    std::uint64_t seed = 1;
    int threads = 0, pieces = 4;
    bool bipartite = false, orientation = false;
    SelftestOptions st;
    std::string catalog;

    auto * recognize = app.add_subcommand("recognize", "Decompose into clique-sums or report a forbidden witness");
    recognize->add_option("file", path, "Edge-list file")->required();
    recognize->add_flag("--json", as_json, "Print a JSON report");

    auto * forbidden = app.add_subcommand("forbidden", "Minimum chorded-theta without transversal triangle");
    forbidden->add_option("file", path, "Edge-list file")->required();
    forbidden->add_flag("--json", as_json, "Print a JSON report");

    auto * toric = app.add_subcommand("toric", "Height, generators and minimal generator count of one orientation");
    toric->add_option("file", path, "Edge-list file")->required();
    auto * orient_opt = toric->add_option("--orientation", orientation_path, "Orientation file");
    toric->add_option("--random-acyclic", random_seed, "Use a random acyclic orientation with this seed")->excludes(orient_opt);
    toric->add_flag("--json", as_json, "Print a JSON report");

    auto * cio = app.add_subcommand("cio", "Search orientations for a non complete intersection");
    cio->add_option("file", path, "Edge-list file")->required();
    cio->add_option("--mode", mode, "acyclic_only or all_supported")->check(CLI::IsMember({"acyclic_only", "all_supported"}));
    cio->add_option("--threads", threads, "Worker threads (default THETA_RING_THREADS or all cores)")->check(CLI::NonNegativeNumber);
    cio->add_flag("--json", as_json, "Print a JSON report");

    auto * gen = app.add_subcommand("gen", "Print a generated graph");
    gen->add_option("family", family, "theta|prism|pyramid|wheel|cliquesum|chordal|catalog|witness")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--pieces", pieces, "Number of pieces for cliquesum")->check(CLI::PositiveNumber);
    gen->add_flag("--bipartite", bipartite, "catalog: bipartite graphs only");
    gen->add_flag("--orientation", orientation, "witness: print the orientation instead of the graph");

    auto * selftest = app.add_subcommand("selftest", "Cross-check all characterizations on small graphs");
    selftest->add_option("--max-n", st.max_n, "Largest vertex count")->check(CLI::Range(0, 9));
    selftest->add_option("--cio-max-n", st.cio_max_n, "Largest vertex count for the orientation check")->check(CLI::Range(0, 7));
    selftest->add_option("--catalog", catalog, "graph6 catalog instead of built-in enumeration");
    selftest->add_option("--threads", st.threads, "Worker threads")->check(CLI::NonNegativeNumber);
    selftest->add_flag("--json", as_json, "Print a JSON report");

    std::vector<std::string> argv_store{"theta_ring"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto & a : argv_store)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (recognize->parsed())
            return cmd_recognize(path, as_json, args, out);
        if (forbidden->parsed())
            return cmd_forbidden(path, as_json, args, out);
        if (toric->parsed())
            return cmd_toric(path, orientation_path, random_seed, as_json, args, out, err);
        if (cio->parsed())
            return cmd_cio(path, mode, threads, as_json, args, out, err);
        if (gen->parsed())
            return cmd_gen(family, params, seed, pieces, bipartite, orientation, out, err);
        if (selftest->parsed()) {
            if (!catalog.empty())
                st.catalog = catalog;
            st.cio_max_n = std::min(st.cio_max_n, st.max_n);
            return cmd_selftest(st, as_json, args, out, err);
        }
    } catch (const UnsupportedOrientation & e) {
        err << e.what() << '\n';
        return unsupported_orientation;
    } catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return input_error;
    } catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception & e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return input_error;
}

} // namespace thetaring::cli
