#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polsyz/analyze.hpp"
#include "polsyz/families.hpp"

namespace fs = std::filesystem;
using namespace polsyz;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> numbered_vars(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

int run_analyze(const std::string& path, bool text, const std::string& skip, int timeout) {
    AnalyzeOptions opt;
    opt.stage_timeout_seconds = timeout;
    std::istringstream sk(skip);
    std::string item;
    while (std::getline(sk, item, ',')) {
        if (item == "ejk")
            opt.skip_ejk = true;
        else if (item == "reflexivity")
            opt.skip_reflexivity = true;
        else if (item == "symbolic")
            opt.skip_symbolic = true;
        else if (item == "omega")
            opt.skip_omega = true;
        else if (!item.empty()) {
            std::cerr << "unknown check to skip: " << item << "\n";
            return 1;
        }
    }
    InputDoc doc;
    try {
        doc = parse_input(slurp(path));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    try {
        AnalysisReport r = analyze(doc, opt);
        std::cout << (text ? report_text(r) : report_json(r));
        return r.failed ? 2 : 0;
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
}

int write_family(const std::string& kind, int n, int m, int d, bool gn,
                 const std::string& graph_path, const std::string& out_path) {
    std::vector<Poly> forms;
    std::vector<std::string> vars;
    std::ostringstream header;
    try {
        if (kind == "veronese2") {
            forms = veronese2(n);
            vars = numbered_vars("x", n);
            header << "# 2-Veronese of k[x1.." << n << "]";
        } else if (kind == "edge-algebra") {
            Graph g = parse_graph(slurp(graph_path));
            forms = edge_algebra(g);
            vars = numbered_vars("x", g.nverts);
            header << "# edge algebra of " << graph_path << " (" << g.edges.size()
                   << " edges)";
        } else if (kind == "generic-minors") {
            forms = generic_minors(m);
            for (int row = 1; row <= 2; ++row)
                for (int col = 1; col <= m; ++col)
                    vars.push_back("x" + std::to_string(row) + std::to_string(col));
            header << "# 2x2 minors of the generic 2x" << m << " matrix";
        } else if (kind == "catalecticant") {
            forms = catalecticant(m, d);
            vars = numbered_vars("x", m + d);
            header << "# minors of the catalecticant X(" << m << "," << d << ")";
            if (gn) {
                forms = gordan_noether(forms);
                vars = numbered_vars("x", forms[0].nvars());
                header << ", Gordan-Noether construction on top";
            }
        } else {
            std::cerr << "unknown family kind: " << kind << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "family error: " << e.what() << "\n";
        return 1;
    }
    InputDoc doc;
    doc.vars = vars;
    doc.forms = forms;
    std::ostringstream os;
    os << header.str() << "\n" << render_input(doc);
    if (out_path == "-") {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << os.str();
    }
    return 0;
}

int run_corpus(const std::string& dir) {
    nlohmann::json expected;
    try {
        expected = nlohmann::json::parse(slurp(dir + "/expected.json"));
    } catch (const std::exception& e) {
        std::cerr << "corpus error: " << e.what() << "\n";
        return 1;
    }
    int failures = 0;
    for (auto& [file, want] : expected.items()) {
        std::string path = dir + "/" + file;
        InputDoc doc;
        nlohmann::json got;
        std::string error;
        // keys starting with '_' are per-member options, not report paths:
        // "_skip" (comma list as for analyze --skip), "_timeout" (seconds)
        AnalyzeOptions opt;
        if (want.contains("_skip")) {
            std::istringstream sk(want["_skip"].get<std::string>());
            std::string item;
            while (std::getline(sk, item, ',')) {
                if (item == "ejk") opt.skip_ejk = true;
                if (item == "reflexivity") opt.skip_reflexivity = true;
                if (item == "symbolic") opt.skip_symbolic = true;
                if (item == "omega") opt.skip_omega = true;
            }
        }
        if (want.contains("_timeout")) opt.stage_timeout_seconds = want["_timeout"].get<int>();
        try {
            doc = parse_input(slurp(path));
            AnalysisReport r = analyze(doc, opt);
            if (r.failed) error = r.failure;
            got = nlohmann::json::parse(report_json(r));
        } catch (const std::exception& e) {
            error = e.what();
        }
        std::vector<std::string> bad;
        if (error.empty()) {
            for (auto& [ptr, val] : want.items()) {
                if (!ptr.empty() && ptr[0] == '_') continue;
                auto actual = got.at(nlohmann::json::json_pointer("/" + ptr));
                if (actual != val)
                    bad.push_back(ptr + ": got " + actual.dump() + ", want " + val.dump());
            }
        }
        if (!error.empty()) {
            std::cout << "FAIL " << file << " (" << error << ")\n";
            ++failures;
        } else if (!bad.empty()) {
            std::cout << "FAIL " << file << "\n";
            for (const auto& b : bad) std::cout << "     " << b << "\n";
            ++failures;
        } else {
            std::cout << "PASS " << file << "\n";
        }
    }
    if (failures) std::cout << failures << " corpus file(s) failed\n";
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarizability of embeddings by forms: P vs z over Q"};
    app.require_subcommand(1);

    auto* an = app.add_subcommand("analyze", "run the full pipeline on an input file");
    std::string in_path, skip;
    bool text = false, json_out = false;
    int timeout = 300;
    an->add_option("file", in_path, "input file (vars: header + one form per line)")
        ->required();
    an->add_flag("--text", text, "human-readable output");
    an->add_flag("--json", json_out, "JSON output (default)");
    an->add_option("--skip", skip, "comma list of checks to skip: ejk,reflexivity,symbolic,omega");
    an->add_option("--timeout", timeout, "per-stage timeout in seconds")->default_val(300);

    auto* fam = app.add_subcommand("family", "write a canonical input file for a family");
    std::string kind, graph_path, out_path = "-";
    int n = 0, m = 0, d = 1;
    bool gn = false;
    fam->add_option("kind", kind,
                    "one of: veronese2, edge-algebra, generic-minors, catalecticant")
        ->required();
    fam->add_option("--n", n, "veronese2: number of variables");
    fam->add_option("--m", m, "matrix columns");
    fam->add_option("--d", d, "catalecticant shift");
    fam->add_flag("--gordan-noether", gn, "apply the Gordan-Noether construction");
    fam->add_option("--graph", graph_path, "edge list file for edge-algebra");
    fam->add_option("-o,--output", out_path, "output path ('-' for stdout)");

    auto* co = app.add_subcommand("corpus", "corpus regression");
    std::string verb, corpus_dir = "corpus";
    co->add_option("verb", verb, "'run'")->required();
    co->add_option("--dir", corpus_dir, "corpus directory");

    CLI11_PARSE(app, argc, argv);

    if (an->parsed()) return run_analyze(in_path, text && !json_out, skip, timeout);
    if (fam->parsed()) return write_family(kind, n, m, d, gn, graph_path, out_path);
    if (co->parsed()) {
        if (verb != "run") {
            std::cerr << "unknown corpus verb: " << verb << "\n";
            return 1;
        }
        return run_corpus(corpus_dir);
    }
    return 1;
}
