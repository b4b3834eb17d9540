#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "finecurves/catalog.hpp"
#include "finecurves/errors.hpp"
#include "finecurves/extend.hpp"
#include "finecurves/graph.hpp"
#include "finecurves/jsonio.hpp"
#include "finecurves/obstructions.hpp"
#include "finecurves/realize.hpp"
#include "finecurves/surgeries.hpp"
#include "finecurves/svg.hpp"

using namespace finecurves;

namespace {

int worker_count() {
    const char* env = std::getenv("FINECURVES_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    if (w < 1) return 1;
    return std::min(w, 64);
}

// Runs fn(i) for i in [0, jobs) across the configured workers.
void parallel_for(int jobs, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), std::max(jobs, 1));
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::string pair_summary(const PairData& pd) {
    if (pd.infinite) return "infinite overlap";
    std::string s = std::to_string(pd.points) + " point" + (pd.points == 1 ? "" : "s");
    if (pd.points > 0 && !pd.all_crossing) s += " (tangential)";
    return s;
}

int report_check(const CheckReport& rep, const std::string& name) {
    if (rep.ok) {
        std::cout << name << ": ok\n";
        return 0;
    }
    std::cout << name << ": mismatch\n";
    for (const Mismatch& mm : rep.mismatches) {
        if (mm.a == mm.b) {
            std::cout << "  curve " << mm.a << ": " << mm.note << "\n";
        } else {
            std::cout << "  curves " << mm.a << "," << mm.b << ": expected "
                      << (mm.expected_adjacent ? "adjacent" : "non-adjacent") << ", got "
                      << pair_summary(mm.got)
                      << (mm.note.empty() ? "" : " (" + mm.note + ")") << "\n";
        }
    }
    return 1;
}

int print_obstruction(const ObstructionVerdict& v) {
    if (v.obstruction) {
        std::cout << "Obstruction\n";
        for (const std::string& line : v.witness) std::cout << "  " << line << "\n";
        return 1;
    }
    std::cout << "NoObstruction\n";
    if (v.removed_vertex >= 0)
        std::cout << "  removed dominating vertex " << v.removed_vertex << "\n";
    return 0;
}

int cmd_realize(const std::string& g6, const std::string& surface,
                const std::string& semantics, const std::string& out,
                const std::string& svg) {
    const SimpleGraph g = parse_graph6(g6);
    const AdjacencySpec sem = parse_semantics(semantics);
    Certificate cert;
    if (surface == "torus") {
        if (sem.kind != Semantics::Fine)
            throw UnsupportedSemantics("torus realization implements fine semantics only");
        cert = realize_fine_torus(g);
    } else if (surface == "annulus") {
        cert = realize_annulus(g, sem);
    } else {
        throw InvalidSpec("unknown surface: " + surface);
    }
    const CheckReport rep = check_certificate(cert);
    CertificateFile file{cert, rep.ok ? "ok" : "mismatch"};
    if (!out.empty()) {
        save_certificate(file, out);
        std::cout << "wrote " << out << "\n";
    } else {
        std::cout << certificate_to_text(file);
    }
    if (!svg.empty()) {
        render_svg_file(cert.system, svg);
        std::cout << "wrote " << svg << "\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& paths) {
    std::vector<CheckReport> reports(paths.size());
    std::vector<std::string> errors(paths.size());
    parallel_for(static_cast<int>(paths.size()), [&](int i) {
        try {
            const CertificateFile file = load_certificate(paths[static_cast<size_t>(i)]);
            reports[static_cast<size_t>(i)] = check_certificate(file.cert);
        } catch (const Error& e) {
            errors[static_cast<size_t>(i)] = e.what();
        }
    });
    int worst = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!errors[i].empty()) {
            std::cout << paths[i] << ": error: " << errors[i] << "\n";
            worst = 2;
            continue;
        }
        worst = std::max(worst, report_check(reports[i], paths[i]));
    }
    return worst;
}

int cmd_catalog(int n, const std::string& dir) {
    const auto classes = isomorphism_classes(n);
    std::vector<Certificate> certs(classes.size());
    std::vector<bool> ok(classes.size(), false);
    parallel_for(static_cast<int>(classes.size()), [&](int i) {
        certs[static_cast<size_t>(i)] = realize_small_torus(classes[static_cast<size_t>(i)]);
        ok[static_cast<size_t>(i)] =
            check_certificate(certs[static_cast<size_t>(i)]).ok;
    });
    bool all = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << i << " " << emit_graph6(classes[i]) << " "
                  << (ok[i] ? "ok" : "mismatch") << "\n";
        all = all && ok[i];
        if (!dir.empty()) {
            std::string idx = std::to_string(i);
            while (idx.size() < 3) idx = "0" + idx;
            save_certificate({certs[i], ok[i] ? "ok" : "mismatch"},
                             dir + "/catalog_n" + std::to_string(n) + "_" + idx + ".json");
        }
    }
    std::cout << "catalog n=" << n << ": " << classes.size() << " certificates, "
              << (all ? "all ok" : "FAILED") << "\n";
    return all ? 0 : 1;
}

int cmd_surgery_path(const std::string& certpath, int u, int v, int k) {
    const CertificateFile file = load_certificate(certpath);
    const auto path = surgery_path(file.cert.system, u, v, k);
    std::cout << curves_to_text(path);
    return 0;
}

int cmd_witness(const std::string& certpath, int a, int b) {
    const CertificateFile file = load_certificate(certpath);
    const Curve w = distance2_witness(file.cert.system, a, b);
    std::cout << curves_to_text({w});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finecurves: realizations, verification, surgeries and "
                 "obstructions for systems of curves on model surfaces"};
    app.require_subcommand(1);

    std::string g6, surface = "torus", semantics = "fine", out, svg, dir, spec;
    std::vector<std::string> paths;
    int n = 5, u = 0, v = 1, k = 0, a = 0, b = 1;

    auto* c_realize = app.add_subcommand("realize", "realize a graph6 graph as curves");
    c_realize->add_option("graph6", g6, "graph6 text")->required();
    c_realize->add_option("--surface", surface, "torus|annulus")
        ->check(CLI::IsMember({"torus", "annulus"}));
    c_realize->add_option("--semantics", semantics, "fine|k=<k>|finitary");
    c_realize->add_option("--out", out, "certificate JSON path");
    c_realize->add_option("--svg", svg, "figure output path");

    auto* c_verify = app.add_subcommand("verify", "re-verify certificate files");
    c_verify->add_option("certs", paths, "certificate JSON files")->required();

    auto* c_ann = app.add_subcommand("check-annulus", "annulus sidedness obstruction");
    c_ann->add_option("graph6", g6, "graph6 text")->required();

    auto* c_tor = app.add_subcommand("check-torus", "cone reduction obstruction");
    c_tor->add_option("graph6", g6, "graph6 text")->required();

    auto* c_cat = app.add_subcommand("catalog", "small-graph torus catalog");
    c_cat->add_option("--n", n, "vertex count, 1..5")->required();
    c_cat->add_option("--dir", dir, "directory for certificate files");

    auto* c_fam = app.add_subcommand("family", "named inadmissible families");
    c_fam->add_option("spec", spec, "oddcycle:<m>|wheel:<2n>|fig4|join:<g>,<b>")
        ->required();

    auto* c_surg = app.add_subcommand("surgery-path", "path between crossing curves");
    c_surg->add_option("cert", out, "certificate JSON file")->required();
    c_surg->add_option("u", u, "first curve label")->required();
    c_surg->add_option("v", v, "second curve label")->required();
    c_surg->add_option("--k", k, "intersection bound")->required();

    auto* c_wit = app.add_subcommand("witness", "distance-2 witness curve");
    c_wit->add_option("cert", out, "certificate JSON file")->required();
    c_wit->add_option("a", a, "first curve label")->required();
    c_wit->add_option("b", b, "second curve label")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_realize->parsed()) return cmd_realize(g6, surface, semantics, out, svg);
        if (c_verify->parsed()) return cmd_verify(paths);
        if (c_ann->parsed())
            return print_obstruction(annulus_core_obstruction(parse_graph6(g6)));
        if (c_tor->parsed()) return print_obstruction(cone_reduce_check(parse_graph6(g6)));
        if (c_cat->parsed()) return cmd_catalog(n, dir);
        if (c_fam->parsed()) {
            const SimpleGraph fam = generate_family(spec);
            std::cout << emit_graph6(fam) << "\n";
            return 0;
        }
        if (c_surg->parsed()) return cmd_surgery_path(out, u, v, k);
        if (c_wit->parsed()) return cmd_witness(out, a, b);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
