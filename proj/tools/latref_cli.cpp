// Command-line front end for the lattice reflectivity toolkit.
//
// Subcommands: bounds, aniso, isom, vinberg, extensions, classify, enumerate.
// Exit codes: 0 success, 1 computational error, 2 usage error.

#include "latref/edge_bounds.hpp"
#include "latref/local.hpp"
#include "latref/pipeline.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace latref;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string istr(const Int& v) { return v.str(); }
std::string rstr(const Rat& v) { return v.str(); }

json gram_json(const IMat& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(istr(g(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json vec_json(const IVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(istr(x));
    return out;
}

QuadLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open lattice file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw UsageError(path + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("gram"))
        throw UsageError(path + ": expected an object with a \"gram\" entry");
    const json& g = doc["gram"];
    if (!g.is_array() || g.empty()) throw UsageError(path + ": \"gram\" must be a non-empty array of rows");
    std::size_t n = g.size();
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g[i].is_array() || g[i].size() != n)
            throw UsageError(path + ": \"gram\" row " + std::to_string(i) + " is not a list of " +
                             std::to_string(n) + " integers");
        for (std::size_t j = 0; j < n; ++j) {
            const json& e = g[i][j];
            if (e.is_number_integer())
                m(i, j) = Int(e.get<long long>());
            else if (e.is_string())
                m(i, j) = Int(e.get<std::string>());
            else
                throw UsageError(path + ": \"gram\"[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] is not an integer");
        }
    }
    try {
        return QuadLattice(m);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// write-to-temp-and-rename so readers never observe a partial file
void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

json report_header(const VinbergBudget& budget) {
    json h;
    h["tool"] = "latref";
    h["version"] = "1.0.0";
    h["max_roots"] = budget.max_roots;
    h["max_priority"] = rstr(budget.max_priority);
    auto now = std::chrono::system_clock::now().time_since_epoch();
    h["generated_unix_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    return h;
}

std::string angle_label(int m) { return "pi/" + std::to_string(m); }

std::string angle_set_label(const AngleSet& s) {
    std::string out;
    for (int i = 0; i < 5; ++i) {
        if (i) out += ",";
        out += angle_label(s.m[i]);
    }
    return out;
}

int cmd_bounds(const std::string& format, const std::string& out_path) {
    auto table = bounds_table();
    std::ostringstream os;
    if (format == "csv") {
        os << "angle_set,t_raw,t_display\n";
        for (const auto& row : table) {
            char raw[32], disp[32];
            std::snprintf(raw, sizeof raw, "%.8f", row.t);
            std::snprintf(disp, sizeof disp, "%.2f", round_up_hundredths(row.t));
            os << '"' << angle_set_label(row.angles) << "\"," << raw << "," << disp << "\n";
        }
    } else {
        json rows = json::array();
        for (const auto& row : table) {
            json r;
            r["angle_set"] = angle_set_label(row.angles);
            char raw[32];
            std::snprintf(raw, sizeof raw, "%.8f", row.t);
            r["t_raw"] = raw;
            char disp[32];
            std::snprintf(disp, sizeof disp, "%.2f", round_up_hundredths(row.t));
            r["t_display"] = disp;
            if (row.illposed) r["illposed"] = true;
            rows.push_back(r);
        }
        os << rows.dump(2) << "\n";
    }
    if (out_path.empty())
        std::cout << os.str();
    else
        atomic_write(out_path, os.str());
    return 0;
}

int cmd_aniso(const std::string& path) {
    QuadLattice l = load_lattice(path);
    json out;
    out["anisotropic"] = is_anisotropic_over_Q(l);
    json places = json::array();
    DiagonalForm f = diagonalize_over_Q(l.gram());
    // -1 stands for the real place: anisotropic over R means definite
    auto [pos, neg] = l.signature();
    if (pos == 0 || neg == 0) places.push_back(-1);
    Int screen = 2 * abs(l.discriminant());
    for (const auto& [p, e] : factorize(screen))
        if (is_anisotropic_local_rank4(f, Place::prime(p))) places.push_back(p.convert_to<long long>());
    out["witness_places"] = places;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_isom(const std::string& pa, const std::string& pb, long height) {
    QuadLattice a = load_lattice(pa), b = load_lattice(pb);
    IsomVerdict v = z_isomorphic(a, b, height);
    json out;
    if (auto* yes = std::get_if<IsomYes>(&v)) {
        out["isomorphic"] = "yes";
        out["basis_change"] = gram_json(yes->basis_change);
    } else if (auto* no = std::get_if<IsomNo>(&v)) {
        out["isomorphic"] = "no";
        out["witness_invariant"] = no->witness_invariant;
    } else {
        out["isomorphic"] = "unknown";
        out["height"] = height;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

json vinberg_json(const VinbergReport& r) {
    json out;
    out["basic_point"] = vec_json(r.basic_point);
    json roots = json::array();
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        json e;
        e["root"] = vec_json(r.roots[i]);
        e["norm"] = istr(r.norms[i]);
        e["priority"] = rstr(r.priorities[i]);
        roots.push_back(e);
    }
    out["roots"] = roots;
    out["gram"] = gram_json(r.diagram.gram);
    switch (r.verdict) {
        case RunVerdict::Compact: out["verdict"] = "compact"; break;
        case RunVerdict::FiniteVolume: out["verdict"] = "finite_volume"; break;
        case RunVerdict::BudgetExhausted: out["verdict"] = "budget_exhausted"; break;
    }
    out["bad_group_finite"] = r.bad_finite;
    if (r.bad_witness) {
        json w;
        w["i"] = r.bad_witness->first;
        w["j"] = r.bad_witness->second;
        w["inner"] = istr(r.diagram.gram(r.bad_witness->first, r.bad_witness->second));
        out["bad_witness"] = w;
    }
    return out;
}

int cmd_vinberg(const std::string& path, const std::string& norms, std::size_t max_roots,
                const std::string& max_priority, const std::string& dot_path,
                const std::string& json_path) {
    QuadLattice l = load_lattice(path);
    NormPolicy policy = NormPolicy::all();
    if (norms != "all") {
        std::vector<Int> ks;
        std::stringstream ss(norms);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                ks.push_back(Int(tok));
            } catch (const std::exception&) {
                throw UsageError("bad norm list entry: " + tok);
            }
        }
        if (ks.empty()) throw UsageError("empty norm list");
        policy = NormPolicy::only(ks);
    }
    VinbergBudget budget;
    budget.max_roots = max_roots;
    budget.max_priority = Rat(max_priority);
    VinbergReport r = run(l, policy, budget);

    std::cout << "basic point: (";
    for (std::size_t i = 0; i < r.basic_point.size(); ++i)
        std::cout << (i ? "," : "") << istr(r.basic_point[i]);
    std::cout << ")\n";
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        std::cout << "a" << i + 1 << " = (";
        for (std::size_t j = 0; j < r.roots[i].size(); ++j)
            std::cout << (j ? "," : "") << istr(r.roots[i][j]);
        std::cout << ")  norm " << istr(r.norms[i]) << "  priority " << rstr(r.priorities[i]) << "\n";
    }
    const char* verdict = r.verdict == RunVerdict::Compact          ? "compact"
                          : r.verdict == RunVerdict::FiniteVolume   ? "finite volume"
                                                                    : "budget exhausted";
    std::cout << "verdict: " << verdict << "\n";
    std::cout << "bad group finite: " << (r.bad_finite ? "yes" : "no") << "\n";
    if (r.bad_witness)
        std::cout << "bad pair: a" << r.bad_witness->first + 1 << ", a" << r.bad_witness->second + 1
                  << " with inner product "
                  << istr(r.diagram.gram(r.bad_witness->first, r.bad_witness->second)) << "\n";

    if (!dot_path.empty()) atomic_write(dot_path, to_dot(r.diagram));
    if (!json_path.empty()) {
        json doc;
        doc["header"] = report_header(budget);
        doc["body"] = vinberg_json(r);
        atomic_write(json_path, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_extensions(const std::string& path) {
    QuadLattice l = load_lattice(path);
    std::vector<std::pair<IVec, Int>> basis_roots;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        IVec e(l.rank(), Int(0));
        e[i] = 1;
        basis_roots.emplace_back(e, l.gram()(i, i));
    }
    json out = json::array();
    for (const auto& ext : overlattices(l, basis_roots)) {
        json e;
        e["index"] = istr(ext.index);
        json bc = json::array();
        for (std::size_t i = 0; i < ext.basis_change.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < ext.basis_change.cols(); ++j)
                row.push_back(rstr(ext.basis_change(i, j)));
            bc.push_back(row);
        }
        e["basis_change"] = bc;
        e["gram"] = gram_json(ext.gram.entries());
        out.push_back(e);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_enumerate(const std::string& json_path) {
    auto configs = dedupe_configurations(enumerate_configurations());
    json arr = json::array();
    for (const auto& cfg : configs) {
        json e;
        e["gram"] = gram_json(cfg.gram);
        e["angle_set"] = angle_set_label(cfg.angles);
        char t[32];
        std::snprintf(t, sizeof t, "%.8f", cfg.t_used);
        e["t_used"] = t;
        arr.push_back(e);
    }
    std::string text = arr.dump(2) + "\n";
    if (json_path.empty())
        std::cout << text;
    else
        atomic_write(json_path, text);
    return 0;
}

const char* reflectivity_label(Reflectivity12 v) {
    switch (v) {
        case Reflectivity12::Reflective12: return "reflective_12";
        case Reflectivity12::NotReflective12: return "not_reflective_12";
        default: return "undecided";
    }
}

int cmd_classify(std::size_t max_roots, const std::string& max_priority,
                 const std::string& report_path) {
    VinbergBudget budget;
    budget.max_roots = max_roots;
    budget.max_priority = Rat(max_priority);
    ClassificationReport rep = classify(budget);

    std::cout << "configurations: " << rep.raw_count << " raw, " << rep.configurations.size()
              << " up to relabeling\n";
    std::cout << "anisotropic classes: " << rep.classes.size() << "\n";
    std::cout << "candidates after saturation: " << rep.candidates.size() << "\n";
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
        const auto& l = rep.candidates[i].lattice;
        std::cout << "candidate " << i + 1 << ": d = " << istr(l.discriminant())
                  << (l.is_even() ? " (even)" : " (odd)") << "  ->  "
                  << reflectivity_label(rep.verdicts[i].verdict) << "\n";
    }

    if (!report_path.empty()) {
        json doc;
        doc["header"] = report_header(budget);
        doc["schema"] = "latref.classification/1";
        json body;
        body["raw_configuration_count"] = rep.raw_count;
        json cfgs = json::array();
        for (const auto& cfg : rep.configurations) {
            json e;
            e["gram"] = gram_json(cfg.gram);
            e["angle_set"] = angle_set_label(cfg.angles);
            cfgs.push_back(e);
        }
        body["configurations"] = cfgs;
        json cands = json::array();
        for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
            json c;
            c["gram"] = gram_json(rep.candidates[i].lattice.gram().entries());
            c["discriminant"] = istr(rep.candidates[i].lattice.discriminant());
            c["even"] = rep.candidates[i].lattice.is_even();
            c["verdict"] = reflectivity_label(rep.verdicts[i].verdict);
            if (rep.verdicts[i].witness) {
                json w;
                w["a"] = vec_json(rep.verdicts[i].witness->first);
                w["b"] = vec_json(rep.verdicts[i].witness->second);
                c["witness"] = w;
            }
            if (rep.verdicts[i].restricted_run)
                c["restricted_run"] = vinberg_json(*rep.verdicts[i].restricted_run);
            if (rep.verdicts[i].full_run) c["full_run"] = vinberg_json(*rep.verdicts[i].full_run);
            cands.push_back(c);
        }
        body["candidates"] = cands;
        doc["body"] = body;
        atomic_write(report_path, doc.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflectivity toolkit for anisotropic hyperbolic lattices of rank 4"};
    app.require_subcommand(1);

    int threads = 0;
    long long seed = 0;
    app.add_option("--threads", threads, "worker threads, 0 = auto (currently single-threaded)");
    app.add_option("--seed", seed, "reserved; all algorithms are deterministic (no-op)");

    auto* bounds = app.add_subcommand("bounds", "width-bound table for the outermost edge");
    std::string bounds_format = "csv", bounds_out;
    bounds->add_option("--format", bounds_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bounds_out, "write to file instead of stdout");

    auto* aniso = app.add_subcommand("aniso", "rational anisotropy test");
    std::string aniso_path;
    aniso->add_option("lattice", aniso_path, "lattice JSON file")->required();

    auto* isom = app.add_subcommand("isom", "integral isomorphism test");
    std::string isom_a, isom_b;
    long isom_height = 10;
    isom->add_option("a", isom_a, "first lattice JSON file")->required();
    isom->add_option("b", isom_b, "second lattice JSON file")->required();
    isom->add_option("--height", isom_height, "coordinate bound for the certificate search");

    auto* vin = app.add_subcommand("vinberg", "run Vinberg's algorithm");
    std::string vin_path, vin_norms = "all", vin_prio = "1000000", vin_dot, vin_json;
    std::size_t vin_roots = 64;
    vin->add_option("lattice", vin_path, "lattice JSON file")->required();
    vin->add_option("--norms", vin_norms, "all, or a comma-separated list of root norms");
    vin->add_option("--max-roots", vin_roots, "root budget");
    vin->add_option("--max-priority", vin_prio, "priority budget (rational)");
    vin->add_option("--dot", vin_dot, "write the Coxeter diagram in DOT format");
    vin->add_option("--json", vin_json, "write the full report as JSON");

    auto* ext = app.add_subcommand("extensions", "finite-index overlattices keeping the basis roots");
    std::string ext_path;
    ext->add_option("lattice", ext_path, "lattice JSON file")->required();

    auto* cls = app.add_subcommand("classify", "end-to-end classification");
    std::string cls_prio = "1000000", cls_report;
    std::size_t cls_roots = 64;
    cls->add_option("--max-roots", cls_roots, "root budget per run");
    cls->add_option("--max-priority", cls_prio, "priority budget per run (rational)");
    cls->add_option("--report", cls_report, "write the full report as JSON");

    auto* enm = app.add_subcommand("enumerate", "dump candidate edge configurations");
    std::string enm_json;
    enm->add_option("--json", enm_json, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bounds) return cmd_bounds(bounds_format, bounds_out);
        if (*aniso) return cmd_aniso(aniso_path);
        if (*isom) return cmd_isom(isom_a, isom_b, isom_height);
        if (*vin) return cmd_vinberg(vin_path, vin_norms, vin_roots, vin_prio, vin_dot, vin_json);
        if (*ext) return cmd_extensions(ext_path);
        if (*cls) return cmd_classify(cls_roots, cls_prio, cls_report);
        if (*enm) return cmd_enumerate(enm_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
