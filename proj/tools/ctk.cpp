#include <CLI11.hpp>
#include <iostream>

#include "ctk/cartan.hpp"
#include "ctk/covering.hpp"
#include "ctk/fixed_points.hpp"
#include "ctk/oracle.hpp"
#include "ctk/specfile.hpp"

using namespace ctk;

namespace {

enum class Format { text, kv };

struct Options {
    std::string file;
    Format format = Format::text;
    RhoConvention conv = RhoConvention::definition;
    int rank = 2;
    long q = 7;
};

struct Emitter {
    Format format;
    std::ostream& os;
    void kv(const std::string& key, const std::string& value)
    {
        if (format == Format::kv) os << key << "=" << value << "\n";
        else os << key << ": " << value << "\n";
    }
    void kv(const std::string& key, const Int& value) { kv(key, value.get_str()); }
    void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
    void text(const std::string& s)
    {
        if (format == Format::text) os << s;
    }
};

std::string vec_str(const Vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string factors_str(const std::vector<Int>& fs)
{
    if (fs.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? " " : "") + fs[i].get_str();
    return s;
}

void emit_center(Emitter& em, const CenterReport& r)
{
    em.kv("convention", std::string(r.convention == RhoConvention::definition ? "definition"
                                                                              : "remark"));
    std::string rows;
    for (int i = 0; i < r.cartan.n(); ++i) {
        for (int j = 0; j < r.cartan.n(); ++j)
            rows += (j ? " " : (i ? ";" : "")) + r.cartan.lift[i][j].get_str();
    }
    em.kv("matrix", rows);
    em.kv("det_lift", determinant_of_lift(r.cartan));
    em.kv("kernel_order", r.ker.order);
    em.kv("invariant_factors", factors_str(r.ker.invariant_factors));
    std::string gens;
    for (std::size_t i = 0; i < r.ker.generators.size(); ++i)
        gens += (i ? " " : "") + vec_str(r.ker.generators[i]);
    em.kv("generators", gens.empty() ? "none" : gens);
    em.kv("image_order", r.image_order);
    em.kv("rank_nullity", std::string(r.rank_nullity_ok ? "consistent" : "INCONSISTENT"));
}

void emit_theorems(Emitter& em, const ParsedSpec& ps)
{
    em.kv("orientable", is_orientable(ps.spec));
    em.kv("nontrivial_completion", has_nontrivial_completion(ps.spec));
    em.kv("bad_pairs", ps.spec.bad_pairs.to_string());
    if (ps.spec.field.p != 2 && has_nontrivial_completion(ps.spec)) {
        Partition cl = closure(ps.spec, ps.z1);
        em.kv("closure", cl.to_string());
        em.kv("injects", injects_into_completion(ps.spec, ps.z1));
    } else if (ps.spec.field.p == 2) {
        em.kv("closure", ps.spec.bad_pairs.to_string());
        em.kv("injects", true);
    }
    em.kv("isogeny_bound", isogeny_bound(ps.spec));
}

void emit_cover(Emitter& em, const AmalgamSpec& spec)
{
    CoverDiagram c = build_double_cover(spec);
    for (const auto& w : c.warnings) em.kv("warning", w);
    em.kv("cover_vertices", Int((long)c.cover.size()));
    em.kv("cover_edges", Int((long)c.cover.edges.size()));
    em.kv("cover_connected", c.connected());
    std::string edges;
    bool first = true;
    for (const auto& [a, b] : c.cover.edges) {
        if (!first) edges += " ";
        edges += c.name_of(a) + "-" + c.name_of(b);
        first = false;
    }
    em.kv("cover_edge_list", edges);
}

int run(const std::string& cmd, const Options& opt)
{
    Emitter em{opt.format, std::cout};

    if (cmd == "oracle-check") {
        Fq f{field_from_q(opt.q)};
        auto central = brute_force_central_torus(opt.rank, f);
        em.kv("rank", Int(opt.rank));
        em.kv("q", Int(opt.q));
        em.kv("central_torus_count", Int((long)central.size()));
        em.kv("expected_count", Int(std::gcd((long)opt.rank + 1, opt.q - 1)));
        em.kv("oracle_vs_symbolic", oracle_vs_symbolic(opt.rank, f));
        return 0;
    }

    ParsedSpec ps = load_spec_file(opt.file);
    const AmalgamSpec& spec = ps.spec;

    if (cmd == "validate") {
        em.kv("valid", true); // load_spec_file throws otherwise
        em.kv("vertices", Int((long)spec.diagram.size()));
        em.kv("edges", Int((long)spec.diagram.edges.size()));
        em.kv("root", Int(spec.root));
        std::string chords;
        for (const auto& [a, b] : spec.tree.chords(spec.diagram))
            chords += (chords.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
        em.kv("chords", chords.empty() ? "none" : chords);
    } else if (cmd == "sim0") {
        em.kv("blocks", sim0(spec.diagram).to_string());
    } else if (cmd == "classify-count") {
        em.kv("omega_types", count_omega_types(spec.diagram, spec.field));
    } else if (cmd == "cartan") {
        CartanOperator k = build_cartan(spec, opt.conv);
        for (int i = 0; i < k.n(); ++i) {
            std::string row;
            for (int j = 0; j < k.n(); ++j) row += (j ? " " : "") + k.lift[i][j].get_str();
            em.kv("row" + std::to_string(i), row);
        }
        em.kv("det_lift", determinant_of_lift(k));
    } else if (cmd == "center") {
        emit_center(em, center_report(spec, opt.conv));
    } else if (cmd == "cover") {
        emit_cover(em, spec);
    } else if (cmd == "condition-d") {
        if (spec.field.q < 7)
            throw PreconditionError("condition-d requires |k| >= 7");
        ConditionDReport r = condition_D_quotient(spec, opt.conv);
        em.kv("K_order", r.K_order);
        em.kv("MK_order", r.MK_order);
        em.kv("nuK_order", r.nuK_order);
        em.kv("quotient_order", r.quotient_order);
        em.kv("quotient_rank", Int(r.quotient_rank));
        em.kv("condition_D", r.condition_D);
    } else if (cmd == "closure") {
        em.kv("closure", closure(spec, ps.z1).to_string());
    } else if (cmd == "inject") {
        em.kv("injects", injects_into_completion(spec, ps.z1));
    } else if (cmd == "report") {
        emit_theorems(em, ps);
        emit_center(em, center_report(spec, opt.conv));
        if (!is_orientable(spec)) {
            emit_cover(em, spec);
            if (spec.field.q >= 7) {
                ConditionDReport r = condition_D_quotient(spec, opt.conv);
                em.kv("K_order", r.K_order);
                em.kv("MK_order", r.MK_order);
                em.kv("nuK_order", r.nuK_order);
                em.kv("quotient_order", r.quotient_order);
                em.kv("quotient_rank", Int(r.quotient_rank));
                em.kv("condition_D", r.condition_D);
            } else {
                em.kv("condition_D", std::string("skipped (requires |k| >= 7)"));
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Curtis-Tits amalgam analyzer"};
    app.require_subcommand(1);

    Options opt;
    std::string format = "text", conv = "definition";

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", opt.file, "input spec file")->required();
        sub->add_option("--format", format, "text|kv")->check(CLI::IsMember({"text", "kv"}));
        sub->add_option("--rho-convention", conv, "definition|remark")
            ->check(CLI::IsMember({"definition", "remark"}));
    };

    static const char* file_cmds[] = {"validate", "sim0", "classify-count", "cartan",
                                      "center", "cover", "condition-d", "closure",
                                      "inject", "report"};
    for (const char* c : file_cmds) add_common(app.add_subcommand(c), true);
    auto* oc = app.add_subcommand("oracle-check");
    add_common(oc, false);
    oc->add_option("--rank", opt.rank, "A_n rank")->check(CLI::Range(1, 6));
    oc->add_option("--q", opt.q, "field size");

    CLI11_PARSE(app, argc, argv);
    opt.format = format == "kv" ? Format::kv : Format::text;
    opt.conv = conv == "remark" ? RhoConvention::remark : RhoConvention::definition;

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    }
}
