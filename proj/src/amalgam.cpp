#include "ctk/amalgam.hpp"

#include <algorithm>
#include <sstream>

namespace ctk {

namespace {

std::string edge_str(const EdgePair& e)
{
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

} // namespace

AmalgamSpec::AmalgamSpec(Diagram d, FieldSpec f, OmegaSpec om, Partition bp, Vertex rt)
    : diagram(std::move(d)), field(f), root(rt), omega(std::move(om)), bad_pairs(std::move(bp))
{
    require_valid(diagram);
    tree = spanning_tree(diagram, root);

    std::set<EdgePair> chord_set;
    for (const auto& c : tree.chords(diagram)) chord_set.insert(c);
    std::set<EdgePair> given;
    for (const auto& [e, t] : omega) {
        given.insert(e);
        if (t.field != field) throw ValidationError("twist on " + edge_str(e) + " uses a different field");
    }
    if (given != chord_set) {
        std::ostringstream os;
        os << "omega must be assigned on exactly the chord set {";
        bool first = true;
        for (const auto& c : chord_set) {
            if (!first) os << ", ";
            os << edge_str(c);
            first = false;
        }
        os << "} for root " << root;
        throw ValidationError(os.str());
    }

    if (bad_pairs.domain() != [&] {
            auto vs = diagram.vertices;
            std::sort(vs.begin(), vs.end());
            return vs;
        }())
        throw ValidationError("bad_pairs must partition the vertex set");
    if (field.p == 2 && !bad_pairs.is_discrete())
        throw ValidationError("in characteristic 2 every non-edge pair is a direct product; bad_pairs must be discrete");
}

AmalgamSpec::AmalgamSpec(Diagram d, FieldSpec f, OmegaSpec om, Vertex rt)
    : AmalgamSpec([&] {
          Partition bp = Partition::singletons(d.vertices);
          return AmalgamSpec(std::move(d), f, std::move(om), std::move(bp), rt);
      }())
{
}

ZVectorSpace ZVectorSpace::zero(int dim) { return ZVectorSpace{dim, {}}; }

ZVectorSpace ZVectorSpace::span_of(int dim, const std::vector<std::vector<int>>& vectors)
{
    return zero(dim).extended(vectors);
}

bool ZVectorSpace::contains(std::vector<int> v) const
{
    for (const auto& b : basis) {
        int lead = 0;
        while (!b[lead]) ++lead;
        if (v[lead])
            for (int j = 0; j < dim; ++j) v[j] ^= b[j];
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

ZVectorSpace ZVectorSpace::extended(const std::vector<std::vector<int>>& more) const
{
    auto lead_of = [this](const std::vector<int>& b) {
        int l = 0;
        while (l < dim && !b[l]) ++l;
        return l;
    };
    ZVectorSpace out = *this;
    for (auto v : more) {
        if ((int)v.size() != dim) throw PreconditionError("z-vector dimension mismatch");
        for (const auto& b : out.basis)
            if (v[lead_of(b)])
                for (int j = 0; j < dim; ++j) v[j] ^= b[j];
        int lead = lead_of(v);
        if (lead == dim) continue; // dependent
        // clear column `lead` in existing rows, then insert in lead order
        for (auto& b : out.basis)
            if (b[lead])
                for (int j = 0; j < dim; ++j) b[j] ^= v[j];
        auto pos = out.basis.begin();
        while (pos != out.basis.end() && lead_of(*pos) < lead) ++pos;
        out.basis.insert(pos, v);
    }
    return out;
}

Twist omega_edge(const AmalgamSpec& spec, Vertex j, Vertex i)
{
    if (!spec.diagram.has_edge(i, j))
        throw PreconditionError("omega_edge: " + edge_str(make_edge(i, j)) + " is not an edge");
    EdgePair e = make_edge(i, j);
    auto it = spec.omega.find(e);
    if (it != spec.omega.end() && spec.tree.precedes(i, j)) return it->second;
    return identity_twist(spec.field);
}

Twist rho(const AmalgamSpec& spec, Vertex j, Vertex i)
{
    return compose(invert(omega_edge(spec, i, j)), omega_edge(spec, j, i));
}

bool is_orientable(const AmalgamSpec& spec)
{
    for (const auto& [e, t] : spec.omega)
        if (t.sign != 1) return false;
    return true;
}

bool has_nontrivial_completion(const AmalgamSpec& spec)
{
    if (spec.field.p == 2) return true; // bad_pairs is discrete by construction
    return refines(spec.bad_pairs, sim0(spec.diagram));
}

namespace {

std::vector<int> z_vector(const Diagram& d, Vertex i, Vertex j)
{
    std::vector<int> v(d.size(), 0);
    v[d.index_of(i)] ^= 1;
    v[d.index_of(j)] ^= 1;
    return v;
}

} // namespace

ZVectorSpace z_span(const FieldSpec& f, const Diagram& d, const Partition& relation,
                    const ZVectorSpace& z1)
{
    if (f.p == 2)
        throw PreconditionError("z-vectors vanish in characteristic 2");
    if (z1.dim != d.size()) throw PreconditionError("z1 has wrong ambient dimension");
    std::vector<std::vector<int>> gens;
    for (const auto& blk : relation.blocks)
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t b = a + 1; b < blk.size(); ++b)
                gens.push_back(z_vector(d, blk[a], blk[b]));
    return z1.extended(gens);
}

Partition closure(const AmalgamSpec& spec, const ZVectorSpace& z1)
{
    if (spec.field.p == 2) return spec.bad_pairs;
    Partition s0 = sim0(spec.diagram);
    if (!refines(spec.bad_pairs, s0))
        throw PreconditionError("closure requires bad_pairs to refine the twin relation");
    ZVectorSpace span = z_span(spec.field, spec.diagram, spec.bad_pairs, z1);
    std::vector<EdgePair> pairs;
    for (const auto& blk : s0.blocks)
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t b = a + 1; b < blk.size(); ++b)
                if (span.contains(z_vector(spec.diagram, blk[a], blk[b])))
                    pairs.push_back(make_edge(blk[a], blk[b]));
    return Partition::from_pairs(spec.diagram.vertices, pairs);
}

Partition closure(const AmalgamSpec& spec)
{
    return closure(spec, ZVectorSpace::zero(spec.diagram.size()));
}

bool injects_into_completion(const AmalgamSpec& spec, const ZVectorSpace& z1)
{
    if (spec.field.p == 2) return true;
    if (!has_nontrivial_completion(spec))
        throw PreconditionError("no completion: bad_pairs does not refine the twin relation");
    return spec.bad_pairs == closure(spec, z1);
}

bool injects_into_completion(const AmalgamSpec& spec)
{
    return injects_into_completion(spec, ZVectorSpace::zero(spec.diagram.size()));
}

Int isogeny_bound(const AmalgamSpec& spec)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2,
                  (unsigned long)(spec.diagram.size() - spec.bad_pairs.block_count()));
    return r;
}

Int count_omega_types(const Diagram& d, const FieldSpec& f)
{
    require_valid(d);
    int b1 = (int)d.edges.size() - d.size() + 1;
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)(2 * f.m), (unsigned long)b1);
    return r;
}

} // namespace ctk
