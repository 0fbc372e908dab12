#include "rigidlab/rigidity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rigidlab {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::probably_yes: return "probably_yes";
        case Verdict::probably_no: return "probably_no";
    }
    return "no";
}

bool is_positive(Verdict v) { return v == Verdict::yes || v == Verdict::probably_yes; }

uint64_t rank_target(uint32_t v, uint32_t d) {
    if (v < d + 1) throw std::domain_error("rank_target: requires at least d+1 vertices");
    return static_cast<uint64_t>(v) * d - static_cast<uint64_t>(d) * (d + 1) / 2;
}

Realization random_realization(const Graph& g, uint32_t d, const PrimeField& field,
                               uint64_t seed) {
    if (d == 0) throw std::invalid_argument("random_realization: dimension must be positive");
    SeededRng rng(seed);
    Realization r;
    r.dimension = d;
    r.seed = seed;
    r.field = field;
    r.coords = random_vector(static_cast<size_t>(g.vertex_count()) * d, rng, field);
    return r;
}

FieldMatrix rigidity_matrix(const Graph& g, const Realization& r) {
    if (r.dimension == 0 || r.coords.size() != static_cast<size_t>(g.vertex_count()) * r.dimension)
        throw std::invalid_argument("rigidity_matrix: realization does not match graph");
    const PrimeField& f = r.field;
    uint32_t d = r.dimension;
    FieldMatrix m(g.edge_count(), static_cast<size_t>(g.vertex_count()) * d, f);
    size_t row = 0;
    for (const Edge& e : g.edges()) {
        for (uint32_t k = 0; k < d; ++k) {
            uint64_t diff = f.sub(r.coord(e.v, k), r.coord(e.u, k));
            m.set(row, static_cast<size_t>(e.u) * d + k, diff);
            m.set(row, static_cast<size_t>(e.v) * d + k, f.neg(diff));
        }
        ++row;
    }
    return m;
}

size_t stress_dim(const Graph& g, const Realization& r) {
    return g.edge_count() - rank(rigidity_matrix(g, r));
}

std::vector<Stress> stress_basis(const Graph& g, const Realization& r) {
    auto vectors = kernel_basis(transpose(rigidity_matrix(g, r)));
    std::vector<Stress> basis;
    basis.reserve(vectors.size());
    for (auto& vec : vectors) basis.push_back(Stress{std::move(vec)});
    return basis;
}

Stress random_stress(const Graph& g, const Realization& r, SeededRng& rng) {
    auto basis = stress_basis(g, r);
    const PrimeField& f = r.field;
    Stress out;
    out.values.assign(g.edge_count(), 0);
    for (const Stress& b : basis) {
        uint64_t coeff = rng.field_element(f);
        for (size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = f.add(out.values[i], f.mul(coeff, b.values[i]));
    }
    return out;
}

FieldMatrix stress_matrix(const Graph& g, const Stress& s, const PrimeField& field) {
    if (s.values.size() != g.edge_count())
        throw std::invalid_argument("stress_matrix: stress does not match edge count");
    uint32_t v = g.vertex_count();
    FieldMatrix omega(v, v, field);
    size_t idx = 0;
    for (const Edge& e : g.edges()) {
        uint64_t w = s.values[idx++];
        omega.set(e.u, e.v, w);
        omega.set(e.v, e.u, w);
    }
    for (uint32_t i = 0; i < v; ++i) {
        uint64_t sum = 0;
        for (uint32_t j = 0; j < v; ++j)
            if (j != i) sum = field.add(sum, omega.at(i, j));
        omega.set(i, i, field.neg(sum));
    }
    return omega;
}

namespace {

// Recompute the per-vertex equilibrium sums directly from the definition
// (independent of how the rigidity matrix was assembled).
bool equilibrium_holds(const Graph& g, const Realization& r, const Stress& s) {
    const PrimeField& f = r.field;
    uint32_t d = r.dimension;
    std::vector<uint64_t> residual(static_cast<size_t>(g.vertex_count()) * d, 0);
    size_t idx = 0;
    for (const Edge& e : g.edges()) {
        uint64_t w = s.values[idx++];
        for (uint32_t k = 0; k < d; ++k) {
            uint64_t diff = f.sub(r.coord(e.v, k), r.coord(e.u, k));
            uint64_t term = f.mul(w, diff);
            size_t iu = static_cast<size_t>(e.u) * d + k;
            size_t iv = static_cast<size_t>(e.v) * d + k;
            residual[iu] = f.add(residual[iu], term);
            residual[iv] = f.sub(residual[iv], term);
        }
    }
    return std::all_of(residual.begin(), residual.end(), [](uint64_t x) { return x == 0; });
}

struct Trial {
    Realization realization;
    uint64_t rank_value = 0;
    size_t dim = 0;  // stress-space dimension
    std::vector<Stress> basis;
    Stress stress;
    uint64_t omega_nullity = 0;
};

Trial run_trial(const Graph& g, uint32_t d, const PrimeField& field, uint64_t trial_seed,
                bool check_invariants) {
    Trial t;
    t.realization = random_realization(g, d, field, derive_seed(trial_seed, 0));
    FieldMatrix rm = rigidity_matrix(g, t.realization);
    t.basis = stress_basis(g, t.realization);
    t.dim = t.basis.size();
    t.rank_value = g.edge_count() - t.dim;

    if (check_invariants) {
        // rank-nullity across the transpose: rank(df) from its own
        // elimination must match e minus the kernel dimension of df^T.
        if (rank(rm) != t.rank_value)
            throw std::logic_error("invariant violation: rank(df) != e - dim ker(df^T)");
        for (const Stress& s : t.basis)
            if (!equilibrium_holds(g, t.realization, s))
                throw std::logic_error("invariant violation: stress fails equilibrium");
        if (g.vertex_count() >= d + 1 && t.rank_value > rank_target(g.vertex_count(), d))
            throw std::logic_error("invariant violation: rank exceeds vd - C(d+1,2)");
    }

    SeededRng stress_rng(derive_seed(trial_seed, 1));
    t.stress.values.assign(g.edge_count(), 0);
    for (const Stress& b : t.basis) {
        uint64_t coeff = stress_rng.field_element(field);
        for (size_t i = 0; i < t.stress.values.size(); ++i)
            t.stress.values[i] = field.add(t.stress.values[i], field.mul(coeff, b.values[i]));
    }

    FieldMatrix omega = stress_matrix(g, t.stress, field);
    t.omega_nullity = g.vertex_count() - rank(omega);

    if (check_invariants) {
        uint32_t v = g.vertex_count();
        std::vector<uint64_t> ones(v, 1);
        auto zero = [](const std::vector<uint64_t>& y) {
            return std::all_of(y.begin(), y.end(), [](uint64_t x) { return x == 0; });
        };
        if (!zero(mat_vec(omega, ones)))
            throw std::logic_error("invariant violation: stress matrix row sums nonzero");
        for (uint32_t k = 0; k < d; ++k) {
            std::vector<uint64_t> proj(v);
            for (uint32_t i = 0; i < v; ++i) proj[i] = t.realization.coord(i, k);
            if (!zero(mat_vec(omega, proj)))
                throw std::logic_error(
                    "invariant violation: coordinate projection not in stress-matrix kernel");
        }
    }
    return t;
}

void validate_options(uint32_t d, const AnalysisOptions& opt) {
    if (d == 0) throw std::invalid_argument("dimension must be positive");
    if (opt.trials < 1) throw std::invalid_argument("trials must be at least 1");
}

}  // namespace

GlrResult glr(const Graph& g, uint32_t d, const AnalysisOptions& opt) {
    validate_options(d, opt);
    if (g.vertex_count() < d + 1)
        throw std::domain_error("glr: the rank criterion requires at least d+1 vertices");
    PrimeField field(opt.modulus);
    uint64_t target = rank_target(g.vertex_count(), d);
    GlrResult result{Verdict::probably_no, 0, target, 0};
    for (int t = 0; t < opt.trials; ++t) {
        Realization r =
            random_realization(g, d, field, derive_seed(derive_seed(opt.seed, t), 0));
        uint64_t observed = rank(rigidity_matrix(g, r));
        result.trials_used = t + 1;
        if (opt.check_invariants && observed > target)
            throw std::logic_error("invariant violation: rank exceeds vd - C(d+1,2)");
        result.best_rank = std::max(result.best_rank, observed);
        if (observed == target) {
            result.verdict = Verdict::yes;  // specialization can only lose rank
            break;
        }
    }
    return result;
}

GgrResult ggr(const Graph& g, uint32_t d, const AnalysisOptions& opt) {
    validate_options(d, opt);
    PrimeField field(opt.modulus);
    uint32_t v = g.vertex_count();
    bool comp = g.is_complete();

    GgrResult result{Verdict::probably_no, v, 0};
    if (v <= d + 1) {
        // Below the theorem's size the convention is: globally rigid iff
        // complete. One trial still reports the measured nullity.
        Trial t = run_trial(g, d, field, derive_seed(opt.seed, 0), opt.check_invariants);
        result.best_nullity = t.omega_nullity;
        result.trials_used = 1;
        result.verdict = comp ? Verdict::yes : Verdict::no;
        return result;
    }
    for (int t = 0; t < opt.trials; ++t) {
        Trial trial = run_trial(g, d, field, derive_seed(opt.seed, t), opt.check_invariants);
        result.trials_used = t + 1;
        result.best_nullity = std::min(result.best_nullity, trial.omega_nullity);
        if (trial.omega_nullity == d + 1) {
            result.verdict = Verdict::yes;
            break;
        }
        if (trial.dim == 0 && !comp) {
            // Zero-dimensional stress space at a random point certifies a
            // generically zero stress space: the only stress matrix is the
            // zero matrix, whose nullity v exceeds d+1.
            result.verdict = Verdict::no;
            break;
        }
    }
    if (comp) result.verdict = Verdict::yes;
    return result;
}

RigidityReport analyze(const Graph& g, uint32_t d, const AnalysisOptions& opt) {
    validate_options(d, opt);
    PrimeField field(opt.modulus);
    uint32_t v = g.vertex_count();
    size_t e = g.edge_count();
    bool comp = g.is_complete();
    bool small = v < d + 2;

    RigidityReport rep;
    rep.v = v;
    rep.e = e;
    rep.d = d;
    rep.connectivity = vertex_connectivity(g);
    rep.trials = opt.trials;
    rep.seed = opt.seed;
    rep.modulus = opt.modulus;

    uint64_t best_rank = 0;
    uint64_t min_nullity = v;
    bool rank_hit = false;
    bool nullity_hit = false;
    bool zero_stress_seen = e == 0 ? true : false;
    std::vector<bool> edge_certified(e, false);
    bool has_target = v >= d + 1;
    uint64_t target = has_target ? rank_target(v, d) : 0;

    for (int t = 0; t < opt.trials; ++t) {
        Trial trial = run_trial(g, d, field, derive_seed(opt.seed, t), opt.check_invariants);
        best_rank = std::max(best_rank, trial.rank_value);
        min_nullity = std::min(min_nullity, trial.omega_nullity);
        if (trial.omega_nullity == d + 1) nullity_hit = true;
        if (trial.dim == 0) zero_stress_seen = true;
        if (has_target && trial.rank_value == target) {
            rank_hit = true;
            // At a realization whose rank reaches the target, a stress that
            // is nonzero on an edge exhibits that edge's row as a
            // combination of the others, so removing it keeps the rank:
            // the edge is certified redundant.
            for (size_t idx = 0; idx < e; ++idx) {
                if (edge_certified[idx]) continue;
                for (const Stress& b : trial.basis) {
                    if (b.values[idx] != 0) {
                        edge_certified[idx] = true;
                        break;
                    }
                }
            }
        }
    }

    rep.rigidity_rank = best_rank;
    rep.stress_dim = e - best_rank;
    rep.stress_matrix_nullity = min_nullity;

    if (v <= d + 1) {
        // Generic points with any missing pair admit a flex at these sizes.
        rep.glr = comp ? Verdict::yes : Verdict::no;
        rep.ggr = comp ? Verdict::yes : Verdict::no;
    } else {
        rep.glr = rank_hit ? Verdict::yes : Verdict::probably_no;
        if (comp)
            rep.ggr = Verdict::yes;
        else if (nullity_hit)
            rep.ggr = Verdict::yes;
        else if (zero_stress_seen && e > 0)
            rep.ggr = Verdict::no;
        else
            rep.ggr = e == 0 ? Verdict::no : Verdict::probably_no;
    }

    if (v <= d + 1) {
        // Removing any edge from a graph this small leaves a non-complete
        // graph on <= d+1 vertices, which is never GLR.
        rep.non_redundant_edges = g.edges();
        rep.grr = (rep.glr == Verdict::yes && e == 0) ? Verdict::yes : Verdict::no;
    } else if (rep.glr == Verdict::yes) {
        for (size_t idx = 0; idx < e; ++idx)
            if (!edge_certified[idx]) rep.non_redundant_edges.push_back(g.edges()[idx]);
        rep.grr = rep.non_redundant_edges.empty() ? Verdict::yes : Verdict::probably_no;
    } else {
        rep.non_redundant_edges = g.edges();
        rep.grr = Verdict::probably_no;
    }

    if (opt.cross_check_redundancy && v >= d + 2 && rep.glr == Verdict::yes) {
        // Remove-and-retest must agree with the stress-support route; a
        // disagreement means a randomness failure worth surfacing.
        AnalysisOptions sub = opt;
        sub.cross_check_redundancy = false;
        for (size_t idx = 0; idx < e; ++idx) {
            sub.seed = derive_seed(opt.seed, 0x9000 + idx);
            const Edge& ed = g.edges()[idx];
            GlrResult direct = glr(remove_edge(g, ed.u, ed.v), d, sub);
            if ((direct.verdict == Verdict::yes) != edge_certified[idx]) {
                std::ostringstream msg;
                msg << "redundancy cross-check mismatch on edge {" << ed.u << "," << ed.v
                    << "} (seed " << opt.seed << ", modulus " << opt.modulus << ")";
                throw std::logic_error(msg.str());
            }
        }
    }

    if (v < d + 2 || rep.connectivity < d + 1 || rep.ggr == Verdict::yes)
        rep.gpr = Verdict::no;
    else if (rep.glr == Verdict::yes && rep.grr == Verdict::yes)
        rep.gpr = Verdict::yes;
    else
        rep.gpr = Verdict::probably_no;
    return rep;
}

EdgePartition redundant_edges(const Graph& g, uint32_t d, const AnalysisOptions& opt) {
    validate_options(d, opt);
    EdgePartition part;
    uint32_t v = g.vertex_count();

    bool fast_ok = false;
    if (v >= d + 2) {
        RigidityReport rep = analyze(g, d, opt);
        if (rep.glr == Verdict::yes) {
            fast_ok = true;
            std::vector<bool> non_red(g.edge_count(), false);
            for (const Edge& e : rep.non_redundant_edges) {
                std::ptrdiff_t idx = g.edge_index(e.u, e.v);
                non_red[static_cast<size_t>(idx)] = true;
            }
            for (size_t idx = 0; idx < g.edge_count(); ++idx) {
                if (non_red[idx])
                    part.non_redundant.push_back(g.edges()[idx]);
                else
                    part.redundant.push_back(g.edges()[idx]);
            }
        }
    }
    if (!fast_ok) {
        // Direct definition: an edge is redundant when its removal leaves a
        // locally rigid graph.
        part.slow_path = true;
        AnalysisOptions sub = opt;
        for (size_t idx = 0; idx < g.edge_count(); ++idx) {
            const Edge& ed = g.edges()[idx];
            sub.seed = derive_seed(opt.seed, 0x9000 + idx);
            Graph reduced = remove_edge(g, ed.u, ed.v);
            bool redundant;
            if (v < d + 1)
                redundant = false;  // nothing this small is GLR after a removal
            else
                redundant = glr(reduced, d, sub).verdict == Verdict::yes;
            if (redundant)
                part.redundant.push_back(ed);
            else
                part.non_redundant.push_back(ed);
        }
    }
    return part;
}

GrrResult grr(const Graph& g, uint32_t d, const AnalysisOptions& opt) {
    RigidityReport rep = analyze(g, d, opt);
    return GrrResult{rep.grr, rep.non_redundant_edges};
}

std::string RigidityReport::to_json() const {
    nlohmann::ordered_json j;
    j["v"] = v;
    j["e"] = e;
    j["d"] = d;
    j["glr"] = to_string(glr);
    j["grr"] = to_string(grr);
    j["ggr"] = to_string(ggr);
    j["gpr"] = to_string(gpr);
    j["connectivity"] = connectivity;
    j["rigidity_rank"] = rigidity_rank;
    j["stress_dim"] = stress_dim;
    j["stress_matrix_nullity"] = stress_matrix_nullity;
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& ed : non_redundant_edges) edges.push_back({ed.u, ed.v});
    j["non_redundant_edges"] = std::move(edges);
    j["trials"] = trials;
    j["seed"] = seed;
    j["modulus"] = modulus;
    return j.dump();
}

std::string RigidityReport::to_text() const {
    std::ostringstream out;
    out << "graph: v=" << v << " e=" << e << "\n";
    out << "dimension: " << d << "\n";
    out << "glr: " << to_string(glr) << "  (rank " << rigidity_rank;
    if (v >= d + 1) out << " / target " << rank_target(v, d);
    out << ")\n";
    out << "grr: " << to_string(grr) << "\n";
    out << "ggr: " << to_string(ggr) << "\n";
    out << "gpr: " << to_string(gpr) << "\n";
    out << "connectivity: " << connectivity << "\n";
    out << "stress_dim: " << stress_dim << "\n";
    out << "stress_matrix_nullity: " << stress_matrix_nullity << "\n";
    out << "non_redundant_edges:";
    if (non_redundant_edges.empty()) {
        out << " (none)";
    } else {
        for (const Edge& ed : non_redundant_edges) out << " {" << ed.u << "," << ed.v << "}";
    }
    out << "\n";
    out << "trials: " << trials << "  seed: " << seed << "  modulus: " << modulus << "\n";
    return out.str();
}

}  // namespace rigidlab
