#pragma once

// Command line front end. Every command writes to the streams handed to
// cli_main and returns a process exit code:
//   0  success
//   1  a check ran and failed; the finding (minimal counterexample) is printed
//   2  usage or input errors, with a pointer to the right --help screen
// Output is byte-stable for a fixed command line and seed. Sequences of
// numbers are printed as JSON arrays of decimal strings in both formats.

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "evaluate.hpp"
#include "freeprod.hpp"
#include "gram.hpp"
#include "json_io.hpp"
#include "kreweras.hpp"
#include "tangle_expr.hpp"

namespace spindle {
namespace cli {

struct Config {
    int max_n = 8;            // cap for enumerations and verification sweeps
    unsigned long seed = 1;   // drives sampling; recorded in verify output
    std::string format = "table";
    std::string spec_path;
};

inline bool json_mode(const Config& cfg) { return cfg.format == "json"; }

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& ex) {
        throw Error("invalid json in '" + path + "': " + std::string(ex.what()));
    }
}

inline MomentProfile load_profile(const std::string& path) {
    return profile_from_json(load_json(path));
}

inline AlgebraSpec load_algebra(const Config& cfg) {
    if (cfg.spec_path.empty())
        throw Error("this command needs --spec <file.json> with {\"name\":...,\"blocks\":[m1,...]}");
    return spec_from_json(load_json(cfg.spec_path));
}

inline void require_cap(int n, const Config& cfg, const char* what) {
    if (n < 1) throw Error(std::string(what) + " must be positive");
    if (n > cfg.max_n)
        throw CapExceeded(std::string(what) + " " + std::to_string(n) + " exceeds --max-n " +
                          std::to_string(cfg.max_n));
}

// "{1,4}" or "1,4" -> {1, 4}
inline std::vector<int> parse_block(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw Error("block grammar: \"{1,4}\"");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(body.substr(pos), &used);
        } catch (const std::exception&) {
            throw Error("block grammar: \"{1,4}\" with positive entries");
        }
        out.push_back(v);
        pos += used;
        if (pos < body.size()) {
            if (body[pos] != ',') throw Error("block grammar: \"{1,4}\" with comma separators");
            ++pos;
        }
    }
    if (out.empty()) throw Error("block grammar: a block holds at least one point");
    return out;
}

inline std::string block_str(const std::vector<int>& b) {
    std::string out = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(b[i]);
    }
    return out + "}";
}

inline Json seq_json(const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const Rational& x : xs) arr.push_back(rat_str(x));
    return arr;
}

inline void print_sequence(std::ostream& out, const std::vector<Rational>& xs) {
    out << seq_json(xs).dump() << "\n";
}

inline void print_partition(std::ostream& out, const Config& cfg, const Partition& p) {
    if (json_mode(cfg))
        out << Json(partition_str(p)).dump() << "\n";
    else
        out << partition_str(p) << "\n";
}

inline void print_loop_vector(std::ostream& out, const Config& cfg, const LoopVector& v) {
    if (json_mode(cfg)) {
        out << loop_vector_to_json(v).dump() << "\n";
        return;
    }
    out << "degree: " << v.degree << "\n";
    out << "terms: " << v.terms.size() << "\n";
    for (const auto& [l, c] : v.terms) out << surd_str(c) << " " << loop_str(l) << "\n";
}

inline LoopVector unit_vec(int degree, const Loop& l) {
    LoopVector v(degree);
    v.add(l, Surd(1));
    return v;
}

inline std::vector<Rational> parse_rational_array(const Json& j, const char* where) {
    if (!j.is_array()) throw Error(std::string(where) + ": expected a json array of decimal strings");
    std::vector<Rational> out;
    for (const Json& x : j) out.push_back(parse_rational(x.get<std::string>()));
    return out;
}

// ---- nc ----

inline int run_nc_enumerate(std::ostream& out, const Config& cfg, int n, const std::string& cls) {
    require_cap(n, cfg, "order");
    PartitionClass pc = PartitionClass::NonCrossing;
    if (cls == "all") pc = PartitionClass::All;
    else if (cls == "interval") pc = PartitionClass::Interval;
    else if (cls == "even-nc") pc = PartitionClass::EvenNonCrossing;
    std::vector<Partition> ps = enumerate_partitions(n, pc);
    if (json_mode(cfg)) {
        Json arr = Json::array();
        for (const Partition& p : ps) arr.push_back(partition_str(p));
        out << arr.dump() << "\n";
    } else {
        for (const Partition& p : ps) out << partition_str(p) << "\n";
    }
    return 0;
}

inline int run_nc_kreweras(std::ostream& out, const Config& cfg, const std::string& text,
                           bool nested) {
    Partition p = parse_partition(text);
    print_partition(out, cfg, nested ? nested_kreweras(p) : kreweras(p));
    return 0;
}

inline int run_nc_depth(std::ostream& out, const Config& cfg, const std::string& text) {
    Partition p = parse_partition(text);
    std::map<int, int> dm = depth_map(p);
    if (json_mode(cfg)) {
        Json obj = Json::object();
        for (int i = 0; i < p.num_blocks(); ++i) obj[block_str(p.blocks[i])] = dm.at(i);
        out << obj.dump() << "\n";
    } else {
        for (int i = 0; i < p.num_blocks(); ++i)
            out << block_str(p.blocks[i]) << ": " << dm.at(i) << "\n";
    }
    return 0;
}

inline int run_nc_merge(std::ostream& out, const Config& cfg, const std::string& text,
                        const std::string& b1, const std::string& b2) {
    Partition p = parse_partition(text);
    print_partition(out, cfg, merge_blocks(p, parse_block(b1), parse_block(b2)));
    return 0;
}

inline int run_nc_split(std::ostream& out, const Config& cfg, const std::string& text,
                        const std::string& block, int i) {
    Partition p = parse_partition(text);
    print_partition(out, cfg, split_block(p, parse_block(block), i));
    return 0;
}

inline int run_nc_envelope(std::ostream& out, const Config& cfg, const std::string& text,
                           const std::string& block) {
    Partition p = parse_partition(text);
    EnvelopingBlocks env = enveloping_blocks(p, parse_block(block));
    if (json_mode(cfg)) {
        Json lower = Json::array();
        for (const auto& b : env.lower) lower.push_back(block_str(b));
        out << Json{{"upper", block_str(env.upper)}, {"lower", lower}}.dump() << "\n";
    } else {
        out << "upper: " << block_str(env.upper) << "\n";
        out << "lower:";
        for (const auto& b : env.lower) out << " " << block_str(b);
        out << "\n";
    }
    return 0;
}

// ---- cum / conv ----

inline int run_cum(std::ostream& out, const std::string& file, CumulantKind kind) {
    MomentProfile mu = load_profile(file);
    print_sequence(out, cumulants_from_moments(mu, kind).values);
    return 0;
}

inline int run_cum_invert(std::ostream& out, const std::string& file, const std::string& kind) {
    CumulantProfile cp{kind == "boolean" ? CumulantKind::Boolean : CumulantKind::Free,
                       parse_rational_array(load_json(file), "cum invert")};
    print_sequence(out, moments_from_cumulants(cp).moments);
    return 0;
}

inline int run_conv_boxtimes(std::ostream& out, const Config& cfg, const std::string& fa,
                             const std::string& fb, int n) {
    require_cap(n, cfg, "--n");
    print_sequence(out, free_mult_conv(load_profile(fa), load_profile(fb), n).moments);
    return 0;
}

inline int run_conv_bn_check(std::ostream& out, const Config& cfg, const std::string& fa,
                             const std::string& fb, int n) {
    require_cap(n, cfg, "--n");
    BooleanConvReport rep = boolean_conv_check(load_profile(fa), load_profile(fb), n);
    std::string witness;
    if (!rep.equal) {
        for (std::size_t k = 0; k < rep.lhs.size(); ++k)
            if (rep.lhs[k] != rep.rhs[k]) {
                witness = "n=" + std::to_string(k + 1) + " lhs=" + rat_str(rep.lhs[k]) +
                          " rhs=" + rat_str(rep.rhs[k]);
                break;
            }
    }
    if (json_mode(cfg)) {
        Json obj{{"equal", rep.equal}, {"lhs", seq_json(rep.lhs)}, {"rhs", seq_json(rep.rhs)}};
        obj["counterexample"] = rep.equal ? Json(nullptr) : Json(witness);
        out << obj.dump() << "\n";
    } else {
        out << "equal: " << (rep.equal ? "true" : "false") << "\n";
        out << "lhs: " << seq_json(rep.lhs).dump() << "\n";
        out << "rhs: " << seq_json(rep.rhs).dump() << "\n";
        if (!rep.equal) out << "counterexample: " << witness << "\n";
    }
    return rep.equal ? 0 : 1;
}

// ---- tangle ----

inline int run_tangle_parse(std::ostream& out, const Config& cfg, const std::string& text) {
    ExprPtr e = parse_tangle_expr(text);
    ExprShape shape = expr_shape(*e);
    if (json_mode(cfg)) {
        out << Json{{"expr", expr_str(*e)}, {"degree", shape.degree}, {"slots", shape.slots}}.dump()
            << "\n";
    } else {
        out << "expr: " << expr_str(*e) << "\n";
        out << "degree: " << shape.degree << "\n";
        out << "slots: " << Json(shape.slots).dump() << "\n";
    }
    return 0;
}

inline int run_tangle_pi(std::ostream& out, const Config& cfg, const std::string& text,
                         bool shading) {
    Tangle t = to_tangle(*parse_tangle_expr(text));
    print_partition(out, cfg, shading ? shading_partition(t) : pi_of(t));
    return 0;
}

inline int run_tangle_free(std::ostream& out, const Config& cfg, const std::string& ta,
                           const std::string& tb) {
    bool free = is_free_pair(to_tangle(*parse_tangle_expr(ta)), to_tangle(*parse_tangle_expr(tb)));
    if (json_mode(cfg))
        out << Json{{"free", free}}.dump() << "\n";
    else
        out << "free: " << (free ? "true" : "false") << "\n";
    return free ? 0 : 1;
}

inline int run_tangle_reduce(std::ostream& out, const Config& cfg, const std::string& text) {
    Factorization f = irreducible_factorization(to_tangle(*parse_tangle_expr(text)));
    if (json_mode(cfg)) {
        Json fs = Json::array();
        for (const Tangle& t : f.factors) fs.push_back(Json{{"outer", t.outer}, {"inner", t.inner}});
        out << Json{{"pi", partition_str(f.pi)}, {"factors", fs}}.dump() << "\n";
    } else {
        out << "pi: " << partition_str(f.pi) << "\n";
        out << "factors: " << f.factors.size() << "\n";
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            out << "factor " << i + 1 << ": outer=" << f.factors[i].outer
                << " inner=" << Json(f.factors[i].inner).dump() << "\n";
    }
    return 0;
}

// ---- gpa ----

inline Caps cli_caps(const Config& cfg) { return Caps{std::max(2 * cfg.max_n, 8), 25}; }

inline int run_gpa_basis(std::ostream& out, const Config& cfg, int n) {
    require_cap(n, cfg, "--n");
    AlgebraSpec spec = load_algebra(cfg);
    std::vector<Loop> loops = loop_basis(spec, n, cli_caps(cfg));
    if (json_mode(cfg)) {
        Json arr = Json::array();
        for (const Loop& l : loops) arr.push_back(loop_str(l));
        out << arr.dump() << "\n";
    } else {
        for (const Loop& l : loops) out << loop_str(l) << "\n";
    }
    return 0;
}

inline int run_gpa_eval(std::ostream& out, const Config& cfg, const std::string& text,
                        const std::vector<std::string>& files) {
    AlgebraSpec spec = load_algebra(cfg);
    ExprPtr e = parse_tangle_expr(text);
    std::vector<LoopVector> inputs;
    for (const std::string& f : files) inputs.push_back(loop_vector_from_json(load_json(f)));
    print_loop_vector(out, cfg, evaluate(spec, *e, inputs, cli_caps(cfg)));
    return 0;
}

inline int run_gpa_trace(std::ostream& out, const Config& cfg, const std::string& file,
                         const std::string& side) {
    AlgebraSpec spec = load_algebra(cfg);
    LoopVector v = loop_vector_from_json(load_json(file));
    if (v.degree < 1) throw Error("trace needs a vector of degree >= 1");
    Surd t = trace(spec, v, side == "left" ? TraceSide::Left : TraceSide::Right);
    if (json_mode(cfg))
        out << Json(surd_str(t)).dump() << "\n";
    else
        out << surd_str(t) << "\n";
    return 0;
}

inline std::vector<LoopVector> realized_vectors(const AlgebraSpec& spec, int n,
                                                const std::string& source, const Caps& caps) {
    if (source == "tl") return tl_image(spec, n, caps);
    std::vector<LoopVector> vs;
    for (const Loop& l : loop_basis(spec, n, caps)) vs.push_back(unit_vec(n, l));
    return vs;
}

inline int run_gpa_gram(std::ostream& out, const Config& cfg, int n, const std::string& source) {
    require_cap(n, cfg, "--n");
    AlgebraSpec spec = load_algebra(cfg);
    std::vector<LoopVector> vs = realized_vectors(spec, n, source, cli_caps(cfg));
    GramResult g = gram(spec, vs);
    if (json_mode(cfg)) {
        Json rows = Json::array();
        for (const auto& row : g.matrix) {
            Json r = Json::array();
            for (const Surd& s : row) r.push_back(surd_str(s));
            rows.push_back(r);
        }
        out << Json{{"vectors", vs.size()},
                    {"rank", g.rank},
                    {"psd", g.positive_semidefinite},
                    {"matrix", rows}}
                   .dump()
            << "\n";
    } else {
        out << "vectors: " << vs.size() << "\n";
        out << "rank: " << g.rank << "\n";
        out << "psd: " << (g.positive_semidefinite ? "true" : "false") << "\n";
        out << "matrix:\n";
        for (const auto& row : g.matrix) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? " " : "") << surd_str(row[j]);
            out << "\n";
        }
    }
    return 0;
}

inline int run_gpa_tl(std::ostream& out, const Config& cfg, int n) {
    require_cap(n, cfg, "--n");
    AlgebraSpec spec = load_algebra(cfg);
    std::vector<LoopVector> vs = tl_image(spec, n, cli_caps(cfg));
    int rank = span_rank(vs);
    if (json_mode(cfg))
        out << Json{{"count", vs.size()}, {"rank", rank}}.dump() << "\n";
    else
        out << "count: " << vs.size() << "\n"
            << "rank: " << rank << "\n";
    return 0;
}

inline int run_gpa_boolean(std::ostream& out, const Config& cfg, int n, const std::string& source) {
    require_cap(n, cfg, "--n");
    AlgebraSpec spec = load_algebra(cfg);
    Caps caps = cli_caps(cfg);
    std::vector<std::vector<LoopVector>> realized;
    for (int k = 1; k <= n; ++k) realized.push_back(realized_vectors(spec, k, source, caps));
    std::vector<int> dims;
    for (int k = 1; k <= n; ++k)
        dims.push_back(static_cast<int>(boolean_subspace(spec, realized, k).size()));
    out << Json(dims).dump() << "\n";
    return 0;
}

// ---- fp / group ----

inline int run_fp_dims(std::ostream& out, const Config& cfg, const std::string& fa,
                       const std::string& fb, int n, const std::string& product) {
    require_cap(n, cfg, "--n");
    DimensionProfile P(load_profile(fa)), Q(load_profile(fb));
    print_sequence(out, product == "tensor" ? tensor_dims(P, Q, n) : free_product_dims(P, Q, n));
    return 0;
}

inline int run_fp_basis(std::ostream& out, const Config& cfg, const std::string& fa,
                        const std::string& fb, int n) {
    require_cap(n, cfg, "--n");
    DimensionProfile P(load_profile(fa)), Q(load_profile(fb));
    std::vector<BasisLabel> labels = basis_labels(P, Q, n);
    if (json_mode(cfg)) {
        Json arr = Json::array();
        for (const BasisLabel& l : labels) arr.push_back(basis_label_to_json(l));
        out << arr.dump() << "\n";
    } else {
        for (const BasisLabel& l : labels) out << basis_label_to_json(l).dump() << "\n";
    }
    return 0;
}

inline int run_fp_rank(std::ostream& out, const std::string& fa, const std::string& fb, int n,
                       const std::string& labels) {
    AlgebraSpec sa = spec_from_json(load_json(fa)), sb = spec_from_json(load_json(fb));
    LabelSource source = labels == "full" ? LabelSource::Full : LabelSource::Tl;
    Json arr = Json::array();
    for (int k = 1; k <= n; ++k)
        arr.push_back(std::to_string(concrete_span_rank(sa, sb, k, source)));
    std::ostream& o = out;
    o << arr.dump() << "\n";
    return 0;
}

inline int run_fp_wreath(std::ostream& out, const Config& cfg, const std::string& fa,
                         const std::string& fb, int n) {
    require_cap(n, cfg, "--n");
    print_sequence(out, wreath_character_moments(load_profile(fa), load_profile(fb), n).moments);
    return 0;
}

inline Perm parse_perm(const std::string& text) {
    std::vector<int> images = parse_block(text);
    return images;
}

inline int run_group_moments(std::ostream& out, const Config& cfg,
                             const std::vector<std::string>& perms, int k) {
    require_cap(k, cfg, "--k");
    if (perms.empty()) throw Error("group moments needs at least one --perm \"2,1,3\"");
    std::vector<Perm> gens;
    for (const std::string& p : perms) gens.push_back(parse_perm(p));
    print_sequence(out, perm_group_character_moments(gens, k).moments);
    return 0;
}

// ---- verify ----

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string counterexample;
};

inline SuiteResult suite_fail(SuiteResult r, std::string witness) {
    r.pass = false;
    r.counterexample = std::move(witness);
    return r;
}

inline std::vector<long> catalan_numbers(int top) {
    std::vector<long> c{1};
    for (int n = 1; n <= top; ++n) {
        long s = 0;
        for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
        c.push_back(s);
    }
    return c;
}

inline std::vector<long> bell_numbers(int top) {
    std::vector<long> b{1};
    std::vector<long> row{1};
    for (int n = 1; n <= top; ++n) {
        std::vector<long> next{row.back()};
        for (long x : row) next.push_back(next.back() + x);
        row = std::move(next);
        b.push_back(row.front());
    }
    return b;
}

inline SuiteResult verify_partitions(int max_n) {
    SuiteResult r{"partitions", true, ""};
    int top = std::min(max_n, 7);
    std::vector<long> cat = catalan_numbers(top);
    std::vector<long> bell = bell_numbers(std::min(top, 6));
    for (int n = 1; n <= top; ++n) {
        std::vector<Partition> ncs = enumerate_partitions(n, PartitionClass::NonCrossing);
        if (static_cast<long>(ncs.size()) != cat[n])
            return suite_fail(r, "NC(" + std::to_string(n) + ") has " +
                                     std::to_string(ncs.size()) + " elements, expected " +
                                     std::to_string(cat[n]));
        if (n <= 6) {
            std::size_t all = enumerate_partitions(n, PartitionClass::All).size();
            if (static_cast<long>(all) != bell[n])
                return suite_fail(r, "P(" + std::to_string(n) + ") has " + std::to_string(all) +
                                         " elements, expected " + std::to_string(bell[n]));
        }
        for (const Partition& p : ncs) {
            if (!is_noncrossing(p))
                return suite_fail(r, "enumerated crossing partition " + partition_str(p));
            Partition k = kreweras(p);
            if (p.num_blocks() + k.num_blocks() != n + 1)
                return suite_fail(r, "|p| + |K(p)| != n + 1 at p=" + partition_str(p));
            if (!(kreweras_inverse(k) == p))
                return suite_fail(r, "K^-1(K(p)) != p at p=" + partition_str(p));
            if (!leq(p, full_partition(n)) || !leq(discrete_partition(n), p))
                return suite_fail(r, "lattice bounds fail at p=" + partition_str(p));
        }
        std::size_t step = ncs.size() > 40 ? ncs.size() / 40 : 1;
        for (std::size_t i = 0; i < ncs.size(); i += step)
            for (std::size_t j = 0; j < ncs.size(); j += step) {
                Partition m = meet(ncs[i], ncs[j]), jn = join(ncs[i], ncs[j]);
                if (!leq(m, ncs[i]) || !leq(m, ncs[j]) || !leq(ncs[i], jn) || !leq(ncs[j], jn))
                    return suite_fail(r, "meet/join bounds fail at p=" + partition_str(ncs[i]) +
                                             " q=" + partition_str(ncs[j]));
            }
    }
    return r;
}

inline SuiteResult verify_kreweras(int max_n) {
    SuiteResult r{"kreweras", true, ""};
    int top = std::min(max_n, 4);
    for (int n = 1; n <= top; ++n) {
        Partition pi0 = pair_partition_shifted(2 * n);
        for (const Partition& pi : enumerate_partitions(2 * n, PartitionClass::EvenNonCrossing)) {
            Partition kr = nested_kreweras(pi);
            if (!is_noncrossing(kr))
                return suite_fail(r, "kr'(pi) crosses at pi=" + partition_str(pi));
            for (const auto& b : kr.blocks)
                if (b.size() % 2 != 0)
                    return suite_fail(r, "kr'(pi) has an odd block at pi=" + partition_str(pi));
            if (!(kr == nested_kreweras(join(pi, pi0))))
                return suite_fail(r, "kr'(pi) != kr'(pi v pi0) at pi=" + partition_str(pi));
            if (leq(pi0, pi) &&
                !(kreweras(parity_map(pi, ParityMap::F)) == parity_map(kr, ParityMap::G)))
                return suite_fail(r, "K(F(pi)) != G(kr'(pi)) at pi=" + partition_str(pi));
        }
    }
    return r;
}

inline SuiteResult verify_tangles(int max_n, unsigned long seed) {
    SuiteResult r{"tangles", true, ""};
    int top = std::min(max_n, 3);
    for (int n = 1; n <= top; ++n) {
        std::vector<Partition> evens = enumerate_partitions(2 * n, PartitionClass::EvenNonCrossing);
        for (const Partition& pi : evens) {
            Tangle t = t_pi(pi);
            if (!(pi_of(t) == pi))
                return suite_fail(r, "pi_of(T_pi) != pi at pi=" + partition_str(pi));
            if (!(shading_partition(t) == nested_kreweras(pi)))
                return suite_fail(r, "shading(T_pi) != kr'(pi) at pi=" + partition_str(pi));
        }
        auto check_pair = [&](const Partition& a, const Partition& b) -> bool {
            return is_free_pair(t_pi(a), t_pi(b)) == leq(b, nested_kreweras(a));
        };
        if (n <= 2) {
            for (const Partition& a : evens)
                for (const Partition& b : evens)
                    if (!check_pair(a, b))
                        return suite_fail(r, "freeness criterion mismatch at pi=" +
                                                 partition_str(a) + " pi'=" + partition_str(b));
        } else {
            std::mt19937 rng(static_cast<std::uint32_t>(seed));
            std::uniform_int_distribution<std::size_t> pick(0, evens.size() - 1);
            for (int t = 0; t < 200; ++t) {
                const Partition& a = evens[pick(rng)];
                const Partition& b = evens[pick(rng)];
                if (!check_pair(a, b))
                    return suite_fail(r, "freeness criterion mismatch at pi=" + partition_str(a) +
                                             " pi'=" + partition_str(b));
            }
        }
    }
    return r;
}

inline SuiteResult verify_gpa(const AlgebraSpec& spec, int max_n, unsigned long seed) {
    SuiteResult r{"gpa", true, ""};
    Caps caps{4, 25};
    for (int k = 1; k <= 2; ++k)
        if (!(trace(spec, identity_element(spec, k, caps), TraceSide::Right) == Surd(1)))
            return suite_fail(r, "Tr(1) != 1 at degree " + std::to_string(k));
    for (int k = 1; k <= std::min(max_n, 2); ++k)
        for (const Loop& l : loop_basis(spec, k, caps)) {
            LoopVector x = unit_vec(k, l);
            if (!(trace(spec, x, TraceSide::Left) == trace(spec, x, TraceSide::Right)))
                return suite_fail(r, "TrL != TrR at loop " + loop_str(l));
        }
    LoopVector e = jones_element(spec, 2, 1);
    if (!(mult(e, e) == e)) return suite_fail(r, "e^2 != e for the degree-2 Jones projection");
    if (!(star(e) == e)) return suite_fail(r, "e* != e for the degree-2 Jones projection");
    LoopVector e1 = jones_element(spec, 3, 1), e2 = jones_element(spec, 3, 2);
    LoopVector scaled = e1;
    scaled *= Surd(rat(1, spec.dim()));
    if (!(mult(mult(e1, e2), e1) == scaled))
        return suite_fail(r, "e1 e2 e1 != delta^-2 e1");
    std::vector<Loop> loops2 = loop_basis(spec, 2, caps);
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::uniform_int_distribution<std::size_t> pick(0, loops2.size() - 1);
    for (int t = 0; t < 20; ++t) {
        LoopVector x = unit_vec(2, loops2[pick(rng)]);
        LoopVector y = unit_vec(2, loops2[pick(rng)]);
        if (!(star(mult(x, y)) == mult(star(y), star(x))))
            return suite_fail(r, "star is not antimultiplicative at " + loop_str(x.terms.begin()->first) +
                                     ", " + loop_str(y.terms.begin()->first));
        if (!(trace(spec, mult(x, y), TraceSide::Right) ==
              trace(spec, mult(y, x), TraceSide::Right)))
            return suite_fail(r, "trace is not tracial at " + loop_str(x.terms.begin()->first) +
                                     ", " + loop_str(y.terms.begin()->first));
    }
    for (int k = 1; k <= std::min(max_n, 2); ++k) {
        std::vector<LoopVector> vs;
        for (const Loop& l : loop_basis(spec, k, caps)) vs.push_back(unit_vec(k, l));
        GramResult g = gram(spec, vs);
        if (!g.positive_semidefinite || g.rank != static_cast<int>(vs.size()))
            return suite_fail(r, "gram matrix degenerate at degree " + std::to_string(k));
    }
    return r;
}

inline SuiteResult verify_freeprod(int max_n) {
    SuiteResult r{"freeprod", true, ""};
    int N = std::min(max_n, 5);
    std::vector<std::pair<DimensionProfile, DimensionProfile>> pairs{
        {tlj_profile(N), tlj_profile(N)},
        {delta_profile(2, N), tlj_profile(N)},
    };
    for (const auto& [P, Q] : pairs) {
        std::string tag = P.moments.name + "*" + Q.moments.name;
        std::vector<Rational> dims = free_product_dims(P, Q, N);
        MomentProfile prod{tag, dims};
        std::vector<Rational> bc = cumulants_from_moments(prod, CumulantKind::Boolean).values;
        BooleanDecomposition dec = boolean_decomposition_dims(P, Q, N);
        if (!(bc == dec.L))
            return suite_fail(r, "boolean cumulants != L sequence for " + tag);
        Rational total(0);
        for (const auto& [key, val] : dec.per_partition) total += val;
        if (total != bc[N - 1])
            return suite_fail(r, "per-partition weights do not sum to b(" + std::to_string(N) +
                                     ") for " + tag);
        if (!(moments_from_cumulants(CumulantProfile{CumulantKind::Boolean, dec.L}).moments == dims))
            return suite_fail(r, "L sequence does not reconstruct the dimensions for " + tag);
        for (int n = 1; n <= std::min(N, 4); ++n) {
            long count = static_cast<long>(basis_labels(P, Q, n).size());
            if (Rational(count) != dims[n - 1])
                return suite_fail(r, "basis label count " + std::to_string(count) +
                                         " != dim P_" + std::to_string(n) + " for " + tag);
        }
    }
    return r;
}

inline int run_verify(std::ostream& out, const Config& cfg, const std::string& suite) {
    AlgebraSpec spec = cfg.spec_path.empty() ? AlgebraSpec("default", {1, 2})
                                             : spec_from_json(load_json(cfg.spec_path));
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("partitions")) results.push_back(verify_partitions(cfg.max_n));
    if (want("kreweras")) results.push_back(verify_kreweras(cfg.max_n));
    if (want("tangles")) results.push_back(verify_tangles(cfg.max_n, cfg.seed));
    if (want("gpa")) results.push_back(verify_gpa(spec, cfg.max_n, cfg.seed));
    if (want("freeprod")) results.push_back(verify_freeprod(cfg.max_n));
    bool ok = true;
    for (const SuiteResult& res : results) ok = ok && res.pass;
    if (json_mode(cfg)) {
        Json suites = Json::array();
        for (const SuiteResult& res : results)
            suites.push_back(Json{{"name", res.name},
                                  {"pass", res.pass},
                                  {"counterexample",
                                   res.pass ? Json(nullptr) : Json(res.counterexample)}});
        out << Json{{"seed", cfg.seed}, {"max_n", cfg.max_n}, {"suites", suites}, {"ok", ok}}.dump()
            << "\n";
    } else {
        out << "seed: " << cfg.seed << "\n";
        out << "max-n: " << cfg.max_n << "\n";
        for (const SuiteResult& res : results) {
            out << res.name << ": " << (res.pass ? "pass" : "FAIL") << "\n";
            if (!res.pass) out << "  counterexample: " << res.counterexample << "\n";
        }
        out << "verify: " << (ok ? "ok" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

inline std::string parsed_path(const CLI::App& app) {
    std::string path;
    const CLI::App* a = &app;
    while (!a->get_subcommands().empty()) {
        a = a->get_subcommands().back();
        if (!path.empty()) path += " ";
        path += a->get_name();
    }
    return path;
}

}  // namespace cli

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace cli;
    Config cfg;
    int rc = 0;
    struct {
        int n = 1;
        int index = 1;
        int k = 1;
        std::string cls = "nc";
        std::string kind = "free";
        std::string side = "right";
        std::string source = "full";
        std::string product = "free";
        std::string labels = "tl";
        std::string suite = "all";
        std::string text, text2, text3;
        std::string file, file2;
        std::vector<std::string> files;
        std::vector<std::string> perms;
    } a;

    CLI::App app{"exact calculus for non-crossing partitions, planar tangles and graph planar algebras",
                 "spindle"};
    app.require_subcommand(1);
    app.add_option("--max-n", cfg.max_n, "cap for enumerations and verification sweeps")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "sampling seed, recorded in verify output")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--spec", cfg.spec_path,
                   "algebra spec json file: {\"name\":...,\"blocks\":[m1,...]}");
    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* nc = sub(&app, "nc", "non-crossing partition calculus");
    nc->require_subcommand(1);
    {
        CLI::App* c = sub(nc, "enumerate", "list partitions of {1,...,n}");
        c->add_option("n", a.n, "ground set size")->required();
        c->add_option("--class", a.cls, "partition class")
            ->check(CLI::IsMember({"all", "nc", "interval", "even-nc"}))
            ->capture_default_str();
        c->callback([&] { rc = run_nc_enumerate(out, cfg, a.n, a.cls); });
    }
    {
        CLI::App* c = sub(nc, "kreweras", "Kreweras complement of \"{1,2},{3}\"");
        c->add_option("partition", a.text, "partition, e.g. \"{1,2},{3}\"")->required();
        c->callback([&] { rc = run_nc_kreweras(out, cfg, a.text, false); });
    }
    {
        CLI::App* c = sub(nc, "nested-kreweras", "nested complement kr' on even partitions");
        c->add_option("partition", a.text, "even partition of {1,...,2k}")->required();
        c->callback([&] { rc = run_nc_kreweras(out, cfg, a.text, true); });
    }
    {
        CLI::App* c = sub(nc, "depth", "nesting depth of each block");
        c->add_option("partition", a.text, "non-crossing partition")->required();
        c->callback([&] { rc = run_nc_depth(out, cfg, a.text); });
    }
    CLI::App* surgery = sub(nc, "surgery", "merge or split blocks");
    surgery->require_subcommand(1);
    {
        CLI::App* c = sub(surgery, "merge", "merge two blocks without crossing");
        c->add_option("partition", a.text, "non-crossing partition")->required();
        c->add_option("block1", a.text2, "first block, e.g. \"{1,4}\"")->required();
        c->add_option("block2", a.text3, "second block")->required();
        c->callback([&] { rc = run_nc_merge(out, cfg, a.text, a.text2, a.text3); });
    }
    {
        CLI::App* c = sub(surgery, "split", "split a block after its i-th element");
        c->add_option("partition", a.text, "non-crossing partition")->required();
        c->add_option("block", a.text2, "block to split")->required();
        c->add_option("i", a.index, "split position in [1,|B|-1]")->required();
        c->callback([&] { rc = run_nc_split(out, cfg, a.text, a.text2, a.index); });
    }
    {
        CLI::App* c = sub(nc, "envelope", "enveloping complement blocks of a block");
        c->add_option("partition", a.text, "non-crossing partition")->required();
        c->add_option("block", a.text2, "block of the partition")->required();
        c->callback([&] { rc = run_nc_envelope(out, cfg, a.text, a.text2); });
    }

    CLI::App* cum = sub(&app, "cum", "cumulant transforms of moment profiles");
    cum->require_subcommand(1);
    {
        CLI::App* c = sub(cum, "free", "free cumulants of a moment profile");
        c->add_option("profile", a.file, "moment profile json")->required();
        c->callback([&] { rc = run_cum(out, a.file, CumulantKind::Free); });
    }
    {
        CLI::App* c = sub(cum, "boolean", "Boolean cumulants of a moment profile");
        c->add_option("profile", a.file, "moment profile json")->required();
        c->callback([&] { rc = run_cum(out, a.file, CumulantKind::Boolean); });
    }
    {
        CLI::App* c = sub(cum, "invert", "moments from a cumulant sequence");
        c->add_option("cumulants", a.file, "json array of decimal strings")->required();
        c->add_option("--kind", a.kind, "cumulant kind")
            ->check(CLI::IsMember({"free", "boolean"}))
            ->capture_default_str();
        c->callback([&] { rc = run_cum_invert(out, a.file, a.kind); });
    }

    CLI::App* conv = sub(&app, "conv", "multiplicative free convolution");
    conv->require_subcommand(1);
    {
        CLI::App* c = sub(conv, "boxtimes", "moments of mu boxtimes nu");
        c->add_option("mu", a.file, "moment profile json")->required();
        c->add_option("nu", a.file2, "moment profile json")->required();
        c->add_option("--n", a.n, "number of moments")->required();
        c->callback([&] { rc = run_conv_boxtimes(out, cfg, a.file, a.file2, a.n); });
    }
    {
        CLI::App* c = sub(conv, "bn-check", "Boolean cumulants of boxtimes vs complement sums");
        c->add_option("mu", a.file, "moment profile json")->required();
        c->add_option("nu", a.file2, "moment profile json")->required();
        c->add_option("--n", a.n, "number of moments")->required();
        c->callback([&] { rc = run_conv_bn_check(out, cfg, a.file, a.file2, a.n); });
    }

    CLI::App* tangle = sub(&app, "tangle", "planar tangle expressions");
    tangle->require_subcommand(1);
    {
        CLI::App* c = sub(tangle, "parse", "parse and normalize an expression");
        c->add_option("expr", a.text, "e.g. \"compose(Mult 2, 1, E(2,1))\"")->required();
        c->callback([&] { rc = run_tangle_parse(out, cfg, a.text); });
    }
    {
        CLI::App* c = sub(tangle, "pi", "outer pair partition of the tangle");
        c->add_option("expr", a.text, "tangle expression")->required();
        c->callback([&] { rc = run_tangle_pi(out, cfg, a.text, false); });
    }
    {
        CLI::App* c = sub(tangle, "shading", "shading partition of the tangle");
        c->add_option("expr", a.text, "tangle expression")->required();
        c->callback([&] { rc = run_tangle_pi(out, cfg, a.text, true); });
    }
    {
        CLI::App* c = sub(tangle, "free", "test the Kreweras freeness criterion for a pair");
        c->add_option("expr1", a.text, "first tangle expression")->required();
        c->add_option("expr2", a.text2, "second tangle expression")->required();
        c->callback([&] { rc = run_tangle_free(out, cfg, a.text, a.text2); });
    }
    {
        CLI::App* c = sub(tangle, "reduce", "irreducible factorization of the tangle");
        c->add_option("expr", a.text, "tangle expression")->required();
        c->callback([&] { rc = run_tangle_reduce(out, cfg, a.text); });
    }

    CLI::App* gpa = sub(&app, "gpa", "graph planar algebra of an algebra spec");
    gpa->require_subcommand(1);
    {
        CLI::App* c = sub(gpa, "basis", "loop basis of P_n");
        c->add_option("--n", a.n, "degree")->required();
        c->callback([&] { rc = run_gpa_basis(out, cfg, a.n); });
    }
    {
        CLI::App* c = sub(gpa, "eval", "evaluate a tangle expression on loop vectors");
        c->add_option("expr", a.text, "tangle expression")->required();
        c->add_option("inputs", a.files, "loop vector json files, one per open slot");
        c->callback([&] { rc = run_gpa_eval(out, cfg, a.text, a.files); });
    }
    {
        CLI::App* c = sub(gpa, "trace", "trace of a loop vector");
        c->add_option("vector", a.file, "loop vector json file")->required();
        c->add_option("--side", a.side, "closure side")
            ->check(CLI::IsMember({"left", "right"}))
            ->capture_default_str();
        c->callback([&] { rc = run_gpa_trace(out, cfg, a.file, a.side); });
    }
    {
        CLI::App* c = sub(gpa, "gram", "Gram matrix of the realized degree-n space");
        c->add_option("--n", a.n, "degree")->required();
        c->add_option("--source", a.source, "realized vectors")
            ->check(CLI::IsMember({"full", "tl"}))
            ->capture_default_str();
        c->callback([&] { rc = run_gpa_gram(out, cfg, a.n, a.source); });
    }
    {
        CLI::App* c = sub(gpa, "tl", "Temperley-Lieb image inside P_n");
        c->add_option("--n", a.n, "degree")->required();
        c->callback([&] { rc = run_gpa_tl(out, cfg, a.n); });
    }
    {
        CLI::App* c = sub(gpa, "boolean", "Boolean orthogonal subspace dimensions");
        c->add_option("--n", a.n, "top degree")->required();
        c->add_option("--source", a.source, "realized tower")
            ->check(CLI::IsMember({"full", "tl"}))
            ->capture_default_str();
        c->callback([&] { rc = run_gpa_boolean(out, cfg, a.n, a.source); });
    }

    CLI::App* fp = sub(&app, "fp", "free product dimension towers");
    fp->require_subcommand(1);
    {
        CLI::App* c = sub(fp, "dims", "dimensions of the product tower");
        c->add_option("P", a.file, "dimension profile json")->required();
        c->add_option("Q", a.file2, "dimension profile json")->required();
        c->add_option("--n", a.n, "number of degrees")->required();
        c->add_option("--product", a.product, "product type")
            ->check(CLI::IsMember({"free", "tensor"}))
            ->capture_default_str();
        c->callback([&] { rc = run_fp_dims(out, cfg, a.file, a.file2, a.n, a.product); });
    }
    {
        CLI::App* c = sub(fp, "basis", "interleaving basis labels at degree n");
        c->add_option("P", a.file, "dimension profile json")->required();
        c->add_option("Q", a.file2, "dimension profile json")->required();
        c->add_option("--n", a.n, "degree")->required();
        c->callback([&] { rc = run_fp_basis(out, cfg, a.file, a.file2, a.n); });
    }
    {
        CLI::App* c = sub(fp, "rank", "span rank of realized product vectors per degree");
        c->add_option("specP", a.file, "algebra spec json")->required();
        c->add_option("specQ", a.file2, "algebra spec json")->required();
        c->add_option("--n", a.n, "top degree (<= 3)")->required();
        c->add_option("--labels", a.labels, "label vectors")
            ->check(CLI::IsMember({"tl", "full"}))
            ->capture_default_str();
        c->callback([&] { rc = run_fp_rank(out, a.file, a.file2, a.n, a.labels); });
    }
    {
        CLI::App* c = sub(fp, "wreath-moments", "fixed-point character moments of a wreath product");
        c->add_option("alpha", a.file, "character moment profile json")->required();
        c->add_option("beta", a.file2, "character moment profile json")->required();
        c->add_option("--n", a.n, "number of moments")->required();
        c->callback([&] { rc = run_fp_wreath(out, cfg, a.file, a.file2, a.n); });
    }

    CLI::App* group = sub(&app, "group", "permutation group characters");
    group->require_subcommand(1);
    {
        CLI::App* c = sub(group, "moments", "moments of the fixed-point character");
        c->add_option("--perm", a.perms, "generator as images, e.g. \"2,1,3\" (repeatable)")
            ->required();
        c->add_option("--k", a.k, "number of moments")->required();
        c->callback([&] { rc = run_group_moments(out, cfg, a.perms, a.k); });
    }

    {
        CLI::App* c = sub(&app, "verify", "run property sweeps and report pass/fail");
        c->add_option("suite", a.suite, "which suite to run")
            ->check(CLI::IsMember({"all", "partitions", "kreweras", "tangles", "gpa", "freeprod"}))
            ->capture_default_str();
        c->callback([&] { rc = run_verify(out, cfg, a.suite); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const CLI::App* leaf = &app;
        while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().back();
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return leaf->exit(e, out, err);
        err << "error: " << e.what() << "\n";
        std::string path = parsed_path(app);
        err << "usage: see 'spindle " << (path.empty() ? "--help" : path + " --help") << "'\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        std::string path = parsed_path(app);
        err << "usage: see 'spindle " << (path.empty() ? "--help" : path + " --help") << "'\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace spindle
