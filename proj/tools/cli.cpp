#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include "dedekind/chains.hpp"
#include "dedekind/cuts.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/io.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/quad_ideals.hpp"

namespace dedekind::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::uint64_t parse_seed(const std::string& s) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("seed must be a non-negative integer, got '" + s + "'");
    }
}

/// Truncated decimal expansion with `digits` places.
std::string decimal_string(const BigRational& q, unsigned digits) {
    BigInt scale = big_pow(10, digits);
    BigInt scaled = floor(q * BigRational(scale));
    std::string sign = scaled < 0 ? "-" : "";
    BigInt mag = big_abs(scaled);
    std::string s = mag.get_str();
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    return sign + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

// --- operand parsing ---------------------------------------------------------

/// "p/q" or decimal, "root:N:Q", "poly:c0,c1,...:lo:hi", or a JSON cut object.
Cut parse_cut(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad cut JSON: ") + e.what());
        }
        return io::cut_from_json(j);
    }
    if (text.rfind("root:", 0) == 0) {
        auto parts = split(text.substr(5), ':');
        if (parts.size() != 2) throw ParseError("expected root:N:Q, got '" + text + "'");
        BigInt n = parse_bigint(parts[0]);
        if (n < 1 || !n.fits_ulong_p()) throw DomainError("root index must be a positive integer");
        return cut_root(n.get_ui(), parse_rational(parts[1]));
    }
    if (text.rfind("poly:", 0) == 0) {
        auto parts = split(text.substr(5), ':');
        if (parts.size() != 3) throw ParseError("expected poly:c0,c1,...:lo:hi, got '" + text + "'");
        std::vector<BigInt> coeffs;
        for (const auto& c : split(parts[0], ',')) coeffs.push_back(parse_bigint(c));
        return Cut::algebraic(IntPolynomial(std::move(coeffs)), parse_rational(parts[1]), parse_rational(parts[2]));
    }
    return cut_of_rational(parse_rational(text));
}

std::vector<QuadInt> parse_gens(const std::string& s) {
    std::vector<QuadInt> out;
    for (const auto& g : split(s, ',')) out.push_back(parse_quadint(g));
    if (out.empty()) throw ParseError("empty generator list");
    return out;
}

json read_json_source(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot read '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON in '") + path + "': " + e.what());
    }
}

unsigned long parse_count(const std::string& s, const char* what) {
    BigInt v = parse_bigint(s);
    if (v < 1 || !v.fits_ulong_p()) throw DomainError(std::string(what) + " must be a positive integer");
    return v.get_ui();
}

/// n5, m3, free-modular-3, free-distributive-3, chain:K, divisors:N.
FiniteLattice named_lattice(const std::string& name) {
    if (name == "n5") return n5();
    if (name == "m3") return m3();
    if (name == "free-modular-3") return free_modular_3();
    if (name == "free-distributive-3") return free_distributive_3();
    if (name.rfind("chain:", 0) == 0) return chain_lattice(parse_count(name.substr(6), "chain length"));
    if (name.rfind("divisors:", 0) == 0) return integer_divisor_lattice(parse_count(name.substr(9), "divisor base"));
    throw ParseError("unknown lattice name '" + name + "'");
}

struct LatticeSource {
    std::string name;
    std::string input;

    void attach(CLI::App* app) {
        auto* n = app->add_option("--name", name, "built-in lattice: n5, m3, free-modular-3, free-distributive-3, chain:K, divisors:N");
        auto* i = app->add_option("--input", input, "lattice JSON file {n, labels, join, meet}, '-' for stdin");
        n->excludes(i);
    }

    OperationTables tables() const {
        if (!name.empty()) return named_lattice(name).tables();
        if (!input.empty()) return io::tables_from_json(read_json_source(input));
        throw ParseError("give --name or --input");
    }

    FiniteLattice lattice() const { return FiniteLattice::from_tables(tables()); }
};

std::vector<std::size_t> parse_index_list(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& part : split(s, ',')) {
        BigInt v = parse_bigint(part);
        if (v < 0 || !v.fits_ulong_p()) throw ParseError("bad index '" + part + "'");
        out.push_back(v.get_ui());
    }
    return out;
}

ElementSet parse_element_set(const std::string& s) {
    ElementSet out = parse_index_list(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const char* ordering_name(std::strong_ordering o) {
    if (o < 0) return "LT";
    if (o > 0) return "GT";
    return "EQ";
}

LadderLevel parse_level(const std::string& s) {
    if (s == "0" || s == "succ") return LadderLevel::succ;
    if (s == "1" || s == "add") return LadderLevel::add;
    if (s == "2" || s == "mul") return LadderLevel::mul;
    if (s == "3" || s == "pow") return LadderLevel::pow;
    throw ParseError("ladder level must be succ, add, mul, pow or 0..3");
}

/// Rejects inputs whose result would not fit the 63-bit counter behind Natural.
void guard_ladder(LadderLevel level, unsigned long long m, unsigned long long n) {
    const BigInt limit = BigInt(1) << 63;
    BigInt bm(static_cast<unsigned long>(m)), bn(static_cast<unsigned long>(n)), r;
    switch (level) {
        case LadderLevel::succ: r = bm + 1; break;
        case LadderLevel::add: r = bm + bn; break;
        case LadderLevel::mul: r = bm * bn; break;
        case LadderLevel::pow: r = n > 64 && m > 1 ? limit : big_pow(bm, n); break;
    }
    if (r >= limit) throw DomainError("ladder result exceeds 2^63");
}

json lattice_summary(const FiniteLattice& L) {
    json j = io::to_json(L);
    return j;
}

// --- the application ---------------------------------------------------------

class Dispatcher {
public:
    explicit Dispatcher(std::uint64_t default_seed) : seed_(default_seed) {
        app_.name("dedekind-forge");
        app_.description("Exact cuts, quadratic ideals, finite lattices and simply infinite systems.");
        app_.require_subcommand(1);
        app_.add_option("--seed", seed_text_, "seed for commands that sample (default fixed, or DEDEKIND_FORGE_SEED)");
        build_cut();
        build_ideal();
        build_lattice();
        build_chain();
        build_numbers();
        build_arith();
    }

    CommandResult run(std::vector<std::string> args) {
        std::reverse(args.begin(), args.end());
        CommandResult out;
        try {
            app_.parse(args);
        } catch (const CLI::CallForHelp&) {
            out.text = app_help();
            return out;
        } catch (const CLI::CallForAllHelp&) {
            out.text = app_.help("", CLI::AppFormatMode::All);
            return out;
        } catch (const CLI::ParseError& e) {
            out.status = Status::usage_error;
            out.diagnostics.push_back(e.what());
            return out;
        }
        try {
            if (!seed_text_.empty()) seed_ = parse_seed(seed_text_);
            for (auto& [cmd, action] : actions_)
                if (cmd->parsed()) {
                    action(out);
                    return out;
                }
            throw ParseError("no command given");
        } catch (const ParseError& e) {
            out = {};
            out.status = Status::usage_error;
            out.diagnostics.push_back(e.what());
        } catch (const DomainError& e) {
            out = {};
            out.status = Status::domain_error;
            out.diagnostics.push_back(e.what());
        } catch (const Error& e) {
            out = {};
            out.status = Status::domain_error;
            out.diagnostics.push_back(e.what());
        }
        return out;
    }

private:
    using Action = std::function<void(CommandResult&)>;

    std::string app_help() {
        for (auto* group : app_.get_subcommands())
            for (auto* cmd : group->get_subcommands())
                if (cmd->parsed()) return cmd->help();
        for (auto* group : app_.get_subcommands())
            if (group->parsed()) return group->help();
        return app_.help();
    }

    CLI::App* group(const std::string& name, const std::string& desc) {
        auto* g = app_.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    }

    CLI::App* command(CLI::App* g, const std::string& name, const std::string& desc, Action action) {
        auto* c = g->add_subcommand(name, desc);
        actions_.emplace_back(c, std::move(action));
        return c;
    }

    // cut ---------------------------------------------------------------------
    void build_cut() {
        auto* g = group("cut", "cuts of the rationals (rationals and real algebraic numbers)");
        const std::string cut_help = "cut: p/q, decimal, root:N:Q, poly:c0,c1,...:lo:hi, or JSON";

        auto* ofr = command(g, "of-rational", "the cut produced by a rational", [this](CommandResult& r) {
            r.payload = io::to_json(cut_of_rational(parse_rational(a1_)));
        });
        ofr->add_option("q", a1_, "rational")->required();

        auto* root = command(g, "root", "the cut of the n-th root of q >= 0", [this](CommandResult& r) {
            r.payload = io::to_json(cut_root(parse_count(a1_, "root index"), parse_rational(a2_)));
        });
        root->add_option("n", a1_, "root index")->required();
        root->add_option("q", a2_, "radicand")->required();

        auto* member = command(g, "member", "is q in the lower class", [this](CommandResult& r) {
            Cut c = parse_cut(a1_);
            BigRational q = parse_rational(a2_);
            r.payload = {{"cut", io::to_json(c)}, {"q", q.str()}, {"lower_class", cut_member(c, q)}};
        });
        member->add_option("cut", a1_, cut_help)->required();
        member->add_option("q", a2_, "rational")->required();

        auto* cmp = command(g, "cmp", "compare two cuts", [this](CommandResult& r) {
            r.payload = {{"cmp", ordering_name(cut_cmp(parse_cut(a1_), parse_cut(a2_)))}};
        });
        cmp->add_option("x", a1_, cut_help)->required();
        cmp->add_option("y", a2_, cut_help)->required();

        auto* add = command(g, "add", "sum of two cuts", [this](CommandResult& r) {
            r.payload = io::to_json(cut_add(parse_cut(a1_), parse_cut(a2_)));
        });
        add->add_option("x", a1_, cut_help)->required();
        add->add_option("y", a2_, cut_help)->required();

        auto* mul = command(g, "mul", "product of two cuts", [this](CommandResult& r) {
            r.payload = io::to_json(cut_mul(parse_cut(a1_), parse_cut(a2_)));
        });
        mul->add_option("x", a1_, cut_help)->required();
        mul->add_option("y", a2_, cut_help)->required();

        auto* approx = command(g, "approx", "rational bracket of width <= eps", [this](CommandResult& r) {
            Cut c = cut_from_flags();
            BigRational eps = parse_rational(eps_);
            Bracket b = cut_approx(c, eps);
            r.payload = io::to_json(b);
            r.payload["cut"] = io::to_json(c);
            r.payload["eps"] = eps.str();
            r.payload["lo_decimal"] = decimal_string(b.lo, 15);
            r.payload["hi_decimal"] = decimal_string(b.hi, 15);
        });
        approx->add_option("cut", a1_, cut_help);
        approx->add_option("--root", root_args_, "n q: the n-th root of q")->expected(2);
        approx->add_option("--eps", eps_, "bracket width bound")->required();

        auto* part = command(g, "partition-check", "classify sampled rationals", [this](CommandResult& r) {
            Cut c = cut_from_flags();
            std::mt19937_64 rng(seed_);
            Bracket near = cut_approx(c, BigRational(1, 8));
            std::vector<BigRational> sample;
            for (unsigned i = 0; i < samples_; ++i) {
                // half near the cut, half spread over [-100, 100]
                long num = static_cast<long>(rng() % 20001) - 10000;
                BigRational q = i % 2 == 0 ? near.lo + BigRational(num, 40000) : BigRational(num, 100);
                sample.push_back(q);
            }
            Partition p = cut_partition(c, sample);
            r.payload = {{"cut", io::to_json(c)},
                         {"ok", cut_partition_check(c, sample)},
                         {"samples", sample.size()},
                         {"lower", p.lower.size()},
                         {"upper", p.upper.size()},
                         {"seed", seed_}};
        });
        part->add_option("cut", a1_, cut_help);
        part->add_option("--root", root_args_, "n q: the n-th root of q")->expected(2);
        part->add_option("--samples", samples_, "number of sampled rationals")->check(CLI::Range(1u, 100000u));
    }

    Cut cut_from_flags() {
        if (!root_args_.empty()) {
            if (!a1_.empty()) throw ParseError("give either a cut or --root, not both");
            return cut_root(parse_count(root_args_[0], "root index"), parse_rational(root_args_[1]));
        }
        if (a1_.empty()) throw ParseError("no cut given");
        return parse_cut(a1_);
    }

    // ideal -------------------------------------------------------------------
    void build_ideal() {
        auto* g = group("ideal", "ideals of quadratic integer rings; elements are written x+y*w");
        auto ring_opt = [this](CLI::App* c) {
            c->add_option("-d", d_, "squarefree d of Q(sqrt(d))")->required()->allow_extra_args(false);
        };
        auto gens_opt = [this](CLI::App* c, std::size_t count) {
            c->add_option("--gens", gens_, "comma-separated generators, e.g. \"2,1+w\"")
                ->required()
                ->expected(static_cast<int>(count));
        };

        auto* make = command(g, "make", "normal form of the ideal generated by --gens", [this](CommandResult& r) {
            r.payload = io::to_json(ideal(0));
        });
        ring_opt(make);
        gens_opt(make, 1);

        auto binary = [&](const std::string& name, const std::string& desc, std::function<json(const Ideal&, const Ideal&)> f) {
            auto* c = command(g, name, desc, [this, f](CommandResult& r) { r.payload = f(ideal(0), ideal(1)); });
            ring_opt(c);
            gens_opt(c, 2);
        };
        binary("add", "sum (gcd) of two ideals", [](const Ideal& I, const Ideal& J) { return io::to_json(ideal_add(I, J)); });
        binary("mul", "product of two ideals", [](const Ideal& I, const Ideal& J) { return io::to_json(ideal_mul(I, J)); });
        binary("intersect", "intersection (lcm) of two ideals",
               [](const Ideal& I, const Ideal& J) { return io::to_json(ideal_intersect(I, J)); });
        binary("divides", "does the first ideal divide (contain) the second", [](const Ideal& I, const Ideal& J) {
            return json{{"divides", ideal_divides(I, J)}, {"divisor", io::to_json(I)}, {"ideal", io::to_json(J)}};
        });

        auto* contains = command(g, "contains", "membership of a ring element", [this](CommandResult& r) {
            Ideal I = ideal(0);
            QuadInt z = parse_quadint(elem_);
            r.payload = {{"ideal", io::to_json(I)}, {"element", io::to_json(z)}, {"contains", ideal_contains(I, z)}};
        });
        ring_opt(contains);
        gens_opt(contains, 1);
        contains->add_option("--elem", elem_, "ring element")->required();

        auto* split_cmd = command(g, "split-prime", "how a rational prime decomposes", [this](CommandResult& r) {
            QuadraticRing R = ring_of(parse_bigint(d_));
            SplitResult s = split_prime(R, parse_bigint(p_));
            json primes = json::array();
            for (const auto& P : s.primes) primes.push_back(io::to_json(P));
            r.payload = {{"ring", R.tag()}, {"p", p_}, {"kind", to_string(s.kind)}, {"primes", primes}};
        });
        ring_opt(split_cmd);
        split_cmd->add_option("-p", p_, "rational prime")->required();

        auto* factor = command(g, "factor", "prime ideal factorization", [this](CommandResult& r) {
            Ideal I = ideal(0);
            IdealFactorization f = ideal_factor(I);
            r.payload = {{"ideal", io::to_json(I)},
                         {"factors", io::to_json(f)},
                         {"reconstructed", factorization_product(I.ring(), f) == I}};
        });
        ring_opt(factor);
        gens_opt(factor, 1);

        auto* norm = command(g, "norm-search", "find an element of norm n", [this](CommandResult& r) {
            QuadraticRing R = ring_of(parse_bigint(d_));
            auto z = has_element_of_norm(R, parse_bigint(n_), parse_bigint(bound_));
            r.payload = {{"ring", R.tag()}, {"norm", n_}, {"found", z.has_value()},
                         {"exhaustive", R.d < 0}, {"element", z ? io::to_json(*z) : json(nullptr)}};
        });
        ring_opt(norm);
        norm->add_option("-n", n_, "target norm")->required();
        norm->add_option("--bound", bound_, "coordinate bound for real rings");

        auto* divl = command(g, "divisor-lattice", "lattice of all divisors", [this](CommandResult& r) {
            FiniteLattice L = divisor_lattice(ideal(0));
            if (dot_) {
                r.text = to_dot(L, "divisors");
            } else {
                r.payload = lattice_summary(L);
            }
        });
        ring_opt(divl);
        gens_opt(divl, 1);
        divl->add_flag("--dot", dot_, "emit a DOT Hasse diagram instead of JSON");
    }

    Ideal ideal(std::size_t i) {
        if (i >= gens_.size()) throw ParseError("missing --gens");
        return ideal_from_gens(ring_of(parse_bigint(d_)), parse_gens(gens_[i]));
    }

    // lattice -----------------------------------------------------------------
    void build_lattice() {
        auto* g = group("lattice", "finite lattices given by join and meet tables");

        auto* check = command(g, "check", "Dualgruppe axioms with first counterexamples", [this](CommandResult& r) {
            r.payload = io::to_json(check_dualgruppe(src_.tables()));
        });
        src_.attach(check);

        auto* mod = command(g, "modular", "the modular law over all triples", [this](CommandResult& r) {
            FiniteLattice L = src_.lattice();
            LawReport m = check_modular(L);
            ModularEquivalenceReport e = modular_equivalence(L);
            r.payload = {{"holds", m.holds}, {"witness", io::to_json(m.witness)},
                         {"m1", e.m1}, {"m2", e.m2}, {"m_equiv_m1m2", e.equivalent()}};
        });
        src_.attach(mod);

        auto* dist = command(g, "distributive", "both distributive laws over all triples", [this](CommandResult& r) {
            DistributiveReport d = check_distributive(src_.lattice());
            r.payload = {{"holds", d.holds}, {"d1_holds", d.d1_holds}, {"d2_holds", d.d2_holds},
                         {"witness", io::to_json(d.witness)}};
        });
        src_.attach(dist);

        auto fixed = [&](const std::string& name, const std::string& desc, std::function<FiniteLattice()> make) {
            auto* c = command(g, name, desc, [this, make](CommandResult& r) {
                FiniteLattice L = make();
                if (count_) {
                    r.text = std::to_string(L.size()) + "\n";
                } else {
                    r.payload = lattice_summary(L);
                }
            });
            c->add_flag("--count", count_, "print only the number of elements");
        };
        fixed("n5", "the pentagon", [] { return n5(); });
        fixed("m3", "the diamond", [] { return m3(); });
        fixed("free-modular-3", "free modular lattice on three generators, by subspace search",
              [] { return free_modular_3(); });
        fixed("free-distributive-3", "free distributive lattice on three generators",
              [] { return free_distributive_3(); });

        auto* closure = command(g, "closure", "sublattice generated inside an ambient", [this](CommandResult& r) {
            r.payload = closure_payload();
        });
        closure->add_option("--universe", universe_, "subset ambient: number of points");
        closure->add_option("--set", sets_, "subset generator, comma-separated points (repeatable)");
        closure->add_option("--field", field_, "subspace ambient: prime field size");
        closure->add_option("--dim", dim_, "subspace ambient: dimension");
        closure->add_option("--space", spaces_, "subspace generator, comma-separated digit vectors (repeatable)");
        closure->add_option("--name", src_.name, "lattice ambient: built-in name");
        closure->add_option("--elements", elements_, "lattice ambient: comma-separated element ids");

        auto* hasse = command(g, "hasse", "covering pairs", [this](CommandResult& r) {
            FiniteLattice L = src_.lattice();
            json edges = json::array();
            for (auto [lo, hi] : hasse_edges(L)) edges.push_back({lo, hi});
            r.payload = {{"n", L.size()}, {"labels", L.labels()}, {"edges", edges}};
        });
        src_.attach(hasse);

        auto* dot = command(g, "dot", "Hasse diagram as DOT", [this](CommandResult& r) {
            r.text = to_dot(src_.lattice(), src_.name.empty() ? "lattice" : src_.name);
        });
        src_.attach(dot);
    }

    json closure_payload() {
        auto pack = [](const auto& sub) {
            json j = io::to_json(sub.lattice);
            j["generators"] = sub.generators;
            return j;
        };
        int ambients = (universe_ > 0) + (field_ > 0) + (!src_.name.empty());
        if (ambients != 1) throw ParseError("choose exactly one ambient: --universe, --field/--dim, or --name");
        if (universe_ > 0) {
            SetAmbient amb(universe_);
            std::vector<std::uint64_t> gens;
            for (const auto& s : sets_) {
                std::uint64_t m = 0;
                for (auto p : parse_index_list(s)) {
                    if (p >= universe_) throw DomainError("point " + std::to_string(p) + " outside the universe");
                    m |= std::uint64_t{1} << p;
                }
                gens.push_back(m);
            }
            return pack(generate_sublattice(amb, gens));
        }
        if (field_ > 0) {
            SubspaceAmbient amb(field_, dim_);
            std::vector<Subspace> gens;
            for (const auto& s : spaces_) {
                std::vector<SubspaceAmbient::Vector> rows;
                for (const auto& v : split(s, ',')) {
                    SubspaceAmbient::Vector row;
                    for (char ch : v) {
                        if (ch < '0' || ch > '9') throw ParseError("vector digits expected, got '" + v + "'");
                        row.push_back(static_cast<std::uint8_t>(ch - '0'));
                    }
                    rows.push_back(row);
                }
                gens.push_back(amb.span(rows));
            }
            return pack(generate_sublattice(amb, gens));
        }
        FiniteLattice L = named_lattice(src_.name);
        std::vector<ElementId> gens = parse_index_list(elements_);
        return pack(generate_sublattice(LatticeAmbient(L), gens));
    }

    // chain -------------------------------------------------------------------
    void build_chain() {
        auto* g = group("chain", "chains of a finite self-map");
        auto map_opt = [this](CLI::App* c) {
            c->add_option("--map", map_, "images of 0..n-1, comma-separated")->required();
        };
        auto* closure = command(g, "closure", "least chain containing the seed", [this](CommandResult& r) {
            auto dyn = FiniteDynamics::make(parse_index_list(map_));
            r.payload = {{"closure", chain_closure(dyn, parse_element_set(set_))}};
        });
        map_opt(closure);
        closure->add_option("--seed-set", set_, "seed elements, comma-separated");

        auto* is = command(g, "is-chain", "is phi(K) inside K", [this](CommandResult& r) {
            auto dyn = FiniteDynamics::make(parse_index_list(map_));
            r.payload = {{"is_chain", is_chain(dyn, parse_element_set(set_))}};
        });
        map_opt(is);
        is->add_option("--set", set_, "elements of K, comma-separated");

        auto* sim = command(g, "similar", "is the map injective", [this](CommandResult& r) {
            r.payload = {{"similar", is_similar(FiniteDynamics::make(parse_index_list(map_)))}};
        });
        map_opt(sim);
    }

    // numbers -----------------------------------------------------------------
    void build_numbers() {
        auto* g = group("numbers", "simply infinite systems and arithmetic from successor");
        const std::string pres = "presentation: unary, binary, evens, cyclic, collapsing";

        auto* sis = command(g, "sis-check", "axioms alpha..delta on a prefix", [this](CommandResult& r) {
            auto s = presentation_by_name(from_);
            r.payload = io::to_json(check_simply_infinite_prefix(s, prefix_));
            r.payload["presentation"] = s.name;
            r.payload["n"] = prefix_;
        });
        sis->add_option("--presentation", from_, pres)->required();
        sis->add_option("-n", prefix_, "prefix length")->required();

        auto* ladder = command(g, "ladder", "succ, add, mul or pow built by repetition", [this](CommandResult& r) {
            LadderLevel level = parse_level(level_);
            unsigned long long m = parse_count(m_, "m"), n = parse_count(lad_n_, "n");
            guard_ladder(level, m, n);
            Natural v = ops_ladder(level, Natural::from_count(m), Natural::from_count(n));
            r.payload = {{"level", level_}, {"m", m}, {"n", n}, {"result", std::to_string(v.count())}};
        });
        ladder->add_option("--level", level_, "succ|add|mul|pow or 0..3")->required();
        ladder->add_option("-m", m_, "first argument (>= 1)")->required();
        ladder->add_option("-n", lad_n_, "second argument (>= 1)")->default_val("1");

        auto* iso = command(g, "iso", "the structure-preserving prefix map", [this](CommandResult& r) {
            auto s1 = presentation_by_name(from_), s2 = presentation_by_name(to_);
            IsoResult res = categorical_iso(s1, s2, prefix_);
            json table = json::array();
            for (const auto& [a, b] : res.table) table.push_back({a, b});
            r.payload = {{"from", s1.name}, {"to", s2.name}, {"n", prefix_}, {"verified", res.verified}, {"table", table}};
            if (prefix_ <= 8) r.payload["morphism_count"] = count_prefix_morphisms(s1, s2, prefix_);
        });
        iso->add_option("--from", from_, pres)->required();
        iso->add_option("--to", to_, pres)->required();
        iso->add_option("-n", prefix_, "prefix length")->required();

        auto* df = command(g, "dedekind-finite", "no injection into a proper subset (size <= 6)",
                           [this](CommandResult& r) {
                               r.payload = {{"size", size_}, {"dedekind_finite", dedekind_finite_check(size_)}};
                           });
        df->add_option("--size", size_, "carrier size")->required();
    }

    // arith -------------------------------------------------------------------
    void build_arith() {
        auto* g = group("arith", "integer gcd/lcm laws");
        auto* mc = command(g, "modular-check", "the two gcd/lcm modular identities", [this](CommandResult& r) {
            ModularLawReport m = gcd_lcm_modular_check(parse_bigint(a1_), parse_bigint(a2_), parse_bigint(a3_));
            r.payload = {{"m1", {{"lhs", m.m1_lhs.get_str()}, {"rhs", m.m1_rhs.get_str()}, {"holds", m.m1}}},
                         {"m2", {{"lhs", m.m2_lhs.get_str()}, {"rhs", m.m2_rhs.get_str()}, {"holds", m.m2}}}};
        });
        mc->add_option("a", a1_)->required();
        mc->add_option("b", a2_)->required();
        mc->add_option("c", a3_)->required();
    }

    CLI::App app_;
    std::vector<std::pair<CLI::App*, Action>> actions_;
    std::uint64_t seed_;
    std::string seed_text_;

    std::string a1_, a2_, a3_, eps_;
    std::vector<std::string> root_args_;
    unsigned samples_ = 200;

    std::string d_, p_, n_, bound_ = "100", elem_;
    std::vector<std::string> gens_;
    bool dot_ = false;

    LatticeSource src_;
    bool count_ = false;
    unsigned universe_ = 0, field_ = 0, dim_ = 0;
    std::vector<std::string> sets_, spaces_;
    std::string elements_;

    std::string map_, set_;

    std::string from_, to_, level_, m_, lad_n_;
    std::size_t prefix_ = 0, size_ = 0;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
    std::uint64_t seed = kDefaultSeed;
    if (env_seed && !env_seed->empty()) {
        try {
            seed = parse_seed(*env_seed);
        } catch (const ParseError& e) {
            CommandResult r;
            r.status = Status::usage_error;
            r.diagnostics.push_back(std::string("DEDEKIND_FORGE_SEED: ") + e.what());
            return r;
        }
    }
    Dispatcher d(seed);
    return d.run(args);
}

}  // namespace dedekind::cli
