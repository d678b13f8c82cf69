// parikh: command-line front end over JSON machine documents.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "parikh/closure.hpp"
#include "parikh/io.hpp"
#include "parikh/parikh_image.hpp"
#include "parikh/pumping.hpp"

using namespace parikh;

namespace {

enum Exit { Ok = 0, Negative = 1, Invalid = 2, Resource = 3, NotSupported = 4 };

struct Options {
    bool verbose = false;
    std::string op;
    std::string map;
    std::string formula;
    std::size_t fuel = 1'000'000;
    std::size_t bound = 4;
    bool list = false;
    std::vector<std::string> args;
};

Limits limits_from_env() {
    if (const char* b = std::getenv("RESOURCE_BUDGET")) {
        try {
            return Limits::uniform(std::stoull(b));
        } catch (const std::exception&) {
            throw InvalidArgument("RESOURCE_BUDGET must be a positive integer");
        }
    }
    return {};
}

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load(const std::string& path) { return io::parse(slurp(path)); }

Machine load_machine(const std::string& path) { return io::machine_from_json(load(path)); }

Ca load_ca(const std::string& path, const Limits& limits) {
    Machine m = load_machine(path);
    if (auto* c = std::get_if<Ca>(&m)) return *c;
    if (auto* p = std::get_if<Pa>(&m)) return pa_to_ca(*p, limits);
    throw Unsupported(std::string("this command needs a ca or pa document, got ") + model_name(m));
}

Apa load_apa(const std::string& path) {
    Machine m = load_machine(path);
    if (auto* a = std::get_if<Apa>(&m)) return *a;
    throw Unsupported(std::string("this command needs an apa document, got ") + model_name(m));
}

Json result(const std::string& command) { return {{"kind", "result"}, {"command", command}}; }

Json word_json(const Word& w) { return to_utf8(w); }

Json scheme_json(const Nfa& a, const LinearPathScheme& s) {
    Json cycles = Json::array();
    for (const auto& c : s.cycles) {
        cycles.push_back({{"anchor", c.anchor}, {"path", io::to_json(c.cycle)}, {"word", word_json(label_of(a, c.cycle))}});
    }
    return {{"base", io::to_json(s.base)}, {"base_word", word_json(label_of(a, s.base))}, {"cycles", cycles}};
}

class Runner {
public:
    Runner(const Options& o, const Limits& l) : o_(o), limits_(l) {}

    int run(const std::string& cmd) {
        const auto& a = o_.args;
        if (cmd == "member") {
            need(2);
            Machine m = load_machine(a[0]);
            Word w = from_utf8(a[1]);
            Json out = result(cmd);
            out["word"] = a[1];
            bool in;
            if (auto* c = std::get_if<Ca>(&m)) {
                auto r = accepting_run(*c, w, limits_);
                in = r.has_value();
                if (r) out["run"] = io::to_json(r->path);
            } else {
                in = machine_accepts(m, w, limits_, o_.fuel);
            }
            out["result"] = in;
            return emit(out, in, std::string("'") + a[1] + (in ? "' is accepted" : "' is rejected"));
        }
        if (cmd == "empty") {
            need(1);
            Ca m = load_ca(a[0], limits_);
            bool e = is_empty(m, limits_);
            Json out = result(cmd);
            out["result"] = e;
            if (!e) out["witness"] = word_json(*some_word(m, limits_));
            return emit(out, e, e ? "the language is empty" : "the language is not empty");
        }
        if (cmd == "cardinality") {
            need(1);
            auto c = cardinality(load_ca(a[0], limits_), limits_);
            Json out = result(cmd);
            out["result"] = to_string(c.kind);
            if (c.count) out["count"] = to_string(*c.count);
            return emit(out, true, std::string("cardinality: ") + to_string(c.kind));
        }
        if (cmd == "universal") {
            need(1);
            return inclusion_result(cmd, universal(load_ca(a[0], limits_), limits_));
        }
        if (cmd == "subset") {
            need(2);
            return inclusion_result(cmd, inclusion(load_ca(a[0], limits_), load_ca(a[1], limits_), limits_));
        }
        if (cmd == "combine") {
            need(2);
            CombineOp op;
            if (o_.op == "union") {
                op = CombineOp::Union;
            } else if (o_.op == "intersect") {
                op = CombineOp::Intersection;
            } else if (o_.op == "concat") {
                op = CombineOp::Concatenation;
            } else {
                throw InvalidArgument("--op must be union, intersect or concat");
            }
            return machine(combine(load_ca(a[0], limits_), load_ca(a[1], limits_), op, limits_));
        }
        if (cmd == "complement") {
            need(1);
            return machine(complement_det(load_ca(a[0], limits_), limits_));
        }
        if (cmd == "hom" || cmd == "invhom") {
            need(1);
            if (o_.map.empty()) throw InvalidArgument("--map=<morphism document> is required");
            Morphism h = io::morphism_from_json(load(o_.map));
            Ca m = load_ca(a[0], limits_);
            return machine(cmd == "hom" ? apply_morphism(m, h, limits_) : inverse_morphism(m, h, limits_));
        }
        if (cmd == "comm-closure") {
            need(1);
            return machine(commutative_closure(load_ca(a[0], limits_), limits_));
        }
        if (cmd == "parikh-image") {
            need(1);
            Ca m = load_ca(a[0], limits_);
            Json out = result(cmd);
            out["alphabet"] = io::symbols_to_json(m.alphabet());
            out["result"] = io::to_json(letter_image(m, limits_));
            return emit(out, true, "letter image computed");
        }
        if (cmd == "bounded-sublanguage") {
            need(1);
            Ca m = load_ca(a[0], limits_);
            Json schemes = Json::array();
            for (const auto& c : m.clauses()) {
                for (const auto& s : bounded_sublanguage(m.automaton(), c.finals, limits_)) {
                    schemes.push_back(scheme_json(m.automaton(), s));
                }
            }
            Json out = result(cmd);
            out["result"] = schemes;
            return emit(out, true, std::to_string(schemes.size()) + " linear path schemes");
        }
        if (cmd == "to-ca") {
            need(1);
            return machine(load_ca(a[0], limits_));
        }
        if (cmd == "embed-apa") {
            need(1);
            return machine(embed_ca(load_ca(a[0], limits_)));
        }
        if (cmd == "linearize") {
            need(1);
            return machine(linearize(load_apa(a[0])));
        }
        if (cmd == "q-to-n") {
            need(1);
            return machine(rationals_to_naturals(load_apa(a[0]), limits_));
        }
        if (cmd == "normalize-2state") {
            need(1);
            return machine(normalize_two_state(load_apa(a[0]), limits_));
        }
        if (cmd == "to-rbcm") {
            need(1);
            Ca m = load_ca(a[0], limits_);
            if (o_.formula.empty()) return machine(compile_to_rbcm(m));
            return machine(compile_to_rbcm(m, io::formula_from_json(load(o_.formula))));
        }
        if (cmd == "simulate") {
            need(2);
            Machine m = load_machine(a[0]);
            auto* r = std::get_if<Rbcm>(&m);
            if (!r) throw Unsupported("simulate needs an rbcm document");
            auto s = simulate(*r, from_utf8(a[1]), o_.fuel);
            Json out = result(cmd);
            out["result"] = to_string(s.outcome);
            out["steps"] = s.steps;
            out["bound_violated"] = s.bound_violated;
            out["nondeterministic_step"] = s.nondeterministic_step;
            if (s.trace) {
                Json configs = Json::array();
                for (const auto& c : s.trace->configurations) {
                    configs.push_back({{"state", c.state}, {"head", c.head}, {"counters", c.counters}});
                }
                out["trace"] = configs;
                out["reversals"] = s.trace->reversals;
            }
            if (s.outcome == Outcome::FuelExhausted) {
                std::cout << out.dump(2) << '\n';
                if (o_.verbose) std::cerr << "fuel exhausted after " << s.steps << " steps\n";
                return Resource;
            }
            return emit(out, s.outcome == Outcome::Accept, std::string(to_string(s.outcome)));
        }
        if (cmd == "pump") {
            need(2);
            Ca m = load_ca(a[0], limits_);
            auto d = pump_decompose(m, from_utf8(a[1]), std::nullopt, limits_);
            Json out = result(cmd);
            out["constants"] = {{"p", d.constants.p}, {"m", d.constants.m}, {"l", d.constants.l}};
            out["u"] = word_json(d.u);
            out["v"] = word_json(d.v);
            out["x"] = word_json(d.x);
            out["z"] = word_json(d.z);
            out["paths"] = {{"u", io::to_json(d.eta_u)},
                            {"v", io::to_json(d.eta_v)},
                            {"x", io::to_json(d.eta_x)},
                            {"z", io::to_json(d.eta_z)}};
            out["pumped"] = {word_json(d.pumped_left()), word_json(d.pumped_right())};
            return emit(out, true, "u=" + to_utf8(d.u) + " v=" + to_utf8(d.v) + " x=" + to_utf8(d.x) +
                                       " z=" + to_utf8(d.z));
        }
        if (cmd == "nerode") {
            need(3);
            auto z = bounded_nerode_distinct(load_ca(a[0], limits_), from_utf8(a[1]), from_utf8(a[2]), o_.bound,
                                             limits_);
            Json out = result(cmd);
            out["result"] = z.has_value();
            out["separator"] = z ? word_json(*z) : Json(nullptr);
            return emit(out, z.has_value(),
                        z ? "separated by '" + to_utf8(*z) + "'" : "no separating suffix up to the bound");
        }
        if (cmd == "corpus") {
            if (o_.list || a.empty()) {
                Json out = result(cmd);
                Json names = Json::array();
                for (const auto& n : corpus_names()) {
                    auto e = corpus_build(n);
                    names.push_back({{"name", n}, {"model", model_name(e.machine)}, {"description", e.description}});
                }
                out["result"] = names;
                return emit(out, true, std::to_string(names.size()) + " entries");
            }
            auto e = corpus_build(a[0]);
            return machine(e.machine, e.description);
        }
        throw InvalidArgument("unknown command '" + cmd + "'");
    }

private:
    void need(std::size_t n) const {
        if (o_.args.size() != n) {
            throw InvalidArgument("expected " + std::to_string(n) + " positional argument(s), got " +
                                  std::to_string(o_.args.size()));
        }
    }

    int emit(const Json& out, bool positive, const std::string& summary) const {
        std::cout << out.dump(2) << '\n';
        if (o_.verbose) std::cerr << summary << '\n';
        return positive ? Ok : Negative;
    }

    int inclusion_result(const std::string& cmd, const InclusionResult& r) const {
        Json out = result(cmd);
        out["result"] = r.included;
        if (r.witness) out["witness"] = word_json(*r.witness);
        return emit(out, r.included,
                    r.included ? "included" : "not included, witness '" + to_utf8(*r.witness) + "'");
    }

    int machine(const Machine& m, const std::string& note = "") const {
        std::cout << io::to_json(m).dump(2) << '\n';
        if (o_.verbose) {
            std::size_t states = std::visit(
                [](const auto& x) -> std::size_t {
                    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rbcm>) {
                        return x.state_count();
                    } else {
                        return x.automaton().state_count();
                    }
                },
                m);
            std::cerr << model_name(m) << " with " << states << " states";
            if (!note.empty()) std::cerr << ": " << note;
            std::cerr << '\n';
        }
        return Ok;
    }

    const Options& o_;
    Limits limits_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parikh automata toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("-v,--verbose", o.verbose, "Human-readable summary on stderr");

    auto sub = [&](const char* name, const char* help, const char* args) {
        auto* s = app.add_subcommand(name, help);
        s->add_option(args, o.args)->expected(0, -1);
        return s;
    };
    sub("member", "Is the word accepted? <machine> <word>", "args");
    sub("empty", "Is the language empty? <machine>", "args");
    sub("cardinality", "Empty, finite (with count) or infinite <machine>", "args");
    sub("universal", "Is the language all of Σ*? <machine>", "args");
    sub("subset", "L(m1) ⊆ L(m2)? <m1> <m2>", "args");
    sub("combine", "Union, intersection or concatenation <m1> <m2>", "args")
        ->add_option("--op", o.op, "union|intersect|concat")
        ->required();
    sub("complement", "Complement of a deterministic CA <machine>", "args");
    sub("hom", "Morphic image <machine>", "args")->add_option("--map", o.map, "Morphism document");
    sub("invhom", "Inverse morphic image <machine>", "args")->add_option("--map", o.map, "Morphism document");
    sub("comm-closure", "Commutative closure as a PA <machine>", "args");
    sub("parikh-image", "Semilinear letter image of the language <machine>", "args");
    sub("bounded-sublanguage", "Linear path schemes of the automaton <machine>", "args");
    sub("to-ca", "PA to CA <machine>", "args");
    sub("embed-apa", "CA as an APA over N <machine>", "args");
    sub("linearize", "Linear APA with a fresh initial state <apa>", "args");
    sub("q-to-n", "APA over Q with affine constraint to APA over N <apa>", "args");
    sub("normalize-2state", "Two-state normal form <apa>", "args");
    sub("to-rbcm", "Deterministic CA to deterministic RBCM <machine>", "args")
        ->add_option("--formula", o.formula, "Formula document replacing the constraint");
    sub("simulate", "Run an RBCM <rbcm> <word>", "args")->add_option("--fuel", o.fuel, "Step budget");
    auto* member = app.get_subcommand("member");
    member->add_option("--fuel", o.fuel, "Step budget for RBCM documents");
    sub("pump", "Pumping decomposition <machine> <word>", "args");
    sub("nerode", "Bounded Nerode separation <machine> <u> <v>", "args")
        ->add_option("--bound", o.bound, "Largest suffix length");
    sub("corpus", "Built-in machine document <name>", "args")->add_flag("--list", o.list, "List the entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Invalid;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Runner runner(o, limits_from_env());
        return runner.run(cmd);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return Resource;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return NotSupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return Resource;
    }
}
