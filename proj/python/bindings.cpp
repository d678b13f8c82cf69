#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parikh/closure.hpp"
#include "parikh/hilbert.hpp"
#include "parikh/io.hpp"
#include "parikh/pumping.hpp"

namespace py = pybind11;
using namespace parikh;

namespace {

Machine machine(const std::string& doc) { return io::machine_from_json(io::parse(doc)); }

Ca ca(const std::string& doc) {
    Machine m = machine(doc);
    if (auto* c = std::get_if<Ca>(&m)) return *c;
    if (auto* p = std::get_if<Pa>(&m)) return pa_to_ca(*p);
    throw Unsupported(std::string("expected a ca or pa document, got ") + model_name(m));
}

Apa apa(const std::string& doc) {
    Machine m = machine(doc);
    if (auto* a = std::get_if<Apa>(&m)) return *a;
    throw Unsupported(std::string("expected an apa document, got ") + model_name(m));
}

std::string dump(const Machine& m) { return io::to_json(m).dump(); }

std::optional<std::string> word(const std::optional<Word>& w) {
    if (!w) return std::nullopt;
    return to_utf8(*w);
}

std::vector<long long> small(const NatVector& v) {
    std::vector<long long> out;
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw ResourceLimit("entry does not fit a machine integer");
        out.push_back(x.get_si());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parikh automata toolkit: decision procedures and constructions over JSON documents";

    // Leaked on purpose: the translator may run until interpreter shutdown.
    static py::handle error = py::exception<Error>(m, "Error").release();
    static py::handle invalid = py::exception<InvalidArgument>(m, "InvalidArgument", error).release();
    static py::handle unsupported = py::exception<Unsupported>(m, "Unsupported", error).release();
    static py::handle resource = py::exception<ResourceLimit>(m, "ResourceLimit", error).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidArgument& e) {
            py::set_error(invalid, e.what());
        } catch (const DimensionMismatch& e) {
            py::set_error(invalid, e.what());
        } catch (const Unsupported& e) {
            py::set_error(unsupported, e.what());
        } catch (const ResourceLimit& e) {
            py::set_error(resource, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("corpus_names", &corpus_names);
    m.def("corpus", [](const std::string& name) { return dump(corpus_build(name).machine); });
    m.def("member", [](const std::string& doc, const std::string& w, std::size_t fuel) {
        return machine_accepts(machine(doc), from_utf8(w), {}, fuel);
    }, py::arg("doc"), py::arg("word"), py::arg("fuel") = 1'000'000);
    m.def("is_empty", [](const std::string& doc) { return is_empty(ca(doc)); });
    m.def("cardinality", [](const std::string& doc) {
        auto c = cardinality(ca(doc));
        std::optional<std::string> n;
        if (c.count) n = to_string(*c.count);
        return std::make_pair(std::string(to_string(c.kind)), n);
    });
    m.def("subset", [](const std::string& a, const std::string& b) {
        auto r = inclusion(ca(a), ca(b));
        return std::make_pair(r.included, word(r.witness));
    });
    m.def("universal", [](const std::string& doc) {
        auto r = universal(ca(doc));
        return std::make_pair(r.included, word(r.witness));
    });
    m.def("combine", [](const std::string& a, const std::string& b, const std::string& op) {
        CombineOp o;
        if (op == "union") {
            o = CombineOp::Union;
        } else if (op == "intersect") {
            o = CombineOp::Intersection;
        } else if (op == "concat") {
            o = CombineOp::Concatenation;
        } else {
            throw InvalidArgument("op must be union, intersect or concat");
        }
        return dump(combine(ca(a), ca(b), o));
    });
    m.def("complement", [](const std::string& doc) { return dump(complement_det(ca(doc))); });
    m.def("comm_closure", [](const std::string& doc) { return dump(commutative_closure(ca(doc))); });
    m.def("to_ca", [](const std::string& doc) { return dump(ca(doc)); });
    m.def("embed_apa", [](const std::string& doc) { return dump(embed_ca(ca(doc))); });
    m.def("linearize", [](const std::string& doc) { return dump(linearize(apa(doc))); });
    m.def("q_to_n", [](const std::string& doc) { return dump(rationals_to_naturals(apa(doc))); });
    m.def("normalize_two_state", [](const std::string& doc) { return dump(normalize_two_state(apa(doc))); });
    m.def("to_rbcm", [](const std::string& doc) { return dump(compile_to_rbcm(ca(doc))); });
    m.def("parikh_image", [](const std::string& doc) { return io::to_json(letter_image(ca(doc))).dump(); });
    m.def("simulate", [](const std::string& doc, const std::string& w, std::size_t fuel) {
        Machine mm = machine(doc);
        auto* r = std::get_if<Rbcm>(&mm);
        if (!r) throw Unsupported("simulate needs an rbcm document");
        auto s = simulate(*r, from_utf8(w), fuel);
        return std::make_pair(std::string(to_string(s.outcome)), s.steps);
    }, py::arg("doc"), py::arg("word"), py::arg("fuel") = 1'000'000);
    m.def("pump", [](const std::string& doc, const std::string& w) {
        auto d = pump_decompose(ca(doc), from_utf8(w));
        return std::make_tuple(to_utf8(d.u), to_utf8(d.v), to_utf8(d.x), to_utf8(d.z));
    });
    m.def("nerode", [](const std::string& doc, const std::string& u, const std::string& v, std::size_t bound) {
        return word(bounded_nerode_distinct(ca(doc), from_utf8(u), from_utf8(v), bound));
    });
    m.def("hilbert_basis", [](const std::vector<std::vector<long long>>& a, const std::vector<long long>& b) {
        if (a.empty()) throw InvalidArgument("the system needs at least one equation");
        IntMatrix mat;
        for (const auto& row : a) {
            IntVector r;
            for (auto x : row) r.push_back(Integer(std::to_string(x)));
            mat.push_back(std::move(r));
        }
        IntVector rhs;
        for (auto x : b) rhs.push_back(Integer(std::to_string(x)));
        auto h = hilbert_basis(mat, rhs, a.front().size());
        std::vector<std::vector<long long>> particular, homogeneous;
        for (const auto& v : h.particular) particular.push_back(small(v));
        for (const auto& v : h.homogeneous) homogeneous.push_back(small(v));
        return std::make_pair(particular, homogeneous);
    }, py::arg("a"), py::arg("b"));
}
