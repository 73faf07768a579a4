// Python bindings: a thin result-oriented wrapper around the pipeline.
// Polynomials cross the boundary as canonical strings; exactness stays on
// the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skhodge/divfile.hpp"
#include "skhodge/hodge.hpp"

namespace py = pybind11;
using namespace skhodge;

namespace {

std::vector<std::string> gens_to_str(const std::vector<Poly>& gens) {
    std::vector<std::string> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.str());
    return out;
}

// Loaded divisor with everything the Python layer needs precomputed lazily.
class Divisor {
public:
    explicit Divisor(const std::string& path) : file_(parse_divisor_file(path)) {
        if (!file_.spec.extended_scope) {
            auto saito = check_saito_criterion(file_.spec);
            if (!saito.ok) throw InvariantError("Saito criterion failed: " + saito.message);
        }
        spec_ = normalize_basis(file_.spec);
    }

    std::vector<std::string> variables() const { return spec_.ring->vars; }
    std::string h() const { return spec_.h.str(); }
    bool extended_scope() const { return spec_.extended_scope; }
    std::vector<std::string> warnings() const { return file_.warnings; }

    bool strongly_koszul() const {
        if (spec_.extended_scope) return false;
        return check_strong_koszul(spec_);
    }

    std::string bfunction() {
        return bfun().str();
    }

    std::string compute_bfunction_str() { return ::skhodge::compute_bfunction(spec_).str(); }

    std::pair<std::string, int> beta_bar_r() {
        auto [beta, r] = ::skhodge::beta_bar(bfun(), make_ring({"s"}));
        return {beta.str(), r};
    }

    std::vector<std::string> hodge_ideal(int k) {
        return gens_to_str(pipeline().hodge_ideal(k).gens);
    }

    std::vector<std::string> hodge_ideal_0_direct() {
        return gens_to_str(pipeline().hodge_ideal_0_direct().gens);
    }

    std::vector<std::string> ord_ideal(int k) {
        return gens_to_str(pipeline().ord_ideal(k));
    }

    py::dict generating_level(int k_max) {
        auto gl = pipeline().generating_level(k_max);
        py::dict d;
        d["level"] = gl.level;
        d["k_max"] = gl.k_max;
        d["r"] = gl.r;
        d["step_equal"] = gl.step_equal;
        return d;
    }

    bool hodge_equals_ord(int k) {
        return ideal_equal(pipeline().hodge_ideal(k).gens, pipeline().ord_ideal(k));
    }

    py::dict check_inclusions(int k) {
        auto rep = pipeline().check_inclusions(k);
        py::dict d;
        d["hodge_in_ord"] = rep.hodge_in_ord;
        d["shifted_ord_in_hodge"] = rep.shifted_ord_in_hodge;
        d["monotone"] = rep.monotone;
        d["d_stable"] = rep.d_stable;
        d["ok"] = rep.ok();
        d["witness"] = rep.witness;
        return d;
    }

private:
    const BFunction& bfun() {
        if (!file_.bfun) {
            computed_b_ = ::skhodge::compute_bfunction(spec_);
            file_.bfun = computed_b_;
        }
        return *file_.bfun;
    }
    HodgePipeline& pipeline() {
        if (!pipe_) pipe_.emplace(spec_, bfun());
        return *pipe_;
    }

    DivisorFile file_;
    DivisorSpec spec_;
    std::optional<BFunction> computed_b_;
    std::optional<HodgePipeline> pipe_;
};

}  // namespace

PYBIND11_MODULE(_skhodge, m) {
    m.doc() = "Hodge ideals, order filtration and generating level for strongly "
              "Koszul free divisors";

    py::register_exception<InvariantError>(m, "InvariantError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<DivFileError>(m, "DivFileError");

    py::class_<Divisor>(m, "Divisor")
        .def(py::init<const std::string&>(), py::arg("path"))
        .def_property_readonly("variables", &Divisor::variables)
        .def_property_readonly("h", &Divisor::h)
        .def_property_readonly("extended_scope", &Divisor::extended_scope)
        .def_property_readonly("warnings", &Divisor::warnings)
        .def("strongly_koszul", &Divisor::strongly_koszul)
        .def("bfunction", &Divisor::bfunction)
        .def("compute_bfunction", &Divisor::compute_bfunction_str)
        .def("beta_bar", &Divisor::beta_bar_r)
        .def("hodge_ideal", &Divisor::hodge_ideal, py::arg("k"))
        .def("hodge_ideal_0_direct", &Divisor::hodge_ideal_0_direct)
        .def("ord_ideal", &Divisor::ord_ideal, py::arg("k"))
        .def("hodge_equals_ord", &Divisor::hodge_equals_ord, py::arg("k"))
        .def("generating_level", &Divisor::generating_level, py::arg("k_max") = 2)
        .def("check_inclusions", &Divisor::check_inclusions, py::arg("k") = 1);
}
