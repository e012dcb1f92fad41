#include "steengrass/checks.hpp"
#include "steengrass/grass.hpp"
#include "steengrass/wu.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace steengrass;

namespace {

py::object to_py_int(const Int& v)
{
    if (v.fits_slong_p())
        return py::int_(v.get_si());
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py_frac(const Rat& q)
{
    return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

Partition part(const std::vector<int>& parts)
{
    return Partition(parts);
}

py::list sym_terms(const SymElem& f)
{
    py::list out;
    for (auto& [lam, c] : f.terms())
        out.append(py::make_tuple(lam.parts(), to_py_frac(c)));
    return out;
}

py::dict analysis_dict(const StripAnalysis& an)
{
    py::dict d;
    d["cc"] = an.cc ? py::object(py::int_(*an.cc)) : py::object(py::none());
    d["ht"] = an.ht;
    d["sharp_contents"] = an.sharp_contents;
    d["dull_contents"] = an.dull_contents;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact Steenrod/Landweber-Novikov actions on symmetric functions "
              "and Schubert classes";

    // partitions and diagrams
    m.def("conjugate",
          [](const std::vector<int>& p) { return part(p).conjugate().parts(); });
    m.def("dominance_leq", [](const std::vector<int>& a, const std::vector<int>& b) {
        return dominance_leq(part(a), part(b));
    });
    m.def("content_hook", [](const std::vector<int>& p, int row, int col) {
        return content_hook(part(p), row, col);
    });
    m.def("m_stat", [](const std::vector<int>& p, int n) { return m_stat(part(p), n); });
    m.def("partitions_of", [](int n) {
        py::list out;
        for (const Partition& p : partitions_of(n))
            out.append(p.parts());
        return out;
    });
    m.def("partitions_in_box", [](int rows, int cols) {
        py::list out;
        for (const Partition& p : partitions_in_box(rows, cols))
            out.append(p.parts());
        return out;
    });
    m.def("analyze_strip", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return analysis_dict(analyze_strip(SkewShape(part(outer), part(inner))));
    });
    m.def("minimal_frame", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        MinimalFrame f = minimal_frame(SkewShape(part(outer), part(inner)));
        py::list comps;
        for (auto& c : f.components) {
            py::dict d;
            d["pi"] = c.pi.parts();
            d["rho"] = c.rho.parts();
            d["content"] = c.content;
            comps.append(d);
        }
        py::dict d;
        d["pi"] = f.pi.parts();
        d["rho"] = f.rho.parts();
        d["content"] = f.content;
        d["components"] = comps;
        return d;
    });
    m.def("strip_moves",
          [](const std::vector<int>& p, int size, const std::string& dir, int max_components) {
              StripDirection d = dir == "add" ? StripDirection::add : StripDirection::remove;
              py::list out;
              for (auto& [mu, an] : strip_moves(part(p), size, d, max_components))
                  out.append(py::make_tuple(mu.parts(), analysis_dict(an)));
              return out;
          },
          py::arg("parts"), py::arg("size"), py::arg("direction"), py::arg("max_components") = 2);

    // symmetric functions
    py::class_<SymElem>(m, "Sym")
        .def("basis", [](const SymElem& f) { return std::string(1, basis_code(f.basis())); })
        .def("terms", &sym_terms)
        .def("degree", &SymElem::degree)
        .def("is_zero", &SymElem::is_zero)
        .def("__eq__", [](const SymElem& a, const SymElem& b) { return a == b; })
        .def("__add__", [](const SymElem& a, const SymElem& b) { return a + b; })
        .def("__sub__", [](const SymElem& a, const SymElem& b) { return a - b; })
        .def("__repr__", &SymElem::to_string);

    m.def("sym", [](const std::string& basis, const std::vector<int>& p) {
        return SymElem::generator(basis_from_code(basis.at(0)), part(p));
    });
    m.def("convert", [](const SymElem& f, const std::string& basis) {
        return convert(f, basis_from_code(basis.at(0)));
    });
    m.def("multiply", &multiply);
    m.def("hammond", &hammond);
    m.def("mn_multiply", &mn_multiply);
    m.def("skew_schur", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return skew_schur(SkewShape(part(outer), part(inner)));
    });
    m.def("principal_spec",
          [](const SymElem& f, long n) { return to_py_frac(principal_spec(f, n)); });
    m.def("hook_content_spec", [](const std::vector<int>& lam, long n) {
        return to_py_frac(hook_content_spec(part(lam), n));
    });
    m.def("antipode", &antipode);
    m.def("kostka_number", [](const std::vector<int>& shape, const std::vector<int>& content) {
        return to_py_int(kostka_number(part(shape), part(content)));
    });

    // operators
    m.def("act",
          [](const std::string& op, const SymElem& f, long modulus) {
              OpPipeline pipe = OpPipeline::parse(op);
              if (modulus != 0)
                  pipe.fill_prime(modulus);
              long p = pipe.modulus();
              if (modulus != 0)
                  p = modulus;
              SymElem out = apply_pipeline_schur(pipe, f);
              return p > 0 ? reduce_mod(out, p) : out;
          },
          py::arg("op"), py::arg("f"), py::arg("modulus") = 0);
    m.def("lie_bracket", &lie_bracket);

    // Schubert-picture coefficients
    m.def("d_coeff", [](const std::vector<int>& l, const std::vector<int>& mu) {
        return to_py_int(d_coeff(part(l), part(mu)));
    });
    m.def("a_coeff",
          [](const std::vector<int>& l, const std::vector<int>& mu, int k) {
              return to_py_int(a_coeff(part(l), part(mu), k));
          },
          py::arg("lam"), py::arg("mu"), py::arg("k") = 1);
    m.def("a_coeff_spec", [](const std::vector<int>& l, const std::vector<int>& mu) {
        return to_py_int(a_coeff_spec(part(l), part(mu)));
    });
    m.def("a_poly", [](const std::vector<int>& pi, const std::vector<int>& rho) {
        py::list out;
        for (const Int& c : a_poly(part(pi), part(rho)))
            out.append(to_py_int(c));
        return out;
    });
    m.def("embed_frame", [](const std::vector<int>& pi, const std::vector<int>& rho, long c) {
        auto [lam, mu] = embed_frame(part(pi), part(rho), c);
        return py::make_tuple(lam.parts(), mu.parts());
    });
    m.def("vanishing_window",
          [](const std::vector<int>& l, const std::vector<int>& mu) -> py::object {
              auto w = vanishing_window(part(l), part(mu));
              if (!w)
                  return py::none();
              return py::make_tuple(w->first, w->second);
          });
    m.def("inverse_kostka", [](const std::vector<int>& lam) {
        py::list out;
        for (auto& [mu, c] : inverse_kostka(part(lam)).entries)
            out.append(py::make_tuple(mu.parts(), to_py_int(c)));
        return out;
    });
    m.def("conjecture_check", [](const std::vector<int>& l, const std::vector<int>& mu) {
        ConjectureReport r = conjecture_check(part(l), part(mu));
        py::dict d;
        d["lhs"] = to_py_int(r.lhs);
        d["rhs"] = to_py_frac(r.rhs);
        d["agree"] = r.agree;
        return d;
    });
    m.def("lr_mod2_check",
          [](const std::vector<int>& lam) { return lr_mod2_check(part(lam)); });

    // Borel-picture tables
    m.def("alpha_direct", [](long p, int n, int k) {
        py::list out;
        for (auto& [key, c] : alpha_direct(p, n, k).entries)
            out.append(py::make_tuple(std::get<0>(key).parts(), to_py_int(c)));
        return out;
    });
    m.def("beta_base", [](long p, const std::vector<int>& lam, int n) {
        return to_py_int(beta_base(p, part(lam), n));
    });
    m.def("beta_mod_p", [](long p, const std::vector<int>& lam, int n, int k) {
        return to_py_int(beta_mod_p(p, part(lam), n, k));
    });
    m.def("alpha_from_beta", [](long p, const std::vector<int>& lam, int n, int k) {
        return to_py_int(alpha_from_beta(p, part(lam), n, k));
    });
    m.def("borel_serre_check", &borel_serre_check);

    // Grassmannians
    m.def("steenrod_schubert",
          [](const std::string& op, const std::vector<int>& lam, long p, int rows, int cols) {
              BoxedClass b = steenrod_schubert(op, part(lam), p, rows, cols);
              py::list out;
              for (auto& [mu, c] : b.terms)
                  out.append(py::make_tuple(mu.parts(), to_py_int(c)));
              return out;
          });
    m.def("poset_dot", [](int rows, int cols, long p) {
        return emit_dot(build_poset(rows, cols, p));
    });
    m.def("poset_covers", [](int rows, int cols, long p) {
        py::list out;
        for (const CoverEdge& e : build_poset(rows, cols, p).covers)
            out.append(py::make_tuple(e.from.parts(), e.to.parts(), e.witness));
        return out;
    });

    // verification suites
    m.def("verify",
          [](const std::string& suite, int max_degree) {
              std::vector<CheckResult> rs;
              if (suite == "oracle")
                  rs = run_oracle_suite(max_degree);
              else if (suite == "hopf")
                  rs = run_hopf_suite(max_degree);
              else if (suite == "paper")
                  rs = run_paper_suite();
              else
                  throw std::invalid_argument("unknown suite");
              py::list out;
              for (auto& r : rs)
                  out.append(py::make_tuple(r.name, r.pass, r.detail));
              return out;
          },
          py::arg("suite"), py::arg("max_degree") = 4);
}
