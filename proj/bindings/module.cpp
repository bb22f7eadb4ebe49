// Python bindings for the main operations.  Big values cross the boundary as
// decimal strings; records and reports as dicts of plain types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gw/gpoly.hpp"
#include "gw/scan.hpp"
#include "gw/sums.hpp"
#include "gw/sympoly.hpp"

namespace py = pybind11;
using namespace gw;

namespace {

py::dict record_dict(const CongruenceRecord& rec) {
    py::dict d;
    d["base"] = rec.base;
    d["k"] = rec.k;
    d["expected"] = rec.expected;
    d["observed"] = rec.observed;
    d["saturated"] = rec.saturated;
    d["type"] = to_string(rec.classification);
    return d;
}

py::object valuation_obj(const Valuation& v) {
    if (v.infinite) return py::none();
    return py::int_(v.value);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Wolstenholme-type congruences over the Gaussian integers";

    m.def(
        "reciprocal",
        [](long re, long im) { return reciprocal(GaussianInt(re, im)).str(); },
        py::arg("re"), py::arg("im"), "Reciprocal of re+im*i as a canonical Gaussian rational");

    m.def(
        "valuation_int",
        [](long re, long im, long base) {
            return valuation_obj(valuation_int(GaussianInt(re, im), Int(base)));
        },
        py::arg("re"), py::arg("im"), py::arg("base"),
        "Largest t with base^t dividing both components; None for zero");

    m.def("expected_exponent", &expected_exponent, py::arg("k"));

    m.def(
        "sum_exact",
        [](long base, int k) { return sum_exact(base, k).str(); },
        py::arg("base"), py::arg("k"), "Exact value of the reciprocal power sum");

    m.def(
        "sum_modular",
        [](long base, int k, int precision) {
            ModGaussian s = sum_modular({base, k, precision});
            ResidueValuation rv = s.residue_valuation();
            py::dict d;
            d["re"] = s.re().get_str();
            d["im"] = s.im().get_str();
            d["valuation"] = rv.value;
            d["saturated"] = rv.saturated;
            return d;
        },
        py::arg("base"), py::arg("k"), py::arg("precision") = 8);

    m.def(
        "classify",
        [](long base, int k, int precision) { return record_dict(classify(base, k, precision)); },
        py::arg("base"), py::arg("k"), py::arg("precision") = 8);

    m.def(
        "scan",
        [](long p_max, int k_max, int precision, bool include_expected) {
            ScanResult result = run_scan({p_max, k_max, precision}, 0);
            py::list out;
            for (const CongruenceRecord& rec : result.records) {
                if (!include_expected && rec.classification == Classification::Expected) continue;
                out.append(record_dict(rec));
            }
            return out;
        },
        py::arg("p_max"), py::arg("k_max") = 12, py::arg("precision") = 8,
        py::arg("include_expected") = false);

    m.def("quartic_fraction_residue", &quartic_fraction_residue, py::arg("p"));
    m.def("power_sum_residue", &power_sum_residue, py::arg("p"), py::arg("q"));

    m.def(
        "harmonic",
        [](long p) { return rational_str(classical_harmonic(p)); },
        py::arg("p"), "Exact H_{p-1}");
    m.def("wolstenholme_valuation", &wolstenholme_check, py::arg("p"));
    m.def(
        "bernoulli",
        [](unsigned j) { return rational_str(bernoulli(j)); },
        py::arg("j"));
    m.def("glaisher_valuation", &glaisher_check, py::arg("p"));

    m.def(
        "gauss_power_sum",
        [](unsigned long k, long A, long B) { return gauss_power_sum(k, A, B).str(); },
        py::arg("k"), py::arg("a_max"), py::arg("b_max"));

    m.def("leudesdorf_valuation", &leudesdorf_check, py::arg("n"));

    m.def(
        "composite_scan",
        [](long n_max, int k_max, int precision) {
            py::list out;
            for (const CompositeEntry& e : composite_scan(n_max, k_max, precision)) {
                py::dict d;
                d["n"] = e.n;
                d["holds_all"] = e.holds_all;
                py::list per_k;
                for (const CongruenceRecord& rec : e.per_k) per_k.append(record_dict(rec));
                d["per_k"] = per_k;
                out.append(d);
            }
            return out;
        },
        py::arg("n_max"), py::arg("k_max") = 8, py::arg("precision") = 4);

    m.def(
        "tuple_numerator",
        [](int k, long pdeg_equal) {
            MPoly num = expand_tuple(k).numerator;
            if (pdeg_equal >= 0) {
                num = truncate_pdeg(num, TruncateMode::Equal, static_cast<unsigned>(pdeg_equal));
            }
            return num.str();
        },
        py::arg("k"), py::arg("pdeg_equal") = -1);
    m.def(
        "tuple_denominator",
        [](int k, long pdeg_equal) {
            MPoly den = expand_tuple(k).denominator;
            if (pdeg_equal >= 0) {
                den = truncate_pdeg(den, TruncateMode::Equal, static_cast<unsigned>(pdeg_equal));
            }
            return den.str();
        },
        py::arg("k"), py::arg("pdeg_equal") = -1);
    m.def("verify_factored_form", &verify_factored_form, py::arg("k"));

    m.def(
        "gpoly",
        [](long p) { return gpoly_mod_p(p).str_signed(); },
        py::arg("p"), "Root polynomial mod p, signed residues, descending powers");
    m.def(
        "gpoly_pattern",
        [](long p) {
            GPolyPattern rep = gpoly_pattern_check(p);
            py::dict d;
            d["p"] = rep.p;
            d["degree"] = rep.degree;
            d["holds"] = rep.holds;
            d["inert_class"] = rep.inert_class;
            py::list support;
            for (const auto& [e, c] : rep.support) {
                support.append(py::make_tuple(e, c.str()));
            }
            d["support"] = support;
            return d;
        },
        py::arg("p"));
    m.def("gpoly_low_check", &gpoly_low_check, py::arg("p"));

    m.def(
        "gauss_binom",
        [](long A, long B, long C, long D) { return gauss_binom({A, B, C, D}).str(); },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"));
    m.def("shifted_product_check", &shifted_product_check, py::arg("p"), py::arg("A"), py::arg("B"));
    m.def("binomial_congruence_check", &binomial_congruence_check, py::arg("p"), py::arg("A"), py::arg("B"));
    m.def(
        "lucas_check",
        [](long p, long A, long B, long C, long D) {
            LucasReport rep = lucas_check(p, A, B, C, D);
            py::dict d;
            d["p"] = rep.p;
            d["lhs"] = rep.lhs.str();
            d["rhs"] = rep.rhs.str();
            d["lhs_integral"] = rep.lhs_integral;
            d["rhs_integral"] = rep.rhs_integral;
            d["difference_zero"] = rep.difference_zero;
            d["difference_valuation"] = rep.difference_valuation;
            d["holds_mod_p3"] = rep.holds_mod_p3;
            return d;
        },
        py::arg("p"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"));
}
