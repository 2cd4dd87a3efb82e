#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minkphi/constants.hpp"
#include "minkphi/minkowski.hpp"
#include "minkphi/oracle.hpp"
#include "minkphi/primes.hpp"
#include "minkphi/totient.hpp"
#include "minkphi/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const mpz_class& z) {
    return py::cast<py::int_>(
        py::module_::import("builtins").attr("int")(z.get_str()));
}

// (lo, hi) doubles, rounded outward: still a valid enclosure.
py::tuple to_pair(const minkphi::Enclosure& e) {
    return py::make_tuple(e.lo_double(), e.hi_double());
}

py::dict summary_dict(const minkphi::CampaignSummary& s) {
    py::dict d;
    d["campaign"] = s.name;
    d["from"] = s.from;
    d["to"] = s.to;
    d["checked"] = s.checked;
    d["holds"] = s.holds;
    d["fails"] = s.fails;
    d["inconclusive"] = s.inconclusive;
    d["expected_failures"] = s.expected_failures;
    d["unexpected_failures"] = s.unexpected_failures;
    d["ok"] = s.ok;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact G(n), H(n), Phi(n) and certified bound verification";

    m.def("g", [](std::uint64_t n) { return to_py_int(minkphi::g_exact(n).second); },
          py::arg("n"), "exact G(n)");
    m.def("h", [](std::uint64_t n) { return to_py_int(minkphi::h_exact(n)); },
          py::arg("n"), "exact H(n) = G(2n)/2^(n-1)");
    m.def("g_exponents", [](std::uint64_t n) {
        py::dict d;
        for (auto [q, r] : minkphi::g_exact(n).first.exponents)
            d[py::int_(q)] = py::int_(r);
        return d;
    }, py::arg("n"), "prime -> exponent map of G(n)");

    m.def("phi", [](std::uint64_t n) { return minkphi::phi_of(n); }, py::arg("n"),
          "Phi(n) = max{m : phi(m) | 2n}");
    m.def("phi_bulk", &minkphi::phi_bulk, py::arg("n_max"),
          "Phi(1..n_max); index 0 unused");
    m.def("euler_phi", &minkphi::euler_phi, py::arg("m"));
    m.def("phi_search_bound", [](std::uint64_t n) {
        auto b = minkphi::phi_search_bound(n);
        return py::make_tuple(to_py_int(b.get_num()), to_py_int(b.get_den()));
    }, py::arg("n"), "(numerator, denominator) of the exact search ceiling");

    m.def("nth_prime", &minkphi::nth_prime, py::arg("i"));
    m.def("prime_count", &minkphi::prime_count, py::arg("x"));
    m.def("primorial", [](std::uint64_t k) { return to_py_int(minkphi::primorial(k)); },
          py::arg("k"));

    m.def("log_g", [](std::uint64_t n) { return to_pair(minkphi::log_g(n, 128)); },
          py::arg("n"), "(lo, hi) enclosure of log G(n)");
    m.def("k_enclosure", [](std::uint64_t cutoff) {
        return to_pair(minkphi::k_enclosure(cutoff, 128).value);
    }, py::arg("cutoff") = 1000000, "(lo, hi) enclosure of the constant K");
    m.def("theorem1_bounds", [](std::uint64_t n) {
        auto b = minkphi::theorem1_bounds(n, 128);
        py::dict d;
        d["lower"] = to_pair(b.lower);
        d["upper"] = to_pair(b.upper);
        d["main"] = to_pair(b.main);
        return d;
    }, py::arg("n"));

    m.def("gl_order", [](std::uint64_t n, std::uint64_t N) {
        return to_py_int(minkphi::gl_order(n, N));
    }, py::arg("n"), py::arg("modulus"));
    m.def("gsp_order", [](std::uint64_t g, std::uint64_t N) {
        return to_py_int(minkphi::gsp_order(g, N));
    }, py::arg("genus"), py::arg("modulus"));
    m.def("g_by_gcd", [](std::uint64_t n, std::uint64_t n_max, bool full_scan) {
        return to_py_int(minkphi::g_by_gcd(n, n_max, !full_scan).value);
    }, py::arg("n"), py::arg("n_max") = 500, py::arg("full_scan") = false);

    m.def("run_campaign", [](const std::string& name, long long from, long long to,
                             unsigned threads) {
        minkphi::CampaignOptions opts;
        opts.from = from;
        opts.to = to;
        opts.threads = threads;
        return summary_dict(minkphi::run_campaign(name, opts));
    }, py::arg("name"), py::arg("from_") = 0, py::arg("to") = 0,
       py::arg("threads") = 0);

    m.def("campaign_names", [] { return minkphi::campaign_names(); });
}
