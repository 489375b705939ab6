#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddkit/combine.hpp"
#include "oddkit/core.hpp"
#include "oddkit/data.hpp"
#include "oddkit/detector.hpp"
#include "oddkit/metrics.hpp"
#include "oddkit/model_io.hpp"

namespace py = pybind11;
using namespace oddkit;

namespace {

DataMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    const std::size_t cols = rows[0].size();
    DataMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<std::vector<double>> from_matrix(const DataMatrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rows;
}

DetectorParams make_params(const std::string& algo, double contamination, std::size_t k,
                           std::uint64_t seed, int threads, std::size_t bins, double alpha,
                           double tol, std::size_t trees, std::size_t psi, std::size_t rounds,
                           const std::string& fb_combine) {
    const auto parsed = algo_from_name(algo);
    if (!parsed) throw std::invalid_argument("unknown algorithm '" + algo + "'");
    DetectorParams p;
    p.algo = *parsed;
    p.contamination = contamination;
    p.k = k;
    p.seed = seed;
    p.threads = threads;
    p.bins = bins;
    p.alpha = alpha;
    p.tol = tol;
    p.trees = trees;
    p.psi = psi;
    p.rounds = rounds;
    p.fb_combine = fb_combine == "max" ? FbCombine::max : FbCombine::average;
    return p;
}

ProbaMethod parse_proba(const std::string& method) {
    if (method == "linear") return ProbaMethod::linear;
    if (method == "unify") return ProbaMethod::unify;
    throw std::invalid_argument("proba method must be 'linear' or 'unify'");
}

}  // namespace

PYBIND11_MODULE(_oddkit, m) {
    m.doc() = "Outlier-detection toolkit: detectors, score combination, "
              "synthetic data and evaluation utilities.";

    py::class_<Detector>(m, "Detector")
        .def(py::init([](const std::string& algo, double contamination, std::size_t k,
                         std::uint64_t seed, int threads, std::size_t bins, double alpha,
                         double tol, std::size_t trees, std::size_t psi, std::size_t rounds,
                         const std::string& fb_combine) {
                 return Detector(make_params(algo, contamination, k, seed, threads, bins,
                                             alpha, tol, trees, psi, rounds, fb_combine));
             }),
             py::arg("algo"), py::arg("contamination") = 0.1, py::arg("k") = 0,
             py::arg("seed") = 42, py::arg("threads") = 0, py::arg("bins") = 10,
             py::arg("alpha") = 0.1, py::arg("tol") = 0.5, py::arg("trees") = 100,
             py::arg("psi") = 256, py::arg("rounds") = 10, py::arg("fb_combine") = "average")
        .def("fit",
             [](Detector& self, const std::vector<std::vector<double>>& X) -> Detector& {
                 self.fit(to_matrix(X));
                 return self;
             },
             py::arg("X"), py::return_value_policy::reference_internal)
        .def("decision_function",
             [](const Detector& self, const std::vector<std::vector<double>>& X) {
                 return self.decision_function(to_matrix(X));
             },
             py::arg("X"))
        .def("predict",
             [](const Detector& self, const std::vector<std::vector<double>>& X) {
                 return self.predict(to_matrix(X));
             },
             py::arg("X"))
        .def("predict_proba",
             [](const Detector& self, const std::vector<std::vector<double>>& X,
                const std::string& method) {
                 return self.predict_proba(to_matrix(X), parse_proba(method));
             },
             py::arg("X"), py::arg("method") = "linear")
        .def("save", &save_model, py::arg("path"))
        .def_property_readonly("fitted", &Detector::fitted)
        .def_property_readonly("algo",
                               [](const Detector& self) { return algo_name(self.params().algo); })
        .def_property_readonly("decision_scores_",
                               [](const Detector& self) { return self.train_stats().scores; })
        .def_property_readonly("labels_",
                               [](const Detector& self) { return self.train_stats().labels; })
        .def_property_readonly("threshold_",
                               [](const Detector& self) { return self.train_stats().threshold; });

    m.def("load_model", &load_model, py::arg("path"));

    m.def(
        "generate_data",
        [](std::size_t n_train, std::size_t n_test, std::size_t n_features,
           double contamination, std::uint64_t seed) {
            GenParams p{n_train, n_test, n_features, contamination, seed};
            const auto [train, test] = generate_data(p);
            return py::make_tuple(from_matrix(train.X), train.y, from_matrix(test.X), test.y);
        },
        py::arg("n_train") = 200, py::arg("n_test") = 100, py::arg("n_features") = 2,
        py::arg("contamination") = 0.1, py::arg("seed") = 42,
        "Synthetic (X_train, y_train, X_test, y_test): Gaussian inliers, uniform outliers.");

    m.def("roc_auc", &roc_auc, py::arg("y"), py::arg("scores"));
    m.def("precision_at_n", &precision_at_n, py::arg("y"), py::arg("scores"));
    m.def("evaluate_format", &evaluate_format, py::arg("name"), py::arg("y"),
          py::arg("scores"));

    m.def("threshold_from_scores", &threshold_from_scores, py::arg("scores"),
          py::arg("contamination"));
    m.def("labels_from_scores", &labels_from_scores, py::arg("scores"), py::arg("threshold"));

    m.def(
        "zscore_standardize",
        [](const std::vector<std::vector<double>>& S) {
            return from_matrix(zscore_standardize(to_matrix(S)));
        },
        py::arg("scores"));
    m.def(
        "combine_average",
        [](const std::vector<std::vector<double>>& S) { return combine_average(to_matrix(S)); },
        py::arg("scores"));
    m.def(
        "combine_max",
        [](const std::vector<std::vector<double>>& S) { return combine_max(to_matrix(S)); },
        py::arg("scores"));
    m.def(
        "combine_aom",
        [](const std::vector<std::vector<double>>& S, std::size_t n_buckets,
           std::uint64_t seed) { return combine_aom(to_matrix(S), n_buckets, seed); },
        py::arg("scores"), py::arg("n_buckets"), py::arg("seed") = 42);
    m.def(
        "combine_moa",
        [](const std::vector<std::vector<double>>& S, std::size_t n_buckets,
           std::uint64_t seed) { return combine_moa(to_matrix(S), n_buckets, seed); },
        py::arg("scores"), py::arg("n_buckets"), py::arg("seed") = 42);

    m.def("algo_names", [] { return algo_names(); });
}
