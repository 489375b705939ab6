#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "oddkit/csv.hpp"
#include "test_util.hpp"

using namespace oddkit;
using oddkit::test::CliResult;
using oddkit::test::TempDir;
using oddkit::test::read_file;
using oddkit::test::run_cli;

TEST_CASE("generate writes the four dataset files") {
    TempDir dir("cli");
    const auto r = run_cli("generate --n-train 200 --n-test 100 --n-features 2 --seed 42"
                           " --out-dir " + dir.file("d"),
                           dir);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());  // payload-free subcommand keeps stdout clean
    for (const char* name : {"X_train.csv", "y_train.csv", "X_test.csv", "y_test.csv"})
        CHECK(std::filesystem::exists(dir.file("d/" + std::string(name))));
    CHECK(read_matrix_csv(dir.file("d/X_train.csv")).rows() == 200);
    CHECK(read_matrix_csv(dir.file("d/X_test.csv")).rows() == 100);
    CHECK(read_labels_csv(dir.file("d/y_train.csv")).size() == 200);
}

TEST_CASE("unknown algorithm exits 2 and lists the valid names") {
    TempDir dir("cli");
    run_cli("generate --n-train 20 --n-test 5 --seed 1 --out-dir " + dir.file("d"), dir);
    const auto r = run_cli("fit --algo nosuch --input " + dir.file("d/X_train.csv") +
                               " --model " + dir.file("m.json"),
                           dir);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("iforest") != std::string::npos);
}

TEST_CASE("missing input file exits 3") {
    TempDir dir("cli");
    const auto r = run_cli("fit --algo knn --input " + dir.file("absent.csv") +
                               " --model " + dir.file("m.json"),
                           dir);
    CHECK(r.exit_code == 3);
}

TEST_CASE("bad flags exit 2") {
    TempDir dir("cli");
    const auto r = run_cli("score --no-such-flag", dir);
    CHECK(r.exit_code == 2);
    const auto r2 = run_cli("nosuchcommand", dir);
    CHECK(r2.exit_code == 2);
}

TEST_CASE("fit/score/eval pipeline emits the documented artifacts") {
    TempDir dir("cli");
    REQUIRE(run_cli("generate --n-train 200 --n-test 100 --n-features 2 --seed 42 --out-dir " +
                        dir.file("d"),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli("fit --algo abod --k 10 --input " + dir.file("d/X_train.csv") +
                        " --model " + dir.file("abod.json"),
                    dir)
                .exit_code == 0);

    const auto score = run_cli("score --model " + dir.file("abod.json") + " --input " +
                                   dir.file("d/X_test.csv") + " --output " +
                                   dir.file("s.csv") + " --labels --proba unify",
                               dir);
    REQUIRE(score.exit_code == 0);
    const CsvTable t = read_csv_table(dir.file("s.csv"));
    CHECK(t.header == std::vector<std::string>{"score", "label", "proba"});
    CHECK(t.data.rows() == 100);
    for (std::size_t i = 0; i < t.data.rows(); ++i) {
        CHECK((t.data(i, 1) == 0.0 || t.data(i, 1) == 1.0));
        CHECK(t.data(i, 2) >= 0.0);
        CHECK(t.data(i, 2) <= 1.0);
    }

    const auto eval = run_cli("eval --input " + dir.file("s.csv") + " --truth " +
                                  dir.file("d/y_test.csv") + " --name ABOD",
                              dir);
    CHECK(eval.exit_code == 0);
    CHECK(eval.out.find("ABOD Performance; ROC: ") == 0);
    CHECK(eval.out.find("; Precision at n: ") != std::string::npos);
    // exactly one payload line
    CHECK(std::count(eval.out.begin(), eval.out.end(), '\n') == 1);
}

TEST_CASE("score validates the proba flag") {
    TempDir dir("cli");
    run_cli("generate --n-train 30 --n-test 10 --seed 2 --out-dir " + dir.file("d"), dir);
    run_cli("fit --algo knn --input " + dir.file("d/X_train.csv") + " --model " +
                dir.file("m.json"),
            dir);
    const auto r = run_cli("score --model " + dir.file("m.json") + " --input " +
                               dir.file("d/X_test.csv") + " --output " + dir.file("s.csv") +
                               " --proba wat",
                           dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("combine merges score columns") {
    TempDir dir("cli");
    {
        std::ofstream out(dir.file("m.csv"));
        out << "a,b\n1,3\n2,4\n";
    }
    const auto r = run_cli("combine --input " + dir.file("m.csv") +
                               " --method average --no-standardize --output " +
                               dir.file("c.csv"),
                           dir);
    REQUIRE(r.exit_code == 0);
    CHECK(read_score_column(dir.file("c.csv")) == ScoreVector{2, 3});

    const auto bad = run_cli("combine --input " + dir.file("m.csv") +
                                 " --method aom --buckets 5 --output " + dir.file("c.csv"),
                             dir);
    CHECK(bad.exit_code == 2);

    const auto moa = run_cli("combine --input " + dir.file("m.csv") +
                                 " --method moa --buckets 1 --no-standardize --output " +
                                 dir.file("c2.csv"),
                             dir);
    REQUIRE(moa.exit_code == 0);
    CHECK(read_score_column(dir.file("c2.csv")) == ScoreVector{2, 3});
}

TEST_CASE("bench renders one row per dataset-algorithm pair") {
    TempDir dir("cli");
    run_cli("generate --n-train 80 --n-test 10 --seed 3 --out-dir " + dir.file("d"), dir);
    const auto r = run_cli("bench --data " + dir.file("d/X_train.csv") + " --truth " +
                               dir.file("d/y_train.csv") +
                               " --algos knn,hbos --seeds 1,2 --output " +
                               dir.file("report.csv"),
                           dir);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("dataset") != std::string::npos);
    CHECK(r.out.find("knn") != std::string::npos);
    CHECK(r.out.find("hbos") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);  // header + 2 rows

    const std::string csv = read_file(dir.file("report.csv"));
    CHECK(csv.find("dataset,algo,roc,precision_at_n,fit_ms,score_ms") == 0);

    // identical seeds give identical metric values (timings excluded)
    const auto again = run_cli("bench --data " + dir.file("d/X_train.csv") + " --truth " +
                                   dir.file("d/y_train.csv") + " --algos knn,hbos --seeds 1,2",
                               dir);
    const auto metric_columns = [](const std::string& table) {
        std::string metrics;
        std::istringstream lines(table);
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string dataset, algo, roc, prn;
            fields >> dataset >> algo >> roc >> prn;
            metrics += dataset + " " + algo + " " + roc + " " + prn + "\n";
        }
        return metrics;
    };
    CHECK(metric_columns(again.out) == metric_columns(r.out));
}

TEST_CASE("bench reports per-cell errors without aborting") {
    TempDir dir("cli");
    run_cli("generate --n-train 8 --n-test 5 --seed 4 --out-dir " + dir.file("d"), dir);
    // k larger than the train set breaks knn but hbos still reports
    const auto r = run_cli("bench --data " + dir.file("d/X_train.csv") + " --truth " +
                               dir.file("d/y_train.csv") + " --algos knn,hbos --k 50",
                           dir);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("ERROR") != std::string::npos);
    CHECK(r.out.find("hbos") != std::string::npos);
}

TEST_CASE("plot rejects non-2d input and writes svg for 2d") {
    TempDir dir("cli");
    run_cli("generate --n-train 50 --n-test 10 --n-features 3 --seed 5 --out-dir " +
                dir.file("d3"),
            dir);
    run_cli("generate --n-train 50 --n-test 10 --n-features 2 --seed 5 --out-dir " +
                dir.file("d2"),
            dir);

    const auto bad = run_cli("plot --input " + dir.file("d3/X_train.csv") + " --truth " +
                                 dir.file("d3/y_train.csv") + " --pred " +
                                 dir.file("d3/y_train.csv") + " --output " +
                                 dir.file("x.svg"),
                             dir);
    CHECK(bad.exit_code == 2);

    const auto good = run_cli("plot --input " + dir.file("d2/X_train.csv") + " --truth " +
                                  dir.file("d2/y_train.csv") + " --pred " +
                                  dir.file("d2/y_train.csv") + " --output " +
                                  dir.file("ok.svg"),
                              dir);
    CHECK(good.exit_code == 0);
    const std::string svg = read_file(dir.file("ok.svg"));
    CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("seeded pipelines are byte-identical across runs") {
    TempDir dir("cli");
    for (const char* run : {"a", "b"}) {
        const std::string d = dir.file(run);
        run_cli("generate --n-train 60 --n-test 30 --seed 9 --out-dir " + d, dir);
        run_cli("fit --algo iforest --seed 9 --input " + d + "/X_train.csv --model " + d +
                    "/m.json",
                dir);
        run_cli("score --model " + d + "/m.json --input " + d + "/X_test.csv --output " + d +
                    "/s.csv --labels",
                dir);
    }
    CHECK(read_file(dir.file("a/X_train.csv")) == read_file(dir.file("b/X_train.csv")));
    CHECK(read_file(dir.file("a/m.json")) == read_file(dir.file("b/m.json")));
    CHECK(read_file(dir.file("a/s.csv")) == read_file(dir.file("b/s.csv")));
}
