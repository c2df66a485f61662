// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (capped at 1). Seed: --seed, else COQLA_SEED, else fixed.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helpers.hpp"

using namespace coqla;
using th::mat;
using th::q;

namespace {

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
}

std::string oneLine(const ExactMatrix& m) {
    std::string s = formatMatrix(m);
    for (auto& ch : s)
        if (ch == '\n') ch = '|';
    if (!s.empty()) s.pop_back();
    return "[" + s + "]";
}

std::size_t pick(Rng& rng, std::size_t n) {
    return 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
}

// Counts failures per labelled property and remembers the first failing seed.
struct Tally {
    std::vector<std::string> labels;
    std::vector<int> fails;
    std::vector<std::uint64_t> firstSeed;

    explicit Tally(std::vector<std::string> l)
        : labels(std::move(l)), fails(labels.size(), 0), firstSeed(labels.size(), 0) {}

    void check(std::size_t k, bool cond, std::uint64_t seed) {
        if (cond) return;
        if (fails[k]++ == 0) firstSeed[k] = seed;
    }
    void report(Verdict& v) const {
        for (std::size_t k = 0; k < labels.size(); ++k)
            v.require(fails[k] == 0, labels[k] + " failed " + std::to_string(fails[k]) +
                                         "x (first seed " + std::to_string(firstSeed[k]) + ")");
    }
};

Verdict workedDeterminant() {
    Verdict v;
    const auto a = th::workedA();
    v.require(detHermitian(a) == 4, "det A != 4");
    for (std::size_t i = 1; i <= 3; ++i) {
        v.require(rdet(i, a) == q("4"), "rdet_" + std::to_string(i) + " != 4");
        v.require(cdet(i, a) == q("4"), "cdet_" + std::to_string(i) + " != 4");
    }
    if (v.ok) v.info("det A = 4, rdet_1..3 = cdet_1..3 = 4");
    return v;
}

Verdict workedInverse() {
    Verdict v;
    const auto a = th::workedA();
    const auto x = solveRight(a, mat("i\nj\nk"));
    const auto expectedX = mat("-3-i+3j+k\n1+3i+j-k\n2j+2k") / Rational(4);
    v.require(x.solution == expectedX, "x = " + oneLine(x.solution));
    const auto expectedInv =
        mat("0; 2-2j; 1-i+j-k\n2+2j; 0; 1-i-j+k\n1+i-j+k; 1+i+j-k; 0") / Rational(4);
    const auto inv = invHermitian(a, AdjugateSide::left);
    v.require(inv == expectedInv, "left inverse = " + oneLine(inv));
    v.require(a * inv == ExactMatrix::identity(3), "A*inv != I");
    v.require(inv * a == ExactMatrix::identity(3), "inv*A != I");
    const std::array<std::array<const char*, 3>, 3> l = {{{"0", "2+2j", "1+i-j+k"},
                                                          {"2-2j", "0", "1+i+j-k"},
                                                          {"1-i+j-k", "1-i-j+k", "0"}}};
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            const auto got = leftCofactor(i, j, a);
            v.require(got == q(l[i - 1][j - 1]), "L" + std::to_string(i) + std::to_string(j) +
                                                     " = " + formatCoquaternion(got));
        }
    if (v.ok) v.info("x, inverse, nine left cofactors and A*inv = inv*A = I all exact");
    return v;
}

Verdict workedTwoSided() {
    Verdict v;
    const auto a = th::workedA(), b = th::workedB(), c = th::workedC();
    v.require(detHermitian(b) == 2, "det B != 2");
    const auto cb = reduceByRowDets(b, c);
    const auto col1 = ExactMatrix::columnVector(cb.col(1));
    const auto col2 = ExactMatrix::columnVector(cb.col(2));
    v.require(col1 == mat("i+k\n-i\nj+k"), "c^B_.1 = " + oneLine(col1));
    v.require(col2 == mat("1-j\nj\n-1-i"),
              "c^B_.2 = " + oneLine(col2) + ", expected [1-j|j|-1-i]");
    const auto reference =
        mat("-4i+2j-2k; -4+2j+2k\n2i+2j; -2-2k\n1+i+j+3k; 3-2i-j+2k") / Rational(8);
    const auto row = solveTwoSided(a, b, c, TwoSidedRoute::rowFirst);
    const auto col = solveTwoSided(a, b, c, TwoSidedRoute::colFirst);
    v.require(row.solution == col.solution, "routes disagree");
    for (const auto* r : {&row, &col}) {
        const char* name = r == &row ? "row-first" : "column-first";
        v.require(r->solution == reference,
                  std::string(name) + " X = " + oneLine(r->solution) + " differs from the reference X");
        v.require(a * r->solution * b == c, std::string(name) + " residual nonzero");
    }
    const auto refResidual = a * reference * b - c;
    if (!(refResidual == ExactMatrix(3, 2)))
        v.info("reference X gives A*X*B - C = " + oneLine(refResidual) +
               ", computed X gives 0 (A, B invertible, so the solution is unique)");
    return v;
}

Verdict hermitianSuite(std::uint64_t base, int perSize) {
    Verdict v;
    Tally t({"(a) rdet=cdet real", "(b) adjugate identities", "(c) replacement zeros",
             "(d) scaling laws", "(e) added combinations", "(f) expansion=enumeration",
             "(g) det/qdet nonzero agree"});
    int singular = 0, total = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        GenConfig cfg;
        cfg.seed = base + 1000003ull * n;
        cfg.n = n;
        for (int k = 0; k < perSize; ++k) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
            Rng rng(seed);
            const auto a = randomHermitian<Rational>(rng, n, cfg.lo, cfg.hi);
            const Rational d = detHermitian(a);
            const ExactCoq dq(d);
            ++total;
            if (d == 0) ++singular;

            bool ok = true;
            for (std::size_t i = 1; i <= n; ++i) ok = ok && rdet(i, a) == dq && cdet(i, a) == dq;
            t.check(0, ok, seed);

            const auto idn = ExactMatrix::identity(n);
            t.check(1, a * adjugate(a, AdjugateSide::right) == d * idn &&
                           adjugate(a, AdjugateSide::left) * a == d * idn,
                    seed);

            ok = true;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    if (i != j)
                        ok = ok && rdet(j, a.replaceRow(j, a.row(i))).isZero() &&
                             cdet(i, a.replaceCol(i, a.col(j))).isZero();
            t.check(2, ok, seed);

            ok = true;
            for (std::size_t i = 1; i <= n; ++i) {
                const auto bq = randomCoquaternion<Rational>(rng, cfg.lo, cfg.hi);
                auto col = a.col(i);
                for (auto& e : col) e = e * bq;
                auto row = a.row(i);
                for (auto& e : row) e = bq * e;
                ok = ok && rdet(i, a.replaceCol(i, col)) == dq * bq &&
                     cdet(i, a.replaceRow(i, row)) == bq * dq;
            }
            t.check(3, ok, seed);

            ok = true;
            for (std::size_t i = 1; i <= n; ++i) {
                auto row = a.row(i);
                auto col = a.col(i);
                for (std::size_t m = 1; m <= n; ++m) {
                    if (m == i) continue;
                    const auto cl = randomCoquaternion<Rational>(rng, cfg.lo, cfg.hi);
                    for (std::size_t l = 1; l <= n; ++l) {
                        row[l - 1] += cl * a(m, l);
                        col[l - 1] += a(l, m) * cl;
                    }
                }
                const auto ar = a.replaceRow(i, row);
                const auto ac = a.replaceCol(i, col);
                ok = ok && rdet(i, ar) == dq && cdet(i, ar) == dq && cdet(i, ac) == dq &&
                     rdet(i, ac) == dq;
            }
            t.check(4, ok, seed);

            ok = true;
            for (std::size_t i = 1; i <= n; ++i)
                ok = ok && rdetByExpansion(i, a) == rdet(i, a) && cdetByExpansion(i, a) == cdet(i, a);
            t.check(5, ok, seed);

            t.check(6, (d == 0) == qdet(a).isZero(), seed);
        }
    }
    t.report(v);
    v.info(std::to_string(total) + " matrices (n=2,3,4), " + std::to_string(singular) + " singular");
    return v;
}

Verdict generalSuite(std::uint64_t base, int perSize) {
    Verdict v;
    Tally t({"zero row/column", "left row factor", "right column factor", "row/column additivity",
             "adjoint duality", "qdet multiplicative"});
    int total = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int k = 0; k < perSize; ++k) {
            const std::uint64_t seed = base + 2000003ull * n + static_cast<std::uint64_t>(k);
            Rng rng(seed);
            const auto a = randomMatrix<Rational>(rng, n, n, -3, 3);
            ++total;
            const std::vector<ExactCoq> zeros(n);
            const std::size_t s = pick(rng, n);

            bool ok = true;
            for (std::size_t i = 1; i <= n; ++i)
                ok = ok && rdet(i, a.replaceRow(s, zeros)).isZero() &&
                     cdet(i, a.replaceRow(s, zeros)).isZero() &&
                     rdet(i, a.replaceCol(s, zeros)).isZero() &&
                     cdet(i, a.replaceCol(s, zeros)).isZero();
            t.check(0, ok, seed);

            ok = true;
            for (std::size_t i = 1; i <= n; ++i) {
                const auto b = randomCoquaternion<Rational>(rng, -3, 3);
                auto row = a.row(i);
                for (auto& e : row) e = b * e;
                ok = ok && rdet(i, a.replaceRow(i, row)) == b * rdet(i, a);
            }
            t.check(1, ok, seed);

            ok = true;
            for (std::size_t j = 1; j <= n; ++j) {
                const auto b = randomCoquaternion<Rational>(rng, -3, 3);
                auto col = a.col(j);
                for (auto& e : col) e = e * b;
                ok = ok && cdet(j, a.replaceCol(j, col)) == cdet(j, a) * b;
            }
            t.check(2, ok, seed);

            ok = true;
            const auto extra = randomMatrix<Rational>(rng, 1, n, -3, 3).row(1);
            for (std::size_t r = 1; r <= n; ++r) {
                auto row = a.row(r), col = a.col(r);
                for (std::size_t l = 0; l < n; ++l) {
                    row[l] += extra[l];
                    col[l] += extra[l];
                }
                const auto ar = a.replaceRow(r, row), ae = a.replaceRow(r, extra);
                const auto ac = a.replaceCol(r, col), ce = a.replaceCol(r, extra);
                for (std::size_t i = 1; i <= n; ++i)
                    ok = ok && rdet(i, ar) == rdet(i, a) + rdet(i, ae) &&
                         cdet(i, ar) == cdet(i, a) + cdet(i, ae) &&
                         rdet(i, ac) == rdet(i, a) + rdet(i, ce) &&
                         cdet(i, ac) == cdet(i, a) + cdet(i, ce);
            }
            t.check(3, ok, seed);

            ok = true;
            const auto star = a.hermitianAdjoint();
            for (std::size_t i = 1; i <= n; ++i) ok = ok && rdet(i, star) == cdet(i, a).conj();
            t.check(4, ok, seed);

            const auto b = randomMatrix<Rational>(rng, n, n, -3, 3);
            t.check(5, qdet(a * b) == qdet(a) * qdet(b), seed);
        }
    }
    t.report(v);
    v.info(std::to_string(total) + " matrices (n=2,3)");
    return v;
}

Verdict traceProducts(std::uint64_t base, int perSize) {
    Verdict v;
    int fails = 0, total = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (int k = 0; k < perSize; ++k) {
            const std::uint64_t seed = base + 3000017ull * n + static_cast<std::uint64_t>(k);
            Rng rng(seed);
            std::vector<ExactCoq> h;
            for (std::size_t s = 0; s < n; ++s) h.push_back(randomCoquaternion<Rational>(rng, -3, 3));
            ExactCoq sum;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                ExactCoq prod(Rational(1));
                for (std::size_t s = 0; s < n; ++s) prod = prod * (mask >> s & 1 ? h[s].conj() : h[s]);
                sum += prod;
            }
            Rational traces(1);
            for (const auto& x : h) traces *= x.trace();
            ++total;
            if (!(sum == ExactCoq(traces)) && fails++ == 0)
                v.require(false, "first failing seed " + std::to_string(seed));
        }
    v.require(fails == 0, std::to_string(fails) + " failures");
    v.info(std::to_string(total) + " tuples (n=1..4)");
    return v;
}

double relGap(const FloatMatrix& f, const ExactMatrix& e) {
    const auto ed = convertTo<double>(e);
    const double scale = std::max(1.0, ed.maxAbsComponent());
    return (f - ed).maxAbsComponent() / scale;
}

Verdict backendAgreement(std::uint64_t base, int count) {
    Verdict v;
    constexpr double kRel = 1e-9;
    double worst = 0;
    int singular = 0;
    for (int k = 0; k < count; ++k) {
        const std::uint64_t seed = base + 4000037ull + static_cast<std::uint64_t>(k);
        Rng rng(seed);
        const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
        const auto a = randomHermitian<Rational>(rng, n, -3, 3);
        const auto b = randomHermitian<Rational>(rng, 2, -3, 3);
        const auto y = randomMatrix<Rational>(rng, n, 1, -3, 3);
        const auto c = randomMatrix<Rational>(rng, n, 2, -3, 3);
        const auto af = convertTo<double>(a), bf = convertTo<double>(b);
        const auto yf = convertTo<double>(y), cf = convertTo<double>(c);
        const std::string tag = " (seed " + std::to_string(seed) + ")";

        const Rational d = detHermitian(a);
        const double df = detHermitian(af);
        const double gap = std::abs(df - d.get_d()) / std::max(1.0, std::abs(d.get_d()));
        worst = std::max(worst, gap);
        v.require(gap <= kRel, "det" + tag);
        if (d == 0) {
            ++singular;
            bool threw = false;
            try {
                (void)invHermitian(af, AdjugateSide::left);
            } catch (const Singular&) {
                threw = true;
            }
            v.require(threw, "float inverse of a singular matrix" + tag);
            continue;
        }
        const auto inv = relGap(invHermitian(af, AdjugateSide::left), invHermitian(a, AdjugateSide::left));
        const auto xr = relGap(solveRight(af, yf).solution, solveRight(a, y).solution);
        const auto xl = relGap(solveLeft(af, yf.transpose()).solution, solveLeft(a, y.transpose()).solution);
        worst = std::max({worst, inv, xr, xl});
        v.require(inv <= kRel, "inverse" + tag);
        v.require(xr <= kRel && xl <= kRel, "one-sided solution" + tag);
        if (detHermitian(b) != 0) {
            const auto x2 = relGap(solveTwoSided(af, bf, cf, TwoSidedRoute::colFirst).solution,
                                   solveTwoSided(a, b, c, TwoSidedRoute::colFirst).solution);
            worst = std::max(worst, x2);
            v.require(x2 <= kRel, "two-sided solution" + tag);
        }
    }
    std::ostringstream s;
    s << count << " instances (" << singular << " singular), worst relative gap " << worst;
    v.info(s.str());
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Captured {
    int status;
    std::string out;
};

Captured runCli(const std::string& args) {
    const std::string cmd = "\"" COQLA_CLI_PATH "\" " + args;
    Captured c{-1, ""};
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return c;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
    const int raw = ::pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

Verdict cliGolden() {
    Verdict v;
    const std::string d = COQLA_TEST_DATA;
    auto f = [&](const char* name) { return "\"" + d + "/" + name + "\""; };

    for (const char* name : {"a_hermitian3.mat", "y_ijk.mat", "b_hermitian2.mat", "c_3x2.mat"}) {
        const auto m = readMatrixFile<Rational>(d + "/" + name);
        const auto text = formatMatrix(m);
        v.require(mat(text) == m && formatMatrix(mat(text)) == text,
                  std::string("round trip of ") + name);
    }

    struct Case {
        std::string args;
        const char* golden;
    };
    const std::vector<Case> cases = {
        {"det " + f("a_hermitian3.mat"), "det_a.out"},
        {"inv " + f("a_hermitian3.mat"), "inv_a.out"},
        {"inv --side right " + f("a_hermitian3.mat"), "inv_a.out"},
        {"solve-right " + f("a_hermitian3.mat") + " " + f("y_ijk.mat"), "solve_right.out"},
        {"solve-axb " + f("a_hermitian3.mat") + " " + f("b_hermitian2.mat") + " " + f("c_3x2.mat"),
         "solve_axb.out"},
        {"solve-axb --route row " + f("a_hermitian3.mat") + " " + f("b_hermitian2.mat") + " " +
             f("c_3x2.mat"),
         "solve_axb.out"},
    };
    for (const auto& c : cases) {
        const auto first = runCli(c.args);
        const auto second = runCli(c.args);
        const auto expected = slurp(d + "/golden/" + c.golden);
        v.require(first.status == 0, c.args + ": exit " + std::to_string(first.status));
        v.require(first.out == expected, c.args + ": output differs from golden/" + c.golden);
        v.require(first.out == second.out, c.args + ": output not stable");
    }
    const auto sing = runCli("inv " + f("ones2.mat") + " 2>&1");
    v.require(sing.status == 1 && sing.out.find("singular") != std::string::npos,
              "inv ones2.mat should exit 1 with 'singular'");
    if (v.ok) v.info(std::to_string(cases.size()) + " golden runs + singular case");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coqla acceptance checks"};
    std::uint64_t seed = th::baseSeed();
    int samples = 200;
    app.add_option("--seed", seed, "base seed (default $COQLA_SEED or built-in)");
    app.add_option("--samples", samples, "random samples per size")->check(CLI::Range(200, 100000));
    CLI11_PARSE(app, argc, argv);

    std::cout << "seed " << seed << "\n";
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {"worked 3x3 determinant", workedDeterminant},
        {"worked inverse and right system", workedInverse},
        {"worked two-sided system", workedTwoSided},
        {"Hermitian property suite", [&] { return hermitianSuite(seed, samples); }},
        {"general-matrix property suite", [&] { return generalSuite(seed, samples); }},
        {"trace product identity", [&] { return traceProducts(seed, 30); }},
        {"float/exact backend agreement", [&] { return backendAgreement(seed, 50); }},
        {"CLI golden outputs", cliGolden},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        if (!v.ok) ++failed;
        std::cout << (v.ok ? "PASS " : "FAIL ") << c.name << " :: " << join(v.notes) << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
