// One PASS/FAIL line per acceptance criterion; exit status is the failure count.
#include "oracles.hpp"
#include "rsat/rsat.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rsat;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note << "first failure: " << what << "; ";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note << "exception: " << e.what() << "; ";
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok)
        ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << o.note.str() << ms
              << " ms)" << std::endl;
}

std::string at(std::initializer_list<std::pair<const char*, long long>> kv)
{
    std::ostringstream os;
    for (const auto& [k, v] : kv)
        os << k << '=' << v << ' ';
    return os.str();
}

} // namespace

int main()
{
    criterion(1, "small values of f, g, g'", [](Outcome& o) {
        const std::vector<int> f{2, 3, 5};
        const std::vector<std::pair<int, int>> g{{0, 0}, {3, 3}, {9, 8}};
        for (int k = 1; k <= 3; ++k) {
            const auto rf = compute_f(k);
            o.require(rf.value == f[k - 1] && rf.bound == Bound::exact && verify_record(rf).holds,
                      at({{"f k", k}, {"got", rf.value}}));
            const auto [rg, rgp] = compute_g_gprime(k);
            o.require(rg.value == g[k - 1].first && verify_record(rg).holds, at({{"g k", k}, {"got", rg.value}}));
            o.require(rgp.value == g[k - 1].second && verify_record(rgp).holds,
                      at({{"g' k", k}, {"got", rgp.value}}));
        }
        o.note << "f=2,3,5 (g,g')=(0,0),(3,3),(9,8); ";
    });

    criterion(2, "gamma and alt-K5 constructions are saturated with exact sizes", [](Outcome& o) {
        const std::vector<int> f{2, 3, 5};
        int checked = 0;
        for (int r = 3; r <= 5; ++r) {
            for (int n = f[static_cast<std::size_t>(r - 3)] + 2; n <= 16; ++n) {
                const auto g = gamma_rn(r, n);
                const int want = r == 3 ? 2 * n - 4 : r == 4 ? 3 * n - 6 : 5 * n - 16;
                o.require(g.order() == n && g.size() == want, at({{"gamma size r", r}, {"n", n}}));
                o.require(is_rainbow_saturated(g, r).holds, at({{"gamma saturated r", r}, {"n", n}}));
                ++checked;
            }
        }
        for (int n = 9; n <= 14; ++n) {
            const auto g = alt_k5(n);
            o.require(g.order() == n && g.size() == 5 * n - 16, at({{"alt-k5 size n", n}}));
            o.require(is_rainbow_saturated(g, 5).holds, at({{"alt-k5 saturated n", n}}));
            ++checked;
        }
        o.note << checked << " graphs; ";
    });

    criterion(3, "subdivision construction lies in the family with the stated order", [](Outcome& o) {
        for (int k = 4; k <= 12; ++k) {
            const auto g = subdivision_gamma(k);
            const int want = k + static_cast<int>(std::ceil((-1.0 + std::sqrt(4.0 * k - 3.0)) / 2.0));
            o.require(g.order() == want, at({{"order k", k}, {"got", g.order()}, {"want", want}}));
            o.require(in_family_Fhat(g, k).holds, at({{"membership k", k}}));
        }
        o.note << "k=4..12; ";
    });

    criterion(4, "stable (semi)saturation constructions", [](Outcome& o) {
        int checked = 0;
        for (int r = 3; r <= 5; ++r) {
            const Pattern kr = Pattern::clique(r);
            for (int n = 2 * r - 2; n <= 12; ++n) {
                const Graph gp = g_prime(n, r);
                o.require(gp.size() == formulas::sat1(n, r), at({{"g' size r", r}, {"n", n}}));
                o.require(is_k_sat(gp, kr, 1).holds, at({{"g' 1-sat r", r}, {"n", n}}));
                o.require(is_rainbow_saturated(g_prime_rainbow(n, r), r).holds, at({{"g' rainbow r", r}, {"n", n}}));
                const Graph gs = g_semisat(n, r);
                o.require(gs.size() == formulas::ssat1(n, r), at({{"gsemi size r", r}, {"n", n}}));
                o.require(is_k_semisat(gs, kr, 1).holds, at({{"gsemi 1-semisat r", r}, {"n", n}}));
                o.require(is_rainbow_semisaturated(g_semisat_rainbow(n, r), r).holds,
                          at({{"gsemi rainbow r", r}, {"n", n}}));
                ++checked;
            }
        }
        o.note << checked << " (r,n) pairs; ";
    });

    criterion(5, "brute-force saturation numbers", [](Outcome& o) {
        for (int n = 3; n <= 8; ++n)
            o.require(compute_sat(n, Pattern::clique(3)).value == n - 1, at({{"sat K3 n", n}}));
        for (int n = 4; n <= 7; ++n)
            o.require(compute_sat(n, Pattern::clique(4)).value == 2 * n - 3, at({{"sat K4 n", n}}));
        const std::vector<int> want{4, 6, 8};
        for (int n = 4; n <= 6; ++n) {
            const auto rec = compute_sat_rainbow(n, 3);
            o.require(rec.value == want[static_cast<std::size_t>(n - 4)] && rec.bound == Bound::exact &&
                          verify_record(rec).holds,
                      at({{"rainbow sat n", n}, {"got", rec.value}}));
            if (n <= 5)
                o.require(naive_sat_rainbow(n, 3) == rec.value, at({{"unreduced n", n}}));
        }
        o.note << "sat(n,K3)=n-1, sat(n,K4)=2n-3, rainbow 4,6,8; ";
    });

    criterion(6, "clique-robust graphs up to 8 vertices and the Petersen complement", [](Outcome& o) {
        const auto s = lemma2_sweep(8);
        o.require(!s.counterexample.has_value(), "counterexample found");
        o.require(s.checked == 1 + 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346, at({{"classes", static_cast<long long>(s.checked)}}));
        const Graph pc = complement(graphs::petersen());
        o.require(pc.order() == 10 && clique_number(pc) == 4 && robust_clique_check(pc, 2), "petersen");
        o.note << s.checked << " graphs; ";
    });

    criterion(7, "rainbow (semi)saturation implies 1-stable (semi)saturation", [](Outcome& o) {
        std::uint64_t checked = 0;
        for (int r = 3; r <= 4; ++r) {
            const auto s = prop_comparison_sweep(6, r);
            o.require(!s.counterexample.has_value(), at({{"counterexample r", r}}));
            checked += s.checked;
        }
        o.note << checked << " graph checks; ";
    });

    criterion(8, "k-stable saturation upper construction", [](Outcome& o) {
        int checked = 0;
        for (int r = 3; r <= 4; ++r)
            for (int k = 0; k <= 2; ++k)
                for (int n = (k + 1) * (r - 2) + 2; n <= 10; ++n) {
                    const Graph g = satk_upper(n, r, k);
                    o.require(g.size() == formulas::satk_upper(n, r, k), at({{"size r", r}, {"k", k}, {"n", n}}));
                    o.require(is_k_sat(g, Pattern::clique(r), k).holds, at({{"k-sat r", r}, {"k", k}, {"n", n}}));
                    ++checked;
                }
        o.note << checked << " triples; ";
    });

    criterion(9, "non-stability sweep r=3 n=12", [](Outcome& o) {
        const int n = 12, r = 3;
        int built = 0, infeasible = 0;
        std::ostringstream gaps;
        for (int m = 2 * n - 4; m <= n * (n - 1) / 2; ++m) {
            try {
                const auto g = nonstab_assemble(r, n, m);
                o.require(g.order() == n && g.size() == m, at({{"size m", m}}));
                o.require(is_rainbow_saturated(g, r).holds, at({{"saturated m", m}}));
                ++built;
            } catch (const InfeasibleError&) {
                ++infeasible;
                gaps << m << ',';
            }
        }
        o.note << built << " verified, " << infeasible << " explicitly infeasible";
        if (infeasible)
            o.note << " (m=" << gaps.str() << ")";
        o.note << "; ";
    });

    criterion(10, "one fresh color suffices for saturation verdicts", [](Outcome& o) {
        std::mt19937 rng(20240601);
        int saturated = 0, semisaturated = 0;
        VerifyOptions one, two;
        two.fresh_colors = 2;
        for (int i = 0; i < 500; ++i) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const int r = 3 + static_cast<int>(rng() % 2);
            const int colors = 1 + static_cast<int>(rng() % 6);
            ColoredGraph g = oracle::random_colored(rng, n, 0.5, colors);
            if (i % 3 != 0) {
                for (const auto& e : g.edges())
                    if (rng() % 2)
                        g.remove_edge(e);
                if (contains_rainbow_clique(g, r).found)
                    g = ColoredGraph(n);
                g = saturate_completion(g, r - 1);
                if (i % 3 == 2 && g.size() > 0) {
                    const auto edges = g.edges();
                    g.remove_edge(edges[rng() % edges.size()]);
                }
            }
            const bool s1 = is_rainbow_saturated(g, r, one).holds;
            const bool s2 = is_rainbow_saturated(g, r, two).holds;
            const bool m1 = is_rainbow_semisaturated(g, r, one).holds;
            const bool m2 = is_rainbow_semisaturated(g, r, two).holds;
            o.require(s1 == s2 && m1 == m2, at({{"sample", i}, {"n", n}, {"r", r}}));
            saturated += s1;
            semisaturated += m1;
        }
        o.note << "500 samples, " << saturated << " saturated, " << semisaturated << " semisaturated; ";
    });

    std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
    return failures == 0 ? 0 : 1;
}
