#include "whirl/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "whirl/ideal.hpp"
#include "whirl/function_whirl.hpp"
#include "whirl/orbit.hpp"
#include "whirl/ppartition.hpp"
#include "whirl/rational.hpp"
#include "whirl/statistic.hpp"
#include "whirl/whorm.hpp"

namespace whirl {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::refuted: return "refuted";
        case Verdict::skipped: return "skipped";
        case Verdict::exploratory: return "exploratory";
    }
    return "?";
}

namespace {

VerificationReport start(std::string claim, std::string params) {
    VerificationReport rep;
    rep.claim = std::move(claim);
    rep.params = std::move(params);
    rep.verdict = Verdict::verified;
    return rep;
}

void refute(VerificationReport& rep, std::string witness) {
    rep.verdict = Verdict::refuted;
    if (rep.detail.empty()) rep.detail = witness;
    rep.witnesses.push_back(std::move(witness));
}

template <typename Body>
VerificationReport guarded(std::string claim, std::string params, Body body) {
    VerificationReport rep = start(std::move(claim), std::move(params));
    try {
        body(rep);
    } catch (const ResourceError& e) {
        rep.verdict = Verdict::skipped;
        rep.detail = e.what();
    }
    return rep;
}

std::string kv(const std::string& key, long long value) {
    return key + "=" + std::to_string(value);
}

std::vector<Orbit<PPartition>> whirl_orbits(const Poset& P, int k) {
    auto space = enumerate_ppartitions(P, k);
    return all_orbits([&P](const PPartition& f) { return whirl(P, f); }, space);
}

// [f(x) >= a] on a partition.
int chi(const PPartition& f, int x, int a) { return f.labels[x] >= a ? 1 : 0; }

// F_i = chi(l,i) + chi(r,i) + chi(c,i-1) on V partitions (l=0, r=1, c=2).
int flux_cap(const PPartition& f, int i) {
    return chi(f, 0, i) + chi(f, 1, i) + chi(f, 2, i - 1);
}

std::string orbit_sizes(const std::vector<Orbit<PPartition>>& orbits) {
    std::map<std::size_t, int> counts;
    for (const auto& o : orbits) ++counts[o.length()];
    std::ostringstream out;
    out << "orbit sizes:";
    for (auto [len, cnt] : counts) out << " " << len << "x" << cnt;
    return out.str();
}

}  // namespace

VerificationReport verify_v_counting(int k) {
    return guarded("v-count", kv("k", k), [&](VerificationReport& rep) {
        auto V = make_claw(2);
        auto P = product_with_chain(V, k);
        auto count = static_cast<long long>(enumerate_ideals(P).size());
        long long closed = static_cast<long long>(k + 1) * (k + 2) * (2 * k + 3) / 6;
        rep.witnesses.push_back("enumerated " + std::to_string(count) +
                                ", closed form " + std::to_string(closed));
        if (count != closed) refute(rep, "ideal count mismatch at k=" + std::to_string(k));
    });
}

VerificationReport verify_claw_counting(int n, int k) {
    return guarded("claw-count", kv("n", n) + " " + kv("k", k), [&](VerificationReport& rep) {
        auto C = make_claw(n);
        auto P = product_with_chain(C, k);
        auto count = static_cast<unsigned long long>(enumerate_ideals(P).size());
        auto closed = claw_ideal_count(n, k);
        rep.witnesses.push_back("enumerated " + std::to_string(count) +
                                ", closed form " + std::to_string(closed));
        if (count != closed)
            refute(rep, "ideal count mismatch at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
    });
}

VerificationReport verify_v_order(int k) {
    return guarded("v-order", kv("k", k), [&](VerificationReport& rep) {
        auto V = make_claw(2);
        auto orbits = whirl_orbits(V, k);
        std::uint64_t order = 1;
        for (const auto& o : orbits) order = std::lcm(order, std::uint64_t{o.length()});
        rep.witnesses.push_back("order " + std::to_string(order) + ", expected " +
                                std::to_string(2 * (k + 2)));
        rep.witnesses.push_back(orbit_sizes(orbits));
        if (order != static_cast<std::uint64_t>(2 * (k + 2)))
            refute(rep, "order of the step map is " + std::to_string(order) +
                            ", not 2(k+2) = " + std::to_string(2 * (k + 2)));
    });
}

VerificationReport verify_halfway(int k) {
    return guarded("v-halfway", kv("k", k), [&](VerificationReport& rep) {
        auto V = make_claw(2);
        std::size_t checked = 0;
        for (const auto& f : enumerate_ppartitions(V, k)) {
            PPartition g = whirl_iterate(V, f, k + 2);
            // reflection: swap the labels of l and r, keep c
            bool reflected = g.labels[0] == f.labels[1] && g.labels[1] == f.labels[0] &&
                             g.labels[2] == f.labels[2];
            if (!reflected) {
                refute(rep, "whirl^" + std::to_string(k + 2) + " " + ppartition_tuple(V, f) +
                                " = " + ppartition_tuple(V, g) + ", not the reflection");
                return;
            }
            ++checked;
        }
        rep.witnesses.push_back("whirl^(k+2) reflects all " + std::to_string(checked) +
                                " partitions");
    });
}

namespace {

// One-tailed iff the two outer labels differ; cross-checked against the
// whorm decomposition's tail counts.
bool is_one_tailed(const Poset& V, const Orbit<PPartition>& orbit, VerificationReport& rep) {
    const PPartition& f = orbit.representative();
    bool merged = f.labels[0] == f.labels[1];
    OrbitBoard board;
    board.poset = std::make_shared<Poset>(V);
    board.rows = orbit.states;
    if (board_has_merged_columns(board) != merged)
        refute(rep, "column-merge shortcut disagrees with the board on orbit of " +
                        ppartition_tuple(V, f));
    auto whorms = decompose_whorms(repeat_board(board, default_super_multiple(board)));
    for (const auto& w : whorms) {
        if (merged != (w.tail_columns.size() == 2)) {
            refute(rep, "whorm tail count disagrees with column merging on orbit of " +
                            ppartition_tuple(V, f));
            break;
        }
    }
    return !merged;
}

void check_flux_antipodal(const Poset& V, int k,
                          const std::vector<Orbit<PPartition>>& orbits,
                          VerificationReport& rep) {
    for (int i = 2; i <= k; ++i) {
        Rational expected(3 * (k + 2 - 2 * i), k + 2);
        auto eval = [&V, i, k](const PPartition& f) {
            return Rational(flux_cap(f, i) - flux_cap(f, k + 2 - i));
        };
        auto report = homomesy_check("F", orbits, eval,
                                     [&V](const PPartition& f) { return ppartition_tuple(V, f); });
        if (!report.homomesic || report.value != expected) {
            const auto& bad = report.homomesic ? report.orbits.front()
                                               : report.orbits[report.witness_b];
            refute(rep, "F_" + std::to_string(i) + " - F_" + std::to_string(k + 2 - i) +
                            " averages " + bad.average.str() + " on orbit of " +
                            bad.representative + ", expected " + expected.str());
            return;
        }
    }
    rep.witnesses.push_back("F_i - F_(k+2-i) is 3(k+2-2i)/(k+2)-mesic for i in [2," +
                            std::to_string(k) + "]");
}

}  // namespace

VerificationReport verify_v_homomesies(int k) {
    return guarded("v-homomesy", kv("k", k), [&](VerificationReport& rep) {
        auto V = make_claw(2);
        auto orbits = whirl_orbits(V, k);
        auto tuple = [&V](const PPartition& f) { return ppartition_tuple(V, f); };

        for (int a = 1; a <= k; ++a) {
            auto eval = [a](const PPartition& f) { return Rational(chi(f, 0, a) - chi(f, 1, a)); };
            auto report = homomesy_check("chi(l,a)-chi(r,a)", orbits, eval, tuple);
            if (!report.homomesic || report.value != Rational(0)) {
                refute(rep, "chi(l," + std::to_string(a) + ") - chi(r," + std::to_string(a) +
                                ") is not 0-mesic");
                return;
            }
        }
        rep.witnesses.push_back("chi(l,a) - chi(r,a) is 0-mesic for a in [1," +
                                std::to_string(k) + "]");

        {
            auto eval = [k](const PPartition& f) {
                return Rational(chi(f, 0, 1) + chi(f, 1, 1) - chi(f, 2, k));
            };
            auto report = homomesy_check("chi(l,1)+chi(r,1)-chi(c,k)", orbits, eval, tuple);
            Rational expected(2 * (k - 1), k + 2);
            if (!report.homomesic || report.value != expected) {
                refute(rep, "chi(l,1)+chi(r,1)-chi(c,k) is not " + expected.str() + "-mesic");
                return;
            }
            rep.witnesses.push_back("chi(l,1)+chi(r,1)-chi(c,k) is " + expected.str() + "-mesic");
        }

        // successive flux differences, scoped to one-tailed orbits
        std::vector<Orbit<PPartition>> one_tailed, two_tailed;
        for (const auto& o : orbits)
            (is_one_tailed(V, o, rep) ? one_tailed : two_tailed).push_back(o);
        if (rep.verdict == Verdict::refuted) return;

        Rational succ(3, k + 2);
        bool control_fired = false;
        for (int i = 2; i + 1 <= k; ++i) {
            auto eval = [i](const PPartition& f) {
                return Rational(flux_cap(f, i) - flux_cap(f, i + 1));
            };
            auto report = homomesy_check("F_i-F_(i+1)", one_tailed, eval, tuple);
            if (!report.homomesic || (!one_tailed.empty() && report.value != succ)) {
                refute(rep, "F_" + std::to_string(i) + " - F_" + std::to_string(i + 1) +
                                " is not " + succ.str() + "-mesic on one-tailed orbits");
                return;
            }
            for (const auto& o : two_tailed) {
                Rational avg = orbit_average(eval, o);
                if (avg != succ) {
                    if (!control_fired)
                        rep.witnesses.push_back(
                            "two-tailed counterexample: F_" + std::to_string(i) + " - F_" +
                            std::to_string(i + 1) + " averages " + avg.str() + " on orbit of " +
                            tuple(o.representative()) + ", not " + succ.str());
                    control_fired = true;
                }
            }
        }
        rep.witnesses.push_back("F_i - F_(i+1) is " + succ.str() + "-mesic on all " +
                                std::to_string(one_tailed.size()) + " one-tailed orbits");
        if (!two_tailed.empty() && !control_fired && k > 2)
            rep.witnesses.push_back("note: every two-tailed orbit also averaged " + succ.str());

        check_flux_antipodal(V, k, orbits, rep);
    });
}

VerificationReport verify_flux(int k) {
    return guarded("flux", kv("k", k), [&](VerificationReport& rep) {
        auto V = make_claw(2);
        check_flux_antipodal(V, k, whirl_orbits(V, k), rep);
    });
}

VerificationReport verify_worder(int n, int k) {
    return guarded("worder", kv("n", n) + " " + kv("k", k), [&](VerificationReport& rep) {
        auto C = make_claw(n);
        std::size_t checked = 0;
        for (const auto& f : enumerate_ppartitions(C, k)) {
            PPartition g = whirl_iterate(C, f, k + 2);
            PPartition bar = whirl_bar_A(C, f);
            if (g != bar) {
                refute(rep, "whirl^(k+2) " + ppartition_tuple(C, f) + " = " +
                                ppartition_tuple(C, g) + " but the A-rotation gives " +
                                ppartition_tuple(C, bar));
                return;
            }
            int a = alpha(C, f);
            if (whirl_iterate(C, f, a * (k + 2)) != f) {
                refute(rep, "whirl^(alpha(k+2)) does not fix " + ppartition_tuple(C, f));
                return;
            }
            ++checked;
        }
        rep.witnesses.push_back("whirl^(k+2) = A-rotation on all " + std::to_string(checked) +
                                " partitions");
    });
}

VerificationReport verify_claw_period(int n, int k) {
    return guarded("claw-period", kv("n", n) + " " + kv("k", k), [&](VerificationReport& rep) {
        auto C = make_claw(n);
        auto orbits = whirl_orbits(C, k);
        std::uint64_t order = 1;
        for (const auto& o : orbits) order = std::lcm(order, std::uint64_t{o.length()});
        int m = std::min(k + 1, n);
        std::uint64_t expected = k + 2;
        for (int i = 2; i <= m; ++i) expected = std::lcm(expected, std::uint64_t(i) * (k + 2));
        rep.witnesses.push_back("order " + std::to_string(order) + ", expected " +
                                std::to_string(expected));
        if (order != expected) {
            refute(rep, "order of the step map is " + std::to_string(order) + ", not " +
                            std::to_string(expected));
            return;
        }

        // the seed partitions that realize each LCM factor
        for (int p = 1; p <= m; ++p) {
            PPartition f;
            f.bound = k;
            f.labels.assign(n + 1, p - 1);
            for (int i = 0; i + 1 < p; ++i) f.labels[i] = i;
            std::size_t want = p == k + 1 ? static_cast<std::size_t>(k + 1)
                                          : static_cast<std::size_t>(p) * (k + 2);
            auto orbit = orbit_of([&C](const PPartition& g) { return whirl(C, g); }, f);
            if (orbit.length() != want) {
                refute(rep, "seed " + ppartition_tuple(C, f) + " has orbit length " +
                                std::to_string(orbit.length()) + ", expected " +
                                std::to_string(want));
                return;
            }
            rep.witnesses.push_back("seed " + ppartition_tuple(C, f) + " realizes orbit length " +
                                    std::to_string(want));
        }
    });
}

VerificationReport verify_claw_homomesies(int n, int k) {
    return guarded("claw-homomesy", kv("n", n) + " " + kv("k", k), [&](VerificationReport& rep) {
        auto C = make_claw(n);
        const auto& info = *C.claw();
        auto orbits = whirl_orbits(C, k);
        auto tuple = [&C](const PPartition& f) { return ppartition_tuple(C, f); };

        for (int a = 1; a <= k; ++a)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int bi = info.outer[i], bj = info.outer[j];
                    auto eval = [bi, bj, a](const PPartition& f) {
                        return Rational(chi(f, bi, a) - chi(f, bj, a));
                    };
                    auto report = homomesy_check("chi-diff", orbits, eval, tuple);
                    if (!report.homomesic || report.value != Rational(0)) {
                        refute(rep, "chi(b" + std::to_string(i + 1) + "," + std::to_string(a) +
                                        ") - chi(b" + std::to_string(j + 1) + "," +
                                        std::to_string(a) + ") is not 0-mesic");
                        return;
                    }
                }
        rep.witnesses.push_back("chi(b_i,a) - chi(b_j,a) is 0-mesic for all i, j, a");

        // per-orbit average of sum_i chi(b_i,1) - chi(0,k), against the
        // alpha-dependent closed form
        auto eval = [&info, n, k](const PPartition& f) {
            int v = -chi(f, info.bottom, k);
            for (int x : info.outer) v += chi(f, x, 1);
            return Rational(v);
        };
        for (const auto& o : orbits) {
            int a = alpha(C, o.representative());
            Rational expected(static_cast<std::int64_t>(n) * a * (k + 2) -
                                  static_cast<std::int64_t>(n + a) * (a + 1),
                              static_cast<std::int64_t>(a) * (k + 2));
            Rational avg = orbit_average(eval, o);
            if (avg != expected) {
                refute(rep, "orbit of " + tuple(o.representative()) + " (alpha=" +
                                std::to_string(a) + ") averages " + avg.str() + ", expected " +
                                expected.str());
                return;
            }
        }
        rep.witnesses.push_back("every orbit average matches the alpha-dependent closed form");

        // the successive B-difference is not homomesic; C_4 x [6] is the
        // canonical counterexample and must reproduce
        if (k >= 3) {
            Statistic b_diff = Statistic::parse("B(2) - B(3)");
            auto beval = [&C, &b_diff](const PPartition& f) {
                return b_diff.eval_partition(C, f);
            };
            auto report = homomesy_check("B(2)-B(3)", orbits, beval, tuple);
            if (n == 4 && k == 6) {
                if (report.homomesic) {
                    refute(rep, "B_2 - B_3 is unexpectedly homomesic on C_4 x [6]");
                    return;
                }
                PPartition seed{{1, 3, 5, 5, 5}, 6};
                auto orbit = orbit_of([&C](const PPartition& g) { return whirl(C, g); }, seed);
                Rational avg = orbit_average(beval, orbit);
                if (avg != Rational(2, 3)) {
                    refute(rep, "counterexample orbit of (1,3,5,5,5) averages " + avg.str() +
                                    ", expected 2/3");
                    return;
                }
                rep.witnesses.push_back(
                    "negative control: B_2 - B_3 averages 2/3 on the orbit of (1,3,5,5,5) but "
                    "is not homomesic");
            } else if (!report.homomesic) {
                rep.witnesses.push_back("B_2 - B_3 is not homomesic here either");
            }
        }
    });
}

VerificationReport verify_equivariance(const Poset& P, int k) {
    return guarded("equivariance", "poset size " + std::to_string(P.size()) + " " + kv("k", k),
                   [&](VerificationReport& rep) {
        auto prod = product_with_chain(P, k);
        std::size_t checked = 0;
        for (OrderIdeal I : enumerate_ideals(prod)) {
            PPartition f = phi_inv(prod, I);
            if (phi(prod, whirl(P, f)) != rowmotion_direct(prod, I)) {
                refute(rep, "phi(whirl f) != rowmotion(phi f) at f = " + ppartition_tuple(P, f));
                return;
            }
            ++checked;
        }
        rep.witnesses.push_back("square commutes for all " + std::to_string(checked) + " states");
    });
}

VerificationReport verify_jpr(int n, int k, int m, const std::string& family) {
    return guarded("jpr",
                   kv("n", n) + " " + kv("k", k) + " " + kv("m", m) + " family=" + family,
                   [&](VerificationReport& rep) {
        if (family != "inj" && family != "sur")
            throw std::invalid_argument("family must be inj or sur");
        bool surjective = family == "sur";
        FunctionFamily F = surjective ? FunctionFamily::surjective(n, k, m)
                                      : FunctionFamily::injective(n, k, m);
        bool open_case = surjective && m > 1;
        auto space = F.enumerate();
        auto orbits = all_orbits(
            [&F](const OneLineFunction& f) { return whirl_function(F, f); }, space);
        Rational expected(n, k);
        for (int j = 1; j <= k; ++j) {
            for (const auto& o : orbits) {
                Rational avg = orbit_average(
                    [j](const OneLineFunction& f) { return Rational(eta(f, j)); }, o);
                if (avg != expected) {
                    std::string msg = "eta_" + std::to_string(j) + " averages " + avg.str() +
                                      " on the orbit of " + one_line(o.representative(), k) +
                                      ", not " + expected.str();
                    if (open_case) {
                        rep.witnesses.push_back(msg);
                    } else {
                        refute(rep, msg);
                        return;
                    }
                }
            }
        }
        if (open_case) {
            rep.verdict = Verdict::exploratory;
            if (rep.witnesses.empty())
                rep.witnesses.push_back("eta_j averaged " + expected.str() +
                                        " on every orbit (claim is open in general)");
        } else {
            rep.witnesses.push_back("eta_j is " + expected.str() + "-mesic across " +
                                    std::to_string(orbits.size()) + " orbits, j in [1," +
                                    std::to_string(k) + "]");
        }
    });
}

}  // namespace whirl
