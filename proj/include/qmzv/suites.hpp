#pragma once
// Named verification checks over the whole library. Each check recomputes its
// quantities from scratch and compares against reference values or against a
// second, independent route.

#include "brackets.hpp"
#include "iterint.hpp"
#include "mes.hpp"
#include "relations.hpp"
#include "words.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qmzv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

inline CheckResult timed_check(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace detail {

inline std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

inline std::vector<BiIndex> biwords_up_to(int maxw, size_t maxlen = 99) {
    std::vector<BiIndex> out;
    std::function<void(BiIndex, int)> rec = [&](BiIndex w, int left) {
        if (!w.empty()) out.push_back(w);
        if (w.size() == maxlen) return;
        for (int s = 1; s <= left; ++s)
            for (int r = 0; s + r <= left; ++r) {
                BiIndex v = w;
                v.push_back({s, r});
                rec(v, left - s - r);
            }
    };
    rec({}, maxw);
    return out;
}

inline std::vector<Index> words_up_to(int maxw, size_t maxlen = 99) {
    std::vector<Index> out;
    std::function<void(Index, int)> rec = [&](Index w, int left) {
        if (!w.empty()) out.push_back(w);
        if (w.size() == maxlen) return;
        for (int s = 1; s <= left; ++s) {
            Index v = w;
            v.push_back(s);
            rec(v, left - s);
        }
    };
    rec({}, maxw);
    return out;
}

inline BiIndex random_biword(std::mt19937& rng, int maxw) {
    auto all = biwords_up_to(maxw, 4);
    return all[rng() % all.size()];
}

inline Complex tau_i(int digits) {
    mpfr_prec_t b = digits_to_bits(digits);
    return Complex(BigFloat(b), BigFloat(1L, b));
}

inline double cdist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

// -Delta / (2^6 5 691) in brackets
inline LinComb<int> delta_brackets() {
    LinComb<int> c;
    c.add(Index{5, 7}, 168);
    c.add(Index{7, 5}, 150);
    c.add(Index{9, 3}, 28);
    c.add(Index{2}, Rational(1, 1408));
    c.add(Index{4}, Rational(-83, 14400));
    c.add(Index{6}, Rational(187, 6048));
    c.add(Index{8}, Rational(-7, 120));
    c.add(Index{12}, Rational(-5197, 691));
    return c;
}

inline SeriesFamily delta_family(int N) {
    SeriesFamily f(N);
    f.add("-Delta/221120", Rational(-1, 221120) * delta_series(N), 12);
    for (const auto& [w, c] : delta_brackets()) (void)c;
    for (Index w : {Index{5, 7}, Index{7, 5}, Index{9, 3}, Index{2}, Index{4}, Index{6}, Index{8}, Index{12}})
        f.add(pretty_word(w), bracket_series(w, N), 12);
    return f;
}

}  // namespace detail

// ---- exact checks ----

inline CheckResult check_golden_series() {
    return timed_check("golden bracket series", [](std::string& d) {
        struct G {
            Index s;
            Rational scale;
            int first;
            std::vector<int> c;
        };
        std::vector<G> golden{{{2}, 1, 1, {1, 3, 4, 7, 6, 12, 8, 15}},
                              {{4, 2}, Rational(1, 6), 3, {1, 3, 15, 27, 78, 135}},
                              {{4, 4, 4}, Rational(1, 216), 6, {1, 9, 45, 190, 642, 1899}},
                              {{3, 1, 3, 1}, Rational(1, 4), 10, {1, 2, 8, 16, 43, 70}},
                              {{1, 2, 3, 4, 5}, Rational(1, 288), 15, {1, 17, 107, 512, 1985}}};
        int terms = 0;
        for (const auto& g : golden) {
            int N = g.first + static_cast<int>(g.c.size()) - 1;
            QSeries f = bracket_series(g.s, N);
            for (int n = 0; n <= N; ++n) {
                Rational want = n < g.first ? Rational(0) : g.scale * g.c[n - g.first];
                if (f[n] != want) {
                    d = pretty_word(g.s) + " differs at q^" + std::to_string(n);
                    return false;
                }
                ++terms;
            }
        }
        d = std::to_string(terms) + " coefficients exact";
        return true;
    });
}

inline CheckResult check_homomorphism(int pairs = 200, int N = 40, int maxw = 7, unsigned seed = 1) {
    return timed_check("quasi-shuffle homomorphism", [=](std::string& d) {
        std::mt19937 rng(seed);
        auto all = detail::biwords_up_to(maxw - 1, 4);
        int done = 0;
        while (done < pairs) {
            const BiIndex& u = all[rng() % all.size()];
            const BiIndex& v = all[rng() % all.size()];
            if (weight(u) + weight(v) > maxw) continue;
            if (eval_hom(bracket_product(u, v), N) != bibracket_series(u, N) * bibracket_series(v, N)) {
                d = "fails for " + format_word(u) + " * " + format_word(v);
                return false;
            }
            ++done;
        }
        d = std::to_string(pairs) + " random pairs of weight <= " + std::to_string(maxw) + " exact to q^" +
            std::to_string(N);
        return true;
    });
}

inline CheckResult check_partition(int maxw = 6, int N = 40) {
    return timed_check("partition relation", [=](std::string& d) {
        auto all = detail::biwords_up_to(maxw);
        for (const auto& w : all) {
            LinComb<BiLetter> p = partition_involution(w);
            if (partition_involution(p) != LinComb<BiLetter>(w)) {
                d = "P o P != id at " + format_word(w);
                return false;
            }
            if (eval_hom(p, N) != bibracket_series(w, N)) {
                d = "series differ at " + format_word(w);
                return false;
            }
        }
        d = std::to_string(all.size()) + " bi-words of weight <= " + std::to_string(maxw) + ", P o P = id, exact to q^" +
            std::to_string(N);
        return true;
    });
}

// The -Delta/(2^6 5 691) bracket identity, exact to order N.
inline CheckResult check_delta_identity(int N = 60) {
    return timed_check("Delta in brackets", [=](std::string& d) {
        QSeries lhs = Rational(-1, 221120) * delta_series(N);
        bool ok = lhs == eval_hom(detail::delta_brackets(), N);
        d = ok ? "exact to q^" + std::to_string(N) : "mismatch";
        return ok;
    });
}

inline std::vector<CheckResult> check_identities(int N = 40) {
    std::vector<CheckResult> out;
    auto S = [N](const Index& s) { return bracket_series(s, N); };
    auto MB = [N](const BiIndex& b) { return bibracket_series(b, N); };
    auto D = [](const QSeries& f) { return qs_d(f); };
    auto exact = [&](const std::string& name, const std::function<bool()>& f) {
        out.push_back(timed_check(name, [&](std::string& d) {
            bool ok = f();
            d = ok ? "exact to q^" + std::to_string(N) : "mismatch";
            return ok;
        }));
    };
    exact("d[1] = [3] + 1/2[2] - [2,1]", [&] { return D(S({1})) == S({3}) + Rational(1, 2) * S({2}) - S({2, 1}); });
    exact("d[2] = [4] + 2[3] - 1/6[2] - 4[3,1]",
          [&] { return D(S({2})) == S({4}) + 2 * S({3}) - Rational(1, 6) * S({2}) - 4 * S({3, 1}); });
    exact("d[2] = 2[4] + [3] + 1/6[2] - 2[2,2] - 2[3,1]", [&] {
        return D(S({2})) == 2 * S({4}) + S({3}) + Rational(1, 6) * S({2}) - 2 * S({2, 2}) - 2 * S({3, 1});
    });
    exact("d[1,1] expansion", [&] {
        return D(S({1, 1})) == S({3, 1}) + Rational(3, 2) * S({2, 1}) + Rational(1, 2) * S({1, 2}) + S({1, 3}) -
                                   2 * S({2, 1, 1}) - S({1, 2, 1});
    });
    exact("[8] = 1/40[4] - 1/252[2] + 12[4,4]",
          [&] { return S({8}) == Rational(1, 40) * S({4}) - Rational(1, 252) * S({2}) + 12 * S({4, 4}); });
    exact("[2][3] shuffle expression",
          [&] { return S({2}) * S({3}) == S({2, 3}) + 3 * S({3, 2}) + 6 * S({4, 1}) - 3 * S({4}) + D(S({3})); });
    exact("[3][2,1] two expressions", [&] {
        BiIndex a = to_bi(Index{3}), b = to_bi(Index{2, 1});
        QSeries prod = S({3}) * S({2, 1});
        return eval_hom(bracket_product(a, b), N) == prod && eval_hom(second_product(a, b), N) == prod &&
               bracket_product(a, b) != second_product(a, b);
    });
    exact("[2,2] = mb(1,1;1,1) - 2 mb(1,1;0,2)", [&] {
        LinComb<BiLetter> want(BiIndex{{1, 1}, {1, 1}});
        want.add(BiIndex{{1, 0}, {1, 2}}, -2);
        return partition_involution(to_bi(Index{2, 2})) == want && S({2, 2}) == eval_hom(want, N);
    });
    exact("[4] - [2,1,1] expression", [&] {
        return S({4}) - S({2, 1, 1}) == Rational(1, 2) * (D(S({1})) + D(S({2}))) - Rational(1, 3) * S({2}) - S({3}) +
                                            MB({{2, 1}, {1, 0}});
    });
    exact("d[s] formula for s1 + s2 <= 10", [&] {
        for (int s1 = 1; s1 <= 9; ++s1)
            for (int s2 = 1; s1 + s2 <= 10; ++s2) {
                if (s1 + s2 <= 2) continue;
                int s = s1 + s2 - 2;
                Rational c = binomial(s, s1 - 1);
                QSeries rhs = S({s1}) * S({s2}) + c * S({s + 1});
                for (int a = 1; a <= s + 1; ++a) rhs -= (binomial(a - 1, s1 - 1) + binomial(a - 1, s2 - 1)) * S({a, s + 2 - a});
                if ((c / s) * D(S({s})) != rhs) return false;
            }
        return true;
    });
    out.push_back(check_delta_identity(std::max(60, N)));
    return out;
}

inline std::vector<CheckResult> check_coproduct(int maxw = 4) {
    std::vector<CheckResult> out;
    out.push_back(timed_check("coproduct of I(3,2)", [](std::string& d) {
        IntTensor want;
        want.add(Index{}, Index{3, 2}, 1);
        want.add(Index{2}, Index{3}, 3);
        want.add(Index{3}, Index{2}, 2);
        want.add(Index{3, 2}, Index{}, 1);
        IntTensor got = goncharov_coproduct(Index{3, 2});
        d = to_text(got);
        return got == want;
    }));
    out.push_back(timed_check("coassociativity", [=](std::string& d) {
        auto all = detail::words_up_to(maxw);
        for (const Index& w : all) {
            std::map<std::tuple<Index, Index, Index>, Rational> lhs, rhs;
            for (const auto& [k, x] : goncharov_coproduct(w)) {
                for (const auto& [k2, y] : goncharov_coproduct(k.first)) lhs[{k2.first, k2.second, k.second}] += x * y;
                for (const auto& [k2, y] : goncharov_coproduct(k.second)) rhs[{k.first, k2.first, k2.second}] += x * y;
            }
            std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            if (lhs != rhs) {
                d = "fails at " + format_word(w);
                return false;
            }
        }
        d = std::to_string(all.size()) + " words of weight <= " + std::to_string(maxw);
        return true;
    }));
    out.push_back(timed_check("shuffle homomorphism of the coproduct", [=](std::string& d) {
        auto all = detail::words_up_to(maxw);
        int n = 0;
        for (const Index& u : all)
            for (const Index& v : all) {
                if (weight(u) + weight(v) > maxw) continue;
                if (goncharov_coproduct(shuffle(u, v)) !=
                    tensor_shuffle(goncharov_coproduct(u), goncharov_coproduct(v))) {
                    d = "fails at " + format_word(u) + " sh " + format_word(v);
                    return false;
                }
                ++n;
            }
        d = std::to_string(n) + " pairs of total weight <= " + std::to_string(maxw);
        return true;
    }));
    return out;
}

inline std::vector<CheckResult> check_regularization(int samples = 100, int maxw = 6, unsigned seed = 3) {
    std::vector<CheckResult> out;
    out.push_back(timed_check("regularization of z1 z2", [](std::string& d) {
        TPoly sh{{1, LinComb<int>(Index{2})}, {0, LinComb<int>(Index{2, 1}, -2)}};
        TPoly st{{1, LinComb<int>(Index{2})}, {0, LinComb<int>(Index{2, 1}, -1) - LinComb<int>(Index{3})}};
        d = "shuffle: " + to_text(shuffle_regularize({1, 2})) + "; stuffle: " + to_text(stuffle_regularize({1, 2}));
        return shuffle_regularize({1, 2}) == sh && stuffle_regularize({1, 2}) == st;
    }));
    out.push_back(timed_check("regularization reconstructs the word", [=](std::string& d) {
        std::mt19937 rng(seed);
        auto all = detail::words_up_to(maxw);
        for (int i = 0; i < samples; ++i) {
            const Index& w = all[rng() % all.size()];
            for (RegKind kind : {RegKind::shuffle, RegKind::stuffle}) {
                LinComb<int> back;
                for (const auto& [e, comb] : detail::regularize(kind, w)) {
                    LinComb<int> t = comb;
                    for (int k = 0; k < e; ++k)
                        t = kind == RegKind::shuffle ? shuffle(t, LinComb<int>(Index{1}))
                                                     : stuffle(t, LinComb<int>(Index{1}));
                    back += t;
                }
                if (back != LinComb<int>(w)) {
                    d = "fails at " + format_word(w);
                    return false;
                }
            }
        }
        d = std::to_string(samples) + " random words of weight <= " + std::to_string(maxw) + ", both products";
        return true;
    }));
    return out;
}

// ---- numeric checks ----

inline std::vector<CheckResult> check_mes_triangle(int digits = 64, double tol = 1e-6) {
    std::vector<CheckResult> out;
    for (Index s : {Index{4, 3}, Index{3, 2}}) {
        out.push_back(timed_check("G" + pretty_word(s) + " lattice/Fourier/shuffle at tau=i", [=](std::string& d) {
            Complex t = detail::tau_i(digits);
            LatticeResult lat = mes_lattice(s, t, 64, digits);
            Complex f = realize(mes_fourier(s), t, digits);
            Complex g = realize(g_shuffle(s), t, digits);
            double a = detail::cdist(lat.value, f), b = detail::cdist(lat.value, g), c = detail::cdist(f, g);
            d = "|lat-fou|=" + detail::sci(a) + " |lat-sh|=" + detail::sci(b) + " |fou-sh|=" + detail::sci(c) +
                " lattice tail=" + detail::sci(lat.tail.to_double()) + " (cutoff " + std::to_string(lat.cutoff) +
                ", rows " + std::to_string(lat.rows) + ")";
            return a < tol && b < tol && c < tol;
        }));
    }
    return out;
}

inline CheckResult check_gstar(int M = 80, double tol = 1e-5) {
    return timed_check("G*,M[4,3] vs lattice at tau=i", [=](std::string& d) {
        Complex t = detail::tau_i(30);
        Complex lat = mes_lattice({4, 3}, t).value;
        GStarResult g = g_star_M({4, 3}, M, t);
        double e = detail::cdist(g.value, lat);
        d = "M=" + std::to_string(M) + " |G*,M - lattice|=" + detail::sci(e);
        return e < tol;
    });
}

inline std::vector<CheckResult> check_euler_relations(double tol = 1e-6) {
    std::vector<CheckResult> out;
    const int digits = 40;
    out.push_back(timed_check("G4^2 = 7/6 G8 at tau=i", [=](std::string& d) {
        Complex t = detail::tau_i(digits);
        Complex g4 = realize(mes_fourier({4}), t, digits), g8 = realize(mes_fourier({8}), t, digits);
        double e = detail::cdist(g4 * g4, scaled(g8, Rational(7, 6)));
        d = "residual " + detail::sci(e);
        return e < tol;
    }));
    out.push_back(timed_check("G2^2 - 12 zeta(2) dG2 - 5/2 G4 = 0 at q=e^{-2pi}", [=](std::string& d) {
        Complex t = detail::tau_i(digits);
        mpfr_prec_t b = digits_to_bits(digits);
        const int N = 60;
        Complex q = q_of_tau(t);
        Complex w2 = minus_two_pi_i_pow(2, b);
        Complex z2(mzv_numeric({2}, digits));
        Complex g2 = z2 + w2 * qs_eval(bracket_series({2}, N), q, digits).value;
        Complex dg2 = w2 * qs_eval(qs_d(bracket_series({2}, N)), q, digits).value;
        Complex g4 = realize(mes_fourier({4}), t, digits);
        Complex r = g2 * g2 - z2 * dg2 * 12L - scaled(g4, Rational(5, 2));
        double e = abs(r).to_double();
        d = "residual " + detail::sci(e);
        return e < tol;
    }));
    out.push_back(timed_check("G6^2 - 715/691 G12 is a multiple of Delta", [=](std::string& d) {
        std::vector<Complex> ratios;
        mpfr_prec_t b = digits_to_bits(digits);
        for (auto [x, y] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.2}}) {
            Complex t(BigFloat(x, b), BigFloat(y, b));
            Complex g6 = realize(mes_fourier({6}), t, digits), g12 = realize(mes_fourier({12}), t, digits);
            Complex delta = qs_eval(delta_series(80), q_of_tau(t), digits).value;
            ratios.push_back((g6 * g6 - scaled(g12, Rational(715, 691))) / (delta * minus_two_pi_i_pow(12, b)));
        }
        double e = detail::cdist(ratios[0], ratios[1]);
        d = "ratio to (2 pi)^12 Delta: " + ratios[0].re.str(12) + ", spread " + detail::sci(e);
        return e < tol;
    }));
    return out;
}

inline std::vector<CheckResult> check_zk(double tol = 1e-4) {
    std::vector<CheckResult> out;
    out.push_back(timed_check("Z5([2,3]) = zeta(2,3)", [=](std::string& d) {
        ZkResult r = zk_limit(LinComb<int>(Index{2, 3}), 5);
        double e = std::fabs(r.value - mzv_numeric({2, 3}).to_double());
        d = "value " + std::to_string(r.value) + ", error " + detail::sci(e) + ", extrapolation estimate " +
            detail::sci(r.error);
        return !r.divergent && e < tol;
    }));
    out.push_back(timed_check("Z4([4] - [2,1,1]) = 0", [=](std::string& d) {
        ZkResult r = zk_limit(LinComb<int>(Index{4}) - LinComb<int>(Index{2, 1, 1}), 4);
        d = "value " + detail::sci(r.value);
        return !r.divergent && std::fabs(r.value) < tol;
    }));
    out.push_back(timed_check("Z12 of the Delta combination", [](std::string& d) {
        LinComb<int> top;
        top.add(Index{5, 7}, 168);
        top.add(Index{7, 5}, 150);
        top.add(Index{9, 3}, 28);
        ZkResult a = zk_limit(top, 12);
        ZkResult b = zk_limit(detail::delta_brackets(), 12);
        double want = (mzv_numeric({12}) * BigFloat(Rational(5197, 691), 160)).to_double();
        double e = std::fabs(a.value - want);
        d = "Z12(168[5,7]+150[7,5]+28[9,3]) = " + std::to_string(a.value) + " vs 5197/691 zeta(12) = " +
            std::to_string(want) + "; Z12(cusp form) = " + detail::sci(b.value);
        return e < 1e-3 && std::fabs(b.value) < 1e-3;
    }));
    out.push_back(timed_check("divergence of (1-q)^3 mb(1,1;1,0)", [](std::string& d) {
        ZkResult r = zk_limit(LinComb<BiLetter>(BiIndex{{1, 1}, {1, 0}}), 3);
        d = r.divergent ? "flagged divergent" : "not flagged, value " + std::to_string(r.value);
        return r.divergent;
    }));
    return out;
}

// Z_k on lower-weight brackets, on d-images and (k = 12) on the cusp form.
inline std::vector<CheckResult> kernel_membership_suite(int k, double tol = 1e-3) {
    if (k < 3 || k > 12) throw std::invalid_argument("kernel_membership_suite: k must lie in 3..12");
    std::vector<CheckResult> out;
    auto run = [&](const std::string& name, const LinComb<BiLetter>& f) {
        out.push_back(timed_check(name, [&, f](std::string& d) {
            ZkResult r = zk_limit(f, k);
            d = "Z" + std::to_string(k) + " = " + detail::sci(r.value);
            return !r.divergent && std::fabs(r.value) < tol;
        }));
    };
    for (const Index& w : detail::words_up_to(k - 1, 2))
        if (weight(w) >= k - 2 && is_admissible(w)) run("lower weight " + pretty_word(w), to_bi(LinComb<int>(w)));
    for (const Index& w : detail::words_up_to(k - 2, 2))
        if (weight(w) == k - 2) run("d" + pretty_word(w), derivative(to_bi(w)));
    if (k == 12) run("cusp form Delta", to_bi(detail::delta_brackets()));
    return out;
}

// ---- relation discovery ----

inline CheckResult check_delta_relation(int N = 60) {
    return timed_check("find_relations recovers the Delta vector", [=](std::string& d) {
        StableRelations s = find_relations_stable(detail::delta_family, N);
        if (s.at_order.relations.size() != 1) {
            d = std::to_string(s.at_order.relations.size()) + " relations found";
            return false;
        }
        std::vector<Rational> want{1, -168, -150, -28, Rational(-1, 1408), Rational(83, 14400), Rational(-187, 6048),
                                   Rational(7, 120), Rational(5197, 691)};
        bool ok = s.at_order.relations[0].coeffs == want && s.stable;
        d = to_text(s.at_order);
        if (!d.empty() && d.back() == '\n') d.pop_back();
        d += s.stable ? " [stable at order " + std::to_string(N + 10) + "]" : " [not stable]";
        return ok;
    });
}

struct MdBmdReport {
    int total = 0, expressed = 0;
    std::vector<std::string> missing;
};

// Every bi-bracket of weight exactly w against all brackets of weight <= w.
inline MdBmdReport mdbmd_experiment(int w, int N) {
    MdBmdReport rep;
    SeriesFamily base(N);
    for (const Index& s : detail::words_up_to(w)) base.add(pretty_word(s), bracket_series(s, N), w);
    for (const BiIndex& b : detail::biwords_up_to(w)) {
        if (weight(b) != w || is_plain(b)) continue;
        ++rep.total;
        SeriesFamily f(N);
        f.add(format_word(b), bibracket_series(b, N), w);
        for (size_t i = 0; i < base.size(); ++i) f.add(base.labels()[i], base.series()[i], w);
        bool ok = false;
        for (const auto& r : find_relations(f).relations) ok |= r.coeffs[0] != 0;
        if (ok) ++rep.expressed;
        else rep.missing.push_back(format_word(b));
    }
    return rep;
}

inline CheckResult check_mdbmd(int maxw = 5, int N = 60) {
    return timed_check("bi-brackets of weight <= " + std::to_string(maxw) + " in brackets", [=](std::string& d) {
        int total = 0, expressed = 0;
        for (int w = 1; w <= maxw; ++w) {
            MdBmdReport r = mdbmd_experiment(w, N);
            total += r.total;
            expressed += r.expressed;
            for (const auto& m : r.missing) d += "missing " + m + "; ";
        }
        d += std::to_string(expressed) + "/" + std::to_string(total) + " expressed at order " + std::to_string(N);
        return expressed == total;
    });
}

// ---- named suites ----

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "homomorphism", "partition", "coproduct",
                                                "mes-numeric", "zk",           "relations"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, int order = 40) {
    SuiteReport r{name, {}};
    auto append = [&](std::vector<CheckResult> v) { r.checks.insert(r.checks.end(), v.begin(), v.end()); };
    if (name == "identities") {
        r.checks.push_back(check_golden_series());
        append(check_identities(order));
    } else if (name == "homomorphism") {
        r.checks.push_back(check_homomorphism(200, order));
    } else if (name == "partition") {
        r.checks.push_back(check_partition(6, order));
    } else if (name == "coproduct") {
        append(check_coproduct());
        append(check_regularization());
    } else if (name == "mes-numeric") {
        append(check_mes_triangle(64));
        r.checks.push_back(check_gstar());
        append(check_euler_relations());
    } else if (name == "zk") {
        append(check_zk());
        append(kernel_membership_suite(4));
    } else if (name == "relations") {
        r.checks.push_back(check_delta_relation(std::max(order, 60)));
        r.checks.push_back(check_mdbmd(5, std::max(order, 60)));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return r;
}

}  // namespace qmzv
