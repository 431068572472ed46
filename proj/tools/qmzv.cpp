// qmzv command-line front end.
// Exit codes: 0 success, 1 failed verification, 2 usage or input error.

#include "qmzv/qmzv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace qmzv;
using nlohmann::json;

namespace {

struct Config {
    int order = 50;
    double tol = 1e-8;
    int precision = 64;
    std::string format = "text";
    std::string out;
    std::string command_line;
};

struct Outcome {
    json result;
    std::string text;
    bool ok = true;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_order() {
    const char* env = std::getenv("QMZV_DEFAULT_ORDER");
    if (!env || !*env) return 50;
    try {
        size_t used = 0;
        int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("QMZV_DEFAULT_ORDER must be a positive integer, got '") + env + "'");
}

Rational parse_decimal(const std::string& t) {
    static const std::regex re(R"(([+-]?)(\d*)(?:\.(\d*))?)");
    std::smatch m;
    if (!std::regex_match(t, m, re) || (m[2].length() == 0 && m[3].length() == 0))
        throw UsageError("bad decimal '" + t + "'");
    std::string digits = m[2].str() + m[3].str();
    Integer num(digits.empty() ? "0" : digits, 10), den = 1;
    for (long i = 0; i < m[3].length(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return m[1] == "-" ? Rational(-r) : r;
}

// "a+bi", "bi", "i", "a-bi"; the imaginary part must be positive.
std::pair<Rational, Rational> parse_tau(std::string t) {
    std::erase(t, ' ');
    if (t.empty() || t.back() != 'i') throw UsageError("tau must look like a+bi, got '" + t + "'");
    t.pop_back();
    size_t split = t.find_last_of("+-");
    std::string a = split == std::string::npos || split == 0 ? "" : t.substr(0, split);
    std::string b = split == std::string::npos || split == 0 ? t : t.substr(split);
    if (b.empty() || b == "+" || b == "-") b += "1";
    Rational re = a.empty() ? Rational(0) : parse_decimal(a), im = parse_decimal(b);
    if (im <= 0) throw UsageError("tau must lie in the upper half plane");
    return {re, im};
}

Complex tau_value(const std::pair<Rational, Rational>& t, int digits) {
    mpfr_prec_t b = digits_to_bits(digits);
    return Complex(BigFloat(t.first, b), BigFloat(t.second, b));
}

std::vector<BiIndex> parse_word_list(const std::string& text) {
    std::vector<BiIndex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_biindex(item));
    if (out.empty()) throw UsageError("empty word list");
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string shell_quote(const std::string& a) {
    static const std::regex plain(R"([A-Za-z0-9_.,:=/+-]+)");
    if (std::regex_match(a, plain)) return a;
    std::string q = "'";
    for (char c : a) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

Outcome verified_comb(const LinComb<BiLetter>& c, const QSeries& want, int N) {
    Outcome o;
    o.ok = eval_hom(c, N) == want;
    o.result = {{"combination", to_json(c)}, {"verified_to_order", N}, {"verified", o.ok}};
    o.text = to_text(c) + "\n# " + (o.ok ? "verified exactly to q^" : "MISMATCH at order ") + std::to_string(N);
    return o;
}

Outcome suite_outcome(const SuiteReport& r) {
    Outcome o;
    o.ok = r.passed();
    json checks = json::array();
    std::string text;
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
        std::ostringstream line;
        line.precision(3);
        line << (c.passed ? "PASS " : "FAIL ") << c.name << " | " << c.detail << " [" << std::fixed << c.seconds
             << " s]\n";
        text += line.str();
    }
    o.result = {{"suite", r.suite}, {"passed", o.ok}, {"checks", checks}};
    text += "suite " + r.suite + (o.ok ? ": all checks passed" : ": FAILED");
    o.text = text;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmzv: brackets, q-analogues of multiple zeta values and multiple Eisenstein series"};
    app.fallthrough();
    app.require_subcommand(1);

    Config cfg;
    try {
        cfg.order = default_order();
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    app.add_option("--order", cfg.order, "truncation order of q-series (default 50 or QMZV_DEFAULT_ORDER)")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--precision", cfg.precision, "working precision in decimal digits")->check(CLI::Range(10, 2000));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out, "write output to FILE");

    std::string index, left, right, product = "quasi", kind = "shuffle", method = "fourier", tau = "i", words,
                                     input, suite_name, check_name = "delta12";
    int M = 80, k = 0, cutoff = 64;
    bool with_delta = false;

    auto word_opt = [&](CLI::App* s, const std::string& help) { s->add_option("--index", index, help)->required(); };
    auto* bracket = app.add_subcommand("bracket", "q-series of the bracket [s]");
    word_opt(bracket, "index, e.g. 4,2");
    auto* bibracket = app.add_subcommand("bibracket", "q-series of the bi-bracket");
    word_opt(bibracket, "bi-index, e.g. 2,1|1,0");
    auto* multiply = app.add_subcommand("multiply", "formal product of two words");
    multiply->add_option("--left", left, "left word")->required();
    multiply->add_option("--right", right, "right word")->required();
    multiply->add_option("--product", product, "product")->check(CLI::IsMember({"quasi", "second", "stuffle", "shuffle"}));
    auto* derive = app.add_subcommand("derive", "q d/dq of a bi-bracket");
    word_opt(derive, "bi-index");
    auto* partition = app.add_subcommand("partition", "partition relation P(w)");
    word_opt(partition, "bi-index");
    auto* shbr = app.add_subcommand("shuffle-bracket", "shuffle bracket [s]^sh in bi-brackets");
    word_opt(shbr, "index");
    auto* coproduct = app.add_subcommand("coproduct", "coproduct of the iterated integral I(s)");
    word_opt(coproduct, "index");
    auto* regularize = app.add_subcommand("regularize", "regularized word as a polynomial in T");
    word_opt(regularize, "index");
    regularize->add_option("--kind", kind, "shuffle or stuffle")->check(CLI::IsMember({"shuffle", "stuffle"}));
    auto* mes = app.add_subcommand("mes", "multiple Eisenstein series");
    word_opt(mes, "index");
    mes->add_option("--method", method, "evaluation route")
        ->check(CLI::IsMember({"lattice", "fourier", "shuffle", "star"}));
    mes->add_option("--tau", tau, "point in the upper half plane, a+bi");
    mes->add_option("--M", M, "truncation for the star method")->check(CLI::PositiveNumber);
    mes->add_option("--cutoff", cutoff, "initial lattice cutoff")->check(CLI::Range(8, 1 << 20));
    auto* zk = app.add_subcommand("zk", "limit (1-q)^k f(q) as q -> 1");
    zk->add_option("--index", index, "bi-index");
    zk->add_option("--input", input, "JSON file with a linear combination [{word, coeff}]");
    zk->add_option("--k", k, "exponent (default: weight of the input)")->check(CLI::PositiveNumber);
    auto* findrel = app.add_subcommand("find-relations", "exact linear relations among bi-bracket series");
    findrel->add_option("--words", words, "bi-indices separated by ';'")->required();
    findrel->add_flag("--with-delta", with_delta, "add -Delta/221120 to the family");
    auto* check = app.add_subcommand("check", "run one named verification");
    check->add_option("--suite", check_name, "delta12, kernel, or a suite name");
    check->add_option("--k", k, "weight for the kernel check");
    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("name", suite_name, "suite")->required()->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    for (int i = 1; i < argc; ++i) cfg.command_line += (i > 1 ? " " : "") + shell_quote(argv[i]);
    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    const int N = cfg.order, digits = cfg.precision;

    Outcome o;
    try {
        if (sub == bracket) {
            QSeries f = bracket_series(parse_index(index), N);
            o.result = to_json(f);
            o.text = to_text(f);
        } else if (sub == bibracket) {
            QSeries f = bibracket_series(parse_biindex(index), N);
            o.result = to_json(f);
            o.text = to_text(f);
        } else if (sub == multiply) {
            if (product == "stuffle" || product == "shuffle") {
                Index u = parse_index(left), v = parse_index(right);
                LinComb<int> c = product == "stuffle" ? stuffle(u, v) : shuffle(u, v);
                o.result = {{"combination", to_json(c)}};
                o.text = to_text(c);
            } else {
                BiIndex u = parse_biindex(left), v = parse_biindex(right);
                LinComb<BiLetter> c = product == "quasi" ? bracket_product(u, v) : second_product(u, v);
                o = verified_comb(c, bibracket_series(u, N) * bibracket_series(v, N), N);
            }
        } else if (sub == derive) {
            BiIndex w = parse_biindex(index);
            o = verified_comb(derivative(w), qs_d(bibracket_series(w, N)), N);
        } else if (sub == partition) {
            BiIndex w = parse_biindex(index);
            o = verified_comb(partition_involution(w), bibracket_series(w, N), N);
        } else if (sub == shbr) {
            LinComb<BiLetter> c = shuffle_bracket(parse_index(index));
            o.result = {{"combination", to_json(c)}};
            o.text = to_text(c);
        } else if (sub == coproduct) {
            IntTensor t = goncharov_coproduct(parse_index(index));
            o.result = to_json(t);
            o.text = to_text(t);
        } else if (sub == regularize) {
            Index w = parse_index(index);
            TPoly p = kind == "shuffle" ? shuffle_regularize(w) : stuffle_regularize(w);
            o.result = to_json(p);
            o.text = to_text(p);
        } else if (sub == mes) {
            Index s = parse_index(index);
            auto tv = parse_tau(tau);
            Complex t = tau_value(tv, digits);
            json at{{"tau", tau}};
            if (method == "fourier" || method == "shuffle") {
                MESExpansion e = method == "fourier" ? mes_fourier(s) : g_shuffle(s);
                Complex v = realize(e, t, digits);
                o.result = {{"expansion", to_json(e)}, {"value", {{"re", v.re.str(digits)}, {"im", v.im.str(digits)}}}};
                o.text = to_text(e) + "\nvalue at tau=" + tau + ": " + v.str(digits);
            } else if (method == "lattice") {
                LatticeResult r = mes_lattice(s, t, cutoff, digits);
                o.result = {{"value", {{"re", r.value.re.str(digits)}, {"im", r.value.im.str(digits)}}},
                            {"tail", r.tail.str(6)},
                            {"rows", r.rows},
                            {"cutoff", r.cutoff}};
                o.text = "value at tau=" + tau + ": " + r.value.str(digits) + "\ntail estimate " + r.tail.str(6) +
                         " (cutoff " + std::to_string(r.cutoff) + ", rows " + std::to_string(r.rows) + ")";
            } else {
                GStarResult r = g_star_M(s, M, t, digits);
                o.result = {{"value", {{"re", r.value.re.str(digits)}, {"im", r.value.im.str(digits)}}},
                            {"error", r.error.str(6)},
                            {"M", M},
                            {"truncated_at", r.truncated_at}};
                o.text = "G*," + std::to_string(M) + " at tau=" + tau + ": " + r.value.str(digits) + "\nerror estimate " +
                         r.error.str(6);
            }
        } else if (sub == zk) {
            if (index.empty() == input.empty()) throw UsageError("zk needs exactly one of --index or --input");
            LinComb<BiLetter> f = input.empty() ? LinComb<BiLetter>(parse_biindex(index))
                                                : bicomb_from_json(read_json_file(input));
            int kk = k;
            if (kk == 0)
                for (const auto& [w, c] : f) kk = std::max(kk, weight(w));
            if (kk == 0) throw UsageError("zk: cannot infer k from an empty combination");
            ZkResult r = zk_limit(f, kk);
            o.result = {{"k", kk}, {"value", num(r.value)}, {"error", num(r.error)}, {"divergent", r.divergent}};
            o.text = r.divergent ? "Z" + std::to_string(kk) + ": divergent"
                                 : "Z" + std::to_string(kk) + " = " + num(r.value) + " (estimate " + num(r.error) + ")";
        } else if (sub == findrel) {
            std::vector<BiIndex> ws = parse_word_list(words);
            SeriesFamily fam(N);
            if (with_delta) fam.add("-Delta/221120", Rational(-1, 221120) * delta_series(N), 12);
            for (const auto& w : ws) fam.add(pretty_word(w), bibracket_series(w, N), weight(w));
            RelationSet rs = find_relations(fam);
            o.result = {{"relations", to_json(rs)}, {"warnings", rs.warnings}};
            o.text = rs.relations.empty() ? "no relations up to q^" + std::to_string(N) : to_text(rs);
            if (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
            for (const auto& w : rs.warnings) o.text += "\n# warning: " + w;
        } else if (sub == check) {
            if (check_name == "delta12") {
                o = suite_outcome({"delta12", {check_delta_identity(N)}});
            } else if (check_name == "kernel") {
                if (k == 0) throw UsageError("check --suite kernel needs --k");
                o = suite_outcome({"kernel", kernel_membership_suite(k)});
            } else {
                if (std::find(suite_names().begin(), suite_names().end(), check_name) == suite_names().end())
                    throw UsageError("unknown suite '" + check_name + "'");
                o = suite_outcome(run_suite(check_name, N));
            }
        } else if (sub == suite) {
            o = suite_outcome(run_suite(suite_name, N));
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream body;
    if (cfg.format == "json") {
        json doc{{"config",
                  {{"verb", verb},
                   {"command", cfg.command_line},
                   {"order", cfg.order},
                   {"tol", cfg.tol},
                   {"precision", cfg.precision}}},
                 {"result", o.result},
                 {"ok", o.ok}};
        body << doc.dump(2) << "\n";
    } else {
        body << "# qmzv " << cfg.command_line << "\n"
             << "# order=" << cfg.order << " tol=" << cfg.tol << " precision=" << cfg.precision << "\n"
             << o.text << "\n";
    }
    if (cfg.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
        f << body.str();
    }
    return o.ok ? 0 : 1;
}
