// sympbw: command-line front end. Exit 0 on success, 1 on a domain error or a
// failed verification, 2 on a usage error. Errors go to stderr as JSON.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sympbw/json_io.hpp"
#include "sympbw/sympbw.hpp"

namespace {

using namespace sympbw;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    std::string lambda;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string out;
    bool ascii = false;
    std::string kind = "classical";
    std::string ring = "classical";
    bool trace = false;
    std::string input;
    std::string suite;
    int seeds = 20;
    std::string report = "json";
};

DominantWeight parse_lambda(const Options& o) {
    if (o.lambda.empty()) throw UsageError("--lambda is required for this verb");
    std::vector<int> m;
    std::stringstream ss(o.lambda);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            size_t used = 0;
            m.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw UsageError("--lambda must be a comma list of integers");
        }
    }
    if (static_cast<int>(m.size()) != o.n) throw UsageError("--lambda needs exactly n entries");
    DominantWeight w{m};
    require_weight(o.n, w);
    return w;
}

/// "-" reads stdin, "@path" reads a file, anything else is inline JSON.
json read_input(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required for this verb");
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (o.input.front() == '@') {
        std::ifstream f(o.input.substr(1));
        if (!f) throw UsageError("cannot open " + o.input.substr(1));
        text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
        text = o.input;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
}

int workers() {
    if (const char* env = std::getenv("SYMPBW_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs make(seed) for seeds seed0..seed0+count-1 on the worker pool; results in seed order.
std::vector<FlagPoint> sample_points(int count, std::uint64_t seed0, const std::function<FlagPoint(std::uint64_t)>& make) {
    std::vector<FlagPoint> pts(count);
    std::vector<std::exception_ptr> errors(count);
    const int w = std::min(workers(), std::max(count, 1));
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += w) {
                try {
                    pts[i] = make(seed0 + i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return pts;
}

/// All dominant weights of rank n with lambda_1 = m_1 + ... + m_n <= bound.
std::vector<DominantWeight> weights_up_to(int n, int bound) {
    std::vector<DominantWeight> out;
    std::vector<int> m(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            out.push_back(DominantWeight{m});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            m[i] = v;
            rec(i + 1, left - v);
        }
        m[i] = 0;
    };
    rec(0, bound);
    return out;
}

json verify_suite(const Options& o, bool& ok) {
    const int n = o.n;
    json rep = {{"suite", o.suite}, {"n", n}, {"seed", o.seed}, {"seeds", o.seeds}};
    ok = true;
    if (o.suite == "counts" || o.suite == "roundtrip") {
        const std::vector<DominantWeight> ws =
            o.lambda.empty() ? weights_up_to(n, 3) : std::vector<DominantWeight>{parse_lambda(o)};
        json cases = json::array();
        for (const DominantWeight& w : ws) {
            if (o.suite == "counts") {
                const CountReport c = check_counts(n, w);
                ok = ok && c.ok();
                cases.push_back({{"weight", io::weight(w)},
                                 {"weyl", c.weyl.get_str()},
                                 {"lattice_points", c.lattice},
                                 {"tableaux", c.tableaux},
                                 {"ok", c.ok()}});
            } else {
                const RoundtripReport r = check_roundtrip(n, w);
                ok = ok && r.ok();
                cases.push_back(
                    {{"weight", io::weight(w)}, {"checked", r.checked}, {"failures", r.failures}, {"ok", r.ok()}});
            }
        }
        rep["cases"] = cases;
    } else if (o.suite == "classical-ideal" || o.suite == "degenerate-ideal") {
        const bool classical = o.suite == "classical-ideal";
        const std::vector<Relation> rels = generate_ideal(n, classical ? IdealKind::classical : IdealKind::degenerate);
        const std::vector<FlagPoint> pts = sample_points(o.seeds, o.seed, [&](std::uint64_t s) {
            return classical ? sample_classical_flag(n, s) : sample_degenerate_point(n, s, 9, n <= 3);
        });
        const VanishingReport v = check_vanishing(n, rels, pts);
        json failures = json::array();
        for (const auto& f : v.failures)
            failures.push_back({{"relation", f.relation}, {"text", f.label}, {"seed", f.seed}, {"value", f.value.get_str()}});
        bool extra = true;
        json checks;
        if (classical) {
            const Matrix<Rat> psi = symplectic_form(n).cast<Rat>();
            for (const FlagPoint& p : pts) {
                const Matrix<Rat> m = classical_group_element(n, p.parameters);
                extra = extra && transpose(m) * psi * m == psi;
            }
            checks["group_element_symplectic"] = extra;
        } else {
            for (const FlagPoint& p : pts) extra = extra && check_isotropy_projection(p);
            checks["isotropy_projection"] = extra;
            checks["operators_commute"] = n <= 3 ? json(true) : json("not checked above n = 3");
        }
        ok = v.ok() && extra;
        rep["relations"] = v.relations;
        rep["points"] = v.points;
        rep["evaluations"] = v.evaluations;
        rep["failures"] = failures;
        rep["checks"] = checks;
        rep["sample"] = io::flag_point(pts.front());
    } else if (o.suite == "s-family") {
        const std::vector<Relation> rels = generate_ideal(n, IdealKind::s_family);
        const std::vector<FlagPoint> pts =
            sample_points(o.seeds, o.seed, [&](std::uint64_t s) { return sample_classical_flag(n, s); });
        json failures = json::array();
        for (size_t i = 0; i < rels.size(); ++i)
            for (const FlagPoint& p : pts)
                if (!s_family_residual(rels[i].poly, p).empty())
                    failures.push_back({{"relation", i}, {"text", to_string(n, rels[i].poly)}, {"seed", p.seed}});
        // s = 1 and s = 0 recover the classical and degenerate generators.
        const std::vector<Relation> cl = generate_ideal(n, IdealKind::classical);
        const std::vector<Relation> dg = generate_ideal(n, IdealKind::degenerate);
        std::set<Polynomial> at1, at0, want1, want0;
        for (const Relation& r : rels) {
            at1.insert(specialize_s(r.poly, 1).sign_normalized());
            at0.insert(specialize_s(r.poly, 0).sign_normalized());
        }
        for (const Relation& r : cl) want1.insert(r.poly.sign_normalized());
        for (const Relation& r : dg) want0.insert(r.poly.sign_normalized());
        const bool spec_ok = at1 == want1 && at0 == want0;
        ok = failures.empty() && spec_ok;
        rep["relations"] = rels.size();
        rep["points"] = pts.size();
        rep["failures"] = failures;
        rep["checks"] = {{"specializations_match", spec_ok}};
        rep["sample"] = io::flag_point(pts.front());
    } else {
        throw UsageError("unknown suite " + o.suite);
    }
    rep["status"] = ok ? "PASS" : "FAIL";
    return rep;
}

int run(const std::string& verb, const Options& o, std::ostream& out) {
    const int n = o.n;
    if (n < 1) throw UsageError("--n must be >= 1");
    const bool text = o.format == "text";
    if (o.format != "json" && o.format != "text") throw UsageError("--format must be json or text");

    if (verb == "roots") {
        json arr = json::array();
        for (const Root& a : positive_roots(n)) {
            if (text) {
                out << to_string(n, a, o.ascii) << '\n';
                continue;
            }
            json j = io::root(n, a);
            j["weight"] = root_vector_weight(n, a);
            j["long"] = is_long_root(n, a);
            arr.push_back(j);
        }
        if (!text) out << arr.dump(2) << '\n';
    } else if (verb == "dyck") {
        json arr = json::array();
        for (const DyckPath& d : dyck_paths(n)) {
            json path = json::array();
            std::string line;
            for (const Root& a : d.roots) {
                path.push_back(io::root(n, a));
                line += (line.empty() ? "" : " ") + to_string(n, a, o.ascii);
            }
            if (text) out << line << '\n';
            arr.push_back(path);
        }
        if (!text) out << arr.dump(2) << '\n';
    } else if (verb == "polytope") {
        const DominantWeight w = parse_lambda(o);
        const auto ineqs = fflv_inequalities(n, w);
        const auto pts = lattice_points(n, w);
        if (text) {
            for (const auto& q : ineqs) {
                std::string line;
                for (const Root& a : q.support) line += (line.empty() ? "p" : " + p") + to_string(n, a, o.ascii);
                out << line << " <= " << q.rhs << '\n';
            }
            out << pts.size() << " lattice points\n";
        } else {
            json ji = json::array(), jp = json::array();
            for (const auto& q : ineqs) ji.push_back(io::inequality(n, q));
            for (const auto& p : pts) jp.push_back(io::multi_exponent(n, p));
            out << json{{"weight", io::weight(w)}, {"inequalities", ji}, {"count", pts.size()}, {"points", jp}}.dump(2)
                << '\n';
        }
    } else if (verb == "tableaux") {
        const DominantWeight w = parse_lambda(o);
        const auto ts = enumerate_tableaux(n, w);
        if (text) {
            for (const Tableau& t : ts) out << to_string(n, t, o.ascii) << '\n';
        } else {
            json arr = json::array();
            for (const Tableau& t : ts) arr.push_back(io::tableau(t));
            out << json{{"weight", io::weight(w)}, {"count", ts.size()}, {"tableaux", arr}}.dump(2) << '\n';
        }
    } else if (verb == "to-tableau") {
        const DominantWeight w = parse_lambda(o);
        const Tableau t = monomial_to_tableau(n, w, io::parse_multi_exponent(n, read_input(o)));
        if (text)
            out << to_string(n, t, o.ascii);
        else
            out << io::tableau(t).dump(2) << '\n';
    } else if (verb == "to-monomial") {
        const auto [w, p] = tableau_to_monomial(n, io::parse_tableau(n, read_input(o)));
        if (text) {
            std::string line;
            for (const auto& [a, e] : p)
                line += "f" + to_string(n, a, o.ascii) + (e > 1 ? "^" + std::to_string(e) : "") + " ";
            out << (line.empty() ? "1" : line.substr(0, line.size() - 1)) << '\n';
        } else {
            out << json{{"weight", io::weight(w)}, {"monomial", io::multi_exponent(n, p)}}.dump(2) << '\n';
        }
    } else if (verb == "relations") {
        IdealKind k;
        if (o.kind == "classical")
            k = IdealKind::classical;
        else if (o.kind == "degenerate")
            k = IdealKind::degenerate;
        else if (o.kind == "s-family")
            k = IdealKind::s_family;
        else
            throw UsageError("--kind must be classical, degenerate or s-family");
        const auto rels = generate_ideal(n, k);
        if (text) {
            for (const Relation& r : rels) out << to_string(n, r.poly, o.ascii) << '\n';
        } else {
            json arr = json::array();
            for (const Relation& r : rels) arr.push_back(io::relation(n, r));
            out << arr.dump(2) << '\n';
        }
    } else if (verb == "straighten") {
        Ring ring;
        if (o.ring == "classical")
            ring = Ring::classical;
        else if (o.ring == "degenerate")
            ring = Ring::degenerate;
        else
            throw UsageError("--ring must be classical or degenerate");
        const Polynomial p = io::parse_polynomial(n, read_input(o), ring);
        const StraightenResult r = Straightener(n, ring).straighten(p, o.trace);
        if (text) {
            out << to_string(n, r.polynomial, o.ascii) << '\n';
            if (o.trace)
                for (const RewriteStep& s : r.trace) out << "  via " << s.relation << '\n';
        } else {
            out << io::straighten_result(n, r, o.trace).dump(2) << '\n';
        }
    } else if (verb == "verify") {
        if (o.report != "json") throw UsageError("--report supports json only");
        if (o.seeds < 1) throw UsageError("--seeds must be >= 1");
        bool ok = false;
        out << verify_suite(o, ok).dump(2) << '\n';
        return ok ? 0 : 1;
    } else {
        throw UsageError("unknown verb " + verb);
    }
    return 0;
}

void error_json(const char* kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic PBW degenerate flag varieties: combinatorics, relations, straightening"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"roots", "positive roots of sp(2n)"},
        {"dyck", "symplectic Dyck paths"},
        {"polytope", "FFLV inequalities and lattice points"},
        {"tableaux", "symplectic PBW-semistandard tableaux"},
        {"to-tableau", "lattice point to tableau"},
        {"to-monomial", "tableau to lattice point"},
        {"relations", "generators of the defining ideal"},
        {"straighten", "rewrite a polynomial in standard monomials"},
        {"verify", "run a verification suite"},
    };
    for (const auto& [name, help] : verbs) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--n", o.n, "rank n")->required();
        sub->add_option("--lambda", o.lambda, "fundamental-weight multiplicities m_1,...,m_n");
        sub->add_option("--format", o.format, "json or text");
        sub->add_option("--seed", o.seed, "first seed");
        sub->add_option("--out", o.out, "write output to this file");
        sub->add_flag("--ascii", o.ascii, "write barred letters as i'");
        if (name == "relations") sub->add_option("--kind", o.kind, "classical, degenerate or s-family");
        if (name == "straighten") {
            sub->add_option("--ring", o.ring, "classical or degenerate");
            sub->add_flag("--trace", o.trace, "include the rewrite trace");
        }
        if (name == "to-tableau" || name == "to-monomial" || name == "straighten")
            sub->add_option("--input", o.input, "JSON text, @file, or - for stdin");
        if (name == "verify") {
            sub->add_option("--suite", o.suite, "counts, roundtrip, classical-ideal, degenerate-ideal or s-family")
                ->required();
            sub->add_option("--seeds", o.seeds, "number of sample points");
            sub->add_option("--report", o.report, "report format (json)");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_json("usage", e.what());
        return 2;
    }
    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        std::ostringstream buf;
        const int code = run(verb, o, buf);
        if (o.out.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(o.out);
            if (!f) throw UsageError("cannot write " + o.out);
            f << buf.str();
        }
        return code;
    } catch (const UsageError& e) {
        error_json("usage", e.what());
        return 2;
    } catch (const DomainError& e) {
        error_json("domain", e.what());
        return 1;
    } catch (const nlohmann::json::exception& e) {
        error_json("domain", std::string("malformed input: ") + e.what());
        return 1;
    } catch (const InvariantError& e) {
        error_json("invariant", e.what());
        return 1;
    }
}
