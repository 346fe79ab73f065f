#include "twinrow/cli.hpp"

#include "twinrow/characters.hpp"
#include "twinrow/diffops.hpp"
#include "twinrow/errors.hpp"
#include "twinrow/genfun.hpp"
#include "twinrow/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace twinrow {

namespace {

using Value = std::variant<XPolynomial, ZPolynomial, SchurExpansion>;

const char* basis_name(Basis b) {
    switch (b) {
    case Basis::x: return "x";
    case Basis::z: return "z";
    case Basis::schur: return "schur";
    }
    return "?";
}

std::string value_text(const Value& v) {
    return std::visit([](const auto& p) { return to_string(p); }, v);
}

Json value_json(const Value& v) {
    return std::visit([](const auto& p) { return to_json(p); }, v);
}

// Converts a symmetric x-polynomial to the requested basis.
Value in_basis(const XPolynomial& p, const RunConfig& c) {
    switch (c.basis) {
    case Basis::x: return p;
    case Basis::z: {
        ZPolynomial z = x_to_z(p);
        return c.su_specialize ? su_specialize(z, c.n) : z;
    }
    case Basis::schur: {
        SchurExpansion e = schur_decompose(p);
        return c.su_specialize ? su_specialize(e, c.n) : e;
    }
    }
    throw std::logic_error("unknown basis");
}

Value in_basis(const SchurExpansion& e, const RunConfig& c) {
    switch (c.basis) {
    case Basis::x: return schur_to_x(e, c.n);
    case Basis::z: {
        ZPolynomial z = schur_to_z(e, c.n);
        return c.su_specialize ? su_specialize(z, c.n) : z;
    }
    case Basis::schur: return c.su_specialize ? su_specialize(e, c.n) : e;
    }
    throw std::logic_error("unknown basis");
}

std::vector<Value> compute_values(const RunConfig& c) {
    const std::size_t n = c.n;
    const std::size_t N = pair_count(n);
    std::vector<Value> out;
    switch (c.command) {
    case Command::character: {
        const Partition& lambda = *c.partition;
        out.push_back(in_basis(SchurExpansion{{lambda, 1}}.truncated_to(n), c));
        break;
    }
    case Command::f: {
        const XSeries f = f_product(n);
        for (std::size_t k = 0; k <= N; ++k)
            out.push_back(in_basis(f.coeff(k), c));
        break;
    }
    case Command::g: {
        const XSeries g = g_weyl_determinant(n);
        for (std::size_t k = 0; k + 1 <= N; ++k)
            out.push_back(in_basis(g.coeff(k), c));
        break;
    }
    case Command::F:
        for (std::size_t k = 0; k <= c.effective_order(); ++k) {
            const int ki = static_cast<int>(k);
            out.push_back(in_basis(SchurExpansion{{Partition{ki, ki}, 1}}, c));
        }
        break;
    case Command::Z:
        for (std::size_t d = 0; d <= N; ++d)
            out.push_back(in_basis(Z_hook_sum(static_cast<int>(d), n), c));
        break;
    case Command::G:
        for (std::size_t k = 0; k + 1 <= N; ++k)
            out.push_back(in_basis(G_hook_sum(static_cast<int>(k), n), c));
        break;
    case Command::verify:
        throw std::logic_error("verify has no coefficient table");
    }
    return out;
}

VerificationReport make_report(std::string identity, std::size_t n, std::optional<long> index,
                               std::optional<std::string> failure) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.n = n;
    r.index = index;
    r.status = failure ? CheckStatus::fail : CheckStatus::pass;
    r.first_mismatch = std::move(failure);
    return r;
}

std::optional<std::string> series_difference(const XSeries& a, const XSeries& b, std::size_t upto) {
    for (std::size_t k = 0; k <= upto; ++k)
        if (!(a.coeff(k) == b.coeff(k)))
            return "first difference at t^" + std::to_string(k) + ": Schur difference " +
                   to_string(schur_decompose(a.coeff(k)) - schur_decompose(b.coeff(k)));
    return std::nullopt;
}

std::optional<std::string> expansion_difference(const SchurExpansion& got, const SchurExpansion& want) {
    if (got == want)
        return std::nullopt;
    return "got " + to_string(got) + ", expected " + to_string(want);
}

std::vector<VerificationReport> verification_suite(std::size_t n, std::size_t K) {
    const std::size_t N = pair_count(n);
    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };

    const XSeries f = f_product(n);
    out.push_back(make_report("f: product = Weyl determinant", n, std::nullopt,
                              series_difference(f, f_weyl_determinant(n), N)));
    const XSeries g = g_weyl_determinant(n);
    out.push_back(make_report("g: Weyl determinant = F f", n, std::nullopt, series_difference(g, g_from_series(n), N - 1)));
    {
        std::optional<std::string> failure;
        if (f.degree() != N)
            failure = "deg f = " + std::to_string(f.degree().value_or(0));
        else if (g.degree().value_or(0) > N - 1)
            failure = "deg g = " + std::to_string(*g.degree());
        out.push_back(make_report("deg f = N, deg g <= N-1", n, std::nullopt, failure));
    }
    const XSeries F = F_direct(n, K);
    out.push_back(make_report("F: direct = g/f", n, static_cast<long>(K), series_difference(F, F_from_ratio(n, K), K)));
    out.push_back(make_report("f F = g mod t^(K+1)", n, static_cast<long>(K),
                              series_difference(f_times_F(n, K), g.truncated(K), K)));

    for (std::size_t d = 0; d <= N; ++d)
        out.push_back(make_report("Z_d hook sum", n, static_cast<long>(d),
                                  expansion_difference(schur_decompose(Z_from_f(f, d)), Z_hook_sum(static_cast<int>(d), n))));
    for (std::size_t k = 0; k + 1 <= N; ++k)
        out.push_back(make_report("G_k hook sum", n, static_cast<long>(k),
                                  expansion_difference(schur_decompose(g.coeff(k)), G_hook_sum(static_cast<int>(k), n))));

    out.push_back(make_report("f = exp(-sum m_k t^k / k) mod t^(N+1)", n, std::nullopt,
                              series_difference(f_exp_form(n, N), f.truncated(N), N)));

    append(verify_D1_f(n));
    append(verify_D2_f(n));
    append(verify_D2_F(n, K));
    append(verify_g_ode(n));
    for (int w = 0; w <= static_cast<int>(std::min<std::size_t>(K, 8)); ++w)
        for (const auto& lambda : partitions_of(w, static_cast<int>(n)))
            append(verify_dual_definitions(lambda, n));
    append(verify_stable_identities(K));
    return out;
}

void emit_values(const RunConfig& c, const std::vector<Value>& values, std::ostream& out) {
    const std::string name = to_string(c.command);
    if (c.format == OutputFormat::json) {
        Json j = {{"command", name}, {"n", c.n}, {"basis", basis_name(c.basis)}};
        j["K"] = c.command == Command::F ? Json(c.effective_order()) : Json(nullptr);
        if (c.command == Command::character)
            j["partition"] = to_json(*c.partition);
        if (c.su_specialize)
            j["su_specialize"] = true;
        Json coeffs = Json::array();
        for (const auto& v : values)
            coeffs.push_back(value_json(v));
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << '\n';
        return;
    }
    out << name << " n=" << c.n;
    if (c.command == Command::character)
        out << " partition=" << to_string(*c.partition);
    if (c.command == Command::F)
        out << " K=" << c.effective_order();
    out << " basis=" << basis_name(c.basis) << (c.su_specialize ? " su" : "") << '\n';
    if (c.command == Command::character) {
        out << value_text(values.front()) << '\n';
        return;
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        out << "t^" << k << ": " << value_text(values[k]) << '\n';
}

int emit_reports(const RunConfig& c, const std::vector<VerificationReport>& reports, std::ostream& out) {
    const bool ok = all_passed(reports);
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
    if (c.format == OutputFormat::json) {
        Json list = Json::array();
        for (const auto& r : reports)
            list.push_back(to_json(r));
        Json j = {{"command", "verify"}, {"n", c.n}, {"K", c.effective_order()}, {"ok", ok},
                  {"passed", static_cast<long>(reports.size()) - failed}, {"failed", failed}, {"reports", std::move(list)}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.identity << " [n=";
            out << (r.n == 0 ? std::string("inf") : std::to_string(r.n));
            if (r.index)
                out << ", index=" << *r.index;
            out << ']';
            if (r.first_mismatch)
                out << ": " << *r.first_mismatch;
            out << '\n';
        }
        out << "summary: " << reports.size() << " checks, " << reports.size() - failed << " passed, " << failed
            << " failed\n";
    }
    return ok ? exit_code::ok : exit_code::verification_failure;
}

} // namespace

std::string to_string(Command c) {
    switch (c) {
    case Command::character: return "char";
    case Command::f: return "f";
    case Command::g: return "g";
    case Command::F: return "F";
    case Command::Z: return "Z";
    case Command::G: return "G";
    case Command::verify: return "verify";
    }
    return "?";
}

std::size_t RunConfig::effective_order() const { return order.value_or(default_order(n)); }

void validate(const RunConfig& c) {
    if (c.n < 2 || c.n > max_n)
        throw std::invalid_argument("--n must lie in [2, " + std::to_string(max_n) + "]");
    if (c.effective_order() > max_order)
        throw std::invalid_argument("--order must not exceed " + std::to_string(max_order));
    if (c.command == Command::verify && c.effective_order() < 1)
        throw std::invalid_argument("verify needs --order >= 1");
    if (c.command == Command::character && !c.partition)
        throw std::invalid_argument("char needs --partition");
    if (c.su_specialize && c.basis == Basis::x)
        throw std::invalid_argument("--su-specialize applies to the z and schur bases only");
    if (c.su_specialize && c.command == Command::verify)
        throw std::invalid_argument("--su-specialize does not apply to verify");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        validate(c);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    }
    try {
        if (c.command == Command::verify)
            return emit_reports(c, verification_suite(c.n, c.effective_order()), out);
        emit_values(c, compute_values(c), out);
        return exit_code::ok;
    } catch (const InvariantError& e) {
        if (c.format == OutputFormat::json)
            err << Json{{"error", "invariant_breach"}, {"message", e.what()}}.dump() << '\n';
        else
            err << "invariant breach: " << e.what() << '\n';
        return exit_code::invariant_breach;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characters and generating functions for two-equal-row representations"};
    RunConfig c;
    std::string command, basis = "z", format = "text", partition;
    std::size_t order = 0;
    std::uint64_t seed = 0;

    app.add_option("command", command, "char | f | g | F | Z | G | verify")
        ->required()
        ->check(CLI::IsMember({"char", "f", "g", "F", "Z", "G", "verify"}));
    app.add_option("--n", c.n, "number of variables")->required();
    auto* order_opt = app.add_option("--order", order, "truncation order K (default N+2)");
    app.add_option("--basis", basis, "x | z | schur")->check(CLI::IsMember({"x", "z", "schur"}));
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--su-specialize", c.su_specialize, "set z_n = 1 in the output");
    auto* seed_opt = app.add_option("--seed", seed, "reserved; all computations are deterministic");
    auto* part_opt = app.add_option("--partition", partition, "row lengths for char, e.g. 2,2,1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    }

    static const std::map<std::string, Command> commands = {
        {"char", Command::character}, {"f", Command::f}, {"g", Command::g}, {"F", Command::F},
        {"Z", Command::Z}, {"G", Command::G}, {"verify", Command::verify}};
    c.command = commands.at(command);
    c.basis = basis == "x" ? Basis::x : basis == "schur" ? Basis::schur : Basis::z;
    c.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    if (*order_opt)
        c.order = order;
    if (*seed_opt)
        c.seed = seed;
    if (*part_opt) {
        try {
            std::vector<int> rows;
            std::stringstream ss(partition);
            std::string item;
            while (std::getline(ss, item, ','))
                rows.push_back(std::stoi(item));
            c.partition = Partition(std::move(rows));
        } catch (const std::exception& e) {
            err << "usage error: bad --partition '" << partition << "': " << e.what() << '\n';
            return exit_code::usage;
        }
    }
    return run(c, out, err);
}

} // namespace twinrow
