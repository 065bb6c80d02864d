#include "cli.hpp"

#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include <cyp/chow.hpp>
#include <cyp/parallel.hpp>
#include <cyp/sncpair_gen.hpp>
#include <cyp/symcalc.hpp>
#include <cyp/table_io.hpp>

namespace cyp::cli
{

namespace
{

std::string join(const std::vector<std::int64_t> &v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + ")";
}

std::string render_rows(const hodge::HodgeDiamond &d)
{
    std::string out;
    for (const auto &row : d.table()) {
        out += (out.empty() ? "" : " ") + join(row);
    }
    return out;
}

std::string render_ledger(const hodge::ExponentLedger &l)
{
    if (l.entries().empty()) {
        return "trivial";
    }
    std::string out;
    for (const auto &[k, v] : l.entries()) {
        out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(k.first) + "," +
               std::to_string(k.second) + "):" + std::to_string(v);
    }
    return out;
}

// chi(CP^n, Omega^p(k)) from the twisted Euler sequences
// 0 -> Omega^p -> Lambda^p(O(-1)^{n+1}) -> Omega^{p-1} -> 0.
Rational koszul_chi(int n, int p, int k)
{
    auto chi_o = [n](long j) { return binomial(n + j, n); };
    Rational acc = chi_o(k);
    for (int q = 1; q <= p; ++q) {
        acc = binomial(n + 1, q) * chi_o(k - q) - acc;
    }
    return acc;
}

} // namespace

// ---------------------------------------------------------------------------

Report cmd_identities(int max_m)
{
    if (max_m < 1 || max_m > sym::default_max_roots) {
        throw UsageError("--max-m must lie in [1, " + std::to_string(sym::default_max_roots) + "], got " +
                         std::to_string(max_m));
    }
    static constexpr std::array<const char *, 5> names = {
        "td_alt_ch",        // Td sum (-1)^r ch(R_r) = c_m
        "td_alt_r_ch",      // {Td sum (-1)^r r ch(R_r)}^{<=m}
        "td_alt_rr_ch",     // {Td sum (-1)^r r(r-1) ch(R_r)}^{m}
        "tdprime_alt_ch",   // {Td' sum (-1)^r ch(R_r)}^{m}
        "tdprime_alt_r_ch", // {Td' sum (-1)^r r ch(R_r)}^{m}
    };
    std::vector<std::array<std::string, 5>> residuals(static_cast<std::size_t>(max_m));
    parallel_for(max_m, [&](std::int64_t i) {
        const int m = static_cast<int>(i) + 1;
        const auto a = sym::verify_todd_identities(m);
        const auto b = sym::verify_todd_prime_identities(m);
        residuals[static_cast<std::size_t>(i)] = {a[0].str(), a[1].str(), a[2].str(), b[0].str(), b[1].str()};
    });
    Report rep("identities");
    rep.value("max_m", std::to_string(max_m));
    for (int m = 1; m <= max_m; ++m) {
        for (std::size_t k = 0; k < names.size(); ++k) {
            rep.check_equal("m=" + std::to_string(m) + " " + names[k] + " residual", "0",
                            residuals[static_cast<std::size_t>(m - 1)][k]);
        }
    }
    return rep;
}

Report cmd_chi_d_cp(int r, int s, std::int64_t d, const std::vector<std::int64_t> &mults)
{
    const snc::CpPair cp = snc::cp_pair(r, s, d, mults);
    const Rational by_sum = snc::chi_d(cp.pair);
    const Rational by_f = snc::chi_d_via_fprime(cp.model);
    Report rep("chi-d cp");
    rep.value("m_inf", std::to_string(cp.model.m_infinity));
    rep.value("f(t)", cp.model.f.str());
    rep.value("chi_d", by_sum.str());
    rep.value("f'(1)", by_f.str());
    rep.check_equal("chi_d = f'(1)", by_f.str(), by_sum.str());
    rep.check_equal("chi_d vanishes", "0", by_sum.str());
    return rep;
}

Report cmd_chi_d_table(const snc::SncPair &pair)
{
    snc::validate(pair);
    const Rational v = snc::chi_d(pair);
    Report rep("chi-d table");
    rep.value("components", std::to_string(pair.num_components()));
    rep.value("strata", std::to_string(pair.strata.entries.size()));
    rep.value("chi_d", v.str());
    if (pair.num_components() <= 20) {
        rep.check_equal("parallel sum = serial reference", snc::serial::chi_d(pair).str(), v.str());
    }
    return rep;
}

Report cmd_blowup_check(const snc::SncPair &pair)
{
    const snc::BlowupReport b = snc::check_blowup_invariance(pair);
    const snc::InducedPairs ind = snc::induced_center_pairs(pair);
    Report rep("blowup-check");
    rep.value("m_0", std::to_string(b.m0));
    rep.value("chi_d before", b.before.str());
    rep.value("chi_d after", b.after.str());
    rep.value("chi_d(Y, D_Y)", ind.chi_d_center.str());
    rep.value("chi_d(E, D_E)", ind.chi_d_exceptional.str());
    rep.check_equal("chi_d after = chi_d before", b.before.str(), b.after.str());
    return rep;
}

Report cmd_blowup_random(int count, std::uint64_t seed, int max_components)
{
    if (count < 1 || count > 1'000'000) {
        throw UsageError("--random must lie in [1, 1000000]");
    }
    // One generator per instance, derived from the seed, so results do not
    // depend on the thread schedule.
    std::vector<char> ok(static_cast<std::size_t>(count), 0);
    parallel_for(count, [&](std::int64_t i) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(i));
        const snc::SncPair pair = snc::random_blowup_pair(rng, max_components);
        ok[static_cast<std::size_t>(i)] = snc::check_blowup_invariance(pair).equal ? 1 : 0;
    });
    const auto passed = std::count(ok.begin(), ok.end(), 1);
    Report rep("blowup-check random");
    rep.value("seed", std::to_string(seed));
    rep.value("instances", std::to_string(count));
    rep.value("passed", std::to_string(passed) + "/" + std::to_string(count));
    rep.check_equal("random tables: chi_d after = chi_d before", std::to_string(count) + "/" + std::to_string(count),
                    std::to_string(passed) + "/" + std::to_string(count));
    return rep;
}

Report cmd_hrr_cp(int n, int p, int twist)
{
    if (n < 0 || n > 12) {
        throw UsageError("--n must lie in [0, 12]");
    }
    if (p < 0 || p > n) {
        throw UsageError("--p must lie in [0, n]");
    }
    if (twist < -1000 || twist > 1000) {
        throw UsageError("--twist must lie in [-1000, 1000]");
    }
    const Rational chi = chow::chi_twisted_hodge(n, p, twist);
    Report rep("hrr cp");
    rep.value("chi(CP^" + std::to_string(n) + ", Omega^" + std::to_string(p) + "(" + std::to_string(twist) + "))",
              chi.str());
    rep.check_equal("HRR = Euler-sequence recursion", koszul_chi(n, p, twist).str(), chi.str());
    if (twist >= 1 && twist <= p) {
        rep.check_equal("vanishing range 1 <= twist <= p", "0", chi.str());
    }
    if (twist == 0) {
        rep.check_equal("Hodge diamond value (-1)^p", p % 2 == 0 ? "1" : "-1", chi.str());
    }
    return rep;
}

Report cmd_hodge_bundle(const hodge::HodgeDiamond &base, int fiber_dim)
{
    if (fiber_dim < 0 || base.dim() + fiber_dim > 64) {
        throw UsageError("--fiber-dim must be non-negative with total dimension at most 64");
    }
    const hodge::HodgeDiamond out = hodge::projective_bundle_diamond(base, fiber_dim);
    Report rep("hodge bundle");
    rep.value("n", std::to_string(out.dim()));
    rep.value("h", render_rows(out));
    rep.value("b", join(hodge::betti_vector(out)));
    rep.value("chi", std::to_string(hodge::euler_characteristic(out)));
    rep.check_equal("chi = (fiber_dim + 1) chi(base)",
                    std::to_string((fiber_dim + 1) * hodge::euler_characteristic(base)),
                    std::to_string(hodge::euler_characteristic(out)));
    return rep;
}

Report cmd_hodge_blowup(const hodge::HodgeDiamond &x, const hodge::HodgeDiamond &y, int codim)
{
    const hodge::HodgeDiamond out = hodge::blowup_diamond(x, y, codim);
    Report rep("hodge blowup");
    rep.value("n", std::to_string(out.dim()));
    rep.value("h", render_rows(out));
    rep.value("b", join(hodge::betti_vector(out)));
    rep.value("chi", std::to_string(hodge::euler_characteristic(out)));
    rep.check_equal("chi = chi(X) + (r - 1) chi(Y)",
                    std::to_string(hodge::euler_characteristic(x) + (codim - 1) * hodge::euler_characteristic(y)),
                    std::to_string(hodge::euler_characteristic(out)));
    return rep;
}

Report cmd_hodge_correction(const hodge::HodgeDiamond &d)
{
    const Rational c = hodge::correction_term(d);
    // Same sum after k -> 2n - k, using b_k = b_{2n-k}.
    Rational relabeled;
    const int n = d.dim();
    for (int k = 0; k <= 2 * n; ++k) {
        const long sign = k % 2 == 0 ? 1 : -1;
        relabeled += Rational(sign * (2 * n - k) * (k - n)) * Rational(hodge::betti(d, 2 * n - k));
    }
    Report rep("hodge correction");
    rep.value("b", join(hodge::betti_vector(d)));
    rep.value("sum (-1)^k k(n-k) b_k", c.str());
    rep.value("multiplier", "(log 2pi)/2");
    rep.check_equal("Serre-relabeled sum agrees", c.str(), relabeled.str());
    return rep;
}

Report cmd_hodge_ledger(const hodge::HodgeDiamond &d)
{
    const hodge::LedgerCheck lc = hodge::lambda_exponent_check(d);
    Report rep("hodge ledger");
    rep.value("eta", render_ledger(hodge::eta_ledger(d)));
    rep.value("lambda", render_ledger(hodge::lambda_ledger(d)));
    rep.value("lambda_dR", render_ledger(hodge::lambda_dr_ledger(d)));
    rep.check("lambda_dR = lambda (x) conj(lambda)", lc.lambda_dr_splits, "true", lc.lambda_dr_splits ? "true" : "false");
    rep.check("lambda = (x)_p lambda_p^((-1)^p p)", lc.lambda_from_lambda_p, "true",
              lc.lambda_from_lambda_p ? "true" : "false");
    rep.check("eta = (x)_p lambda_p^((-1)^p)", lc.eta_from_lambda_p, "true", lc.eta_from_lambda_p ? "true" : "false");
    return rep;
}

// ---------------------------------------------------------------------------

hodge::HodgeDiamond resolve_diamond(const std::string &spec)
{
    auto numeric_suffix = [&](const std::string &prefix, int &n) {
        if (spec.rfind(prefix, 0) != 0 || spec.size() == prefix.size() || spec.size() > prefix.size() + 2) {
            return false;
        }
        for (std::size_t i = prefix.size(); i < spec.size(); ++i) {
            if (spec[i] < '0' || spec[i] > '9') {
                return false;
            }
        }
        n = std::stoi(spec.substr(prefix.size()));
        return true;
    };
    int n = 0;
    if (spec == "point") {
        return hodge::HodgeDiamond::point();
    }
    if (numeric_suffix("cp", n)) {
        return hodge::HodgeDiamond::projective_space(n);
    }
    if (numeric_suffix("empty", n)) {
        return hodge::HodgeDiamond::empty(n);
    }
    return io::parse_diamond(io::read_file(spec));
}

std::vector<std::int64_t> parse_int_list(const std::string &text)
{
    std::vector<std::int64_t> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception &) {
            throw UsageError("'" + item + "' is not an integer");
        }
        if (used != item.size()) {
            throw UsageError("'" + item + "' is not an integer");
        }
        out.push_back(v);
    }
    if (text.back() == ',') {
        throw UsageError("trailing comma in integer list");
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    configure_threads();

    CLI::App app{"Exact characteristic-class identities, HRR numbers and Calabi-Yau pair combinatorics", "cypairs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string out_path;
    app.add_flag("--json", as_json, "Emit the report as a JSON document");
    app.add_option("--out", out_path, "Write the report to this file instead of standard output");

    int max_m = 6;
    auto *identities = app.add_subcommand("identities", "Check the Todd / Chern character identities");
    identities->add_option("--max-m", max_m, "Largest number of roots (1..8)");

    auto *chi_d = app.add_subcommand("chi-d", "Weighted Euler characteristic chi_d");
    chi_d->require_subcommand(1);
    int r = 0;
    int s = 0;
    std::int64_t d = 1;
    std::string mults_text;
    auto *chi_cp = chi_d->add_subcommand("cp", "CP^r with coordinate hyperplanes");
    chi_cp->add_option("--r", r, "Dimension r")->required();
    chi_cp->add_option("--s", s, "Number of coordinate hyperplanes")->required();
    chi_cp->add_option("--d", d, "Degree d")->required();
    chi_cp->add_option("--mults", mults_text, "Comma-separated multiplicities m_1..m_s");
    std::string table_path;
    auto *chi_table = chi_d->add_subcommand("table", "Stratum table from a JSON file");
    chi_table->add_option("--file", table_path, "Stratum table JSON")->required();

    auto *blowup = app.add_subcommand("blowup-check", "chi_d invariance under blow-up");
    std::string blowup_path;
    int random_count = 0;
    std::uint64_t seed = default_seed;
    blowup->add_option("--file", blowup_path, "Stratum table JSON with center");
    blowup->add_option("--random", random_count, "Number of random synthetic tables");
    blowup->add_option("--seed", seed, "Seed for --random");

    auto *hrr = app.add_subcommand("hrr", "Hirzebruch-Riemann-Roch numbers");
    hrr->require_subcommand(1);
    int hrr_n = 0;
    int hrr_p = 0;
    int twist = 0;
    auto *hrr_cp = hrr->add_subcommand("cp", "chi(CP^n, Omega^p(twist))");
    hrr_cp->add_option("--n", hrr_n, "Dimension n")->required();
    hrr_cp->add_option("--p", hrr_p, "Form degree p");
    hrr_cp->add_option("--twist", twist, "Twist by O(twist)");

    auto *hodge_cmd = app.add_subcommand("hodge", "Hodge diamond bookkeeping");
    hodge_cmd->require_subcommand(1);
    std::string base_spec;
    int fiber_dim = 0;
    auto *h_bundle = hodge_cmd->add_subcommand("bundle", "Projective bundle diamond");
    h_bundle->add_option("--base", base_spec, "Base diamond (point, cpN, emptyN or file)")->required();
    h_bundle->add_option("--fiber-dim", fiber_dim, "Fiber dimension")->required();
    std::string x_spec;
    std::string y_spec;
    int codim = 2;
    auto *h_blowup = hodge_cmd->add_subcommand("blowup", "Blow-up diamond");
    h_blowup->add_option("--x", x_spec, "Ambient diamond")->required();
    h_blowup->add_option("--y", y_spec, "Center diamond")->required();
    h_blowup->add_option("--codim", codim, "Codimension of the center")->required();
    std::string diamond_spec;
    auto *h_corr = hodge_cmd->add_subcommand("correction", "sum (-1)^k k(n-k) b_k");
    h_corr->add_option("--diamond", diamond_spec, "Diamond")->required();
    auto *h_ledger = hodge_cmd->add_subcommand("ledger", "Determinant-line exponent ledgers");
    h_ledger->add_option("--diamond", diamond_spec, "Diamond")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::optional<Report> rep;
        if (identities->parsed()) {
            rep = cmd_identities(max_m);
        } else if (chi_cp->parsed()) {
            rep = cmd_chi_d_cp(r, s, d, parse_int_list(mults_text));
        } else if (chi_table->parsed()) {
            rep = cmd_chi_d_table(io::parse_pair(io::read_file(table_path)));
        } else if (blowup->parsed()) {
            if (!blowup_path.empty() && random_count > 0) {
                throw UsageError("use either --file or --random, not both");
            }
            if (random_count > 0) {
                rep = cmd_blowup_random(random_count, seed);
            } else if (!blowup_path.empty()) {
                const snc::SncPair pair = io::parse_pair(io::read_file(blowup_path));
                if (!pair.strata.center) {
                    throw UsageError("blowup-check needs a table with a \"center\"");
                }
                rep = cmd_blowup_check(pair);
            } else {
                throw UsageError("blowup-check needs --file or --random");
            }
        } else if (hrr_cp->parsed()) {
            rep = cmd_hrr_cp(hrr_n, hrr_p, twist);
        } else if (h_bundle->parsed()) {
            rep = cmd_hodge_bundle(resolve_diamond(base_spec), fiber_dim);
        } else if (h_blowup->parsed()) {
            rep = cmd_hodge_blowup(resolve_diamond(x_spec), resolve_diamond(y_spec), codim);
        } else if (h_corr->parsed()) {
            rep = cmd_hodge_correction(resolve_diamond(diamond_spec));
        } else if (h_ledger->parsed()) {
            rep = cmd_hodge_ledger(resolve_diamond(diamond_spec));
        } else {
            throw UsageError("no command given");
        }

        std::ostringstream text;
        if (as_json) {
            text << rep->to_json().dump(2) << "\n";
        } else {
            rep->print_text(text);
        }
        if (out_path.empty()) {
            out << text.str();
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                throw UsageError("cannot write '" + out_path + "'");
            }
            f << text.str();
        }
        return rep->overall() ? 0 : 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cyp::cli
