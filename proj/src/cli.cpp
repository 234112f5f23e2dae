#include "readcode/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "readcode/bounds.hpp"
#include "readcode/characterize.hpp"
#include "readcode/codebook.hpp"
#include "readcode/error.hpp"
#include "readcode/seqcore.hpp"
#include "readcode/sweep.hpp"

namespace readcode {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t env_budget() {
    const char* raw = std::getenv("READCODE_BUDGET");
    if (!raw || !*raw) return kDefaultBudget;
    std::uint64_t v = 0;
    const char* end = raw + std::char_traits<char>::length(raw);
    auto [p, ec] = std::from_chars(raw, end, v);
    if (ec != std::errc() || p != end || v == 0) throw UsageError("READCODE_BUDGET must be a positive integer");
    return v;
}

std::size_t parse_size(const std::string& text) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) throw UsageError("not a non-negative integer: " + text);
    return v;
}

struct Range {
    std::size_t start = 0, stop = 0, step = 1;
};

// "8", "8..16" or "8..16:2".
Range parse_range(const std::string& text) {
    Range r;
    std::string body = text;
    if (auto colon = body.find(':'); colon != std::string::npos) {
        r.step = parse_size(body.substr(colon + 1));
        body = body.substr(0, colon);
    }
    if (auto dots = body.find(".."); dots != std::string::npos) {
        r.start = parse_size(body.substr(0, dots));
        r.stop = parse_size(body.substr(dots + 2));
    } else {
        r.start = r.stop = parse_size(body);
    }
    if (r.step < 1) throw UsageError("range step must be at least 1");
    if (r.stop < r.start) throw UsageError("range stop must not precede start: " + text);
    return r;
}

std::vector<Family> parse_families(const std::vector<std::string>& names) {
    std::vector<Family> out;
    for (const auto& n : names) out.push_back(parse_family(n));
    return out;
}

std::string join(const std::vector<std::uint64_t>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string format_redundancy(std::optional<double> r) { return r ? format_real(*r) : "null"; }

std::optional<double> redundancy_of(std::size_t n, unsigned q, std::uint64_t size) {
    if (size == 0) return std::nullopt;
    return static_cast<double>(n) - log_base(static_cast<double>(size), q);
}

// Parameter flags shared by check and enum.
struct FamilyFlags {
    std::string family;
    std::optional<std::int64_t> P;
    std::optional<unsigned> T, d;
    std::optional<std::size_t> cap;
    std::vector<std::uint64_t> moduli;
    std::vector<std::uint64_t> residues;
    bool best = false;
    bool independent = false;

    void attach(CLI::App* sub) {
        sub->add_option("--family", family, "code family (c33, cp, cdel, bounded, bounded_bin, c24, c24_bin, aux1, aux2, c25)")
            ->required();
        sub->add_option("--P", P, "override P");
        sub->add_option("--T", T, "override the goodness threshold (c33 only)");
        sub->add_option("--d", d, "override the Hamming distance (bounded only)");
        sub->add_option("--cap", cap, "override the alternating run cap");
        sub->add_option("--moduli", moduli, "override moduli, comma-separated")->delimiter(',');
        sub->add_option("--residues", residues, "residues, comma-separated")->delimiter(',');
        sub->add_flag("--best", best, "choose the residues that maximise |C|");
        sub->add_flag("--independent", independent, "c25: optimise the two halves separately");
    }

    FamilyOverrides overrides() const {
        FamilyOverrides o;
        o.P = P;
        o.good_threshold = T;
        o.d = d;
        o.run_cap = cap;
        if (!moduli.empty()) o.moduli = moduli;
        return o;
    }

    // Code with residues: given ones, or the best ones when --best is set or
    // none were given.
    CodeFamilySpec resolve(std::size_t n, unsigned q, std::optional<unsigned> ell, const EnumerateOptions& opts) const {
        const Family f = parse_family(family);
        const unsigned l = ell.value_or(f == Family::C33 ? 3 : 2);
        if (!residues.empty() && best) throw UsageError("--residues and --best are mutually exclusive");
        if (!residues.empty()) {
            CodeFamilySpec spec = derive_params(f, n, q, l, overrides());
            if (residues.size() != spec.constraints.size())
                throw UsageError("expected " + std::to_string(spec.constraints.size()) + " residues");
            for (std::size_t i = 0; i < residues.size(); ++i)
                if (residues[i] >= spec.constraints[i].modulus)
                    throw UsageError("residue " + std::to_string(residues[i]) + " is not below its modulus " +
                                     std::to_string(spec.constraints[i].modulus));
            spec.residues = residues;
            spec.residue_mode = "given";
            return spec;
        }
        return best_residues(f, n, q, l, overrides(), opts, independent).spec;
    }
};

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    std::ostream& out_;
    std::ostream& err_;
    unsigned threads_ = 1;
    std::string out_path_;
    std::uint64_t budget_ = kDefaultBudget;

    EnumerateOptions opts() const { return {budget_, threads_}; }

    void emit(const std::string& text) {
        if (out_path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(out_path_, std::ios::binary);
        if (!f) throw UsageError("cannot open output file " + out_path_);
        f << text;
    }
    void emit(const json& j) { emit(j.dump(2) + "\n"); }
};

int Cli::run(const std::vector<std::string>& args) {
    CLI::App app{"Read-channel coding toolkit: transforms, codes, exhaustive checks and bounds.", "readcode"};
    app.require_subcommand(1);
    app.add_option("--threads", threads_, "worker threads (0 = all cores)");
    app.add_option("--out", out_path_, "write machine output to this file");
    app.fallthrough();

    unsigned q = 2, ell = 2;
    std::optional<unsigned> ell_opt;
    std::string word, x_text, y_text, format = "csv";
    std::size_t n = 0;
    std::optional<std::size_t> t_opt, d_opt;

    auto* read = app.add_subcommand("read", "print the l-read vector of a word");
    read->add_option("--q", q)->default_val(2);
    read->add_option("--ell", ell)->default_val(2);
    read->add_option("--word", word)->required();

    auto* dist = app.add_subcommand("dist", "l-read and Hamming distance of two words");
    dist->add_option("--q", q)->default_val(2);
    dist->add_option("--ell", ell)->default_val(2);
    dist->add_option("--x", x_text)->required();
    dist->add_option("--y", y_text)->required();

    auto* decompose = app.add_subcommand("decompose", "swap-block decomposition of a pair");
    decompose->add_option("--q", q)->default_val(2);
    decompose->add_option("--x", x_text)->required();
    decompose->add_option("--y", y_text)->required();

    FamilyFlags fam;
    auto* check = app.add_subcommand("check", "membership of a word in a code");
    check->add_option("--q", q)->default_val(2);
    check->add_option("--ell", ell_opt, "read length (default 3 for c33, else 2)");
    check->add_option("--word", word)->required();
    fam.attach(check);

    bool list_words = true;
    auto* enumerate_cmd = app.add_subcommand("enum", "enumerate a code");
    enumerate_cmd->add_option("--q", q)->default_val(2);
    enumerate_cmd->add_option("--n", n)->required();
    enumerate_cmd->add_option("--ell", ell_opt, "read length (default 3 for c33, else 2)");
    enumerate_cmd->add_flag("!--no-words", list_words, "omit the word list");
    fam.attach(enumerate_cmd);

    std::string check_name, family_name_text;
    std::vector<unsigned> qs{2}, ells{2};
    std::vector<std::size_t> ts;
    std::vector<std::string> families;
    std::size_t nmin = 1, nmax = 6;
    auto* verify = app.add_subcommand("verify", "exhaustive property check or code guarantee check");
    auto* vcheck = verify->add_option("--check", check_name, "named check");
    verify->add_option("--q", qs, "alphabet sizes, comma-separated")->delimiter(',');
    verify->add_option("--nmin", nmin);
    verify->add_option("--nmax", nmax);
    verify->add_option("--ell", ells, "read lengths, comma-separated")->delimiter(',');
    verify->add_option("--t", ts, "radii, comma-separated")->delimiter(',');
    verify->add_option("--families", families, "families for the family/sandwich checks")->delimiter(',');
    FamilyFlags vfam;
    auto* vfamily = verify->add_option("--family", vfam.family, "verify one code");
    verify->add_option("--n", n, "word length for --family");
    verify->add_option("--P", vfam.P);
    verify->add_option("--T", vfam.T);
    verify->add_option("--d", vfam.d);
    verify->add_option("--cap", vfam.cap);
    verify->add_option("--moduli", vfam.moduli)->delimiter(',');
    verify->add_option("--residues", vfam.residues)->delimiter(',');
    verify->add_flag("--independent", vfam.independent);
    verify->add_flag("--best", vfam.best, "choose the residues that maximise |C| (the default without --residues)");
    vcheck->excludes(vfamily);

    auto* bounds = app.add_subcommand("bounds", "bound values as CSV rows");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--q", q)->default_val(2);
    bounds->add_option("--ell", ell_opt);
    bounds->add_option("--t", t_opt);
    bounds->add_option("--d", d_opt);
    bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::string n_range;
    auto* table = app.add_subcommand("table", "best-code sizes and redundancies over a grid");
    table->add_option("--families", families, "comma-separated")->delimiter(',')->required();
    table->add_option("--q", q)->default_val(2);
    table->add_option("--n", n_range, "a, a..b or a..b:step")->required();
    table->add_option("--ell", ell_opt, "read length (c33 always uses 3)");
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out_, err_) == 0 ? kExitOk : kExitUsage;
    }

    try {
        budget_ = env_budget();

        if (*read) {
            emit(format_read_vector(read_vector(parse_word(word, q), ell)) + "\n");
            return kExitOk;
        }
        if (*dist) {
            const Word x = parse_word(x_text, q), y = parse_word(y_text, q);
            json j;
            j["x"] = format_word(x);
            j["y"] = format_word(y);
            j["ell"] = ell;
            j["read_distance"] = read_distance(x, y, ell);
            j["hamming_distance"] = hamming_distance(x, y);
            emit(j);
            return kExitOk;
        }
        if (*decompose) {
            const Word x = parse_word(x_text, q), y = parse_word(y_text, q);
            json j = to_json(decompose_pair(x, y));
            if (read_distance(x, y, 2) == 4) j["d4_case"] = classify_d4(x, y).tag == D4Case::A ? "A" : "B";
            emit(j);
            return kExitOk;
        }
        if (*check) {
            const Word w = parse_word(word, q);
            const CodeFamilySpec spec = fam.resolve(w.size(), q, ell_opt, opts());
            json j;
            j["code"] = spec.to_json();
            j["word"] = format_word(w);
            j["in_ambient"] = in_ambient(spec, w);
            j["signature"] = signature(spec, w);
            j["member"] = is_member(spec, w);
            emit(j);
            err_ << format_word(w) << (j["member"].get<bool>() ? " is" : " is not") << " a member\n";
            return kExitOk;
        }
        if (*enumerate_cmd) {
            const CodeFamilySpec spec = fam.resolve(n, q, ell_opt, opts());
            const EnumeratedCode code = enumerate(spec, opts());
            json j;
            j["code"] = spec.to_json();
            j["size"] = code.size();
            const auto r = code.redundancy();
            j["redundancy"] = r ? json(format_real(*r)) : json(nullptr);
            if (list_words) {
                json words = json::array();
                for (const Word& w : code.words) words.push_back(format_word(w));
                j["words"] = std::move(words);
            }
            emit(j);
            err_ << family_name(spec.family) << " n=" << n << " q=" << q << ": " << code.size() << " words\n";
            return kExitOk;
        }
        if (*verify) {
            VerificationReport report;
            if (!check_name.empty()) {
                SweepGrid g;
                g.qs = qs;
                g.nmin = nmin;
                g.nmax = nmax;
                g.ells = ells;
                if (!ts.empty()) g.ts = ts;
                if (!families.empty()) g.families = parse_families(families);
                g.threads = threads_;
                g.budget = budget_;
                report = sweep(check_name, g);
            } else if (!vfam.family.empty()) {
                if (n == 0) throw UsageError("--family needs --n");
                if (qs.size() != 1 || ells.size() != 1) throw UsageError("--family takes a single --q and --ell");
                const Family f = parse_family(vfam.family);
                std::optional<unsigned> l;
                if (verify->count("--ell")) l = ells.front();
                const CodeFamilySpec spec = vfam.resolve(n, qs.front(), l.value_or(f == Family::C33 ? 3 : 2), opts());
                report = verify_family(spec, opts());
            } else {
                throw UsageError("verify needs --check or --family");
            }
            emit(report.to_json());
            err_ << report.check << ": " << (report.pass ? "pass" : "FAIL") << " (" << report.pairs_examined
                 << " pairs)\n";
            if (report.counterexample)
                err_ << "  counterexample x=" << format_word(report.counterexample->x)
                     << " y=" << format_word(report.counterexample->y) << " " << report.counterexample->details
                     << "\n";
            return report.pass ? kExitOk : kExitFailed;
        }
        if (*bounds) {
            std::vector<BoundReport> rows;
            const std::string ts_text = t_opt ? std::to_string(*t_opt) : "";
            const std::string ds_text = d_opt ? std::to_string(*d_opt) : "";
            rows.push_back({"hamming_bound_redundancy", n, q, "", "3", format_real(hamming_bound_redundancy(n, q)),
                            "sphere packing"});
            try {
                const std::size_t tstar = prescribed_t(n, q);
                rows.push_back({"prescribed_t", n, q, std::to_string(tstar), "3", std::to_string(tstar), "t*"});
                rows.push_back({"redundancy_lower_bound_d3", n, q, std::to_string(tstar), "3",
                                format_real(redundancy_lower_bound_d3(n, q)), "clique cover at t*"});
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PrescribedTNonpositive) throw;
                err_ << "t* undefined or below 1 at n=" << n << ", q=" << q << "\n";
            }
            if (t_opt) {
                rows.push_back({"clique_cover_size", n, q, ts_text, "3",
                                format_rational(clique_cover_size(n, q, *t_opt)), "closed form"});
                if (n <= 64)
                    rows.push_back({"clique_cover_count", n, q, ts_text, "3", clique_cover_count(n, q, *t_opt).str(),
                                    "direct count"});
            }
            if (t_opt && d_opt) {
                const auto ni = static_cast<std::int64_t>(n);
                const auto ti = static_cast<std::int64_t>(*t_opt);
                const auto di = static_cast<std::int64_t>(*d_opt);
                rows.push_back({"levenshtein_N", n, q, ts_text, ds_text, levenshtein_N(ni, q, ti, di).str(),
                                "closed form"});
                const unsigned l = ell_opt.value_or(2);
                rows.push_back({"read_recon_upper_ell" + std::to_string(l), n, q, ts_text, ds_text,
                                read_recon_upper(ni, l, q, ti, di).str(), "N(n+l-1, q_l, t, d)"});
            }
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"name", r.name},
                                   {"n", r.n},
                                   {"q", r.q},
                                   {"t", r.t.empty() ? json(nullptr) : json(r.t)},
                                   {"d", r.d.empty() ? json(nullptr) : json(r.d)},
                                   {"value", r.value},
                                   {"provenance", r.provenance}});
                emit(arr);
            } else {
                std::string text = bound_csv_header() + "\n";
                for (const auto& r : rows) text += to_csv(r) + "\n";
                emit(text);
            }
            return kExitOk;
        }
        if (*table) {
            const Range range = parse_range(n_range);
            const std::vector<Family> fams = parse_families(families);
            struct Row {
                Family family;
                std::size_t n;
                ResidueSearch best;
            };
            std::vector<Row> rows;
            for (Family f : fams) {
                if (q != 2 && (f == Family::BOUNDED_BIN || f == Family::C24_BIN))
                    throw UsageError(std::string(family_name(f)) + " requires q = 2");
                const unsigned l = f == Family::C33 ? 3 : ell_opt.value_or(2);
                for (std::size_t k = range.start; k <= range.stop; k += range.step) {
                    rows.push_back({f, k, best_residues(f, k, q, l, {}, opts())});
                    err_ << family_name(f) << " n=" << k << ": " << rows.back().best.best_size << "\n";
                }
            }
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : rows) {
                    const auto red = redundancy_of(r.n, q, r.best.best_size);
                    arr.push_back({{"family", std::string(family_name(r.family))},
                                   {"n", r.n},
                                   {"q", q},
                                   {"P", r.best.spec.P_text()},
                                   {"moduli", r.best.spec.moduli()},
                                   {"size", r.best.best_size},
                                   {"redundancy", red ? json(format_real(*red)) : json(nullptr)}});
                }
                emit(arr);
            } else {
                std::string text = "family,n,q,P,moduli,size,redundancy\n";
                for (const auto& r : rows)
                    text += std::string(family_name(r.family)) + "," + std::to_string(r.n) + "," + std::to_string(q) +
                            "," + r.best.spec.P_text() + "," + join(r.best.spec.moduli(), ';') + "," +
                            std::to_string(r.best.best_size) + "," +
                            format_redundancy(redundancy_of(r.n, q, r.best.best_size)) + "\n";
                emit(text);
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Cli(out, err).run(args);
}

} // namespace readcode
