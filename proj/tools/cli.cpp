#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "veer/dehornoy.hpp"
#include "veer/grid.hpp"
#include "veer/gridhf.hpp"
#include "veer/rv.hpp"
#include "veer/sweep.hpp"
#include "veer/theta.hpp"

namespace veer::cli {

namespace {

using json = nlohmann::ordered_json;

struct Aborted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t env_or(const char* name, std::size_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

std::string slurp(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<int> letters_json(const BraidWord& w) { return w.letters(); }

struct Context {
    std::istream& in;
    std::ostream& out;
    bool json_out = false;
    int strands = 0;
    SolverLimits limits;

    BraidWord word(const std::string& text) const
    {
        if (strands < 1) throw CLI::ValidationError("-n", "strand count is required for braid input");
        if (text == "-") return parse_braid(slurp(in), strands);
        return parse_braid(text, strands);
    }

    GridDiagram grid_file(const std::string& path) const
    {
        if (path == "-") return from_json(slurp(in));
        std::ifstream f(path);
        if (!f) throw CLI::ValidationError("--grid", "cannot open " + path);
        return from_json(slurp(f));
    }

    void emit(const json& j, const std::string& text) const
    {
        if (json_out)
            out << j.dump() << '\n';
        else
            out << text << '\n';
    }
};

std::string theta_text(const NonvanishingResult& r)
{
    switch (r.status) {
    case NonvanishingResult::Status::Nonzero: return std::string("nonzero (") + to_string(r.reason) + ")";
    case NonvanishingResult::Status::Zero:
        return "zero (witness: " + std::to_string(r.witness.size()) + " states)";
    default: return "aborted (" + r.limit + ")";
    }
}

json theta_json(const NonvanishingResult& r, int sl, int grid_size)
{
    json j;
    j["status"] = to_string(r.status);
    if (r.status == NonvanishingResult::Status::Nonzero) j["reason"] = to_string(r.reason);
    if (r.status == NonvanishingResult::Status::Zero) j["witness_size"] = r.witness.size();
    if (r.status == NonvanishingResult::Status::Aborted) j["limit"] = r.limit;
    j["maslov"] = r.grading.maslov;
    j["alexander2"] = r.grading.alexander2;
    j["sl"] = sl;
    j["grid_size"] = grid_size;
    return j;
}

json verdict_json(const RvVerdict& v)
{
    json j;
    j["status"] = to_string(v.status);
    j["certificate"] = to_string(v.certificate);
    if (v.witness) j["witness"] = letters_json(*v.witness);
    return j;
}

std::string verdict_text(const RvVerdict& v)
{
    std::string s = std::string(to_string(v.status)) + " (" + to_string(v.certificate);
    if (v.witness) s += ": " + format_letters(*v.witness);
    return s + ")";
}

MurasugiForm make_form(const std::string& variant, int d, const std::vector<int>& params)
{
    MurasugiForm f;
    f.d = d;
    if (variant == "a") {
        f.variant = MurasugiForm::Variant::A;
        f.a = params;
    } else {
        if (params.size() != 1) throw CLI::ValidationError("--params", "variants b and c take one exponent");
        f.variant = variant == "b" ? MurasugiForm::Variant::B : MurasugiForm::Variant::C;
        f.m = params[0];
    }
    validate(f);
    return f;
}

int selftest(Context& ctx)
{
    struct Check {
        const char* name;
        bool (*fn)();
    };
    static const Check checks[] = {
        {"sign of s3 s1^2 s2^-5 s3^-1",
         [] { return order_sign(BraidWord(4, {3, 1, 1, -2, -2, -2, -2, -2, -3})) == OrderSign::Positive; }},
        {"sign of s2 s5 s3^-2 s2^2", [] { return order_sign(BraidWord(6, {2, 5, -3, -3, 2, 2})) == OrderSign::Positive; }},
        {"floor of D^2 s1 s2^-1", [] { return dehornoy_floor(product(delta_sq(3), BraidWord(3, {1, -2}))) == 1; }},
        {"floor of D^2 s2 s1^-1", [] { return dehornoy_floor(product(delta_sq(3), BraidWord(3, {2, -1}))) == 0; }},
        {"grid round trip", [] {
             const BraidWord w(3, {1, 2, -1, -2, 2});
             return grid_to_braid(braid_to_grid(w)) == free_reduce(w);
         }},
        {"theta of stabilized unknot vanishes", [] {
             return theta_nonvanishing(braid_to_grid(BraidWord(2, {-1}))).status == NonvanishingResult::Status::Zero;
         }},
        {"theta of model braid survives", [] {
             const GridDiagram g = braid_to_grid(model_braid(3, 3));
             return !has_incoming_rectangle(g, theta_state(g));
         }},
        {"trefoil theta survives", [] {
             SolverLimits l;
             l.fast_path = false;
             return theta_nonvanishing(braid_to_grid(BraidWord(2, {1, 1, 1})), l).status ==
                    NonvanishingResult::Status::Nonzero;
         }},
    };
    int failed = 0;
    json j = json::array();
    for (const Check& c : checks) {
        const bool ok = c.fn();
        failed += !ok;
        if (ctx.json_out)
            j.push_back({{"check", c.name}, {"pass", ok}});
        else
            ctx.out << (ok ? "pass  " : "FAIL  ") << c.name << '\n';
    }
    if (ctx.json_out) ctx.out << j.dump() << '\n';
    return failed ? kPropertyViolated : kComputed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Context ctx{in, out};
    ctx.limits.n_max = static_cast<int>(env_or("VEER_N_MAX", 11));
    ctx.limits.max_entries = env_or("VEER_MAX_ENTRIES", 20'000'000);
    ctx.limits.max_states = env_or("VEER_MAX_STATES", 5'000'000);

    CLI::App app{"veer: braids, Dehornoy order and grid invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", ctx.json_out, "machine-readable output");

    auto add_strands = [&ctx](CLI::App* sub) { sub->add_option("-n,--strands", ctx.strands, "strand count"); };
    auto add_limits = [&ctx](CLI::App* sub) {
        sub->add_option("--n-max", ctx.limits.n_max, "largest grid for full-grading solves");
        sub->add_option("--max-entries", ctx.limits.max_entries, "matrix entry budget");
        sub->add_option("--max-states", ctx.limits.max_states, "state budget");
    };

    std::string word_a, word_b;
    int depth = 1;
    bool ascii = false, as_json = false, compact = false, no_shorten = false, full_grading = false;
    std::string grid_path;
    int radius = 4;
    std::string variant;
    int d = 0;
    std::vector<int> params;
    bool with_theta = false;
    std::uint64_t seed = 0;
    int samples = 200;
    std::string part = "all";

    auto* sign = app.add_subcommand("sign", "Dehornoy sign of a braid");
    add_strands(sign);
    sign->add_option("word", word_a)->required();

    auto* cmp = app.add_subcommand("cmp", "compare two braids in the Dehornoy order");
    add_strands(cmp);
    cmp->add_option("a", word_a)->required();
    cmp->add_option("b", word_b)->required();

    auto* eq = app.add_subcommand("eq", "decide whether two words are the same braid");
    add_strands(eq);
    eq->add_option("a", word_a)->required();
    eq->add_option("b", word_b)->required();

    auto* floor = app.add_subcommand("floor", "Dehornoy floor");
    add_strands(floor);
    floor->add_option("word", word_a)->required();

    auto* fdtc = app.add_subcommand("fdtc", "certified interval for the fractional Dehn twist coefficient");
    add_strands(fdtc);
    fdtc->add_option("--depth", depth, "power of the braid to examine")->check(CLI::PositiveNumber);
    fdtc->add_option("word", word_a)->required();

    auto* sl = app.add_subcommand("sl", "self-linking number of the closure");
    add_strands(sl);
    sl->add_option("word", word_a)->required();

    auto* grid = app.add_subcommand("grid", "grid diagram of a braid");
    add_strands(grid);
    grid->add_flag("--json", as_json, "JSON grid (default)");
    grid->add_flag("--ascii", ascii, "ASCII picture, top row first");
    grid->add_flag("--compact", compact, "share rows between runs of one strand");
    grid->add_option("word", word_a)->required();

    auto* theta = app.add_subcommand("theta", "decide whether the theta class vanishes");
    add_strands(theta);
    add_limits(theta);
    theta->add_option("--grid", grid_path, "grid JSON file, or - for standard input");
    theta->add_flag("--no-shorten", no_shorten, "use the word exactly as given");
    theta->add_flag("--full-grading", full_grading, "solve over every state of the source grading");
    theta->add_option("word", word_a);

    auto* rv = app.add_subcommand("rv", "right-veering verdict with certificate");
    add_strands(rv);
    add_limits(rv);
    rv->add_option("--radius", radius, "conjugator search radius")->check(CLI::NonNegativeNumber);
    rv->add_option("word", word_a)->required();

    auto* mur = app.add_subcommand("murasugi", "3-braid normal form word and its classification");
    add_limits(mur);
    mur->add_option("--variant", variant)->required()->check(CLI::IsMember({"a", "b", "c"}));
    mur->add_option("-d", d, "power of the full twist")->required();
    mur->add_option("--params", params, "exponents a_i, or m for variants b and c")->required();
    mur->add_flag("--theta", with_theta, "also decide theta on the word");

    auto* sweep = app.add_subcommand("sweep", "normal-form sweep and random floor sweep");
    add_limits(sweep);
    sweep->add_option("--seed", seed, "mt19937_64 seed");
    sweep->add_option("--samples", samples, "random floor words")->check(CLI::NonNegativeNumber);
    sweep->add_option("--part", part)->check(CLI::IsMember({"murasugi", "floor", "all"}));

    auto* self = app.add_subcommand("selftest", "quick built-in checks");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kComputed;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (sign->parsed()) {
            const OrderSign s = order_sign(ctx.word(word_a));
            ctx.emit(json{{"sign", to_string(s)}}, to_string(s));
        } else if (cmp->parsed()) {
            const BraidWord a = ctx.word(word_a), b = ctx.word(word_b);
            const OrderSign s = order_sign(product(inverse(b), a));
            const char* rel = s == OrderSign::Positive ? "greater" : s == OrderSign::Negative ? "less" : "equal";
            ctx.emit(json{{"cmp", rel}}, rel);
        } else if (eq->parsed()) {
            const bool same = equals(ctx.word(word_a), ctx.word(word_b));
            ctx.emit(json{{"equal", same}}, same ? "equal" : "different");
            return same ? kComputed : kPropertyViolated;
        } else if (floor->parsed()) {
            const int f = dehornoy_floor(ctx.word(word_a));
            ctx.emit(json{{"floor", f}}, std::to_string(f));
        } else if (fdtc->parsed()) {
            const FdtcBounds b = fdtc_bounds(ctx.word(word_a), depth);
            ctx.emit(json{{"lower", b.lower.str()}, {"upper", b.upper.str()}, {"depth", b.depth}},
                     b.lower.str() + " " + b.upper.str());
        } else if (sl->parsed()) {
            const BraidWord w = ctx.word(word_a);
            ctx.emit(json{{"sl", self_linking(w)}, {"exponent_sum", exponent_sum(w)}, {"strands", w.strands()}},
                     std::to_string(self_linking(w)));
        } else if (grid->parsed()) {
            const GridDiagram g = braid_to_grid(ctx.word(word_a), compact ? GridLayout::Compact : GridLayout::Standard);
            if (ascii && !as_json)
                out << render_ascii(g);
            else
                out << to_json(g) << '\n';
        } else if (theta->parsed()) {
            if (full_grading) ctx.limits.strategy = SolveStrategy::FullGrading;
            NonvanishingResult r;
            int slk = 0, size = 0;
            if (!grid_path.empty()) {
                if (!word_a.empty()) throw CLI::ValidationError("theta", "give either a word or --grid, not both");
                const GridDiagram g = ctx.grid_file(grid_path);
                r = theta_nonvanishing(g, ctx.limits);
                slk = grid_writhe(g) - wrapped_columns(g);
                size = g.n;
            } else {
                if (word_a.empty()) throw CLI::ValidationError("theta", "a braid word or --grid is required");
                ThetaOptions opt;
                opt.limits = ctx.limits;
                opt.shorten = !no_shorten;
                const BraidWord w = ctx.word(word_a);
                const BraidTheta t = theta_of_braid(w, opt);
                r = t.result;
                slk = self_linking(w);
                size = t.grid.n;
            }
            ctx.emit(theta_json(r, slk, size), theta_text(r));
            if (r.status == NonvanishingResult::Status::Aborted) return kAborted;
        } else if (rv->parsed()) {
            SearchBudget budget;
            budget.radius = radius;
            budget.theta.limits = ctx.limits;
            const RvVerdict v = rv_status(ctx.word(word_a), budget);
            ctx.emit(verdict_json(v), verdict_text(v));
            if (v.status == RvVerdict::Status::Unknown) return kAborted;
        } else if (mur->parsed()) {
            const MurasugiForm f = make_form(variant, d, params);
            const BraidWord w = murasugi_word(f);
            const RvVerdict v = murasugi_classify_rv(f);
            json j{{"form", describe(f)}, {"word", letters_json(w)}};
            j.update(verdict_json(v));
            std::string text = describe(f) + " [" + format_letters(w) + "] " + verdict_text(v);
            int code = kComputed;
            if (with_theta) {
                ThetaOptions opt;
                opt.limits = ctx.limits;
                const BraidTheta t = theta_of_braid(w, opt);
                j["theta"] = theta_json(t.result, self_linking(w), t.grid.n);
                text += "; theta " + theta_text(t.result);
                if (t.result.status == NonvanishingResult::Status::Aborted)
                    code = kAborted;
                else if ((t.result.status == NonvanishingResult::Status::Nonzero) !=
                         (v.status == RvVerdict::Status::RightVeering))
                    code = kPropertyViolated;
            }
            ctx.emit(j, text);
            return code;
        } else if (sweep->parsed()) {
            ThetaOptions opt;
            opt.limits = ctx.limits;
            json report;
            int mismatches = 0, aborts = 0;
            std::ostringstream text;
            if (part != "floor") {
                int total = 0, bad = 0;
                json cex = json::array();
                for (const MurasugiForm& f : murasugi_sweep_forms()) {
                    const MurasugiCase c = run_murasugi_case(f, opt);
                    ++total;
                    if (c.theta.result.status == NonvanishingResult::Status::Aborted) ++aborts;
                    if (!c.agrees) {
                        ++bad;
                        const std::string line = describe(f) + " [" + format_letters(c.word) + "] classified " +
                                                 to_string(c.classified.status) + ", theta " +
                                                 theta_text(c.theta.result);
                        cex.push_back(line);
                        text << "mismatch: " << line << '\n';
                    }
                }
                mismatches += bad;
                report["murasugi"] = {{"cases", total}, {"mismatches", bad}, {"counterexamples", cex}};
                text << "murasugi: " << total << " cases, " << bad << " mismatches\n";
            }
            if (part != "murasugi") {
                int vanishing = 0;
                json cex = json::array();
                const std::vector<BraidWord> words = sample_floor_words(seed, samples);
                for (const BraidWord& w : words) {
                    const BraidTheta t = theta_of_braid(w, opt);
                    if (t.result.status == NonvanishingResult::Status::Aborted) ++aborts;
                    if (t.result.status != NonvanishingResult::Status::Nonzero) {
                        ++vanishing;
                        cex.push_back(format_letters(w));
                        text << "floor counterexample: [" << format_letters(w) << "] theta "
                             << theta_text(t.result) << '\n';
                    }
                }
                mismatches += vanishing;
                report["floor"] = {{"seed", seed}, {"words", words.size()}, {"vanishing", vanishing},
                                   {"counterexamples", cex}};
                text << "floor: " << words.size() << " words (seed " << seed << "), " << vanishing
                     << " without nonzero theta\n";
            }
            if (ctx.json_out)
                out << report.dump() << '\n';
            else
                out << text.str();
            if (aborts) return kAborted;
            return mismatches ? kPropertyViolated : kComputed;
        } else if (self->parsed()) {
            return selftest(ctx);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const MalformedWord& e) {
        err << "malformed word: " << e.what() << '\n';
        return kUsage;
    } catch (const StrandMismatch& e) {
        err << "strand mismatch: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidGrid& e) {
        err << "invalid grid: " << e.what() << '\n';
        return kUsage;
    } catch (const MalformedJson& e) {
        err << "malformed JSON: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kAborted;
    } catch (const SizeLimitExceeded& e) {
        err << "size limit: " << e.what() << '\n';
        return kAborted;
    }
    return kComputed;
}

}  // namespace veer::cli
