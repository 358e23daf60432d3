#include "icg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "icg/serialize.hpp"

namespace icg::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string verb;
    std::string target;
    std::string range;
    std::string format = "json";
    bool format_given = false;
    bool connected_only = false;
    bool all_sets = false;
    double tol = kDefaultSpectrumTolerance;
    std::uint64_t budget = kDefaultSubsetBudget;
    std::string family_class = "first";
};

struct Range {
    Int first;
    Int last;
};

Int parse_number(const std::string& text) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("expected an integer, got '" + text + "'");
    }
    return value;
}

/// "a..b" or a single "n".
Range parse_range(const std::string& text, Int minimum) {
    Range r{};
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.first = r.last = parse_number(text);
    } else {
        r.first = parse_number(text.substr(0, dots));
        r.last = parse_number(text.substr(dots + 2));
    }
    if (r.first > r.last) throw UsageError("empty range '" + text + "'");
    if (r.first < minimum) {
        throw UsageError("range '" + text + "' must start at " + std::to_string(minimum) + " or above");
    }
    return r;
}

IcgSpec spec_target(const Options& o) {
    if (!o.range.empty()) throw UsageError(o.verb + " takes a single graph spec, not --range");
    if (o.target.empty()) throw UsageError(o.verb + " needs a graph spec n:d1,d2,...");
    try {
        return IcgSpec::parse(o.target);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Range range_target(const Options& o, Int minimum) {
    if (!o.range.empty() && !o.target.empty()) {
        throw UsageError("give the target either positionally or with --range, not both");
    }
    const std::string& text = o.range.empty() ? o.target : o.range;
    if (text.empty()) throw UsageError(o.verb + " needs n or a range a..b");
    return parse_range(text, minimum);
}

/// Writes rows as JSON lines, or CSV with a single header line.
class Emitter {
public:
    Emitter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

    void emit(const Json& row) {
        if (!csv_) {
            out_ << row.dump() << '\n';
            return;
        }
        auto text = to_csv({row});
        if (header_written_) text.erase(0, text.find('\n') + 1);
        header_written_ = true;
        out_ << text;
    }

private:
    std::ostream& out_;
    bool csv_;
    bool header_written_ = false;
};

int verb_spectrum(const Options& o, Emitter& em) {
    const auto spec = spec_target(o);
    em.emit(to_json(spec, spectrum(spec)));
    return kSuccess;
}

int verb_energy(const Options& o, Emitter& em) {
    const auto spec = spec_target(o);
    Json j;
    j["spec"] = spec.canonical();
    j["n"] = spec.n();
    j["D"] = spec.divisors();
    j["energy"] = energy(spec);
    em.emit(j);
    return kSuccess;
}

int verb_report(const Options& o, Emitter& em, std::ostream& err) {
    const auto report = energy_report(spec_target(o));
    em.emit(to_json(report));
    if (!report.conforms()) {
        err << "counterexample: " << to_json(report).dump() << '\n';
        return kCounterexample;
    }
    return kSuccess;
}

int verb_mod4_sweep(const Options& o, Emitter& em, std::ostream& err) {
    const auto range = range_target(o, 2);
    for (Int n = range.first; n <= range.last; ++n) check_budget(n, o.budget);
    int status = kSuccess;
    for (Int n = range.first; n <= range.last; ++n) {
        std::vector<EnergyReport> reports;
        for_each_divisor_set(n, {false, o.budget}, [&](const IcgSpec& spec, const Spectrum& s) {
            reports.push_back(energy_report(spec, s));
        });
        std::sort(reports.begin(), reports.end(),
                  [](const EnergyReport& a, const EnergyReport& b) { return a.spec < b.spec; });
        for (const auto& r : reports) {
            em.emit(to_json(r));
            if (!r.conforms()) {
                err << "counterexample: " << to_json(r).dump() << '\n';
                status = kCounterexample;
            }
        }
    }
    return status;
}

int verb_closed_form(const Options& o, Emitter& em, std::ostream& err) {
    const auto spec = spec_target(o);
    const auto c = match_closed_form(spec);
    if (!c) {
        throw UsageError(spec.canonical() +
                         " has no closed form; D must be {1, p^g} or {p, q} with n >= 4");
    }
    const Int formula = closed_form_energy(*c);
    const Int direct = energy(spec);
    Json j;
    j["spec"] = spec.canonical();
    j["family"] = to_string(c->family);
    j["parameters"] = parameters_string(*c);
    j["branch"] = c->branch_number();
    j["formula"] = formula;
    j["direct"] = direct;
    j["match"] = formula == direct;
    em.emit(j);
    if (formula != direct) {
        err << "counterexample: " << j.dump() << '\n';
        return kCounterexample;
    }
    return kSuccess;
}

int verb_cross_validate(const Options& o, Emitter& em, std::ostream& err) {
    const auto range = range_target(o, 4);
    if (range.first != range.last) throw UsageError("cross-validate takes a single n_max");
    int status = kSuccess;
    for (const auto& row : cross_validate(range.last)) {
        em.emit(to_json(row));
        if (!row.match) {
            err << "counterexample: " << to_json(row).dump() << '\n';
            status = kCounterexample;
        }
    }
    return status;
}

int verb_family(const Options& o, Emitter& em, std::ostream& err) {
    const auto range = range_target(o, 2);
    const bool second = o.family_class == "second";
    int status = kSuccess;
    for (Int n = range.first; n <= range.last; ++n) {
        FamilyReport report;
        try {
            report = second ? equienergetic_family_second(n) : equienergetic_family(n);
        } catch (const std::invalid_argument& e) {
            if (range.first == range.last) throw UsageError(e.what());
            continue;
        }
        Json j = to_json(report);
        j["class"] = o.family_class;
        em.emit(j);
        if (!report.holds()) {
            err << "counterexample: " << j.dump() << '\n';
            status = kCounterexample;
        }
    }
    return status;
}

int verb_so_check(const Options& o, Emitter& em, std::ostream& err) {
    const auto range = range_target(o, 2);
    for (Int n = range.first; n <= range.last; ++n) check_budget(n, o.budget);
    int status = kSuccess;
    for (Int n = range.first; n <= range.last; ++n) {
        const auto report = so_conjecture_check(n, o.budget);
        em.emit(to_json(report));
        if (!report.verified()) {
            err << "counterexample: " << to_json(report).dump() << '\n';
            status = kCounterexample;
        }
    }
    return status;
}

int verb_min_energy(const Options& o, Emitter& em, std::ostream& err) {
    if (o.connected_only && o.all_sets) throw UsageError("--connected-only and --all-sets conflict");
    const auto range = range_target(o, 2);
    for (Int n = range.first; n <= range.last; ++n) check_budget(n, o.budget);
    int status = kSuccess;
    for (Int n = range.first; n <= range.last; ++n) {
        const auto report = min_energy_search(n, !o.all_sets, o.budget);
        em.emit(to_json(report));
        if (report.conjecture_holds && !*report.conjecture_holds) {
            err << "counterexample: " << to_json(report).dump() << '\n';
            status = kCounterexample;
        }
    }
    return status;
}

Json comparison_json(const IcgSpec& spec, const SpectrumComparison& cmp) {
    Json j;
    j["spec"] = spec.canonical();
    j["n"] = spec.n();
    j["D"] = spec.divisors();
    j["max_deviation"] = cmp.max_deviation;
    j["pass"] = cmp.pass;
    j["first_failure"] = cmp.first_failure ? Json(*cmp.first_failure) : Json(nullptr);
    return j;
}

int verb_verify_oracle(const Options& o, Emitter& em, std::ostream& err) {
    if (o.target.find(':') != std::string::npos) {
        const auto spec = spec_target(o);
        const auto cmp = compare_spectra(spectrum(spec), spectrum_trig(spec), o.tol);
        const Json j = comparison_json(spec, cmp);
        em.emit(j);
        if (!cmp.pass) {
            err << "counterexample: " << j.dump() << '\n';
            return kCounterexample;
        }
        return kSuccess;
    }
    const auto range = range_target(o, 2);
    for (Int n = range.first; n <= range.last; ++n) check_budget(n, o.budget);
    int status = kSuccess;
    for (Int n = range.first; n <= range.last; ++n) {
        std::uint64_t sets = 0;
        double worst = 0.0;
        std::vector<IcgSpec> failures;
        for_each_divisor_set(n, {false, o.budget}, [&](const IcgSpec& spec, const Spectrum& s) {
            ++sets;
            const auto cmp = compare_spectra(s, spectrum_trig(spec), o.tol);
            worst = std::max(worst, cmp.max_deviation);
            if (!cmp.pass) failures.push_back(spec);
        });
        std::sort(failures.begin(), failures.end());
        Json j;
        j["n"] = n;
        j["sets"] = sets;
        j["max_deviation"] = worst;
        Json failed = Json::array();
        for (const auto& f : failures) failed.push_back(f.canonical());
        j["failures"] = failed;
        em.emit(j);
        if (!failures.empty()) {
            err << "counterexample: " << j.dump() << '\n';
            status = kCounterexample;
        }
    }
    return status;
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
    const bool csv = o.format_given ? o.format == "csv" : o.verb == "cross-validate";
    Emitter em(out, csv);
    if (o.verb == "spectrum") return verb_spectrum(o, em);
    if (o.verb == "energy") return verb_energy(o, em);
    if (o.verb == "report") return verb_report(o, em, err);
    if (o.verb == "mod4-sweep") return verb_mod4_sweep(o, em, err);
    if (o.verb == "closed-form") return verb_closed_form(o, em, err);
    if (o.verb == "cross-validate") return verb_cross_validate(o, em, err);
    if (o.verb == "family") return verb_family(o, em, err);
    if (o.verb == "so-check") return verb_so_check(o, em, err);
    if (o.verb == "min-energy") return verb_min_energy(o, em, err);
    if (o.verb == "verify-oracle") return verb_verify_oracle(o, em, err);
    throw UsageError("unknown verb '" + o.verb + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Integral circulant graph spectra, energies and searches", "icg"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--connected-only", o.connected_only, "Restrict searches to connected graphs (default)");
    app.add_flag("--all-sets", o.all_sets, "min-energy: search every divisor set, connected or not");
    app.add_option("--tol", o.tol, "Oracle tolerance")->check(CLI::PositiveNumber);
    app.add_option("--budget", o.budget, "Maximum divisor sets enumerated per n")->check(CLI::PositiveNumber);
    app.add_option("--range", o.range, "Inclusive range a..b");
    app.add_option("--class", o.family_class, "family: first or second class")
        ->check(CLI::IsMember({"first", "second"}));

    const std::vector<std::pair<std::string, std::string>> verbs{
        {"spectrum", "Exact spectrum of n:d1,d2,..."},
        {"energy", "Exact energy of n:d1,d2,..."},
        {"report", "Energy report with the mod-4 prediction"},
        {"mod4-sweep", "Energy reports for every divisor set over n or a..b"},
        {"closed-form", "Closed-form energy of n:1,p^g or n:p,q against the spectrum"},
        {"cross-validate", "All closed forms up to n_max against direct energies"},
        {"family", "Equienergetic non-cospectral family for n or a..b"},
        {"so-check", "Cospectral collisions among all divisor sets for n or a..b"},
        {"min-energy", "Minimal energy over divisor sets for n or a..b"},
        {"verify-oracle", "Exact spectrum against the trigonometric oracle"},
    };
    for (const auto& [name, help] : verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("target", o.target, "n:d1,d2,..., n, or a..b");
        sub->callback([&o, name = name] { o.verb = name; });
    }

    std::vector<const char*> argv{"icg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    o.format_given = app.count("--format") > 0;

    try {
        return dispatch(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace icg::cli
