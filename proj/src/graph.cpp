#include "icg/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

namespace icg {

namespace {

[[noreturn]] void reject(const std::string& message) { throw std::invalid_argument(message); }

Int parse_int(std::string_view token, std::string_view whole) {
    Int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || token.front() == '-' ||
        token.front() == '+') {
        reject("malformed graph spec '" + std::string(whole) + "': bad integer '" +
               std::string(token) + "'");
    }
    return value;
}

}  // namespace

IcgSpec IcgSpec::validate(Int n, std::vector<Int> divisors) {
    if (n < 2) reject("n must be at least 2, got " + std::to_string(n));
    if (divisors.empty()) reject("divisor set must be nonempty");
    std::sort(divisors.begin(), divisors.end());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const Int d = divisors[i];
        if (d < 1) reject("divisor " + std::to_string(d) + " is below 1");
        if (d >= n) reject("divisor " + std::to_string(d) + " must be less than n = " + std::to_string(n));
        if (n % d != 0) reject(std::to_string(d) + " does not divide " + std::to_string(n));
        if (i > 0 && divisors[i - 1] == d) reject("duplicate divisor " + std::to_string(d));
    }
    return IcgSpec(n, std::move(divisors));
}

IcgSpec IcgSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        reject("malformed graph spec '" + std::string(text) + "': expected n:d1,d2,...");
    }
    const Int n = parse_int(text.substr(0, colon), text);
    std::vector<Int> ds;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        ds.push_back(parse_int(rest.substr(0, comma), text));
        if (ds.size() > 1 && ds[ds.size() - 2] >= ds.back()) {
            reject("malformed graph spec '" + std::string(text) +
                   "': divisors must be strictly ascending");
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return validate(n, std::move(ds));
}

bool IcgSpec::contains(Int d) const {
    return std::binary_search(divisors_.begin(), divisors_.end(), d);
}

std::string IcgSpec::canonical() const {
    std::string out = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(divisors_[i]);
    }
    return out;
}

std::vector<Int> Spectrum::sorted() const {
    auto v = values;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Int> symbol_set(const IcgSpec& spec) {
    std::vector<Int> symbols;
    for (Int s = 1; s < spec.n(); ++s) {
        if (spec.contains(gcd(s, spec.n()))) symbols.push_back(s);
    }
    return symbols;
}

AdjacencyMatrix adjacency(const IcgSpec& spec) {
    const Int n = spec.n();
    if (n > kMaxDenseOrder) {
        throw std::length_error("dense adjacency refused for n = " + std::to_string(n) +
                                " (limit " + std::to_string(kMaxDenseOrder) + ")");
    }
    std::vector<bool> in_symbols(n, false);
    for (Int s : symbol_set(spec)) in_symbols[s] = true;
    AdjacencyMatrix a(n);
    for (Int i = 0; i < n; ++i) {
        for (Int j = 0; j < n; ++j) {
            a.set(i, j, in_symbols[((j - i) % n + n) % n]);
        }
    }
    return a;
}

Int degree(const IcgSpec& spec) {
    Int r = 0;
    for (Int d : spec.divisors()) r = checked::add(r, euler_phi(spec.n() / d));
    return r;
}

Spectrum spectrum(const IcgSpec& spec) {
    const Int n = spec.n();
    Spectrum out{n, std::vector<Int>(n, 0)};
    for (Int d : spec.divisors()) {
        const Int m = n / d;
        for (Int k = 0; k < n; ++k) {
            out.values[k] = checked::add(out.values[k], ramanujan(k, m));
        }
    }
    return out;
}

Int connectivity(const IcgSpec& spec) {
    Int g = 0;
    for (Int d : spec.divisors()) g = gcd(g, d);
    return g;
}

ComponentDecomposition component_decomposition(const IcgSpec& spec) {
    const Int d = connectivity(spec);
    if (d == 1) return {1, spec};
    std::vector<Int> reduced;
    reduced.reserve(spec.divisors().size());
    for (Int x : spec.divisors()) reduced.push_back(x / d);
    if (spec.n() / d < 2) {
        reject("degenerate quotient for " + spec.canonical());
    }
    return {d, IcgSpec::validate(spec.n() / d, std::move(reduced))};
}

BudgetExceeded::BudgetExceeded(Int n, std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration budget exceeded for n = " + std::to_string(n) + ": " +
                         std::to_string(required) + " divisor sets > budget " +
                         std::to_string(budget)),
      n_(n),
      required_(required),
      budget_(budget) {}

std::vector<Int> proper_divisors(Int n) {
    auto ds = divisors(n);
    ds.pop_back();
    return ds;
}

std::uint64_t divisor_set_count(Int n) {
    const auto m = proper_divisors(n).size();
    if (m >= 64) return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{1} << m) - 1;
}

void check_budget(Int n, std::uint64_t budget) {
    const auto required = divisor_set_count(n);
    if (required > budget) throw BudgetExceeded(n, required, budget);
}

RamanujanColumns::RamanujanColumns(Int n) : n_(n), divisors_(proper_divisors(n)) {
    columns_.reserve(divisors_.size());
    for (Int d : divisors_) {
        const Int m = n / d;
        // c(k, m) depends on k only through gcd(k, m).
        std::vector<Int> by_gcd(m + 1, 0);
        for (Int g : icg::divisors(m)) by_gcd[g] = ramanujan(g, m);
        std::vector<Int> col(n);
        for (Int k = 0; k < n; ++k) col[k] = by_gcd[gcd(k, m)];
        columns_.push_back(std::move(col));
    }
}

void for_each_divisor_set(Int n, const EnumerationOptions& options, const DivisorSetVisitor& visit) {
    if (n < 2) reject("n must be at least 2, got " + std::to_string(n));
    check_budget(n, options.budget);
    const RamanujanColumns columns(n);
    const auto& ds = columns.divisors();
    const std::size_t m = ds.size();

    Spectrum running{n, std::vector<Int>(n, 0)};
    std::uint64_t gray = 0;
    std::vector<Int> chosen;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        gray ^= std::uint64_t{1} << bit;
        const auto& col = columns.column(bit);
        if ((gray >> bit) & 1U) {
            for (Int k = 0; k < n; ++k) running.values[k] += col[k];
        } else {
            for (Int k = 0; k < n; ++k) running.values[k] -= col[k];
        }

        chosen.clear();
        Int g = 0;
        for (std::size_t b = 0; b < m; ++b) {
            if ((gray >> b) & 1U) {
                chosen.push_back(ds[b]);
                g = gcd(g, ds[b]);
            }
        }
        if (options.connected_only && g != 1) continue;
        visit(IcgSpec::validate(n, chosen), running);
    }
}

}  // namespace icg
