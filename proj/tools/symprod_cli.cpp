// symprod: exact cohomological invariants of symmetric products of curves,
// non-isomorphism certificates, and degree bookkeeping for higher-rank
// divisors. Output is byte-deterministic: fixed key order, full decimal
// integers, no locale dependence.

#include <algorithm>
#include <charconv>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "symprod/distinguisher.hpp"
#include "symprod/ind_divisors.hpp"
#include "symprod/partitions.hpp"
#include "symprod/poincare.hpp"
#include "symprod/serialize.hpp"

namespace {

using namespace symprod;

enum class Format { Human, Json, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    "usage: symprod [--json|--csv] <subcommand> ...\n"
    "  partitions <n>\n"
    "  betti <n> <g> [r]\n"
    "  poincare sym <n> <g>\n"
    "  poincare multisym <parts...> <g>\n"
    "  poincare multiproj <dims...>\n"
    "  distinguish <partsA...> -- <partsB...> --genus <g>\n"
    "  classify <n> --genus <g>\n"
    "  divisor slope <r> <n>\n"
    "  divisor thresholds <r> <n>\n"
    "  divisor quotdeg <r> <n> <degD>\n";

long long parse_int(const std::string& s) {
    long long v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw UsageError("malformed integer '" + s + "'");
    return v;
}

int parse_small_int(const std::string& s) {
    long long v = parse_int(s);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw UsageError("integer out of range '" + s + "'");
    return static_cast<int>(v);
}

// Command-line partitions arrive as loose positive integers; canonical form
// is non-increasing, so reorder here and warn when that changed anything.
Partition read_partition(std::vector<int> raw, const char* what) {
    for (int v : raw)
        if (v <= 0)
            throw InvalidInput(std::string(what) + ": parts must be positive");
    std::vector<int> sorted = raw;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted != raw)
        std::cerr << "warning: " << what
                  << " reordered to canonical non-increasing form\n";
    return Partition(std::move(sorted));
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void emit_json(const ojson& envelope) { std::cout << envelope.dump(2) << "\n"; }

// --- certificate rendering shared by distinguish and classify ------------

std::string cert_human(const NonIsoCertificate& c) {
    switch (c.kind) {
    case CertKind::EqualPartitions:
        return "EqualPartitions (the inputs coincide)";
    case CertKind::FirstBettiDiffers: {
        const auto& p = std::get<FirstBettiPayload>(c.payload);
        return "FirstBettiDiffers: B_1 = " + std::to_string(p.first_betti_a) +
               " vs " + std::to_string(p.first_betti_b);
    }
    case CertKind::BettiDiffers: {
        const auto& p = std::get<BettiPayload>(c.payload);
        return "BettiDiffers: B_" + std::to_string(p.degree) + " = " +
               integer_str(p.betti_a) + " vs " + integer_str(p.betti_b);
    }
    case CertKind::FiberMultiproj: {
        const auto& p = std::get<FiberPayload>(c.payload);
        return "FiberMultiproj: dims [" + join_ints(p.dims_a, ' ') + "] vs [" +
               join_ints(p.dims_b, ' ') + "]";
    }
    case CertKind::PicardRankDiffers: {
        const auto& p = std::get<PicardPayload>(c.payload);
        return "PicardRankDiffers: rank " + std::to_string(p.rank_a) + " vs " +
               std::to_string(p.rank_b);
    }
    case CertKind::PolynomialDiffers: {
        const auto& p = std::get<PolyDiffPayload>(c.payload);
        return "PolynomialDiffers: coefficient of x^" + std::to_string(p.degree) +
               " = " + integer_str(p.coeff_a) + " vs " + integer_str(p.coeff_b);
    }
    }
    return "?";
}

// CSV columns shared by certificate rows; empty fields where a column does
// not apply to the kind.
struct CertCsvFields {
    std::string degree, value_a, value_b, dims_a, dims_b;
};

CertCsvFields cert_csv_fields(const NonIsoCertificate& c) {
    CertCsvFields f;
    switch (c.kind) {
    case CertKind::EqualPartitions:
        break;
    case CertKind::FirstBettiDiffers: {
        const auto& p = std::get<FirstBettiPayload>(c.payload);
        f.degree = "1";
        f.value_a = std::to_string(p.first_betti_a);
        f.value_b = std::to_string(p.first_betti_b);
        break;
    }
    case CertKind::BettiDiffers: {
        const auto& p = std::get<BettiPayload>(c.payload);
        f.degree = std::to_string(p.degree);
        f.value_a = integer_str(p.betti_a);
        f.value_b = integer_str(p.betti_b);
        break;
    }
    case CertKind::FiberMultiproj: {
        const auto& p = std::get<FiberPayload>(c.payload);
        f.dims_a = join_ints(p.dims_a, ' ');
        f.dims_b = join_ints(p.dims_b, ' ');
        break;
    }
    case CertKind::PicardRankDiffers: {
        const auto& p = std::get<PicardPayload>(c.payload);
        f.value_a = std::to_string(p.rank_a);
        f.value_b = std::to_string(p.rank_b);
        break;
    }
    case CertKind::PolynomialDiffers: {
        const auto& p = std::get<PolyDiffPayload>(c.payload);
        f.degree = std::to_string(p.degree);
        f.value_a = integer_str(p.coeff_a);
        f.value_b = integer_str(p.coeff_b);
        break;
    }
    }
    return f;
}

// --- subcommands ----------------------------------------------------------

int cmd_partitions(const std::vector<std::string>& args, Format fmt) {
    if (args.size() != 1)
        throw UsageError("partitions expects exactly one argument");
    const int n = parse_small_int(args[0]);
    const auto parts = enumerate_partitions(n);
    const Integer count = partition_count(n);

    if (fmt == Format::Json) {
        ojson result;
        result["n"] = n;
        result["count"] = integer_str(count);
        ojson list = ojson::array();
        for (const Partition& p : parts)
            list.push_back(partition_json(p));
        result["partitions"] = std::move(list);
        emit_json(make_envelope("partitions", ojson{{"n", n}}, std::move(result)));
    } else if (fmt == Format::Csv) {
        std::cout << "index,length,parts\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            std::cout << i << "," << parts[i].length() << ","
                      << join_ints(parts[i].parts(), ' ') << "\n";
    } else {
        std::cout << "p(" << n << ") = " << count << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            std::cout << "  " << (i + 1) << ": [" << join_ints(parts[i].parts(), ' ')
                      << "]\n";
    }
    return 0;
}

int cmd_betti(const std::vector<std::string>& args, Format fmt) {
    if (args.size() != 2 && args.size() != 3)
        throw UsageError("betti expects <n> <g> [r]");
    const int n = parse_small_int(args[0]);
    const int g = parse_small_int(args[1]);
    if (args.size() == 3) {
        const long long r = parse_int(args[2]);
        const Integer value = macdonald_betti(n, g, r);
        if (fmt == Format::Json) {
            ojson result;
            result["n"] = n;
            result["genus"] = g;
            result["r"] = r;
            result["value"] = integer_str(value);
            emit_json(make_envelope(
                "betti", ojson{{"n", n}, {"genus", g}, {"r", r}}, std::move(result)));
        } else if (fmt == Format::Csv) {
            std::cout << "r,betti\n" << r << "," << value << "\n";
        } else {
            std::cout << "B_" << r << "(Sym^" << n << ", g=" << g << ") = " << value
                      << "\n";
        }
        return 0;
    }
    const PoincarePolynomial poly = sym_poincare(n, g);
    if (fmt == Format::Json) {
        ojson result;
        result["n"] = n;
        result["genus"] = g;
        result["coeffs"] = coeffs_json(poly);
        emit_json(make_envelope("betti", ojson{{"n", n}, {"genus", g}},
                                std::move(result)));
    } else if (fmt == Format::Csv) {
        std::cout << "r,betti\n";
        for (long long r = 0; r <= poly.degree(); ++r)
            std::cout << r << "," << poly.coeff(r) << "\n";
    } else {
        std::cout << "Betti numbers of Sym^" << n << "(C), g=" << g << ":\n";
        for (long long r = 0; r <= poly.degree(); ++r)
            std::cout << "  B_" << r << " = " << poly.coeff(r) << "\n";
    }
    return 0;
}

void print_poly(const PoincarePolynomial& poly, const std::string& name,
                const ojson& input, Format fmt) {
    if (fmt == Format::Json) {
        ojson result;
        result["coeffs"] = coeffs_json(poly);
        emit_json(make_envelope("poincare", input, std::move(result)));
    } else if (fmt == Format::Csv) {
        std::cout << "degree,coefficient\n";
        for (long long k = 0; k <= poly.degree(); ++k)
            std::cout << k << "," << poly.coeff(k) << "\n";
    } else {
        std::cout << "Poincare polynomial of " << name << ":\n";
        for (long long k = 0; k <= poly.degree(); ++k)
            std::cout << "  x^" << k << ": " << poly.coeff(k) << "\n";
    }
}

int cmd_poincare(const std::vector<std::string>& args, Format fmt) {
    if (args.empty())
        throw UsageError("poincare expects sym|multisym|multiproj");
    const std::string& mode = args[0];
    if (mode == "sym") {
        if (args.size() != 3)
            throw UsageError("poincare sym expects <n> <g>");
        const int n = parse_small_int(args[1]);
        const int g = parse_small_int(args[2]);
        print_poly(sym_poincare(n, g), "Sym^" + std::to_string(n) + "(C), g=" +
                   std::to_string(g),
                   ojson{{"mode", "sym"}, {"n", n}, {"genus", g}}, fmt);
        return 0;
    }
    if (mode == "multisym") {
        if (args.size() < 3)
            throw UsageError("poincare multisym expects <parts...> <g>");
        std::vector<int> raw;
        for (std::size_t i = 1; i + 1 < args.size(); ++i)
            raw.push_back(parse_small_int(args[i]));
        const int g = parse_small_int(args.back());
        const Partition p = read_partition(std::move(raw), "multisym partition");
        ojson input;
        input["mode"] = "multisym";
        input["parts"] = partition_json(p);
        input["genus"] = g;
        print_poly(multi_sym_poincare(p, g),
                   "multi symmetric product [" + join_ints(p.parts(), ' ') + "], g=" +
                   std::to_string(g), input, fmt);
        return 0;
    }
    if (mode == "multiproj") {
        if (args.size() < 2)
            throw UsageError("poincare multiproj expects <dims...>");
        std::vector<int> dims;
        for (std::size_t i = 1; i < args.size(); ++i)
            dims.push_back(parse_small_int(args[i]));
        std::vector<int> sorted = dims;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != dims)
            std::cerr << "warning: dimensions reordered to canonical non-increasing form\n";
        ojson input;
        input["mode"] = "multiproj";
        input["dims"] = sorted;
        print_poly(multiproj_poincare(sorted),
                   "multiprojective space [" + join_ints(sorted, ' ') + "]", input,
                   fmt);
        return 0;
    }
    throw UsageError("unknown poincare mode '" + mode + "'");
}

int cmd_distinguish(const std::vector<std::string>& args, Format fmt) {
    std::vector<int> raw_a, raw_b;
    std::optional<int> genus;
    std::size_t i = 0;
    for (; i < args.size() && args[i] != "--"; ++i)
        raw_a.push_back(parse_small_int(args[i]));
    if (i == args.size())
        throw UsageError("distinguish expects '--' between the two partitions");
    ++i;
    for (; i < args.size(); ++i) {
        if (args[i] == "--genus") {
            if (i + 1 >= args.size())
                throw UsageError("--genus expects a value");
            genus = parse_small_int(args[++i]);
        } else {
            raw_b.push_back(parse_small_int(args[i]));
        }
    }
    if (raw_a.empty() || raw_b.empty())
        throw UsageError("distinguish expects two partitions");
    if (!genus)
        throw UsageError("distinguish requires --genus <g>");

    const Partition a = read_partition(std::move(raw_a), "partition A");
    const Partition b = read_partition(std::move(raw_b), "partition B");
    const NonIsoCertificate cert = distinguish(a, b, *genus);

    if (fmt == Format::Json) {
        ojson input;
        input["a"] = partition_json(a);
        input["b"] = partition_json(b);
        input["genus"] = *genus;
        emit_json(make_envelope("distinguish", input, certificate_json(cert)));
    } else if (fmt == Format::Csv) {
        const CertCsvFields f = cert_csv_fields(cert);
        std::cout << "kind,degree,value_a,value_b,dims_a,dims_b\n"
                  << cert_kind_name(cert.kind) << "," << f.degree << "," << f.value_a
                  << "," << f.value_b << "," << f.dims_a << "," << f.dims_b << "\n";
    } else {
        std::cout << "[" << join_ints(a.parts(), ' ') << "] vs ["
                  << join_ints(b.parts(), ' ') << "], g=" << *genus << ":\n  "
                  << cert_human(cert) << "\n";
    }
    return 0;
}

int cmd_classify(const std::vector<std::string>& args, Format fmt) {
    std::optional<int> n, genus;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--genus") {
            if (i + 1 >= args.size())
                throw UsageError("--genus expects a value");
            genus = parse_small_int(args[++i]);
        } else if (!n) {
            n = parse_small_int(args[i]);
        } else {
            throw UsageError("classify expects <n> --genus <g>");
        }
    }
    if (!n || !genus)
        throw UsageError("classify expects <n> --genus <g>");

    const ClassificationReport report = classify_hilbert_schemes(*n, *genus);
    if (fmt == Format::Json) {
        emit_json(make_envelope("classify", ojson{{"n", *n}, {"genus", *genus}},
                                report_json(report)));
    } else if (fmt == Format::Csv) {
        std::cout << "i,j,parts_a,parts_b,kind,degree,value_a,value_b,dims_a,dims_b\n";
        for (const PairCertificate& pc : report.certificates) {
            const CertCsvFields f = cert_csv_fields(pc.cert);
            std::cout << pc.i << "," << pc.j << ","
                      << join_ints(report.partitions[pc.i].parts(), ' ') << ","
                      << join_ints(report.partitions[pc.j].parts(), ' ') << ","
                      << cert_kind_name(pc.cert.kind) << "," << f.degree << ","
                      << f.value_a << "," << f.value_b << "," << f.dims_a << ","
                      << f.dims_b << "\n";
        }
    } else {
        std::cout << "n = " << report.n << ", genus = " << report.genus << ": "
                  << report.count << " pairwise non-isomorphic products ("
                  << report.partitions.size() << " partitions)\n";
        for (const PairCertificate& pc : report.certificates)
            std::cout << "  [" << join_ints(report.partitions[pc.i].parts(), ' ')
                      << "] vs [" << join_ints(report.partitions[pc.j].parts(), ' ')
                      << "]: " << cert_human(pc.cert) << "\n";
    }
    return 0;
}

int cmd_divisor(const std::vector<std::string>& args, Format fmt) {
    if (args.empty())
        throw UsageError("divisor expects slope|thresholds|quotdeg");
    const std::string& mode = args[0];
    if (mode == "slope") {
        if (args.size() != 3)
            throw UsageError("divisor slope expects <r> <n>");
        const int r = parse_small_int(args[1]);
        const long long n = parse_int(args[2]);
        const Slope s = slope({r, n});
        if (fmt == Format::Json) {
            ojson result;
            result["rank"] = r;
            result["degree"] = n;
            result["slope"] = slope_json(s);
            emit_json(make_envelope("divisor slope", ojson{{"rank", r}, {"degree", n}},
                                    std::move(result)));
        } else if (fmt == Format::Csv) {
            std::cout << "key,value\nnumerator," << s.num << "\ndenominator," << s.den
                      << "\nintegral," << (s.is_integral() ? "true" : "false") << "\n";
        } else {
            std::cout << "slope(" << r << ", " << n << ") = " << s.num << "/" << s.den
                      << (s.is_integral() ? " (integral)" : " (not integral)") << "\n";
        }
        return 0;
    }
    if (mode == "thresholds") {
        if (args.size() != 3)
            throw UsageError("divisor thresholds expects <r> <n>");
        const int r = parse_small_int(args[1]);
        const long long n = parse_int(args[2]);
        const Slope s = slope({r, n});
        std::optional<long long> k, wpp_d0;
        if (s.is_integral()) {
            k = n / r;
            wpp_d0 = wpp_threshold(r, *k);
        }
        std::optional<long long> dp_d1;
        if (r == 1)
            dp_d1 = dp_threshold(n);
        if (fmt == Format::Json) {
            ojson result;
            result["rank"] = r;
            result["degree"] = n;
            result["slope"] = slope_json(s);
            if (k) {
                result["wpp"] = ojson{{"k", *k}, {"min_deg_d", *wpp_d0}};
            } else {
                result["wpp"] = nullptr;
            }
            if (dp_d1) {
                result["dp"] = ojson{{"min_deg_d", *dp_d1}};
            } else {
                result["dp"] = nullptr;
            }
            emit_json(make_envelope("divisor thresholds",
                                    ojson{{"rank", r}, {"degree", n}},
                                    std::move(result)));
        } else if (fmt == Format::Csv) {
            std::cout << "key,value\nslope," << s.num << "/" << s.den << "\nintegral,"
                      << (s.is_integral() ? "true" : "false") << "\n";
            if (k)
                std::cout << "wpp_k," << *k << "\nwpp_min_deg_d," << *wpp_d0 << "\n";
            if (dp_d1)
                std::cout << "dp_min_deg_d," << *dp_d1 << "\n";
        } else {
            std::cout << "(r, n) = (" << r << ", " << n << "), slope " << s.num << "/"
                      << s.den << "\n";
            if (k)
                std::cout << "  integral slope k = " << *k
                          << ": constituents Quot^{r(deg D - k)} have the weak point "
                             "property for deg D >= "
                          << *wpp_d0 << "\n";
            else
                std::cout << "  slope not integral: no weak-point-property threshold "
                             "applies\n";
            if (dp_d1)
                std::cout << "  rank one: constituents Sym^{deg D - n}(C) have the "
                             "diagonal property for deg D >= "
                          << *dp_d1 << "\n";
        }
        return 0;
    }
    if (mode == "quotdeg") {
        if (args.size() != 4)
            throw UsageError("divisor quotdeg expects <r> <n> <degD>");
        const int r = parse_small_int(args[1]);
        const long long n = parse_int(args[2]);
        const long long deg_d = parse_int(args[3]);
        const QuotIndex q = quot_constituent(r, n, deg_d);
        if (fmt == Format::Json) {
            ojson result;
            result["rank"] = r;
            result["degree"] = n;
            result["deg_d"] = deg_d;
            result["quot"] = quot_index_json(q);
            emit_json(make_envelope(
                "divisor quotdeg",
                ojson{{"rank", r}, {"degree", n}, {"deg_d", deg_d}}, std::move(result)));
        } else if (fmt == Format::Csv) {
            std::cout << "key,value\ntorsion_degree," << q.torsion_degree
                      << "\nnonempty," << (q.is_nonempty() ? "true" : "false")
                      << "\nwpp," << (q.has_wpp() ? "true" : "false") << "\ndp,"
                      << (q.has_dp() ? "true" : "false") << "\n";
        } else {
            std::cout << "Q^{" << r << "," << n << "}(D), deg D = " << deg_d
                      << ": torsion degree " << q.torsion_degree << "\n"
                      << "  nonempty: " << (q.is_nonempty() ? "yes" : "no")
                      << ", wpp hypotheses: " << (q.has_wpp() ? "yes" : "no")
                      << ", dp: " << (q.has_dp() ? "yes" : "no") << "\n";
        }
        return 0;
    }
    throw UsageError("unknown divisor mode '" + mode + "'");
}

int run(std::vector<std::string> args) {
    Format fmt = Format::Human;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--json") {
            fmt = Format::Json;
            it = args.erase(it);
        } else if (*it == "--csv") {
            fmt = Format::Csv;
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (args.empty()) {
        std::cerr << kUsage;
        return 1;
    }
    const std::string cmd = args.front();
    args.erase(args.begin());
    if (cmd == "partitions")
        return cmd_partitions(args, fmt);
    if (cmd == "betti")
        return cmd_betti(args, fmt);
    if (cmd == "poincare")
        return cmd_poincare(args, fmt);
    if (cmd == "distinguish")
        return cmd_distinguish(args, fmt);
    if (cmd == "classify")
        return cmd_classify(args, fmt);
    if (cmd == "divisor")
        return cmd_divisor(args, fmt);
    throw UsageError("unknown subcommand '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(std::move(args));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Indistinguishable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
