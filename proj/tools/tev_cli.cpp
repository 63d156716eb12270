// Command line front end: count by any of the three methods (cross-checked
// under --method all), verify the tableau-to-word bijection, list passing
// words, run single-word insertion diagnostics, and export parameter tables.
//
// Exit codes: 0 success, 1 usage / IO, 2 invalid parameters, 3 verification
// or cross-method failure, 4 work bound exceeded.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tev/tev.hpp"

namespace {

using nlohmann::ordered_json;

struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned resolve_threads(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("TEV_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library default: hardware concurrency
}

void check_work_bound(const tev::Params& p, std::uint64_t bound) {
    if (tev::pow_capped(static_cast<std::uint64_t>(p.r) + 1, static_cast<unsigned>(p.g), bound) >
        bound)
        throw tev::work_bound_exceeded("(r+1)^g exceeds the work bound " + std::to_string(bound));
}

std::uint64_t run_method(const tev::Params& p, const std::string& method,
                         const tev::ExecPolicy& policy) {
    if (method == "words") return tev::tev_words(p, policy);
    if (method == "ltableaux") return tev::tev_ltab(p);
    return tev::tev_schubert(p);
}

ordered_json result_json(const tev::Params& p, std::uint64_t tev_value,
                         const std::string& method) {
    ordered_json j;
    j["r"] = p.r;
    j["d"] = p.d;
    j["g"] = p.g;
    j["n"] = p.n;
    j["tev"] = tev_value;
    j["method"] = method;
    return j;
}

std::string csv_header() { return "r,d,g,n,tev\n"; }

std::string csv_row(const tev::Params& p, std::uint64_t tev_value) {
    return std::to_string(p.r) + "," + std::to_string(p.d) + "," + std::to_string(p.g) + "," +
           std::to_string(p.n) + "," + std::to_string(tev_value) + "\n";
}

struct CountOpts {
    int r = 1, d = 1, g = 0;
    std::string method = "all";
    std::string format = "text";
    std::uint64_t work_bound = 100000000;
    unsigned threads = 0;
};

void run_count(const CountOpts& o) {
    const tev::Params p = tev::Params::make(o.g, o.r, o.d);
    check_work_bound(p, o.work_bound);
    const tev::ExecPolicy policy{o.work_bound, resolve_threads(o.threads)};

    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t value = 0;
    if (o.method == "all") {
        const std::uint64_t w = tev::tev_words(p, policy);
        const std::uint64_t l = tev::tev_ltab(p);
        const std::uint64_t s = tev::tev_schubert(p);
        if (w != l || l != s)
            throw verification_error("methods disagree: words=" + std::to_string(w) +
                                     " ltableaux=" + std::to_string(l) +
                                     " schubert=" + std::to_string(s));
        value = w;
    } else {
        value = run_method(p, o.method, policy);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (o.format == "json") {
        std::cout << result_json(p, value, o.method).dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_header() << csv_row(p, value);
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", elapsed);
        std::cout << "r=" << p.r << " d=" << p.d << " g=" << p.g << " n=" << p.n
                  << " tev=" << value << " method=" << o.method << " elapsed=" << buf << "s\n";
    }
}

struct VerifyOpts {
    int r = 1, d = 1, g = 0;
    std::uint64_t work_bound = 100000000;
    unsigned threads = 0;
};

void run_verify(const VerifyOpts& o) {
    const tev::Params p = tev::Params::make(o.g, o.r, o.d);
    check_work_bound(p, o.work_bound);
    const tev::ExecPolicy policy{o.work_bound, resolve_threads(o.threads)};
    const tev::VerifyReport rep = tev::verify_bijection(p, policy);
    if (!rep.ok) {
        std::cout << "verify r=" << p.r << " d=" << p.d << " g=" << p.g << " n=" << p.n
                  << ": FAIL\n"
                  << rep.failure << "\n";
        throw verification_error("bijection verification failed");
    }
    std::cout << "verify r=" << p.r << " d=" << p.d << " g=" << p.g << " n=" << p.n << ": PASS ("
              << rep.elements << " elements matched)\n";
}

struct WordsOpts {
    int r = 1, d = 1, g = 0;
    std::uint64_t limit = 0;  // 0 = unlimited
    std::uint64_t work_bound = 100000000;
};

void run_words(const WordsOpts& o) {
    const tev::Params p = tev::Params::make(o.g, o.r, o.d);
    check_work_bound(p, o.work_bound);
    const std::uint64_t limit = o.limit == 0 ? UINT64_MAX : o.limit;
    tev::for_each_passing_word(
        p, limit,
        [](const tev::Word& w) {
            std::cout << tev::to_string(w) << "\n";
            return true;
        },
        tev::ExecPolicy{o.work_bound, 1});
}

struct RskOpts {
    std::string word;
    int r = 0;  // 0 = infer from the largest letter
};

void run_rsk(const RskOpts& o) {
    tev::Word w;
    try {
        w = tev::parse_word(o.word);
    } catch (const std::invalid_argument& e) {
        throw tev::invalid_params(e.what());
    }
    int maxletter = 1;
    for (int v : w.letters) maxletter = std::max(maxletter, v);
    const int r = o.r > 0 ? o.r : std::max(1, maxletter - 1);
    if (maxletter > r + 1)
        throw tev::invalid_params("letter " + std::to_string(maxletter) +
                                  " exceeds the alphabet {1, ..., r+1}");

    const tev::TableauPair pair = tev::rsk(w);
    const tev::Partition lam = tev::shape(pair.p);
    const tev::Partition conj = lam.conjugate();
    std::cout << "word: " << tev::to_string(w) << "\n";
    std::cout << "shape: " << tev::to_string(lam) << "\n";
    std::cout << "P:\n" << tev::to_string(pair.p);
    std::cout << "Q:\n" << tev::to_string(pair.q);
    std::cout << "I_k:";
    for (int k = 0, acc = 0; k < lam.height(); ++k) {
        acc += lam.parts()[k];
        std::cout << " " << acc;
    }
    std::cout << "\nD_k:";
    for (int k = 0, acc = 0; k < conj.height(); ++k) {
        acc += conj.parts()[k];
        std::cout << " " << acc;
    }
    std::cout << "\n(i,i+1) max:";
    for (int i = 1; i <= r; ++i) std::cout << " i=" << i << ":" << tev::max_ii1_subseq(w, i);
    std::cout << "\n";
}

struct TableOpts {
    int r = 1, max_d = 0, max_g = 0;
    std::string method = "words";
    std::string format = "csv";
    std::string out;
    std::uint64_t work_bound = 100000000;
    unsigned threads = 0;
};

void run_table(const TableOpts& o) {
    if (o.r < 1) throw tev::invalid_params("r must be at least 1");
    if (o.max_d < 0 || o.max_g < 0) throw tev::invalid_params("grid bounds must be nonnegative");
    const tev::ExecPolicy policy{o.work_bound, resolve_threads(o.threads)};

    std::string csv = csv_header();
    ordered_json rows = ordered_json::array();
    for (int d = o.r; d <= o.max_d; d += o.r) {
        for (int g = 0; g <= o.max_g; ++g) {
            const int n = (d / o.r) * (o.r + 1) - g + 1;
            if (n < o.r + 1) continue;
            const tev::Params p = tev::Params::make(g, o.r, d);
            check_work_bound(p, o.work_bound);
            std::uint64_t value = 0;
            if (o.method == "all") {
                const std::uint64_t w = tev::tev_words(p, policy);
                const std::uint64_t l = tev::tev_ltab(p);
                const std::uint64_t s = tev::tev_schubert(p);
                if (w != l || l != s)
                    throw verification_error("methods disagree at r=" + std::to_string(p.r) +
                                             " d=" + std::to_string(d) + " g=" + std::to_string(g));
                value = w;
            } else {
                value = run_method(p, o.method, policy);
            }
            csv += csv_row(p, value);
            rows.push_back(result_json(p, value, o.method));
        }
    }

    const std::string payload = o.format == "json" ? rows.dump(2) + "\n" : csv;
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write output file '" + o.out + "'");
        f << payload;
        if (!f.good()) throw std::runtime_error("error writing output file '" + o.out + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tevelev degrees of projective space by tableau, word and Schubert counts"};
    app.require_subcommand(1);

    CountOpts count_opts;
    auto* count = app.add_subcommand("count", "Compute the degree by one or all methods");
    count->add_option("--r", count_opts.r, "target dimension r")->required();
    count->add_option("--d", count_opts.d, "map degree d")->required();
    count->add_option("--g", count_opts.g, "genus g")->required();
    count->add_option("--method", count_opts.method)
        ->check(CLI::IsMember({"all", "words", "ltableaux", "schubert"}))
        ->capture_default_str();
    count->add_option("--format", count_opts.format)
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    count->add_option("--work-bound", count_opts.work_bound)->capture_default_str();
    count->add_option("--threads", count_opts.threads, "0 = all cores (or TEV_THREADS)");
    count->callback([&] { run_count(count_opts); });

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "Machine-check the tableau-to-word bijection");
    verify->add_option("--r", verify_opts.r)->required();
    verify->add_option("--d", verify_opts.d)->required();
    verify->add_option("--g", verify_opts.g)->required();
    verify->add_option("--work-bound", verify_opts.work_bound)->capture_default_str();
    verify->add_option("--threads", verify_opts.threads);
    verify->callback([&] { run_verify(verify_opts); });

    WordsOpts words_opts;
    auto* words = app.add_subcommand("words", "List the passing words, one per line");
    words->add_option("--r", words_opts.r)->required();
    words->add_option("--d", words_opts.d)->required();
    words->add_option("--g", words_opts.g)->required();
    words->add_option("--limit", words_opts.limit, "0 = no limit");
    words->add_option("--work-bound", words_opts.work_bound)->capture_default_str();
    words->callback([&] { run_words(words_opts); });

    RskOpts rsk_opts;
    auto* rskcmd = app.add_subcommand("rsk", "Insertion diagnostics for one word");
    rskcmd->add_option("--word", rsk_opts.word, "comma-separated letters, e.g. 3,2,1")->required();
    rskcmd->add_option("--r", rsk_opts.r, "alphabet bound r+1 (default: largest letter)");
    rskcmd->callback([&] { run_rsk(rsk_opts); });

    TableOpts table_opts;
    auto* table = app.add_subcommand("table", "Export a (d, g) table for fixed r");
    table->add_option("--r", table_opts.r)->required();
    table->add_option("--max-d", table_opts.max_d)->required();
    table->add_option("--max-g", table_opts.max_g)->required();
    table->add_option("--method", table_opts.method)
        ->check(CLI::IsMember({"all", "words", "ltableaux", "schubert"}))
        ->capture_default_str();
    table->add_option("--format", table_opts.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table->add_option("--out", table_opts.out, "output path (default: stdout)");
    table->add_option("--work-bound", table_opts.work_bound)->capture_default_str();
    table->add_option("--threads", table_opts.threads);
    table->callback([&] { run_table(table_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const tev::invalid_params& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tev::work_bound_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
