#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "subwords/subwords.hpp"

using namespace subwords;

namespace {

constexpr char kMiddleDot[] = "\xc2\xb7";  // '·', separates arches from the rest

std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw error("cannot read file: " + path);
    return std::move(buffer).str();
}

struct word_options {
    std::string text;
    std::string file;
    std::string alphabet_letters;
    bool json = false;
    CLI::Option* word_opt = nullptr;
    CLI::Option* file_opt = nullptr;
};

void add_word_options(CLI::App* cmd, word_options& o) {
    o.word_opt = cmd->add_option("word", o.text, "the word itself, as raw bytes");
    o.file_opt = cmd->add_option("--file", o.file, "read the word from this file, as raw bytes");
    o.word_opt->excludes(o.file_opt);
    o.file_opt->excludes(o.word_opt);
    cmd->add_option("--alphabet", o.alphabet_letters,
                    "reference alphabet (default: the distinct letters of the word)");
    cmd->add_flag("--json", o.json, "emit JSON");
}

word make_word(word_options const& o) {
    if (!*o.word_opt && !*o.file_opt) throw CLI::RequiredError("word or --file");
    std::string bytes = *o.file_opt ? read_file(o.file) : o.text;
    if (!o.alphabet_letters.empty())
        return word::from_bytes(bytes, alphabet::make(o.alphabet_letters));
    if (bytes.empty())
        throw error("the empty word has no inferable alphabet; pass --alphabet");
    return word::from_bytes(bytes);
}

void print_json_line(nlohmann::json const& j) { std::cout << j.dump() << '\n'; }

void run_factorize(word_options const& o) {
    word u = make_word(o);
    arch_factorization af = arch_factorize(u);
    std::string rest = u.factor(af.rest_start, u.size()).to_string();
    if (o.json) {
        nlohmann::json arches = nlohmann::json::array();
        for (std::size_t k = 0; k < af.arch_count(); ++k) {
            auto [from, to] = af.arch_bounds(k);
            arches.push_back(latin1_widen(u.factor(from, to).to_string()));
        }
        print_json_line({{"alphabet", latin1_widen(u.alpha().letters())},
                         {"arches", arches},
                         {"rest", latin1_widen(rest)},
                         {"iota", af.arch_count()}});
        return;
    }
    std::string out;
    for (std::size_t k = 0; k < af.arch_count(); ++k) {
        if (k > 0) out += '|';
        auto [from, to] = af.arch_bounds(k);
        out += u.factor(from, to).to_string();
    }
    out += kMiddleDot;
    out += rest;
    std::cout << out << '\n';
}

void run_iota(word_options const& o) {
    word u = make_word(o);
    std::size_t value = iota(u);
    if (o.json)
        print_json_line({{"alphabet", latin1_widen(u.alpha().letters())}, {"iota", value}});
    else
        std::cout << value << '\n';
}

void run_zeta(word_options const& o) {
    word u = make_word(o);
    std::size_t value = zeta(u);
    if (o.json)
        print_json_line({{"alphabet", latin1_widen(u.alpha().letters())}, {"zeta", value}});
    else
        std::cout << value << '\n';
}

void run_signature(word_options const& o) {
    std::cout << signature_to_json(signature_of_word(make_word(o))) << '\n';
}

void run_compose(std::string const& left_path, std::string const& right_path) {
    signature left = signature_from_json(read_file(left_path));
    signature right = signature_from_json(read_file(right_path));
    std::cout << signature_to_json(compose(left, right)) << '\n';
}

struct slp_options {
    std::string path;
    bool want_iota = false;
    bool want_zeta = false;
    bool want_length = false;
    bool want_expand = false;
    std::uint64_t max_len = 100'000'000;
    bool json = false;
};

void run_slp(slp_options const& o) {
    int modes = int(o.want_iota) + int(o.want_zeta) + int(o.want_length) + int(o.want_expand);
    if (modes != 1)
        throw CLI::ValidationError("slp",
                                   "choose exactly one of --iota, --zeta, --length, --expand");
    slp program = parse_slp(read_file(o.path));
    if (o.want_length) {
        std::string value = expansion_length(program).to_decimal();
        if (o.json)
            print_json_line({{"length", value}});
        else
            std::cout << value << '\n';
        return;
    }
    if (o.want_expand) {
        word u = expand(program, static_cast<std::size_t>(o.max_len));
        std::string bytes = u.to_string();
        if (o.json) {
            print_json_line({{"word", latin1_widen(bytes)}});
        } else {
            std::fwrite(bytes.data(), 1, bytes.size(), stdout);  // raw, no newline
        }
        return;
    }
    universality_indexes indexes = slp_indexes(program);
    std::string value = (o.want_iota ? indexes.iota : indexes.zeta).to_decimal();
    if (o.json)
        print_json_line({{o.want_iota ? "iota" : "zeta", value}});
    else
        std::cout << value << '\n';
}

struct selftest_options {
    std::uint64_t seed = 20250817;
    std::uint64_t cases = 1000;
    std::size_t max_len = 20;
    std::size_t alphabet_size = 3;
    bool json = false;
};

struct selftest_failure {
    std::uint64_t case_no = 0;
    std::string check;
    std::string text;
    std::string letters;
    std::string detail;
};

// Differential sweep of the fast implementations against the brute-force
// oracles, plus signature and compressed-program round trips.
int run_selftest(selftest_options const& o) {
    std::uint64_t checks = 0;
    selftest_failure failure;
    bool failed = false;

    auto report = [&](std::uint64_t case_no, char const* check, word const& u,
                      std::string detail) {
        failure = {case_no, check, u.to_string(), std::string(u.alpha().letters()),
                   std::move(detail)};
        failed = true;
    };

    std::uint64_t i = 0;
    for (; i < o.cases && !failed; ++i) {
        const std::uint64_t case_seed = o.seed + i;
        word u = testkit::gen_word(case_seed, o.max_len, o.alphabet_size);

        std::size_t fast_iota = iota(u);
        std::size_t brute_iota = testkit::iota_bruteforce(u);
        ++checks;
        if (fast_iota != brute_iota) {
            report(i, "iota vs bruteforce", u,
                   "got " + std::to_string(fast_iota) + ", want " + std::to_string(brute_iota));
            break;
        }

        std::size_t fast_zeta = zeta(u, true);
        std::size_t brute_zeta = testkit::zeta_bruteforce(u);
        ++checks;
        if (fast_zeta != brute_zeta) {
            report(i, "zeta vs bruteforce", u,
                   "got " + std::to_string(fast_zeta) + ", want " + std::to_string(brute_zeta));
            break;
        }

        ++checks;
        if (zeta(u) != fast_zeta) {
            report(i, "zeta shortcut vs exhaustive", u,
                   "got " + std::to_string(zeta(u)) + ", want " + std::to_string(fast_zeta));
            break;
        }

        if (!u.empty()) {
            signature whole = signature_of_word(u);

            ++checks;
            if (!(signature_from_json(signature_to_json(whole)) == whole)) {
                report(i, "signature JSON round trip", u, "serialized form did not parse back");
                break;
            }

            std::mt19937_64 rng(case_seed ^ 0x9e3779b97f4a7c15ull);
            std::size_t cut = 1 + rng() % u.size();
            if (cut < u.size()) {
                word left = u.factor(0, cut);
                word right = u.factor(cut, u.size());
                ++checks;
                if (!(compose(signature_of_word(left), signature_of_word(right)) == whole)) {
                    report(i, "signature composition", u,
                           "compose at cut " + std::to_string(cut) +
                               " differs from the direct signature");
                    break;
                }
            }
        }

        if (i % 10 == 0) {
            slp program = testkit::gen_slp(case_seed, 12, o.alphabet_size, 300);
            word expanded = expand(program, 300);
            universality_indexes got = slp_indexes(program);
            ++checks;
            if (!(got.iota == big_nat(iota(expanded)) &&
                  got.zeta == big_nat(zeta(expanded, true)))) {
                report(i, "slp indexes vs expansion", expanded,
                       "got iota " + got.iota.to_decimal() + " zeta " + got.zeta.to_decimal() +
                           ", want iota " + std::to_string(iota(expanded)) + " zeta " +
                           std::to_string(zeta(expanded, true)));
                break;
            }
        }
    }

    if (o.json) {
        nlohmann::json j{{"cases", failed ? i : o.cases}, {"checks", checks},
                         {"passed", !failed}};
        if (failed) {
            j["case"] = failure.case_no;
            j["check"] = failure.check;
            j["word"] = latin1_widen(failure.text);
            j["alphabet"] = latin1_widen(failure.letters);
            j["detail"] = failure.detail;
        }
        print_json_line(j);
    } else if (failed) {
        std::cout << "counterexample (case " << failure.case_no << ", " << failure.check
                  << "): word \"" << failure.text << "\" over {" << failure.letters
                  << "}: " << failure.detail << '\n';
    } else {
        std::cout << "all " << o.cases << " cases passed (" << checks << " checks)" << '\n';
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subword universality indexes of words and compressed words"};
    app.require_subcommand(1);
    int rc = 0;

    word_options factorize_opts;
    auto* cmd_factorize = app.add_subcommand(
        "factorize", "arch factorization, arches separated by | and the rest by " +
                         std::string(kMiddleDot));
    add_word_options(cmd_factorize, factorize_opts);
    cmd_factorize->callback([&] { run_factorize(factorize_opts); });

    word_options iota_opts;
    auto* cmd_iota = app.add_subcommand("iota", "universality index of a word");
    add_word_options(cmd_iota, iota_opts);
    cmd_iota->callback([&] { run_iota(iota_opts); });

    word_options zeta_opts;
    auto* cmd_zeta = app.add_subcommand("zeta", "circular universality index of a word");
    add_word_options(cmd_zeta, zeta_opts);
    cmd_zeta->callback([&] { run_zeta(zeta_opts); });

    word_options signature_opts;
    auto* cmd_signature =
        app.add_subcommand("signature", "universality signature of a word, as JSON");
    add_word_options(cmd_signature, signature_opts);
    cmd_signature->callback([&] { run_signature(signature_opts); });

    std::string compose_left, compose_right;
    auto* cmd_compose = app.add_subcommand(
        "compose", "signature of a concatenation, from two signature JSON files");
    cmd_compose->add_option("left", compose_left, "signature JSON file of the left word")
        ->required();
    cmd_compose->add_option("right", compose_right, "signature JSON file of the right word")
        ->required();
    cmd_compose->add_flag("--json", "output is always JSON; accepted for symmetry");
    cmd_compose->callback([&] { run_compose(compose_left, compose_right); });

    slp_options slp_opts;
    auto* cmd_slp =
        app.add_subcommand("slp", "operations on a straight-line program file");
    cmd_slp->add_option("path", slp_opts.path, "program file")->required();
    cmd_slp->add_flag("--iota", slp_opts.want_iota, "universality index of the expansion");
    cmd_slp->add_flag("--zeta", slp_opts.want_zeta,
                      "circular universality index of the expansion");
    cmd_slp->add_flag("--length", slp_opts.want_length, "length of the expansion");
    auto* expand_flag =
        cmd_slp->add_flag("--expand", slp_opts.want_expand, "write the expansion itself");
    cmd_slp->add_option("--max-len", slp_opts.max_len, "refuse expansions longer than this")
        ->needs(expand_flag)
        ->capture_default_str();
    cmd_slp->add_flag("--json", slp_opts.json, "emit JSON");
    cmd_slp->callback([&] { run_slp(slp_opts); });

    selftest_options selftest_opts;
    auto* cmd_selftest = app.add_subcommand(
        "selftest", "differential tests of the library against brute-force oracles");
    cmd_selftest->add_option("--seed", selftest_opts.seed, "base seed")->capture_default_str();
    cmd_selftest->add_option("--cases", selftest_opts.cases, "number of cases")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000'000}))
        ->capture_default_str();
    cmd_selftest->add_option("--max-len", selftest_opts.max_len, "longest generated word")
        ->check(CLI::Range(std::size_t{0}, std::size_t{24}))
        ->capture_default_str();
    cmd_selftest
        ->add_option("--alphabet-size", selftest_opts.alphabet_size, "generator alphabet size")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4}))
        ->capture_default_str();
    cmd_selftest->add_flag("--json", selftest_opts.json, "emit JSON");
    cmd_selftest->callback([&] { rc = run_selftest(selftest_opts); });

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return 2;
    } catch (error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
