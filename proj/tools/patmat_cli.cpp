#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "patmat/analytics.hpp"
#include "patmat/contains.hpp"
#include "patmat/errors.hpp"
#include "patmat/extremal.hpp"
#include "patmat/matrix.hpp"
#include "patmat/oracle.hpp"
#include "patmat/permutation.hpp"
#include "patmat/zigzag.hpp"

using nlohmann::json;
using namespace patmat;

namespace {

std::string slurp(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(spec);
    if (!in) {
        throw format_error("cannot open '" + spec + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

BinaryMatrix matrix_arg(const std::string& spec) {
    return BinaryMatrix::parse(slurp(spec));
}

ZigzagPath path_arg(const std::string& spec) {
    return parse_path(slurp(spec));
}

std::vector<int> parse_values(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) {
            throw format_error("bad subsequence entry '" + item + "' in '" +
                               text + "'");
        }
        out.push_back(value);
    }
    return out;
}

json matrix_json(const BinaryMatrix& a) {
    return json{{"rows", a.rows()},
                {"cols", a.cols()},
                {"ones", a.ones()},
                {"text", a.render()}};
}

json path_json(const ZigzagPath& p) {
    json cells = json::array();
    for (const auto& c : p.cells) {
        cells.push_back({c.row, c.col});
    }
    return json{{"orientation",
                 p.orientation == PathOrientation::RL ? "RL" : "LR"},
                {"complete", p.complete},
                {"length", p.cells.size()},
                {"cells", std::move(cells)}};
}

json positions_json(const std::vector<Position>& cells) {
    json out = json::array();
    for (const auto& c : cells) {
        out.push_back({c.row, c.col});
    }
    return out;
}

std::string cells_line(const std::vector<Position>& cells) {
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(c.row) + ',' + std::to_string(c.col);
    }
    return out;
}

json report_json(const OracleReport& r, bool with_saturation) {
    json j{{"rows", r.rows},
           {"cols", r.cols},
           {"pattern", r.pattern.word()},
           {"exhaustive_max", r.exhaustive_max},
           {"formula_value",
            r.formula_value ? json(*r.formula_value) : json(nullptr)},
           {"formula_conjectured", r.formula_conjectured},
           {"agreement", r.agreement},
           {"witness", matrix_json(r.witness)},
           {"matrices_scanned", r.matrices_scanned}};
    if (with_saturation) {
        j["saturation_checked"] = r.saturation_checked;
        j["saturation_uniform"] = r.saturation_uniform;
        j["sub_bound_maximal"] = r.sub_bound_maximal
                                     ? matrix_json(*r.sub_bound_maximal)
                                     : json(nullptr);
    }
    return j;
}

void print_report(const OracleReport& r, bool with_saturation) {
    std::cout << "pattern " << r.pattern.word() << ", " << r.rows << " x "
              << r.cols << '\n';
    std::cout << "exhaustive max " << r.exhaustive_max << '\n';
    if (r.formula_value) {
        std::cout << "formula " << *r.formula_value
                  << (r.formula_conjectured ? " (conjectured)" : "") << '\n';
        std::cout << "agreement " << (r.agreement ? "yes" : "no") << '\n';
    } else {
        std::cout << "formula none\n";
    }
    std::cout << "matrices scanned " << r.matrices_scanned << '\n';
    if (with_saturation) {
        std::cout << "saturation checked "
                  << (r.saturation_checked ? "yes" : "no") << '\n';
        if (r.saturation_checked) {
            std::cout << "saturation uniform "
                      << (r.saturation_uniform ? "yes" : "no") << '\n';
            if (r.sub_bound_maximal) {
                std::cout << "sub-bound maximal:\n"
                          << r.sub_bound_maximal->render() << '\n';
            }
        }
    }
    std::cout << "witness:\n" << r.witness.render() << '\n';
}

void emit(const json& j, const std::string& format,
          const std::function<void()>& text) {
    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        text();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding (0,1)-matrix toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::string pattern_word;
    std::string matrix_spec;
    std::string path_spec;
    std::string sub_spec;
    int m = 0;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    bool shadow = false;
    bool witnesses = false;
    std::string constraint_word = "none";

    // check PATTERN MATRIX
    auto* cmd_check = app.add_subcommand(
        "check", "report whether a matrix contains a pattern");
    cmd_check->add_option("pattern", pattern_word)->required();
    cmd_check->add_option("matrix", matrix_spec, "matrix file, - for stdin")
        ->required();
    add_format(cmd_check);
    cmd_check->callback([&] {
        Permutation sigma = Permutation::parse(pattern_word);
        BinaryMatrix a = matrix_arg(matrix_spec);
        bool has = contains_pattern_fast(a, sigma);
        emit(json{{"schema", 1},
                  {"command", "check"},
                  {"pattern", sigma.word()},
                  {"contains", has}},
             format, [&] { std::cout << (has ? "contains" : "avoids") << '\n'; });
    });

    // max-ones PATTERN M N
    auto* cmd_max = app.add_subcommand(
        "max-ones", "extremal 1-count among avoiding matrices");
    cmd_max->add_option("pattern", pattern_word)->required();
    cmd_max->add_option("m", m)->required();
    cmd_max->add_option("n", n)->required();
    add_format(cmd_max);
    cmd_max->callback([&] {
        Permutation sigma = Permutation::parse(pattern_word);
        auto formula = max_ones_formula(m, n, sigma);
        if (!formula) {
            throw domain_error("no extremal formula for pattern '" +
                               sigma.word() + "'");
        }
        auto [value, conjectured] = *formula;
        emit(json{{"schema", 1},
                  {"command", "max-ones"},
                  {"pattern", sigma.word()},
                  {"rows", m},
                  {"cols", n},
                  {"value", value},
                  {"conjectured", conjectured}},
             format, [&] {
                 std::cout << value << (conjectured ? " (conjectured)" : "")
                           << '\n';
             });
    });

    // construct PATTERN M N [--seed] [--path FILE] [--shadow]
    auto* cmd_construct = app.add_subcommand(
        "construct", "build a maximal avoiding matrix");
    cmd_construct->add_option("pattern", pattern_word)->required();
    cmd_construct->add_option("m", m)->required();
    cmd_construct->add_option("n", n)->required();
    cmd_construct->add_option("--seed", seed, "seed for randomized choices");
    cmd_construct->add_option("--path", path_spec,
                              "zigzag path file for the 312 builder");
    cmd_construct->add_flag("--shadow", shadow,
                            "use the path-shadow 312 construction");
    add_format(cmd_construct);
    cmd_construct->callback([&] {
        Permutation sigma = Permutation::parse(pattern_word);
        json extra;
        BinaryMatrix a(1, 1);
        if (sigma.word() == "312") {
            ZigzagPath path = path_spec.empty() ? random_lr_path(m, n, seed)
                                                : path_arg(path_spec);
            a = shadow ? construct_312_shadow(m, n, path)
                       : construct_312_maximal(m, n, path, seed);
            extra = path_json(path);
        } else if (sigma.is_identity()) {
            if (shadow) {
                throw domain_error("--shadow applies to the 312 builder only");
            }
            a = construct_canonical_identity_avoiding(m, n, sigma.size());
        } else {
            throw domain_error("construction covers 12...k and 312 patterns");
        }
        json j{{"schema", 1},
               {"command", "construct"},
               {"pattern", sigma.word()},
               {"matrix", matrix_json(a)}};
        if (!extra.is_null()) {
            j["path"] = std::move(extra);
        }
        emit(j, format, [&] {
            std::cout << a.render() << '\n' << "ones " << a.ones() << '\n';
        });
    });

    // saturate PATTERN MATRIX [--seed]
    auto* cmd_saturate = app.add_subcommand(
        "saturate", "greedily add 1s until the matrix is maximal");
    cmd_saturate->add_option("pattern", pattern_word)->required();
    cmd_saturate->add_option("matrix", matrix_spec)->required();
    cmd_saturate->add_option("--seed", seed, "fill-order seed");
    add_format(cmd_saturate);
    cmd_saturate->callback([&] {
        Permutation sigma = Permutation::parse(pattern_word);
        BinaryMatrix a = greedy_saturate(matrix_arg(matrix_spec), sigma, seed);
        emit(json{{"schema", 1},
                  {"command", "saturate"},
                  {"pattern", sigma.word()},
                  {"matrix", matrix_json(a)}},
             format, [&] {
                 std::cout << a.render() << '\n'
                           << "ones " << a.ones() << '\n';
             });
    });

    // decompose MATRIX K
    auto* cmd_decompose = app.add_subcommand(
        "decompose", "peel a maximal 12...k-avoiding matrix into zigzag walks");
    cmd_decompose->add_option("matrix", matrix_spec)->required();
    cmd_decompose->add_option("k", k)->required();
    add_format(cmd_decompose);
    cmd_decompose->callback([&] {
        auto walks = peel_zigzag_decomposition(matrix_arg(matrix_spec), k);
        json jwalks = json::array();
        for (const auto& w : walks) {
            jwalks.push_back(path_json(w));
        }
        emit(json{{"schema", 1},
                  {"command", "decompose"},
                  {"k", k},
                  {"walks", std::move(jwalks)}},
             format, [&] {
                 std::string lengths;
                 for (const auto& w : walks) {
                     if (!lengths.empty()) {
                         lengths += ',';
                     }
                     lengths += std::to_string(w.cells.size());
                 }
                 std::cout << "lengths " << lengths << '\n';
                 for (std::size_t i = 0; i < walks.size(); ++i) {
                     std::cout << "walk " << i + 1 << " ("
                               << (walks[i].complete ? "complete" : "partial")
                               << "): " << cells_line(walks[i].cells) << '\n';
                 }
             });
    });

    // recognize MATRIX
    auto* cmd_recognize = app.add_subcommand(
        "recognize", "test whether the 1s form a single complete zigzag walk");
    cmd_recognize->add_option("matrix", matrix_spec)->required();
    add_format(cmd_recognize);
    cmd_recognize->callback([&] {
        auto walk = recognize_zigzag(matrix_arg(matrix_spec));
        emit(json{{"schema", 1},
                  {"command", "recognize"},
                  {"recognized", walk.has_value()},
                  {"path", walk ? path_json(*walk) : json(nullptr)}},
             format, [&] {
                 if (walk) {
                     std::cout << "zigzag: " << cells_line(walk->cells) << '\n';
                 } else {
                     std::cout << "not a zigzag\n";
                 }
             });
    });

    // crucial PATHFILE
    auto* cmd_crucial = app.add_subcommand(
        "crucial", "crucial and corner 1s of a complete LR walk");
    cmd_crucial->add_option("path", path_spec, "path file, - for stdin")
        ->required();
    add_format(cmd_crucial);
    cmd_crucial->callback([&] {
        auto [crucial, corner] = crucial_and_corner_ones(path_arg(path_spec));
        emit(json{{"schema", 1},
                  {"command", "crucial"},
                  {"crucial", positions_json(crucial)},
                  {"corner", positions_json(corner)}},
             format, [&] {
                 std::cout << "crucial: " << cells_line(crucial) << '\n';
                 std::cout << "corner: " << cells_line(corner) << '\n';
             });
    });

    // decompose-jn N
    auto* cmd_jn = app.add_subcommand(
        "decompose-jn", "split J_n into n pattern-avoiding permutation factors");
    cmd_jn->add_option("n", n)->required();
    add_format(cmd_jn);
    cmd_jn->callback([&] {
        auto factors = decompose_Jn(n);
        json words = json::array();
        for (const auto& p : factors) {
            words.push_back(p.word());
        }
        emit(json{{"schema", 1},
                  {"command", "decompose-jn"},
                  {"n", n},
                  {"factors", std::move(words)}},
             format, [&] {
                 for (const auto& p : factors) {
                     std::cout << p.word() << '\n';
                 }
             });
    });

    // permanent MATRIX [--avoid PATTERN] [--witnesses]
    auto* cmd_permanent = app.add_subcommand(
        "permanent", "count dominated permutation matrices");
    cmd_permanent->add_option("matrix", matrix_spec)->required();
    cmd_permanent->add_option("--avoid", pattern_word,
                              "restrict to permutations avoiding this pattern");
    cmd_permanent->add_flag("--witnesses", witnesses,
                            "list the avoiding permutations");
    add_format(cmd_permanent);
    cmd_permanent->callback([&] {
        BinaryMatrix a = matrix_arg(matrix_spec);
        if (pattern_word.empty()) {
            unsigned long long value = permanent(a);
            emit(json{{"schema", 1},
                      {"command", "permanent"},
                      {"value", value}},
                 format, [&] { std::cout << value << '\n'; });
            return;
        }
        Permutation sigma = Permutation::parse(pattern_word);
        auto report = avoiding_permanent(a, sigma, witnesses);
        json j{{"schema", 1},
               {"command", "permanent"},
               {"avoid", sigma.word()},
               {"value", report.value},
               {"witness_count", report.witness_count}};
        if (report.witnesses) {
            json words = json::array();
            for (const auto& p : *report.witnesses) {
                words.push_back(p.word());
            }
            j["witnesses"] = std::move(words);
        }
        emit(j, format, [&] {
            std::cout << report.value << '\n';
            if (report.witnesses) {
                for (const auto& p : *report.witnesses) {
                    std::cout << p.word() << '\n';
                }
            }
        });
    });

    // enumerate PATTERN N [--witnesses]
    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "count or list the pattern-avoiding permutations of n");
    cmd_enumerate->add_option("pattern", pattern_word)->required();
    cmd_enumerate->add_option("n", n)->required();
    cmd_enumerate->add_flag("--witnesses", witnesses,
                            "list the permutations, lexicographically");
    add_format(cmd_enumerate);
    cmd_enumerate->callback([&] {
        Permutation sigma = Permutation::parse(pattern_word);
        json j{{"schema", 1},
               {"command", "enumerate"},
               {"pattern", sigma.word()},
               {"n", n}};
        if (witnesses) {
            auto all = enumerate_avoiding(n, sigma);
            json words = json::array();
            for (const auto& p : all) {
                words.push_back(p.word());
            }
            j["count"] = all.size();
            j["words"] = std::move(words);
            emit(j, format, [&] {
                std::cout << "count " << all.size() << '\n';
                for (const auto& p : all) {
                    std::cout << p.word() << '\n';
                }
            });
        } else {
            unsigned long long count = count_avoiding(n, sigma);
            j["count"] = count;
            emit(j, format, [&] { std::cout << "count " << count << '\n'; });
        }
    });

    // extend SUB N PATTERN
    auto* cmd_extend = app.add_subcommand(
        "extend", "least avoiding permutation containing a subsequence");
    cmd_extend->add_option("sub", sub_spec,
                           "comma-separated values, e.g. 4,6,1")
        ->required();
    cmd_extend->add_option("n", n)->required();
    cmd_extend->add_option("pattern", pattern_word)->required();
    add_format(cmd_extend);
    cmd_extend->callback([&] {
        Permutation sigma = Permutation::parse(pattern_word);
        auto witness = extend_avoiding(parse_values(sub_spec), n, sigma);
        emit(json{{"schema", 1},
                  {"command", "extend"},
                  {"pattern", sigma.word()},
                  {"n", n},
                  {"witness", witness ? json(witness->word()) : json(nullptr)}},
             format, [&] {
                 std::cout << (witness ? witness->word() : "none") << '\n';
             });
    });

    // support MATRIX
    auto* cmd_support = app.add_subcommand(
        "support", "total support and full indecomposability tests");
    cmd_support->add_option("matrix", matrix_spec)->required();
    add_format(cmd_support);
    cmd_support->callback([&] {
        BinaryMatrix a = matrix_arg(matrix_spec);
        bool ts = is_total_support(a);
        bool fi = is_fully_indecomposable(a);
        emit(json{{"schema", 1},
                  {"command", "support"},
                  {"total_support", ts},
                  {"fully_indecomposable", fi}},
             format, [&] {
                 std::cout << "total support: " << (ts ? "yes" : "no") << '\n';
                 std::cout << "fully indecomposable: " << (fi ? "yes" : "no")
                           << '\n';
             });
    });

    // oracle {max-ones | maximal | conjecture | permanent-search}
    auto* cmd_oracle = app.add_subcommand(
        "oracle", "exhaustive small-instance searches");
    cmd_oracle->require_subcommand(1);

    auto* ora_max = cmd_oracle->add_subcommand(
        "max-ones", "exhaustive extremal count, checked against the formula");
    ora_max->add_option("pattern", pattern_word)->required();
    ora_max->add_option("m", m)->required();
    ora_max->add_option("n", n)->required();
    add_format(ora_max);
    ora_max->callback([&] {
        auto r = brute_max_ones(m, n, Permutation::parse(pattern_word));
        emit(json{{"schema", 1},
                  {"command", "oracle max-ones"},
                  {"report", report_json(r, false)}},
             format, [&] { print_report(r, false); });
    });

    auto* ora_maximal = cmd_oracle->add_subcommand(
        "maximal", "every maximal avoiding matrix, in scan order");
    ora_maximal->add_option("pattern", pattern_word)->required();
    ora_maximal->add_option("m", m)->required();
    ora_maximal->add_option("n", n)->required();
    add_format(ora_maximal);
    ora_maximal->callback([&] {
        auto all = enumerate_maximal(m, n, Permutation::parse(pattern_word));
        json jm = json::array();
        for (const auto& a : all) {
            jm.push_back(matrix_json(a));
        }
        emit(json{{"schema", 1},
                  {"command", "oracle maximal"},
                  {"count", all.size()},
                  {"matrices", std::move(jm)}},
             format, [&] {
                 std::cout << "count " << all.size() << '\n';
                 for (const auto& a : all) {
                     std::cout << '\n' << a.render() << '\n';
                 }
             });
    });

    auto* ora_conj = cmd_oracle->add_subcommand(
        "conjecture", "check the k1...(k-1) extremal bound exhaustively");
    ora_conj->add_option("m", m)->required();
    ora_conj->add_option("n", n)->required();
    ora_conj->add_option("k", k)->required();
    add_format(ora_conj);
    ora_conj->callback([&] {
        auto r = check_conjecture_k1(m, n, k);
        emit(json{{"schema", 1},
                  {"command", "oracle conjecture"},
                  {"report", report_json(r, true)}},
             format, [&] { print_report(r, true); });
    });

    auto* ora_per = cmd_oracle->add_subcommand(
        "permanent-search", "maximize the avoiding permanent over small matrices");
    ora_per->add_option("n", n)->required();
    ora_per->add_option("pattern", pattern_word)->required();
    ora_per
        ->add_option("--constraint", constraint_word,
                     "none, total-support, fully-indecomposable, or "
                     "permutation-avoiding")
        ->check(CLI::IsMember({"none", "total-support", "fully-indecomposable",
                               "permutation-avoiding"}));
    add_format(ora_per);
    ora_per->callback([&] {
        PermanentConstraint constraint = PermanentConstraint::none;
        if (constraint_word == "total-support") {
            constraint = PermanentConstraint::total_support;
        } else if (constraint_word == "fully-indecomposable") {
            constraint = PermanentConstraint::fully_indecomposable;
        } else if (constraint_word == "permutation-avoiding") {
            constraint = PermanentConstraint::permutation_avoiding;
        }
        auto r = search_max_avoiding_permanent(
            n, Permutation::parse(pattern_word), constraint);
        emit(json{{"schema", 1},
                  {"command", "oracle permanent-search"},
                  {"constraint", constraint_word},
                  {"report", report_json(r, false)}},
             format, [&] { print_report(r, false); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
