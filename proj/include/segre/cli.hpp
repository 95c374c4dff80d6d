#pragma once

// Command line driver.  Exposes the intersection ring, Chern data, sheaf
// cohomology, dependency-curve invariants, and the classification tables
// as subcommands with text, json, and tsv output.
//
// Exit codes: 0 on success (and on a passing verification run); 1 for
// integrality violations, formula failures, and internal errors (and for a
// failing verification run); 2 for unparseable or unsupported input.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segre/bundle_calculus.hpp"
#include "segre/classifier.hpp"
#include "segre/curve_geometry.hpp"
#include "segre/errors.hpp"
#include "segre/expr.hpp"
#include "segre/intersection_ring.hpp"
#include "segre/rational.hpp"

namespace segre {

namespace cli_detail {

using nlohmann::ordered_json;

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

inline Int parse_int(const std::string& text, const std::string& what) {
    try {
        if (text.empty()) throw std::runtime_error("empty");
        return Int(text);
    } catch (const std::exception&) {
        throw domain_error(what + ": expected an integer, got \"" + text + "\"");
    }
}

inline std::pair<Int, Int> parse_pair(const std::string& text, const std::string& what) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 2) {
        throw domain_error(what + ": expected \"a,b\", got \"" + text + "\"");
    }
    return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

inline std::vector<int> parse_factors(const std::string& text) {
    std::vector<int> factors;
    for (const std::string& part : split(text, ',')) {
        Int n = parse_int(part, "--factors");
        if (n < 1 || n > 16) {
            throw invalid_spec_error("--factors: dimensions must lie in 1..16, got " + part);
        }
        factors.push_back(n.convert_to<int>());
    }
    return factors;
}

inline std::string pair_text(const std::pair<Int, Int>& p) {
    return p.first.str() + "," + p.second.str();
}

inline ordered_json pair_json(const std::pair<Int, Int>& p) {
    return ordered_json::array({p.first.str(), p.second.str()});
}

inline ordered_json ranks_json(const RankRange& r) {
    if (r.is_empty()) return ordered_json{{"empty", true}};
    return ordered_json{{"lo", r.lo().str()}, {"hi", r.hi().str()}};
}

inline std::string kind_name(BundleDescription::Kind kind) {
    switch (kind) {
        case BundleDescription::Kind::DirectSumOfLineBundles: return "direct-sum";
        case BundleDescription::Kind::PullbackTangentTwist: return "pullback-tangent";
        case BundleDescription::Kind::UlrichExtension: return "ulrich-extension";
        case BundleDescription::Kind::CompleteIntersectionSerre: return "ci-serre";
        case BundleDescription::Kind::QuotientConstruction: return "quotient-construction";
        case BundleDescription::Kind::Unspecified: return "unspecified";
    }
    return "unknown";
}

inline ordered_json entry_json(const ClassificationEntry& e, bool as_c2) {
    ordered_json j;
    j["c1"] = pair_json(e.c1);
    j["s"] = e.s.str();
    if (as_c2) {
        j["c2"] = pair_json({e.e2, e.e1});
    } else {
        j["bidegree"] = pair_json({e.e1, e.e2});
    }
    j["genus"] = e.genus.str();
    j["ranks"] = ranks_json(e.ranks);
    ordered_json descriptions = ordered_json::array();
    for (const BundleDescription& d : e.descriptions) {
        ordered_json dj;
        dj["kind"] = kind_name(d.kind);
        dj["text"] = to_text(d);
        if (d.applies_to_rank) dj["rank"] = d.applies_to_rank->str();
        if (!d.note.empty()) dj["note"] = d.note;
        if (std::optional<ChernData> chern = d.chern()) dj["chern"] = to_text(*chern);
        descriptions.push_back(dj);
    }
    j["descriptions"] = descriptions;
    j["citation"] = e.citation;
    return j;
}

inline std::string descriptions_text(const ClassificationEntry& e) {
    std::string text;
    for (const BundleDescription& d : e.descriptions) {
        if (!text.empty()) text += "; ";
        text += to_text(d);
    }
    return text;
}

/// Accumulates key/value output and renders it in the chosen format.
class Emitter {
public:
    Emitter(std::string format, std::ostream& out) : format_(std::move(format)), out_(out) {}

    void field(const std::string& key, const std::string& value) {
        keys_.push_back(key);
        json_[key] = value;
        if (format_ == "text") text_ += key + "=" + value + "\n";
    }

    /// A line that stands on its own in text mode (no key= prefix).
    void headline(const std::string& key, const std::string& value) {
        keys_.push_back(key);
        json_[key] = value;
        if (format_ == "text") text_ += value + "\n";
    }

    void finish() {
        if (format_ == "json") {
            out_ << json_.dump(2) << "\n";
        } else if (format_ == "tsv") {
            for (const std::string& key : keys_) {
                out_ << key << "\t" << json_[key].get<std::string>() << "\n";
            }
        } else {
            out_ << text_;
        }
    }

private:
    std::string format_;
    std::ostream& out_;
    ordered_json json_;
    std::vector<std::string> keys_;
    std::string text_;
};

struct BundleOptions {
    std::vector<std::string> lines;
    std::size_t tangent_count = 0;
    std::string rank;
    std::string c1;
    std::string c2 = "0,0";
    std::string c3 = "0";
    std::string twist;
};

inline ChernData build_bundle(const BundleOptions& opt) {
    std::optional<ChernData> acc;
    auto fold = [&acc](const ChernData& piece) {
        acc = acc ? whitney_sum(*acc, piece) : piece;
    };
    if (!opt.rank.empty() || !opt.c1.empty()) {
        if (opt.rank.empty() || opt.c1.empty()) {
            throw domain_error("explicit Chern data needs both --rank and --c1");
        }
        fold(ChernData(parse_int(opt.rank, "--rank"), parse_pair(opt.c1, "--c1"),
                       parse_pair(opt.c2, "--c2"), parse_int(opt.c3, "--c3")));
    }
    for (const std::string& line : opt.lines) {
        auto [a, b] = parse_pair(line, "--line");
        fold(chern_line(a, b));
    }
    for (std::size_t i = 0; i < opt.tangent_count; ++i) fold(chern_pullback_tangent());
    if (!acc) {
        throw domain_error("no bundle given: use --line, --tangent, or --rank with --c1");
    }
    if (!opt.twist.empty()) {
        auto [u, v] = parse_pair(opt.twist, "--twist");
        return twist(*acc, u, v);
    }
    return *acc;
}

inline int cmd_ring(const std::string& expr, const std::string& factors,
                    const std::string& format, std::ostream& out) {
    RingSpec spec = make_ring(parse_factors(factors));
    RingElement value = evaluate_expression(spec, expr);
    Emitter emit(format, out);
    emit.headline("value", to_string(value));
    emit.field("integral", to_string(integrate(value)));
    emit.finish();
    return 0;
}

inline int cmd_chern(const BundleOptions& opt, bool character, const std::string& format,
                     std::ostream& out) {
    ChernData data = build_bundle(opt);
    Emitter emit(format, out);
    emit.headline("chern", to_text(data));
    if (character) emit.field("character", to_string(chern_character(data)));
    emit.finish();
    return 0;
}

inline int cmd_chi(const BundleOptions& opt, const std::string& format, std::ostream& out) {
    ChernData data = build_bundle(opt);
    Int closed = euler_char_closed_form(data);
    Int hrr = euler_char_hrr(data);
    if (closed != hrr) {
        throw error("euler characteristic mismatch: closed form " + closed.str() +
                    " vs Riemann-Roch " + hrr.str());
    }
    Emitter emit(format, out);
    emit.headline("chi", closed.str());
    emit.finish();
    return 0;
}

inline int cmd_cohomology(const std::string& line, int degree, bool degree_given,
                          const std::string& format, std::ostream& out) {
    auto [a, b] = parse_pair(line, "--line");
    Emitter emit(format, out);
    if (degree_given) {
        if (degree < 0) throw domain_error("--i: cohomological degree must be >= 0");
        emit.headline("h^" + std::to_string(degree), kunneth_h(a, b, degree).str());
    } else {
        Int chi = 0;
        for (int i = 0; i <= 3; ++i) {
            Int h = kunneth_h(a, b, i);
            if (i % 2 == 0) {
                chi += h;
            } else {
                chi -= h;
            }
            emit.field("h^" + std::to_string(i), h.str());
        }
        emit.field("chi", chi.str());
    }
    emit.finish();
    return 0;
}

inline int cmd_ci(const std::string& a_text, const std::string& b_text,
                  const std::string& format, std::ostream& out) {
    Int a = parse_int(a_text, "ci type");
    Int b = parse_int(b_text, "ci type");
    CurveData curve = ci_invariants(a, b);
    RankRange ranks = ci_rank_range(a, b);
    Emitter emit(format, out);
    emit.headline("curve", to_text(curve));
    emit.field("degree", segre_degree(curve).str());
    emit.field("ranks", to_string(ranks));
    if (a == 1 && b == 1) {
        std::string dims;
        for (long r = 3; r <= 5; ++r) {
            if (!dims.empty()) dims += " ";
            dims += "r=" + std::to_string(r) + ":" + family_dimension_ci(r).str();
        }
        emit.field("family-dimensions", dims);
    }
    emit.finish();
    return 0;
}

struct CurveOptions {
    std::string s = "1";
    std::string bidegree;
    std::string genus;
    std::string pairing;
    std::string twist;
    bool h0 = false;
    std::string serre;
    bool canonical = false;
};

inline int cmd_curve(const CurveOptions& opt, const std::string& format, std::ostream& out) {
    auto [e1, e2] = parse_pair(opt.bidegree, "--bidegree");
    CurveData curve(parse_int(opt.s, "--s"), e1, e2, parse_int(opt.genus, "--genus"));
    Emitter emit(format, out);
    emit.headline("curve", to_text(curve));
    if (!opt.pairing.empty()) {
        auto [a, b] = parse_pair(opt.pairing, "--pairing");
        emit.field("pairing", pairing_degree(curve, a, b).str());
    }
    if (!opt.twist.empty()) {
        auto [u, v] = parse_pair(opt.twist, "--twist");
        emit.field("twisted-canonical-degree", twisted_canonical_degree(curve, u, v).str());
        if (opt.h0) {
            emit.field("h0", h0_twisted_canonical(curve, u, v, opt.canonical).str());
        }
    } else if (opt.h0) {
        throw domain_error("--h0 needs --twist u,v");
    }
    if (!opt.serre.empty()) {
        std::pair<Int, Int> c1 = parse_pair(opt.serre, "--serre");
        emit.field("ranks", to_string(serre_rank_range(curve, c1, opt.canonical)));
    }
    emit.finish();
    return 0;
}

inline int cmd_classify(const std::string& c1_text, bool as_c2, const std::string& format,
                        std::ostream& out) {
    std::pair<Int, Int> c1 = parse_pair(c1_text, "--c1");
    std::vector<ClassificationEntry> table;
    try {
        table = classify(c1);
    } catch (const unsupported_c1_error&) {
        table = classify_degenerate(c1);  // may throw delegated/unsupported
    }
    if (format == "json") {
        ordered_json j;
        j["c1"] = pair_json(c1);
        ordered_json entries = ordered_json::array();
        for (const ClassificationEntry& e : table) entries.push_back(entry_json(e, as_c2));
        j["entries"] = entries;
        out << j.dump(2) << "\n";
    } else if (format == "tsv") {
        out << "c1\ts\t" << (as_c2 ? "c2" : "bidegree") << "\tgenus\tranks\tdescriptions"
            << "\tcitation\n";
        for (const ClassificationEntry& e : table) {
            std::pair<Int, Int> shown = as_c2 ? std::pair<Int, Int>{e.e2, e.e1}
                                              : std::pair<Int, Int>{e.e1, e.e2};
            out << pair_text(e.c1) << "\t" << e.s.str() << "\t" << pair_text(shown) << "\t"
                << e.genus.str() << "\t" << to_string(e.ranks) << "\t" << descriptions_text(e)
                << "\t" << e.citation << "\n";
        }
    } else {
        for (const ClassificationEntry& e : table) out << to_text(e, as_c2) << "\n";
    }
    return 0;
}

inline int cmd_verify(const std::string& format, std::ostream& out) {
    VerifyReport report = verify_tables();
    if (format == "json") {
        ordered_json j;
        j["overall"] = report.overall_pass ? "PASS" : "FAIL";
        ordered_json rows = ordered_json::array();
        for (const VerifyRow& row : report.rows) {
            ordered_json rj;
            rj["status"] = row.pass ? "PASS" : "FAIL";
            rj["c1"] = pair_json(row.c1);
            rj["s"] = row.s.str();
            rj["bidegree"] = pair_json({row.e1, row.e2});
            rj["expected"] = to_string(row.expected);
            rj["computed"] = row.actual ? to_string(*row.actual) : "missing";
            rj["citation"] = row.citation;
            rows.push_back(rj);
        }
        j["rows"] = rows;
        j["annotations"] = report.annotations;
        out << j.dump(2) << "\n";
    } else if (format == "tsv") {
        for (const VerifyRow& row : report.rows) {
            out << (row.pass ? "PASS" : "FAIL") << "\t" << pair_text(row.c1) << "\t"
                << row.s.str() << "\t" << row.e1.str() << "," << row.e2.str() << "\t"
                << to_string(row.expected) << "\t"
                << (row.actual ? to_string(*row.actual) : "missing") << "\t" << row.citation
                << "\n";
        }
        for (const std::string& note : report.annotations) out << "NOTE\t" << note << "\n";
        out << "OVERALL\t" << (report.overall_pass ? "PASS" : "FAIL") << "\n";
    } else {
        out << to_text(report);
    }
    return report.overall_pass ? 0 : 1;
}

}  // namespace cli_detail

/// Parses args (program name excluded) and runs one subcommand.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    namespace cd = cli_detail;
    CLI::App app{"exact intersection theory and spanned-bundle classification on P^1 x P^2"};
    app.name("segre");
    app.require_subcommand(0, 1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* target) {
        target->add_option("--format", format, "output format: text, json, or tsv")
            ->check(CLI::IsMember({"text", "json", "tsv"}));
    };
    add_format(&app);

    std::function<int()> action;

    std::string ring_expr;
    std::string ring_factors = "1,2";
    CLI::App* ring = app.add_subcommand(
        "ring", "evaluate a polynomial in the truncated intersection ring");
    ring->add_option("expr", ring_expr, "polynomial in t1..tn, e.g. \"(2*t1+t2)^2*t1\"")
        ->required();
    ring->add_option("--factors", ring_factors, "projective factor dimensions (default 1,2)");
    add_format(ring);
    ring->callback([&] {
        action = [&] { return cd::cmd_ring(ring_expr, ring_factors, format, out); };
    });

    cd::BundleOptions chern_opt;
    bool chern_character_flag = false;
    CLI::App* chern = app.add_subcommand("chern", "Chern data of a bundle built from parts");
    chern->add_option("--line", chern_opt.lines, "add a line bundle O(a,b); repeatable");
    chern->add_flag_function("--tangent",
                             [&chern_opt](std::int64_t n) {
                                 chern_opt.tangent_count = static_cast<std::size_t>(n);
                             },
                             "add the pullback of TP^2(-1); repeatable");
    chern->add_option("--rank", chern_opt.rank, "explicit rank (with --c1)");
    chern->add_option("--c1", chern_opt.c1, "explicit first Chern class a,b");
    chern->add_option("--c2", chern_opt.c2, "explicit second Chern class a,b (default 0,0)");
    chern->add_option("--c3", chern_opt.c3, "explicit third Chern class (default 0)");
    chern->add_option("--twist", chern_opt.twist, "tensor by O(s1,s2) after assembly");
    chern->add_flag("--character", chern_character_flag, "also print the Chern character");
    add_format(chern);
    chern->callback([&] {
        action = [&] { return cd::cmd_chern(chern_opt, chern_character_flag, format, out); };
    });

    cd::BundleOptions chi_opt;
    CLI::App* chi = app.add_subcommand(
        "chi", "Euler characteristic by Riemann-Roch, cross-checked against the closed form");
    chi->add_option("--line", chi_opt.lines, "add a line bundle O(a,b); repeatable");
    chi->add_flag_function("--tangent",
                           [&chi_opt](std::int64_t n) {
                               chi_opt.tangent_count = static_cast<std::size_t>(n);
                           },
                           "add the pullback of TP^2(-1); repeatable");
    chi->add_option("--rank", chi_opt.rank, "explicit rank (with --c1)");
    chi->add_option("--c1", chi_opt.c1, "explicit first Chern class a,b");
    chi->add_option("--c2", chi_opt.c2, "explicit second Chern class a,b (default 0,0)");
    chi->add_option("--c3", chi_opt.c3, "explicit third Chern class (default 0)");
    chi->add_option("--twist", chi_opt.twist, "tensor by O(s1,s2) after assembly");
    add_format(chi);
    chi->callback([&] { action = [&] { return cd::cmd_chi(chi_opt, format, out); }; });

    std::string coh_line;
    int coh_degree = 0;
    CLI::App* coh = app.add_subcommand("cohomology", "cohomology of a line bundle O(a,b)");
    coh->add_option("--line", coh_line, "the line bundle O(a,b)")->required();
    CLI::Option* coh_degree_opt =
        coh->add_option("--i", coh_degree, "report a single cohomological degree");
    add_format(coh);
    coh->callback([&] {
        action = [&] {
            return cd::cmd_cohomology(coh_line, coh_degree, coh_degree_opt->count() > 0,
                                      format, out);
        };
    });

    std::string ci_a;
    std::string ci_b;
    CLI::App* ci = app.add_subcommand(
        "ci", "invariants of the complete intersection curve of two (a,b)-divisors");
    ci->add_option("a", ci_a, "first bidegree component")->required();
    ci->add_option("b", ci_b, "second bidegree component")->required();
    add_format(ci);
    ci->callback([&] { action = [&] { return cd::cmd_ci(ci_a, ci_b, format, out); }; });

    cd::CurveOptions curve_opt;
    CLI::App* curve = app.add_subcommand("curve", "invariants of a dependency curve");
    curve->add_option("--s", curve_opt.s, "number of connected components (default 1)");
    curve->add_option("--bidegree", curve_opt.bidegree, "curve bidegree e1,e2")->required();
    curve->add_option("--genus", curve_opt.genus, "arithmetic genus")->required();
    curve->add_option("--pairing", curve_opt.pairing, "degree against O(a,b)");
    curve->add_option("--twist", curve_opt.twist, "degree of omega_C(u,v)");
    curve->add_flag("--h0", curve_opt.h0, "sections of omega_C(u,v) (needs --twist)");
    curve->add_option("--serre", curve_opt.serre,
                      "admissible ranks for bundles with first Chern class a,b");
    curve->add_flag("--canonical", curve_opt.canonical,
                    "certify the relevant twist of omega_C as trivial");
    add_format(curve);
    curve->callback([&] { action = [&] { return cd::cmd_curve(curve_opt, format, out); }; });

    std::string classify_c1;
    bool classify_as_c2 = false;
    CLI::App* classify = app.add_subcommand(
        "classify", "classification table for a first Chern class");
    classify->add_option("--c1", classify_c1, "first Chern class a,b")->required();
    classify->add_flag("--as-c2", classify_as_c2,
                       "present curve classes in second-Chern-class component order");
    add_format(classify);
    classify->callback([&] {
        action = [&] { return cd::cmd_classify(classify_c1, classify_as_c2, format, out); };
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "recompute the classification tables and diff them against the frozen rows");
    add_format(verify);
    verify->callback([&] { action = [&] { return cd::cmd_verify(format, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (dynamic_cast<const CLI::Success*>(&e) != nullptr) {
            return app.exit(e, out, err);
        }
        err << e.what() << "\n";
        err << "run 'segre --help' for usage\n";
        return 2;
    }

    if (!action) {
        out << app.help();
        return 0;
    }

    try {
        return action();
    } catch (const delegated_error& e) {
        err << "unsupported: " << e.what() << "\n";
        err << "see: " << e.citation() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_c1_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_regime_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_degenerate_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const invalid_spec_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const integrality_error& e) {
        err << "integrality error: " << e.what() << "\n";
        return 1;
    } catch (const formula_error& e) {
        err << "formula error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace segre
