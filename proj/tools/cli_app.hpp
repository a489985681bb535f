#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "parastat/parastat.hpp"

namespace parastat::cli {

struct RunConfig {
    int m = 1, n = 1, p = 1;
    int level = 4;
    std::string variant = "pso";
    std::string format; // per-command default
    std::string output; // empty = stdout

    gz::Signature sig() const { return gz::Signature{m, n, p, level}; }
    fock::Variant var() const { return variant == "osp" ? fock::Variant::Osp : fock::Variant::Pso; }
};

inline std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (cfg.output.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw Error("cannot open output file " + cfg.output);
    f << payload;
}

// --- basis ------------------------------------------------------------

inline std::string render_basis(const RunConfig& cfg) {
    gz::Signature sig = cfg.sig();
    gz::Basis basis(sig);
    std::ostringstream os;
    if (cfg.format == "json") {
        os << "{\"m\":" << sig.m << ",\"n\":" << sig.n << ",\"p\":" << sig.p
           << ",\"level_cap\":" << sig.level_cap << ",\"size\":" << basis.size()
           << ",\"patterns\":[";
        for (int i = 0; i < basis.size(); ++i) {
            const auto& pat = basis.pattern(i);
            if (i) os << ",";
            os << "{\"index\":" << i << ",\"level\":" << pat.level() << ",\"rows\":[";
            for (std::size_t r = 0; r < pat.rows().size(); ++r) {
                if (r) os << ",";
                os << "[" << join_ints(pat.rows()[r]) << "]";
            }
            os << "],\"weight\":[";
            auto w = gz::weight(pat, sig);
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (k) os << ",";
                os << "\"" << w[k].str() << "\"";
            }
            os << "]}";
        }
        os << "]}";
    } else if (cfg.format == "csv") {
        os << "index,level,pattern,weight\n";
        for (int i = 0; i < basis.size(); ++i) {
            const auto& pat = basis.pattern(i);
            auto w = gz::weight(pat, sig);
            std::ostringstream ws;
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (k) ws << ",";
                ws << w[k].str();
            }
            os << i << "," << pat.level() << "," << csv_quote(pat.to_text()) << ","
               << csv_quote(ws.str()) << "\n";
        }
    } else {
        os << "# basis m=" << sig.m << " n=" << sig.n << " p=" << sig.p
           << " level_cap=" << sig.level_cap << " size=" << basis.size() << "\n";
        os << "index level pattern weight\n";
        for (int i = 0; i < basis.size(); ++i) {
            const auto& pat = basis.pattern(i);
            auto w = gz::weight(pat, sig);
            std::ostringstream ws;
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (k) ws << ",";
                ws << w[k].str();
            }
            os << i << " " << pat.level() << " " << pat.to_text() << " (" << ws.str() << ")\n";
        }
    }
    return os.str();
}

// --- matrix -----------------------------------------------------------

inline fock::GeneratorLabel parse_generator(const std::string& spec, const RunConfig& cfg) {
    if (spec.size() < 3) throw Error("bad generator spec: " + spec);
    char fam = spec.front(), sg = spec.back();
    if ((fam != 'f' && fam != 'b') || (sg != '+' && sg != '-'))
        throw Error("bad generator spec: " + spec);
    int index = 0;
    try {
        index = std::stoi(spec.substr(1, spec.size() - 2));
    } catch (const std::exception&) {
        throw Error("bad generator spec: " + spec);
    }
    int limit = fam == 'f' ? cfg.m : cfg.n;
    if (index < 1 || index > limit) throw Error("generator index out of range: " + spec);
    return {fam == 'f' ? fock::Family::Parafermion : fock::Family::Paraboson, index,
            sg == '+' ? +1 : -1, cfg.var()};
}

inline std::string render_fock_matrix(const RunConfig& cfg, const std::string& spec,
                                       const std::string& bracket_spec) {
    auto gen = parse_generator(spec, cfg);
    auto basis = std::make_shared<const gz::Basis>(cfg.sig());
    auto mat = fock::generator_matrix(gen, basis);
    std::string label = spec;
    if (!bracket_spec.empty()) {
        auto other = fock::generator_matrix(parse_generator(bracket_spec, cfg), basis);
        mat = fock::bracket(mat, other);
        label = "bracket(" + spec + "," + bracket_spec + ")";
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "row,col,value\n";
        mat.for_each_entry([&](int rw, int c, const RadicalSum& v) {
            os << rw << "," << c << "," << csv_quote(v.to_json()) << "\n";
        });
    } else if (cfg.format == "text") {
        os << "# " << label << " variant=" << cfg.variant << " size=" << basis->size()
           << " degree=" << mat.degree().str() << " level_shift=" << mat.level_shift() << "\n";
        for (int rw = 0; rw < basis->size(); ++rw) {
            for (int c = 0; c < basis->size(); ++c) {
                if (c) os << "\t";
                os << mat.entry(rw, c).to_text();
            }
            os << "\n";
        }
    } else {
        os << "{\"m\":" << cfg.m << ",\"n\":" << cfg.n << ",\"p\":" << cfg.p
           << ",\"level_cap\":" << cfg.level << ",\"generator\":\"" << label << "\",\"variant\":\""
           << cfg.variant << "\",\"size\":" << basis->size() << ",\"degree\":["
           << mat.degree().a1 << "," << mat.degree().a2
           << "],\"level_shift\":" << mat.level_shift() << ",\"entries\":[";
        bool first = true;
        mat.for_each_entry([&](int rw, int c, const RadicalSum& v) {
            if (!first) os << ",";
            first = false;
            os << "{\"row\":" << rw << ",\"col\":" << c << ",\"value\":" << v.to_json() << "}";
        });
        os << "]}";
    }
    return os.str();
}

inline std::string render_defining_matrix(const RunConfig& cfg, const std::string& spec,
                                           const std::string& bracket_spec) {
    auto gen = parse_generator(spec, cfg);
    auto mat = defrep::generator(gen, cfg.m, cfg.n);
    std::string label = spec;
    if (!bracket_spec.empty()) {
        auto other = defrep::generator(parse_generator(bracket_spec, cfg), cfg.m, cfg.n);
        mat = defrep::graded_bracket(mat, other);
        label = "bracket(" + spec + "," + bracket_spec + ")";
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "row,col,value\n";
        for (int i = 1; i <= mat.dim(); ++i)
            for (int j = 1; j <= mat.dim(); ++j)
                if (!mat.at(i, j).is_zero())
                    os << (i - 1) << "," << (j - 1) << "," << csv_quote(mat.at(i, j).to_json())
                       << "\n";
    } else if (cfg.format == "text") {
        os << "# defining " << label << " dim=" << mat.dim() << " degree=" << mat.degree().str()
           << "\n";
        for (int i = 1; i <= mat.dim(); ++i) {
            for (int j = 1; j <= mat.dim(); ++j) {
                if (j > 1) os << "\t";
                os << mat.at(i, j).to_text();
            }
            os << "\n";
        }
    } else {
        os << "{\"m\":" << cfg.m << ",\"n\":" << cfg.n << ",\"generator\":\"" << label
           << "\",\"dimension\":" << mat.dim() << ",\"degree\":[" << mat.degree().a1 << ","
           << mat.degree().a2 << "],\"entries\":[";
        bool first = true;
        for (int i = 1; i <= mat.dim(); ++i)
            for (int j = 1; j <= mat.dim(); ++j)
                if (!mat.at(i, j).is_zero()) {
                    if (!first) os << ",";
                    first = false;
                    os << "{\"row\":" << (i - 1) << ",\"col\":" << (j - 1)
                       << ",\"value\":" << mat.at(i, j).to_json() << "}";
                }
        os << "]}";
    }
    return os.str();
}

// --- verify -----------------------------------------------------------

struct VerifySelection {
    bool all = false;
    bool relations = false, embedding = false, closed_forms = false, defining = false;
    bool counting = false, cartan = false, vacuum = false, phase = false, nilpotent = false;
    bool gtilde_route = false;

    bool any() const {
        return all || relations || embedding || closed_forms || defining || counting || cartan ||
               vacuum || phase || nilpotent || gtilde_route;
    }
};

inline std::vector<Report> run_verify(const RunConfig& cfg, const VerifySelection& selraw) {
    VerifySelection sel = selraw;
    if (sel.all) {
        sel.relations = sel.embedding = sel.counting = sel.cartan = sel.vacuum = sel.phase =
            sel.nilpotent = sel.defining = true;
        if (cfg.m == 1 && cfg.n == 1) sel.closed_forms = true;
    }
    gz::Signature sig = cfg.sig();
    std::vector<Report> reports;
    if (sel.relations) reports.push_back(fock::verify_relations(sig, cfg.var()));
    if (sel.embedding) reports.push_back(fock::verify_gl_embedding(sig));
    if (sel.closed_forms) {
        if (cfg.m != 1 || cfg.n != 1)
            throw Error("the closed-form suite is defined for m = n = 1");
        reports.push_back(fock::m1n1::verify_closed_forms(cfg.p, cfg.level));
    }
    if (sel.defining) {
        reports.push_back(defrep::verify_defining_relations(cfg.m, cfg.n));
        reports.push_back(defrep::verify_even_span_dimension(cfg.m, cfg.n));
        reports.push_back(defrep::verify_jacobi_random(cfg.m, cfg.n, 200, 20240801));
    }
    if (sel.counting) reports.push_back(tableaux::verify_level_dimensions(sig));
    if (sel.cartan) reports.push_back(fock::verify_cartan_recurrence(sig, cfg.var()));
    if (sel.vacuum) reports.push_back(fock::verify_vacuum_adjointness(sig, cfg.var()));
    if (sel.phase) reports.push_back(fock::verify_phase_link(sig));
    if (sel.nilpotent) reports.push_back(fock::verify_nilpotent_witness(sig));
    if (sel.gtilde_route) reports.push_back(fock::verify_twisted_reduced_route(sig));
    return reports;
}

inline std::string render_verify(const RunConfig& cfg, const std::vector<Report>& reports) {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_ok();
    std::ostringstream os;
    if (cfg.format == "text") {
        for (const auto& r : reports) {
            os << r.summary() << "\n";
            for (const auto& c : r.checks())
                if (!c.ok)
                    os << "  VIOLATED " << c.name << " " << c.detail << " :: " << c.counterexample
                       << "\n";
        }
        os << (ok ? "status: ok" : "status: violated") << "\n";
    } else {
        os << "{\"config\":{\"m\":" << cfg.m << ",\"n\":" << cfg.n << ",\"p\":" << cfg.p
           << ",\"level_cap\":" << cfg.level << ",\"variant\":\"" << cfg.variant
           << "\"},\"status\":\"" << (ok ? "ok" : "violated") << "\",\"suites\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) os << ",";
            os << reports[i].to_json();
        }
        os << "]}";
    }
    return os.str();
}

// --- character --------------------------------------------------------

inline std::string render_character(const RunConfig& cfg) {
    gz::Signature sig = cfg.sig();
    std::map<std::vector<int>, long> by_top;
    for (const auto& pat : gz::basis_patterns(sig)) ++by_top[pat.top()];
    struct Row {
        int level;
        std::string partition;
        long dim, patterns;
        bool match;
    };
    std::vector<Row> rows;
    for (int level = 0; level <= sig.level_cap; ++level)
        for (const auto& lam : tableaux::hook_partitions(sig.m, sig.n, level)) {
            if (tableaux::part(lam, 1) > sig.p) continue;
            long dim = tableaux::covariant_dimension(lam, sig.m, sig.n);
            auto top = tableaux::top_row_for_partition(lam, sig.m, sig.n);
            long have = by_top.count(top) ? by_top[top] : 0;
            std::string ptext = lam.empty() ? "()" : "(" + join_ints(lam) + ")";
            rows.push_back({level, ptext, dim, have, dim == have});
        }
    std::ostringstream os;
    if (cfg.format == "json") {
        os << "{\"m\":" << sig.m << ",\"n\":" << sig.n << ",\"p\":" << sig.p
           << ",\"level_cap\":" << sig.level_cap << ",\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) os << ",";
            os << "{\"level\":" << rows[i].level << ",\"partition\":\"" << rows[i].partition
               << "\",\"dimension\":" << rows[i].dim << ",\"patterns\":" << rows[i].patterns
               << ",\"match\":" << (rows[i].match ? "true" : "false") << "}";
        }
        os << "]}";
    } else if (cfg.format == "csv") {
        os << "level,partition,dimension,patterns,match\n";
        for (const auto& r : rows)
            os << r.level << "," << csv_quote(r.partition) << "," << r.dim << "," << r.patterns
               << "," << (r.match ? "true" : "false") << "\n";
    } else {
        os << "level partition dimension patterns match\n";
        for (const auto& r : rows)
            os << r.level << " " << r.partition << " " << r.dim << " " << r.patterns << " "
               << (r.match ? "yes" : "NO") << "\n";
    }
    return os.str();
}

// --- gtable -----------------------------------------------------------

inline std::string render_gtable(const RunConfig& cfg, bool twisted) {
    gz::Signature sig = cfg.sig();
    auto value = [&](int k, const std::vector<int>& top) {
        return twisted ? reduced::reduced_element_twisted(k, top, sig)
                       : reduced::reduced_element(k, top, sig);
    };
    std::ostringstream os;
    if (cfg.format == "json") {
        os << "{\"m\":" << sig.m << ",\"n\":" << sig.n << ",\"p\":" << sig.p
           << ",\"twisted\":" << (twisted ? "true" : "false") << ",\"rows\":[";
        bool first = true;
        for (const auto& top : gz::top_rows(sig))
            for (int k = 1; k <= sig.r(); ++k) {
                if (!first) os << ",";
                first = false;
                os << "{\"top\":[" << join_ints(top) << "],\"k\":" << k
                   << ",\"value\":" << value(k, top).to_json() << "}";
            }
        os << "]}";
    } else if (cfg.format == "text") {
        os << "top k value\n";
        for (const auto& top : gz::top_rows(sig))
            for (int k = 1; k <= sig.r(); ++k)
                os << join_ints(top) << " " << k << " " << value(k, top).to_text() << "\n";
    } else {
        os << "top,k,value\n";
        for (const auto& top : gz::top_rows(sig))
            for (int k = 1; k <= sig.r(); ++k)
                os << csv_quote(join_ints(top)) << "," << k << ","
                   << csv_quote(value(k, top).to_json()) << "\n";
    }
    return os.str();
}

// --- cgc (debug breakdown) ---------------------------------------------

inline std::string render_cgc(const RunConfig& cfg, const std::string& spec,
                              const std::string& source_text) {
    gz::Signature sig = cfg.sig();
    auto gen = parse_generator(spec, cfg);
    gz::GZPattern src = gz::GZPattern::from_text(source_text);
    auto check = gz::validate(src, sig);
    if (!check.ok)
        throw Error("source pattern violates condition " + std::to_string(check.condition));
    const int j = gen.unified_index(sig.m);
    std::ostringstream os;
    os << "# " << spec << " on " << src.to_text() << " (slot " << j << ")\n";
    for (int k = 1; k <= sig.r(); ++k) {
        auto transitions = gen.is_creation() ? iso::creation_transitions(src, j, k, sig)
                                             : iso::annihilation_transitions(src, j, k, sig);
        if (transitions.empty()) continue;
        const auto& reduced_top = gen.is_creation() ? src.top() : transitions.front().source.top();
        auto g = reduced::reduced_element(k, reduced_top, sig);
        os << "k=" << k << " reduced=" << g.to_text() << "\n";
        for (const auto& tr : transitions) {
            std::vector<iso::FactorInfo> fs;
            auto total = iso::cgc(tr, sig, &fs);
            os << "  " << tr.source.to_text() << " -> " << tr.target.to_text()
               << "  cgc=" << total.to_text() << "\n";
            for (const auto& f : fs) {
                if (f.t == 0) {
                    os << "      parity-prefactor = " << f.value.to_text() << "\n";
                } else {
                    os << "      " << iso::case_tag(f.c) << " t=" << f.t << " k=" << f.k
                       << " q=" << f.q << " -> " << f.value.to_text() << "\n";
                }
            }
        }
    }
    return os.str();
}

// --- app --------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact parastatistics Fock representations and their verifiers"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    auto add_common = [&](CLI::App* sub, bool with_variant, const std::string& fmt_default,
                          const std::vector<std::string>& fmts) {
        sub->add_option("--config", config_path, "key = value file; explicit flags win");
        sub->add_option("--m", cfg.m, "number of first-family pairs")->check(CLI::Range(1, 64));
        sub->add_option("--n", cfg.n, "number of second-family pairs")->check(CLI::Range(1, 64));
        sub->add_option("--p", cfg.p, "order of statistics")->check(CLI::Range(1, 1 << 20));
        sub->add_option("--level", cfg.level, "level cap of the truncation")
            ->check(CLI::Range(0, 64));
        if (with_variant)
            sub->add_option("--variant", cfg.variant, "osp or pso")
                ->check(CLI::IsMember({"osp", "pso"}));
        sub->add_option("--format", cfg.format, "output format, default " + fmt_default)
            ->check(CLI::IsMember(fmts));
        sub->add_option("--output", cfg.output, "write to file instead of stdout");
    };
    auto format_or = [&](const char* fallback) {
        if (cfg.format.empty()) cfg.format = fallback;
    };

    auto* basis_cmd = app.add_subcommand("basis", "list the truncated basis with weights");
    add_common(basis_cmd, false, "text", {"text", "json", "csv"});

    auto* matrix_cmd = app.add_subcommand("matrix", "dump one generator matrix");
    std::string gen_spec, bracket_spec;
    bool defining = false;
    matrix_cmd->add_option("generator", gen_spec, "generator spec like f1+ or b2-")->required();
    matrix_cmd->add_flag("--defining", defining, "use the defining matrix realization");
    matrix_cmd->add_option("--bracket", bracket_spec,
                           "dump the graded bracket with this second generator");
    add_common(matrix_cmd, true, "json", {"text", "json", "csv"});

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    VerifySelection sel;
    verify_cmd->add_flag("--all", sel.all, "every suite (except --gtilde-route)");
    verify_cmd->add_flag("--relations", sel.relations, "defining triple relations");
    verify_cmd->add_flag("--embedding", sel.embedding, "embedded gl relations");
    verify_cmd->add_flag("--closed-forms", sel.closed_forms, "closed-form tables (m = n = 1)");
    verify_cmd->add_flag("--defining", sel.defining, "defining matrix realization");
    verify_cmd->add_flag("--counting", sel.counting, "level/tableau dimension counts");
    verify_cmd->add_flag("--cartan", sel.cartan, "anticommutator recurrence");
    verify_cmd->add_flag("--vacuum", sel.vacuum, "vacuum pairing and adjointness");
    verify_cmd->add_flag("--phase", sel.phase, "variant phase link");
    verify_cmd->add_flag("--nilpotent", sel.nilpotent, "mixed raising pair squares to zero");
    verify_cmd->add_flag("--gtilde-route", sel.gtilde_route,
                         "literal twisted-reduced route comparison (known to disagree)");
    add_common(verify_cmd, true, "json", {"text", "json"});

    auto* character_cmd = app.add_subcommand("character", "level/partition dimension table");
    add_common(character_cmd, false, "text", {"text", "json", "csv"});

    auto* gtable_cmd = app.add_subcommand("gtable", "reduced matrix element tables");
    bool twisted = false;
    gtable_cmd->add_flag("--twisted", twisted, "sign-twisted elements");
    add_common(gtable_cmd, false, "csv", {"text", "json", "csv"});

    auto* cgc_cmd = app.add_subcommand("cgc", "factor-by-factor coupling breakdown");
    std::string cgc_gen, cgc_source;
    cgc_cmd->add_option("--gen", cgc_gen, "generator spec")->required();
    cgc_cmd->add_option("--source", cgc_source, "source pattern, rows as a,b/c")->required();
    add_common(cgc_cmd, false, "text", {"text"});

    // merge an optional key = value file: absent flags are injected, explicit
    // flags win by staying first
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
        if (path.empty()) continue;
        std::ifstream f(path);
        if (!f) {
            err << "error: cannot read config file " << path << "\n";
            return 2;
        }
        std::string line;
        while (std::getline(f, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t\r"));
                auto last = s.find_last_not_of(" \t\r");
                s.erase(last == std::string::npos ? 0 : last + 1);
                return s;
            };
            std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty()) continue;
            std::string flag = "--" + key;
            bool present = false;
            for (const auto& a : args)
                if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
            if (!present) {
                args.push_back(flag);
                args.push_back(value);
            }
        }
        break;
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*basis_cmd) {
            format_or("text");
            emit(cfg, out, render_basis(cfg));
        } else if (*matrix_cmd) {
            format_or("json");
            emit(cfg, out, defining ? render_defining_matrix(cfg, gen_spec, bracket_spec)
                                    : render_fock_matrix(cfg, gen_spec, bracket_spec));
        } else if (*verify_cmd) {
            format_or("json");
            if (!sel.any()) {
                err << "verify: select at least one suite (e.g. --all)\n";
                return 2;
            }
            auto reports = run_verify(cfg, sel);
            emit(cfg, out, render_verify(cfg, reports));
            for (const auto& r : reports)
                if (!r.all_ok()) return 1;
        } else if (*character_cmd) {
            format_or("text");
            emit(cfg, out, render_character(cfg));
        } else if (*gtable_cmd) {
            format_or("csv");
            emit(cfg, out, render_gtable(cfg, twisted));
        } else if (*cgc_cmd) {
            format_or("text");
            emit(cfg, out, render_cgc(cfg, cgc_gen, cgc_source));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace parastat::cli
