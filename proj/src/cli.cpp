#include "fintop/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fintop/errors.hpp"
#include "fintop/insertion.hpp"
#include "fintop/io.hpp"
#include "fintop/oracle.hpp"
#include "fintop/spacegen.hpp"

namespace fintop {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text << "\n";
}

std::vector<Rational> parse_grid(const std::string& csv) {
    std::vector<Rational> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("value grid: empty entry");
        grid.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (grid.empty()) throw ParseError("value grid: no entries");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

RelationKind parse_relation(const std::string& s) {
    if (s == "kernel-vee") return RelationKind::KernelSubVee;
    if (s == "closed-interpolant") return RelationKind::ClosedInterpolant;
    throw ParseError("unknown relation \"" + s +
                     "\" (expected kernel-vee or closed-interpolant)");
}

CutsetPolicy parse_policy(const std::string& s) {
    if (s == "strict") return CutsetPolicy::Strict;
    if (s == "weak") return CutsetPolicy::Weak;
    throw ParseError("unknown cut-set policy \"" + s + "\" (expected strict or weak)");
}

InsertionMode parse_mode(const std::string& s) {
    if (s == "exact") return InsertionMode::Exact;
    if (s == "literal") return InsertionMode::Literal;
    throw ParseError("unknown mode \"" + s + "\" (expected exact or literal)");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

ordered_json rational_json(const Rational& v) {
    if (v.denominator() == 1) return ordered_json(v.numerator());
    return ordered_json(to_string(v));
}

ordered_json rationals_json(const std::vector<Rational>& vs) {
    ordered_json arr = ordered_json::array();
    for (const Rational& v : vs) arr.push_back(rational_json(v));
    return arr;
}

ordered_json pointset_json(const PointSet& s) {
    ordered_json arr = ordered_json::array();
    for (int p : s.points()) arr.push_back(p);
    return arr;
}

// ---- check-space ----------------------------------------------------------

int cmd_check_space(const std::string& space_path, const std::string& format,
                    std::ostream& out) {
    const Topology t = parse_space(read_file(space_path));
    const bool lambda = lambda_sets_open(t);
    const bool ed = is_extremally_disconnected(t);
    const bool normal = is_normal(t);
    const bool ocs = opens_closed_separated(t);
    const bool cos = closeds_open_separated(t);

    if (format == "structured") {
        ordered_json j;
        j["n"] = t.size();
        j["opens"] = t.opens().size();
        j["lambda-sets-open"] = lambda;
        j["extremally-disconnected"] = ed;
        j["normal"] = normal;
        j["opens-closed-separated"] = ocs;
        j["closeds-open-separated"] = cos;
        out << j.dump() << "\n";
        return 0;
    }
    out << "n: " << t.size() << "\n";
    out << "opens: " << t.opens().size() << "\n";
    out << "lambda-sets-open: " << pass_fail(lambda) << "\n";
    out << "extremally-disconnected: " << pass_fail(ed) << "\n";
    out << "normal: " << pass_fail(normal) << "\n";
    out << "opens-closed-separated: " << pass_fail(ocs) << "\n";
    out << "closeds-open-separated: " << pass_fail(cos) << "\n";
    return 0;
}

// ---- classify --------------------------------------------------------------

int cmd_classify(const std::string& space_path, const std::string& fn_path,
                 const std::string& format, std::ostream& out) {
    const Topology t = parse_space(read_file(space_path));
    const FiniteFunction f = parse_function(read_file(fn_path));
    if (f.size() != t.size())
        throw PreconditionError("function carrier does not match the space");
    const ClassFlags c = classify(t, f);

    if (format == "structured") {
        ordered_json j;
        j["values"] = rationals_json(f.values());
        j["usc"] = c.usc;
        j["lsc"] = c.lsc;
        j["uscc"] = c.uscc;
        j["lscc"] = c.lscc;
        j["us-baire-one"] = c.us_baire_one;
        j["ls-baire-one"] = c.ls_baire_one;
        j["contra-continuous"] = c.contra_continuous;
        j["continuous"] = c.continuous;
        out << j.dump() << "\n";
        return 0;
    }
    out << "f: " << f.to_string() << "\n";
    out << "usc: " << yes_no(c.usc) << "\n";
    out << "lsc: " << yes_no(c.lsc) << "\n";
    out << "uscc: " << yes_no(c.uscc) << "\n";
    out << "lscc: " << yes_no(c.lscc) << "\n";
    out << "us-baire-one: " << yes_no(c.us_baire_one) << "\n";
    out << "ls-baire-one: " << yes_no(c.ls_baire_one) << "\n";
    out << "contra-continuous: " << yes_no(c.contra_continuous) << "\n";
    out << "continuous: " << yes_no(c.continuous) << "\n";
    return 0;
}

// ---- insert ----------------------------------------------------------------

ordered_json report_json(const InsertionReport& r) {
    ordered_json j;
    j["mode"] = to_string(r.mode);
    j["policy"] = to_string(r.policy);
    j["relation"] = to_string(r.relation);
    j["status"] = to_string(r.status);
    if (r.h) j["h"] = rationals_json(r.h->values());
    if (r.chain) {
        j["levels"] = rationals_json(r.chain->levels);
        ordered_json sets = ordered_json::array();
        for (const PointSet& s : r.chain->sets) sets.push_back(pointset_json(s));
        j["chain"] = std::move(sets);
    }
    if (r.premise_failure) {
        ordered_json pf;
        pf["i"] = r.premise_failure->i;
        pf["j"] = r.premise_failure->j;
        pf["upper-set"] = pointset_json(r.premise_failure->upper_set);
        pf["lower-set"] = pointset_json(r.premise_failure->lower_set);
        j["premise-failure"] = std::move(pf);
    }
    if (r.no_witness) {
        ordered_json nw;
        nw["gap"] = r.no_witness->gap;
        ordered_json lc = ordered_json::array();
        for (const PointSet& s : r.no_witness->lower_constraints) lc.push_back(pointset_json(s));
        ordered_json uc = ordered_json::array();
        for (const PointSet& s : r.no_witness->upper_constraints) uc.push_back(pointset_json(s));
        nw["lower-constraints"] = std::move(lc);
        nw["upper-constraints"] = std::move(uc);
        nw["self-required"] = r.no_witness->self_required;
        j["no-witness"] = std::move(nw);
    }
    j["bounds-ok"] = r.bounds_ok;
    j["bounds-exact"] = r.bounds_exact;
    j["fibers-closed"] = r.contra_ok;
    j["interval-identity"] = r.identity_ok;
    j["max-overshoot"] = rational_json(r.max_overshoot);
    j["max-undershoot"] = rational_json(r.max_undershoot);
    j["ok"] = r.ok();
    return j;
}

void report_human(const InsertionReport& r, std::ostream& out) {
    out << "mode: " << to_string(r.mode) << "\n";
    out << "policy: " << to_string(r.policy) << "\n";
    out << "relation: " << to_string(r.relation) << "\n";
    out << "status: " << to_string(r.status) << "\n";
    if (r.premise_failure) {
        out << "premise failed at gap pair (" << r.premise_failure->i << ", "
            << r.premise_failure->j << "): upper set "
            << r.premise_failure->upper_set.to_string() << " not related to lower set "
            << r.premise_failure->lower_set.to_string() << "\n";
    }
    if (r.no_witness)
        out << "no chain witness at gap " << r.no_witness->gap << "\n";
    if (r.chain) {
        out << "levels: " << to_string(r.chain->levels) << "\n";
        out << "chain:";
        for (const PointSet& s : r.chain->sets) out << " " << s.to_string();
        out << "\n";
    }
    if (r.h) out << "h: " << r.h->to_string() << "\n";
    if (r.status == InsertStatus::Success) {
        out << "bounds: " << (r.bounds_exact ? "exact" : (r.bounds_ok ? "within-step" : "VIOLATED"))
            << "\n";
        if (!r.bounds_exact) {
            out << "max-overshoot: " << to_string(r.max_overshoot) << "\n";
            out << "max-undershoot: " << to_string(r.max_undershoot) << "\n";
        }
        out << "fibers-closed: " << yes_no(r.contra_ok) << "\n";
        out << "interval-identity: " << yes_no(r.identity_ok) << "\n";
    }
    out << "verdict: " << pass_fail(r.ok()) << "\n";
}

int cmd_insert(const std::string& space_path, const std::string& lower_path,
               const std::string& upper_path, RelationKind relation, CutsetPolicy policy,
               InsertionMode mode, Preset preset, const std::string& out_path,
               const std::string& format, std::ostream& out) {
    const Topology t = parse_space(read_file(space_path));
    const FiniteFunction lower = parse_function(read_file(lower_path));
    const FiniteFunction upper = parse_function(read_file(upper_path));

    const InsertionReport r = insert(t, lower, upper, relation, policy, mode, preset);
    if (format == "structured")
        out << report_json(r).dump() << "\n";
    else
        report_human(r, out);
    if (r.ok() && r.h && !out_path.empty()) write_file(out_path, emit_function(*r.h));
    return r.ok() ? 0 : 1;
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle(const std::string& space_path, const std::string& lower_path,
               const std::string& upper_path, const std::string& cls,
               const std::string& grid_csv, const std::string& format, std::ostream& out) {
    const Topology t = parse_space(read_file(space_path));
    const FiniteFunction lower = parse_function(read_file(lower_path));
    const FiniteFunction upper = parse_function(read_file(upper_path));
    const auto target = target_class_from_string(cls);
    if (!target)
        throw ParseError("unknown class \"" + cls +
                         "\" (expected contra-continuous, continuous, or baire-one)");
    OracleQuery q{t, lower, upper, {}, *target};
    if (!grid_csv.empty()) q.value_grid = parse_grid(grid_csv);
    const OracleResult r = find_insertion(q);

    if (format == "structured") {
        ordered_json j;
        j["class"] = to_string(*target);
        j["enumerated"] = r.enumerated;
        j["witness"] = r.witness ? rationals_json(r.witness->values()) : ordered_json(nullptr);
        out << j.dump() << "\n";
    } else {
        out << "class: " << to_string(*target) << "\n";
        out << "enumerated: " << r.enumerated << "\n";
        out << "witness: " << (r.witness ? r.witness->to_string() : std::string("none")) << "\n";
    }
    return r.witness ? 0 : 1;
}

// ---- sweep -----------------------------------------------------------------

int sweep_ed_necessity(int n, const std::vector<Rational>& grid, std::ostream& out) {
    const auto records = necessity_sweep(n, grid);
    std::size_t ed_count = 0, ed_bad = 0, non_ed_witnessed = 0;
    std::vector<std::size_t> unresolved;
    const NecessityRecord* first_witness = nullptr;
    for (const auto& rec : records) {
        if (rec.extremally_disconnected) {
            ++ed_count;
            if (!rec.all_pairs_insertable) ++ed_bad;
        } else if (rec.witness_pair) {
            ++non_ed_witnessed;
            if (!first_witness) first_witness = &rec;
        } else {
            unresolved.push_back(rec.space_index);
        }
    }
    out << "spaces: " << records.size() << "\n";
    out << "extremally-disconnected: " << ed_count
        << " (insertable everywhere: " << (ed_count - ed_bad) << ")\n";
    out << "non-ed with counterexample pair: " << non_ed_witnessed << "\n";
    if (first_witness) {
        out << "first counterexample: space " << first_witness->space_index << ", lower = "
            << first_witness->witness_pair->first.to_string() << ", upper = "
            << first_witness->witness_pair->second.to_string() << "\n";
    }
    out << "non-ed without counterexample on this grid:";
    if (unresolved.empty()) {
        out << " none\n";
    } else {
        for (std::size_t i : unresolved) out << " " << i;
        out << " (listed for review; a finer grid may separate them)\n";
    }
    const bool pass = ed_bad == 0 && (records.size() == ed_count || non_ed_witnessed > 0);
    out << "verdict: " << pass_fail(pass) << "\n";
    return pass ? 0 : 1;
}

int sweep_corollary(int n, const std::vector<Rational>& grid, Preset preset, std::ostream& out) {
    const bool cor1 = preset == Preset::Cor1;
    const auto spaces = enumerate_topologies(n).spaces;
    const auto fns = all_grid_functions(n, grid);
    std::size_t spaces_hit = 0, pairs = 0, failures = 0;
    std::string first_failure;
    for (std::size_t si = 0; si < spaces.size(); ++si) {
        const Topology& t = spaces[si];
        if (cor1 ? !is_extremally_disconnected(t) : !is_normal(t)) continue;
        ++spaces_hit;
        for (const FiniteFunction& lower : fns) {
            const ClassFlags cl = classify(t, lower);
            if (cor1 ? !cl.uscc : !cl.lscc) continue;
            for (const FiniteFunction& upper : fns) {
                if (!compare_le(lower, upper)) continue;
                const ClassFlags cu = classify(t, upper);
                if (cor1 ? !cu.lscc : !cu.uscc) continue;
                ++pairs;
                const InsertionReport r =
                    insert(t, lower, upper, *preset_relation(preset), CutsetPolicy::Strict,
                           InsertionMode::Exact, preset);
                if (!r.ok()) {
                    ++failures;
                    if (first_failure.empty()) {
                        first_failure = "space " + std::to_string(si) + ", lower = " +
                                        lower.to_string() + ", upper = " + upper.to_string() +
                                        ", status " + to_string(r.status);
                    }
                }
            }
        }
    }
    out << "gate: " << (cor1 ? "extremally-disconnected" : "normal") << " spaces\n";
    out << "spaces: " << spaces_hit << " of " << spaces.size() << "\n";
    out << "pairs: " << pairs << "\n";
    out << "failures: " << failures << "\n";
    if (!first_failure.empty()) out << "first failure: " << first_failure << "\n";
    out << "verdict: " << pass_fail(failures == 0) << "\n";
    return failures == 0 ? 0 : 1;
}

int sweep_remark(int n, const std::vector<Rational>& grid, bool remark1, std::ostream& out) {
    const auto spaces = enumerate_topologies(n).spaces;
    const auto fns = all_grid_functions(n, grid);
    std::size_t spaces_hit = 0, pairs = 0, missing = 0;
    std::string first_missing;
    for (std::size_t si = 0; si < spaces.size(); ++si) {
        const Topology& t = spaces[si];
        if (remark1 ? !is_normal(t) : !is_extremally_disconnected(t)) continue;
        ++spaces_hit;
        for (const FiniteFunction& lower : fns) {
            const ClassFlags cl = classify(t, lower);
            if (remark1 ? !cl.usc : !cl.lsc) continue;
            for (const FiniteFunction& upper : fns) {
                if (!compare_le(lower, upper)) continue;
                const ClassFlags cu = classify(t, upper);
                if (remark1 ? !cu.lsc : !cu.usc) continue;
                ++pairs;
                OracleQuery q{t, lower, upper, grid, TargetClass::Continuous};
                if (!find_insertion(q).witness) {
                    ++missing;
                    if (first_missing.empty()) {
                        first_missing = "space " + std::to_string(si) + ", lower = " +
                                        lower.to_string() + ", upper = " + upper.to_string();
                    }
                }
            }
        }
    }
    out << "gate: " << (remark1 ? "normal spaces, usc lower, lsc upper"
                                : "extremally-disconnected spaces, lsc lower, usc upper")
        << "\n";
    out << "spaces: " << spaces_hit << " of " << spaces.size() << "\n";
    out << "pairs: " << pairs << "\n";
    out << "missing continuous inserter: " << missing << "\n";
    if (!first_missing.empty()) out << "first missing: " << first_missing << "\n";
    out << "verdict: " << pass_fail(missing == 0) << "\n";
    return missing == 0 ? 0 : 1;
}

int sweep_collapse(int n, const std::vector<Rational>& grid, std::ostream& out) {
    const auto spaces = enumerate_topologies(n).spaces;
    const auto fns = all_grid_functions(n, grid);
    std::size_t checked = 0, mismatches = 0;
    std::string first_mismatch;
    for (std::size_t si = 0; si < spaces.size(); ++si) {
        for (const FiniteFunction& f : fns) {
            ++checked;
            const ClassFlags c = classify(spaces[si], f);
            const bool agree = c.us_baire_one == c.uscc && c.ls_baire_one == c.lscc &&
                               c.contra_continuous == c.continuous;
            if (!agree) {
                ++mismatches;
                if (first_mismatch.empty())
                    first_mismatch = "space " + std::to_string(si) + ", f = " + f.to_string();
            }
        }
    }
    out << "checked: " << checked << " (space, function) pairs\n";
    out << "collapse mismatches: " << mismatches << "\n";
    if (!first_mismatch.empty()) out << "first mismatch: " << first_mismatch << "\n";
    out << "verdict: " << pass_fail(mismatches == 0) << "\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_sweep(int n, const std::string& check, const std::string& grid_csv, std::ostream& out) {
    std::vector<Rational> grid;
    if (!grid_csv.empty())
        grid = parse_grid(grid_csv);
    else if (check == "ed-necessity")
        grid = {Rational(0), Rational(1)};
    else
        grid = {Rational(0), Rational(1, 2), Rational(1)};

    out << "check: " << check << "\n";
    out << "n: " << n << "\n";
    out << "grid: " << to_string(grid) << "\n";
    if (check == "ed-necessity") return sweep_ed_necessity(n, grid, out);
    if (check == "cor1") return sweep_corollary(n, grid, Preset::Cor1, out);
    if (check == "cor2") return sweep_corollary(n, grid, Preset::Cor2, out);
    if (check == "remark1") return sweep_remark(n, grid, true, out);
    if (check == "remark2") return sweep_remark(n, grid, false, out);
    if (check == "collapse") return sweep_collapse(n, grid, out);
    throw ParseError("unknown sweep check \"" + check +
                     "\" (expected ed-necessity, cor1, cor2, remark1, remark2, or collapse)");
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(int n, const std::string& out_dir, std::ostream& out) {
    const auto catalog = enumerate_topologies(n);
    out << "count: " << catalog.spaces.size() << "\n";
    if (out_dir.empty()) {
        for (std::size_t i = 0; i < catalog.spaces.size(); ++i)
            out << "space " << i << ": " << emit_space(catalog.spaces[i]) << "\n";
        return 0;
    }
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < catalog.spaces.size(); ++i) {
        std::ostringstream name;
        name << "space-" << std::setw(3) << std::setfill('0') << i << ".json";
        write_file((std::filesystem::path(out_dir) / name.str()).string(),
                   emit_space(catalog.spaces[i]));
    }
    out << "wrote " << catalog.spaces.size() << " files to " << out_dir << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"insertion toolkit for finite topological spaces"};
    app.name("fintop");
    app.require_subcommand(1);

    std::string space_path, lower_path, upper_path, fn_path;
    std::string format = "human";
    std::string relation_s = "kernel-vee", policy_s = "strict", mode_s = "exact",
                preset_s = "raw";
    std::string out_path, class_s = "contra-continuous", grid_csv, check_s, out_dir;
    int n = 0;

    auto* check_space = app.add_subcommand("check-space", "report the space's properties");
    check_space->add_option("space", space_path, "space file (JSON)")->required();
    check_space->add_option("--format", format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* classify_cmd = app.add_subcommand("classify", "classify a function on a space");
    classify_cmd->add_option("space", space_path, "space file (JSON)")->required();
    classify_cmd->add_option("function", fn_path, "function file (JSON)")->required();
    classify_cmd->add_option("--format", format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* insert_cmd =
        app.add_subcommand("insert", "insert a function between lower and upper via the chain engine");
    insert_cmd->add_option("space", space_path, "space file (JSON)")->required();
    insert_cmd->add_option("lower", lower_path, "lower function file")->required();
    insert_cmd->add_option("upper", upper_path, "upper function file")->required();
    insert_cmd->add_option("--relation", relation_s, "kernel-vee or closed-interpolant");
    insert_cmd->add_option("--cutset", policy_s, "strict or weak")
        ->check(CLI::IsMember({"strict", "weak"}));
    insert_cmd->add_option("--mode", mode_s, "exact or literal")
        ->check(CLI::IsMember({"exact", "literal"}));
    insert_cmd->add_option("--preset", preset_s, "raw, cor1, cor2, cor3, or cor4")
        ->check(CLI::IsMember({"raw", "cor1", "cor2", "cor3", "cor4"}));
    insert_cmd->add_option("--out", out_path, "write the inserted function here on success");
    insert_cmd->add_option("--format", format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* oracle_cmd =
        app.add_subcommand("oracle", "brute-force search for an inserted function");
    oracle_cmd->add_option("space", space_path, "space file (JSON)")->required();
    oracle_cmd->add_option("lower", lower_path, "lower function file")->required();
    oracle_cmd->add_option("upper", upper_path, "upper function file")->required();
    oracle_cmd->add_option("--class", class_s,
                           "contra-continuous, continuous, or baire-one");
    oracle_cmd->add_option("--grid", grid_csv,
                           "comma-separated candidate values (default: both functions' values)");
    oracle_cmd->add_option("--format", format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive checks over all spaces on n points");
    sweep_cmd->add_option("--n", n, "carrier size")->required();
    sweep_cmd
        ->add_option("--check", check_s,
                     "ed-necessity, cor1, cor2, remark1, remark2, or collapse")
        ->required();
    sweep_cmd->add_option("--grid", grid_csv, "comma-separated value grid");

    auto* enum_cmd = app.add_subcommand("enumerate", "list every topology on n points");
    enum_cmd->add_option("--n", n, "carrier size")->required();
    enum_cmd->add_option("--out", out_dir, "write one space file per topology into this directory");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check_space) return cmd_check_space(space_path, format, out);
        if (*classify_cmd) return cmd_classify(space_path, fn_path, format, out);
        if (*insert_cmd) {
            const auto preset = preset_from_string(preset_s);
            if (!preset) throw ParseError("unknown preset \"" + preset_s + "\"");
            if (*preset != Preset::Raw && insert_cmd->count("--relation") > 0)
                throw ParseError("--preset pins the relation; drop --relation");
            return cmd_insert(space_path, lower_path, upper_path, parse_relation(relation_s),
                              parse_policy(policy_s), parse_mode(mode_s), *preset, out_path,
                              format, out);
        }
        if (*oracle_cmd)
            return cmd_oracle(space_path, lower_path, upper_path, class_s, grid_csv, format, out);
        if (*sweep_cmd) return cmd_sweep(n, check_s, grid_csv, out);
        if (*enum_cmd) return cmd_enumerate(n, out_dir, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

} // namespace fintop
