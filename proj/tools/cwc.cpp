// Command line front end for the constant-weight code workbench.
//
//   cwc bound n d w q            bound report (json unless --format text)
//   cwc construct n d w q        build a code, write the file, verify it
//   cwc verify <file>            recheck a code file against its header
//   cwc table d w                exact values or brackets, n in [3,25], q in [2,10]
//   cwc search-disjoint f n s    s pairwise block-disjoint images of a family
//
// Every report echoes the seed and budget (defaults included), and the same
// command line always produces byte-identical output: worker results are
// merged by a deterministic rule, never by arrival order.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwc/bounds.hpp"
#include "cwc/code_io.hpp"
#include "cwc/disjointify.hpp"
#include "cwc/error.hpp"
#include "cwc/lifting.hpp"
#include "cwc/packings.hpp"
#include "cwc/probabilistic.hpp"
#include "cwc/steiner.hpp"
#include "cwc/words.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 success, 1 verification failure, 2 budget exhausted or
// target missed, 3 bad parameters, 4 I/O or internal failure.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitBadParams = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    int workers = 1;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const char* default_format) {
    opts.format = default_format;
    cmd->add_option("--seed", opts.seed, "seed for randomized searches")->capture_default_str();
    cmd->add_option("--budget", opts.budget, "move budget for randomized searches")
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "write the primary artifact to this path");
    cmd->add_option("--workers", opts.workers,
                    "parallel search restarts on seeds seed..seed+k-1; the best result wins "
                    "(complete first, then largest, then lowest seed)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Two-line header shared by all text reports so reruns are self-describing.
std::string text_header(const std::string& invocation, const CommonOpts& opts) {
    std::ostringstream os;
    os << "# cwc " << invocation << '\n';
    os << "# seed=" << opts.seed << " budget=" << opts.budget << " workers=" << opts.workers
       << '\n';
    return os.str();
}

ordered_json config_json(const std::string& command, const CommonOpts& opts) {
    ordered_json j;
    j["command"] = command;
    j["seed"] = opts.seed;
    j["budget"] = opts.budget;
    j["workers"] = opts.workers;
    return j;
}

// Reports go to stdout unless --out redirects them to a file.
void deliver(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f)
        throw cwc::Error("cannot open " + opts.out + " for writing");
    f << text;
}

// Runs `run` on seeds seed..seed+workers-1 in parallel and keeps the winner
// under `better` (ties go to the lowest seed). Budget exhaustion in one
// worker only disqualifies that worker; any other exception is fatal. When
// nobody finishes, the first worker's budget error is rethrown.
template <typename Result, typename RunFn, typename BetterFn>
Result best_of(int workers, std::uint64_t seed, RunFn run, BetterFn better) {
    if (workers <= 1)
        return run(seed);
    struct Slot {
        std::optional<Result> result;
        std::string budget_message;
        std::exception_ptr fatal;
    };
    std::vector<Slot> slots(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i)
        pool.emplace_back([&slots, &run, seed, i] {
            try {
                slots[i].result = run(seed + static_cast<std::uint64_t>(i));
            } catch (const cwc::BudgetError& e) {
                slots[i].budget_message = e.what();
            } catch (...) {
                slots[i].fatal = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (const auto& s : slots)
        if (s.fatal)
            std::rethrow_exception(s.fatal);
    int best = -1;
    for (int i = 0; i < workers; ++i) {
        if (!slots[i].result)
            continue;
        if (best < 0 || better(*slots[i].result, *slots[best].result))
            best = i;
    }
    if (best < 0) {
        for (const auto& s : slots)
            if (!s.budget_message.empty())
                throw cwc::BudgetError(s.budget_message);
        throw cwc::BudgetError("construct: every worker exhausted its search budget");
    }
    return std::move(*slots[best].result);
}

// ---------------------------------------------------------------- bound --

int run_bound(int n, int d, int w, int q, const CommonOpts& opts) {
    cwc::BoundReport rep = cwc::bound_report(n, d, w, q, false, opts.seed, opts.budget);
    if (opts.format == "json") {
        ordered_json j;
        j["config"] = config_json("bound", opts);
        auto body = ordered_json::parse(cwc::report_json(rep));
        for (auto& [key, value] : body.items())
            j[key] = value;
        deliver(opts, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    os << text_header("bound n=" + std::to_string(n) + " d=" + std::to_string(d) +
                          " w=" + std::to_string(w) + " q=" + std::to_string(q),
                      opts);
    os << "exact " << (rep.exact ? std::to_string(*rep.exact) : std::string("open")) << '\n';
    os << "best-lower " << rep.best_lower << '\n';
    os << "best-upper " << rep.best_upper << '\n';
    for (const auto& v : rep.values) {
        const char* kind = v.kind == cwc::BoundKind::exact   ? "exact"
                           : v.kind == cwc::BoundKind::upper ? "upper"
                                                             : "lower";
        os << kind << ' ' << v.value << ' ' << v.provenance;
        if (!v.rigorous)
            os << " [heuristic]";
        if (!v.assumptions.empty())
            os << "  " << v.assumptions;
        os << '\n';
    }
    deliver(opts, os.str());
    return kExitOk;
}

// ------------------------------------------------------------ construct --

struct ConstructOutcome {
    std::string route;
    cwc::Code code;
    long long target = -1;  // negative when the route has no size target
    bool complete = true;
    // Route-specific report lines, emitted in order.
    std::vector<std::pair<std::string, long long>> extras;
};

ConstructOutcome dispatch_construct(int n, int d, int w, int q, const CommonOpts& opts,
                                    std::optional<int> lambda, std::optional<int> t) {
    ConstructOutcome out;
    if (d == 3 && w == 2) {
        out.route = "n32";
        out.code = cwc::construct_n32(n, q);
        if (auto ev = cwc::exact_value(n, 3, 2, q))
            out.target = ev->value;
        return out;
    }
    auto better_result = [](const cwc::ConstructResult& a, const cwc::ConstructResult& b) {
        return std::make_pair(a.complete, a.code.words.size()) >
               std::make_pair(b.complete, b.code.words.size());
    };
    if (d == 4 && w == 3) {
        out.route = "n43";
        auto r = best_of<cwc::ConstructResult>(
            opts.workers, opts.seed,
            [&](std::uint64_t s) { return cwc::construct_n43(n, q, s, opts.budget); },
            better_result);
        out.code = std::move(r.code);
        out.target = r.target_size;
        out.complete = r.complete;
        return out;
    }
    if (n == 13 && d == 6 && w == 4) {
        out.route = "large13";
        auto r = best_of<cwc::ConstructResult>(
            opts.workers, opts.seed,
            [&](std::uint64_t s) { return cwc::construct_13_6_4(q, s, opts.budget); },
            better_result);
        out.code = std::move(r.code);
        out.target = r.target_size;
        out.complete = r.complete;
        return out;
    }
    if (d == w + 1) {
        // Packing parameter: largest t with 2t <= w+1 and q-1 <= w/t. When
        // even t = 1 is out of range the alphabet is too big for this route
        // and the randomized construction takes over below.
        int auto_t = std::min((w + 1) / 2, q > 1 ? w / (q - 1) : w);
        int chosen = t.value_or(auto_t);
        if (chosen >= 1) {
            out.route = "w1";
            out.extras.emplace_back("t", chosen);
            out.code = best_of<cwc::Code>(
                opts.workers, opts.seed,
                [&](std::uint64_t s) { return cwc::construct_w_plus_1(n, w, q, chosen, s, opts.budget); },
                [](const cwc::Code& a, const cwc::Code& b) { return a.words.size() > b.words.size(); });
            return out;
        }
    }
    out.route = "random";
    auto r = best_of<cwc::ProbabilisticRun>(
        opts.workers, opts.seed,
        [&](std::uint64_t s) { return cwc::probabilistic_construct(n, d, w, q, lambda, s); },
        [](const cwc::ProbabilisticRun& a, const cwc::ProbabilisticRun& b) {
            return a.final.words.size() > b.final.words.size();
        });
    out.extras.emplace_back("lambda", r.lambda);
    out.extras.emplace_back("t", r.t);
    out.extras.emplace_back("conflicts", static_cast<long long>(r.conflicts_found));
    out.extras.emplace_back("deleted", static_cast<long long>(r.deleted));
    out.code = std::move(r.final);
    return out;
}

void append_violations(std::ostringstream& os, const cwc::VerificationReport& rep,
                       std::size_t cap) {
    for (std::size_t i = 0; i < rep.weight_violations.size() && i < cap; ++i)
        os << "weight violation: word " << rep.weight_violations[i] << '\n';
    if (rep.weight_violations.size() > cap)
        os << "weight violations omitted: " << rep.weight_violations.size() - cap << '\n';
    for (std::size_t i = 0; i < rep.distance_violations.size() && i < cap; ++i) {
        const auto& v = rep.distance_violations[i];
        os << "distance violation: words " << v.i << " and " << v.j << " at distance "
           << v.distance << '\n';
    }
    if (rep.distance_violations.size() > cap)
        os << "distance violations omitted: " << rep.distance_violations.size() - cap << '\n';
    for (std::size_t i = 0; i < rep.structure_violations.size() && i < cap; ++i) {
        const auto& v = rep.structure_violations[i];
        os << "structure violation: word " << v.index << ": " << v.reason << '\n';
    }
    if (rep.structure_violations.size() > cap)
        os << "structure violations omitted: " << rep.structure_violations.size() - cap << '\n';
}

ordered_json violations_json(const cwc::VerificationReport& rep, std::size_t cap) {
    ordered_json j;
    j["weight"] = ordered_json::array();
    for (std::size_t i = 0; i < rep.weight_violations.size() && i < cap; ++i)
        j["weight"].push_back(rep.weight_violations[i]);
    j["distance"] = ordered_json::array();
    for (std::size_t i = 0; i < rep.distance_violations.size() && i < cap; ++i) {
        const auto& v = rep.distance_violations[i];
        j["distance"].push_back({{"i", v.i}, {"j", v.j}, {"distance", v.distance}});
    }
    j["structure"] = ordered_json::array();
    for (std::size_t i = 0; i < rep.structure_violations.size() && i < cap; ++i) {
        const auto& v = rep.structure_violations[i];
        j["structure"].push_back({{"word", v.index}, {"reason", v.reason}});
    }
    j["total"] = rep.weight_violations.size() + rep.distance_violations.size() +
                 rep.structure_violations.size();
    return j;
}

int run_construct(int n, int d, int w, int q, const CommonOpts& opts, std::optional<int> lambda,
                  std::optional<int> t) {
    ConstructOutcome outcome = dispatch_construct(n, d, w, q, opts, lambda, t);
    cwc::VerificationReport vrep = cwc::verify_code(outcome.code);

    std::string path = opts.out;
    if (path.empty())
        path = "n" + std::to_string(n) + "_d" + std::to_string(d) + "_w" + std::to_string(w) +
               "_q" + std::to_string(q) + ".code";
    cwc::write_code_file(path, outcome.code);

    if (opts.format == "json") {
        ordered_json j;
        auto cfg = config_json("construct", opts);
        cfg["n"] = n;
        cfg["d"] = d;
        cfg["w"] = w;
        cfg["q"] = q;
        j["config"] = cfg;
        j["route"] = outcome.route;
        for (const auto& [key, value] : outcome.extras)
            j[key] = value;
        j["provenance"] = outcome.code.provenance;
        j["words"] = outcome.code.words.size();
        if (outcome.target >= 0)
            j["target"] = outcome.target;
        j["complete"] = outcome.complete;
        j["valid"] = vrep.valid;
        if (vrep.actual_min_distance)
            j["min_distance"] = *vrep.actual_min_distance;
        else
            j["min_distance"] = nullptr;
        if (!vrep.valid)
            j["violations"] = violations_json(vrep, 100);
        j["file"] = path;
        std::cout << j.dump(2) << '\n';
    } else {
        std::ostringstream os;
        os << text_header("construct n=" + std::to_string(n) + " d=" + std::to_string(d) +
                              " w=" + std::to_string(w) + " q=" + std::to_string(q),
                          opts);
        os << "route " << outcome.route << '\n';
        for (const auto& [key, value] : outcome.extras)
            os << key << ' ' << value << '\n';
        os << "provenance " << outcome.code.provenance << '\n';
        os << "words " << outcome.code.words.size() << '\n';
        if (outcome.target >= 0)
            os << "target " << outcome.target << '\n';
        os << "complete " << yesno(outcome.complete) << '\n';
        os << "valid " << yesno(vrep.valid) << '\n';
        os << "min-distance "
           << (vrep.actual_min_distance ? std::to_string(*vrep.actual_min_distance)
                                        : std::string("-"))
           << '\n';
        if (!vrep.valid)
            append_violations(os, vrep, 25);
        os << "wrote " << path << '\n';
        std::cout << os.str();
    }

    if (!vrep.valid) {
        std::cerr << "error: constructed code failed verification" << '\n';
        return kExitInvalid;
    }
    if (!outcome.complete) {
        std::cerr << "error: construction incomplete: reached " << outcome.code.words.size()
                  << " of target " << outcome.target << " within budget " << opts.budget << '\n';
        return kExitBudget;
    }
    return kExitOk;
}

// --------------------------------------------------------------- verify --

int run_verify(const std::string& file, const CommonOpts& opts) {
    cwc::Code code = cwc::read_code_file(file);
    cwc::VerificationReport rep = cwc::verify_code(code);

    if (opts.format == "json") {
        ordered_json j;
        auto cfg = config_json("verify", opts);
        cfg["file"] = file;
        j["config"] = cfg;
        j["params"] = {{"n", code.params.n},
                       {"d", code.params.d},
                       {"w", code.params.w},
                       {"q", code.params.q}};
        j["words"] = code.words.size();
        j["valid"] = rep.valid;
        if (rep.actual_min_distance)
            j["min_distance"] = *rep.actual_min_distance;
        else
            j["min_distance"] = nullptr;
        j["violations"] = violations_json(rep, 100);
        deliver(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << text_header("verify file=" + file, opts);
        os << "params n=" << code.params.n << " d=" << code.params.d << " w=" << code.params.w
           << " q=" << code.params.q << '\n';
        os << "words " << code.words.size() << '\n';
        os << "valid " << yesno(rep.valid) << '\n';
        os << "min-distance "
           << (rep.actual_min_distance ? std::to_string(*rep.actual_min_distance)
                                       : std::string("-"))
           << '\n';
        append_violations(os, rep, 25);
        deliver(opts, os.str());
    }
    return rep.valid ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------- table --

int run_table(int d, int w, const CommonOpts& opts) {
    constexpr int kNMin = 3, kNMax = 25, kQMin = 2, kQMax = 10;
    struct Cell {
        std::optional<long long> exact;
        long long lower = 0, upper = 0;
        bool failed = false;
    };
    std::vector<std::vector<Cell>> grid;
    for (int n = kNMin; n <= kNMax; ++n) {
        std::vector<Cell> row;
        for (int q = kQMin; q <= kQMax; ++q) {
            Cell cell;
            try {
                if (auto ev = cwc::exact_value(n, d, w, q)) {
                    cell.exact = ev->value;
                } else {
                    auto rep = cwc::bound_report(n, d, w, q);
                    cell.lower = rep.best_lower;
                    cell.upper = rep.best_upper;
                }
            } catch (const cwc::Error&) {
                // Out of integer range for this cell; the rest of the grid
                // is still worth printing.
                cell.failed = true;
            }
            row.push_back(cell);
        }
        grid.push_back(std::move(row));
    }

    auto render = [](const Cell& c) -> std::string {
        if (c.failed)
            return "-";
        if (c.exact)
            return std::to_string(*c.exact);
        return std::to_string(c.lower) + ".." + std::to_string(c.upper);
    };

    if (opts.format == "json") {
        ordered_json j;
        auto cfg = config_json("table", opts);
        cfg["d"] = d;
        cfg["w"] = w;
        cfg["n_min"] = kNMin;
        cfg["n_max"] = kNMax;
        cfg["q_min"] = kQMin;
        cfg["q_max"] = kQMax;
        j["config"] = cfg;
        j["cells"] = ordered_json::array();
        for (int n = kNMin; n <= kNMax; ++n)
            for (int q = kQMin; q <= kQMax; ++q) {
                const Cell& c = grid[n - kNMin][q - kQMin];
                ordered_json e;
                e["n"] = n;
                e["q"] = q;
                if (c.failed)
                    e["exact"] = nullptr;
                else if (c.exact)
                    e["exact"] = *c.exact;
                else {
                    e["lower"] = c.lower;
                    e["upper"] = c.upper;
                }
                j["cells"].push_back(e);
            }
        deliver(opts, j.dump(2) + "\n");
        return kExitOk;
    }

    std::vector<std::size_t> widths(kQMax - kQMin + 1);
    for (int q = kQMin; q <= kQMax; ++q) {
        std::size_t width = std::to_string(q).size();
        for (int n = kNMin; n <= kNMax; ++n)
            width = std::max(width, render(grid[n - kNMin][q - kQMin]).size());
        widths[q - kQMin] = width;
    }
    std::ostringstream os;
    os << text_header("table d=" + std::to_string(d) + " w=" + std::to_string(w), opts);
    os << "# rows n=" << kNMin << ".." << kNMax << ", columns q=" << kQMin << ".." << kQMax
       << "; a single number is exact, lo..hi is the open bracket" << '\n';
    os << "  n";
    for (int q = kQMin; q <= kQMax; ++q) {
        std::string head = "q=" + std::to_string(q);
        os << "  " << std::string(widths[q - kQMin] > head.size() ? widths[q - kQMin] - head.size() : 0, ' ')
           << head;
        widths[q - kQMin] = std::max(widths[q - kQMin], head.size());
    }
    os << '\n';
    for (int n = kNMin; n <= kNMax; ++n) {
        os << std::string(3 - std::min<std::size_t>(3, std::to_string(n).size()), ' ') << n;
        for (int q = kQMin; q <= kQMax; ++q) {
            std::string cell = render(grid[n - kNMin][q - kQMin]);
            os << "  " << std::string(widths[q - kQMin] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    deliver(opts, os.str());
    return kExitOk;
}

// ------------------------------------------------------- search-disjoint --

int run_search_disjoint(const std::string& family, int n, int s, const CommonOpts& opts) {
    cwc::SetSystem base;
    if (family == "sts") {
        base = cwc::steiner_triple_system(n);
    } else if (family == "design13") {
        if (n != 13)
            throw cwc::PreconditionError("search-disjoint: family design13 requires n = 13");
        base = cwc::design_13_4();
    } else {
        throw cwc::PreconditionError("search-disjoint: unknown family '" + family +
                                     "' (expected sts or design13)");
    }
    if (s < 1)
        throw cwc::PreconditionError("search-disjoint: requires s >= 1");

    cwc::DisjointifyOptions dopts;
    dopts.allow_partial = true;
    auto result = best_of<cwc::DisjointifyResult>(
        opts.workers, opts.seed,
        [&](std::uint64_t sd) { return cwc::disjointify(base, s, sd, opts.budget, dopts); },
        [](const cwc::DisjointifyResult& a, const cwc::DisjointifyResult& b) {
            return std::make_pair(a.complete, a.systems.size()) >
                   std::make_pair(b.complete, b.systems.size());
        });

    std::vector<std::string> files;
    if (!opts.out.empty())
        for (std::size_t i = 0; i < result.systems.size(); ++i) {
            std::string path = opts.out + "." + std::to_string(i);
            cwc::write_design_file(path, result.systems[i]);
            files.push_back(path);
        }

    if (opts.format == "json") {
        ordered_json j;
        auto cfg = config_json("search-disjoint", opts);
        cfg["family"] = family;
        cfg["n"] = n;
        cfg["s"] = s;
        j["config"] = cfg;
        j["blocks"] = base.blocks.size();
        j["systems_found"] = result.systems.size();
        j["complete"] = result.complete;
        j["moves_used"] = result.moves_used;
        j["counting_guarantee"] = result.cor2_sufficient;
        if (!files.empty()) {
            j["files"] = files;
        } else {
            j["systems"] = ordered_json::array();
            for (const auto& sys : result.systems)
                j["systems"].push_back(sys.blocks);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::ostringstream os;
        os << text_header("search-disjoint family=" + family + " n=" + std::to_string(n) +
                              " s=" + std::to_string(s),
                          opts);
        os << "blocks " << base.blocks.size() << '\n';
        os << "systems " << result.systems.size() << '\n';
        os << "complete " << yesno(result.complete) << '\n';
        os << "moves-used " << result.moves_used << '\n';
        os << "counting-guarantee " << yesno(result.cor2_sufficient) << '\n';
        for (const auto& path : files)
            os << "wrote " << path << '\n';
        if (files.empty())
            for (std::size_t i = 0; i < result.systems.size(); ++i) {
                os << "system " << i << '\n';
                cwc::write_design(os, result.systems[i]);
            }
        std::cout << os.str();
    }

    if (!result.complete) {
        std::cerr << "error: search budget exhausted after " << result.moves_used
                  << " moves; found " << result.systems.size() << " of " << s
                  << " disjoint systems" << '\n';
        return kExitBudget;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for q-ary constant-weight codes: bounds, constructions, verification"};
    app.require_subcommand(1);

    int n = 0, d = 0, w = 0, q = 0;
    std::string file, family;
    int s = 0;
    std::uint64_t lambda_raw = 0, t_raw = 0;

    CommonOpts bound_opts, construct_opts, verify_opts, table_opts, search_opts;

    auto* cmd_bound = app.add_subcommand("bound", "report every applicable bound for (n,d,w,q)");
    cmd_bound->add_option("n", n, "code length")->required();
    cmd_bound->add_option("d", d, "minimum distance")->required();
    cmd_bound->add_option("w", w, "constant weight")->required();
    cmd_bound->add_option("q", q, "alphabet size")->required();
    add_common(cmd_bound, bound_opts, "json");

    auto* cmd_construct =
        app.add_subcommand("construct", "build an (n,d,w,q) code, write it, and verify it");
    cmd_construct->add_option("n", n, "code length")->required();
    cmd_construct->add_option("d", d, "minimum distance")->required();
    cmd_construct->add_option("w", w, "constant weight")->required();
    cmd_construct->add_option("q", q, "alphabet size")->required();
    add_common(cmd_construct, construct_opts, "text");
    auto* lambda_opt = cmd_construct->add_option(
        "--lambda", lambda_raw, "covering multiplicity for the randomized route (default: auto)");
    auto* t_opt = cmd_construct->add_option(
        "--t", t_raw, "packing strength for the distance w+1 route (default: auto)");

    auto* cmd_verify = app.add_subcommand("verify", "recheck a code file against its own header");
    cmd_verify->add_option("file", file, "code file path")->required();
    add_common(cmd_verify, verify_opts, "text");

    auto* cmd_table =
        app.add_subcommand("table", "exact values or brackets for fixed (d,w) over a grid");
    cmd_table->add_option("d", d, "minimum distance")->required();
    cmd_table->add_option("w", w, "constant weight")->required();
    add_common(cmd_table, table_opts, "text");

    auto* cmd_search = app.add_subcommand(
        "search-disjoint", "search for s pairwise block-disjoint images of a design family");
    cmd_search->add_option("family", family, "design family: sts or design13")->required();
    cmd_search->add_option("n", n, "number of points")->required();
    cmd_search->add_option("s", s, "number of pairwise disjoint copies")->required();
    add_common(cmd_search, search_opts, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*cmd_bound)
            return run_bound(n, d, w, q, bound_opts);
        if (*cmd_construct) {
            std::optional<int> lambda, t;
            if (lambda_opt->count())
                lambda = static_cast<int>(std::min<std::uint64_t>(lambda_raw, 1'000'000'000));
            if (t_opt->count())
                t = static_cast<int>(std::min<std::uint64_t>(t_raw, 1'000'000));
            return run_construct(n, d, w, q, construct_opts, lambda, t);
        }
        if (*cmd_verify)
            return run_verify(file, verify_opts);
        if (*cmd_table)
            return run_table(d, w, table_opts);
        if (*cmd_search)
            return run_search_disjoint(family, n, s, search_opts);
    } catch (const cwc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const cwc::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const cwc::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const cwc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitIo;
}
