// Command-line front end: every subcommand prints a machine-readable JSON
// report to stdout and a short human summary to stderr. Exit code 0 means
// no property violated and no error; verification failures exit 1, errors 2.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbs/bounds.hpp"
#include "gbs/gbs_code.hpp"
#include "gbs/io.hpp"
#include "gbs/localize.hpp"
#include "gbs/regions.hpp"
#include "gbs/rng.hpp"
#include "gbs/search.hpp"

using nlohmann::json;
using namespace gbs;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json input_entry(const std::string& path, const std::string& content) {
    return {{"path", path}, {"fnv1a64", fnv1a64_hex(content)}};
}

void emit(const json& report, const std::string& summary) {
    std::cout << report.dump(2) << std::endl;
    std::cerr << summary << std::endl;
}

json theory_json(const TheoreticalParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"d_row", p.d_row}, {"d_col", p.d_col}, {"d", p.d}};
}

json bounds_json(const BoundReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"d_row", r.d_row},
            {"d_col", r.d_col},
            {"d", r.d},
            {"square_bound", {{"ok", r.square_bound_ok},
                              {"slack_left", r.square_slack_left},
                              {"slack_right", r.square_slack_right}}},
            {"refined_bound", {{"ok", r.refined_bound_ok}, {"slack", r.refined_slack}}},
            {"rate_bound", {{"ok", r.rate_bound_ok}, {"slack", r.rate_slack}}}};
}

json distance_json(const DistanceResult& d) {
    json j;
    j["mode"] = d.mode == DistanceMode::full ? "full" : "bounded";
    if (d.value) j["value"] = *d.value;
    j["certified_lower_bound"] = d.certified_lower_bound;
    if (d.witness) j["witness"] = d.witness->to_string();
    return j;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& matrix_path, const std::string& oracle, std::size_t w_max_flag,
                std::uint64_t cap) {
    const auto start = Clock::now();
    const std::string content = read_file(matrix_path);
    const BitMatrix a = parse_matrix(content);

    json report;
    report["command"] = "analyze";
    report["inputs"] = json::array({input_entry(matrix_path, content)});
    report["kernels"] = kernels::active().name;
    report["cap"] = cap;

    const TheoreticalParams theory = theoretical_params(a, cap);
    report["theory"] = theory_json(theory);
    report["bounds"] = bounds_json(check_bounds(a, cap));

    bool mismatch = false;
    if (oracle != "none") {
        GBSCode code = build_gbs(a);
        report["derived"] = {{"dim_s", code.code.stabilizer.dim()},
                             {"k", code.code.k},
                             {"g", code.code.g}};
        if (code.code.k != theory.k) mismatch = true;
        DistanceResult d;
        if (oracle == "full") {
            d = distance_full(code.code, cap);
            if (*d.value != theory.d) mismatch = true;
        } else {
            const std::size_t w_max = w_max_flag ? w_max_flag : theory.d;
            d = distance_bounded(code.code, w_max);
            if (!d.value || *d.value != theory.d) mismatch = true;
        }
        report["oracle"] = distance_json(d);
        report["oracle"]["matches_theory"] = !mismatch;
    }
    report["timing_ms"] = ms_since(start);

    if (mismatch) {
        emit(report, "analyze: ORACLE MISMATCH: derived parameters disagree with the oracle");
        return 2;
    }
    emit(report, "analyze: [n=" + std::to_string(theory.n) + ", k=" + std::to_string(theory.k) +
                     ", d=" + std::to_string(theory.d) + "]" +
                     (oracle != "none" ? " oracle-confirmed" : ""));
    return 0;
}

// --------------------------------------------------------------- localize

int run_localize(const std::string& matrix_path, bool pad, const std::string& out_path) {
    const auto start = Clock::now();
    const std::string content = read_file(matrix_path);
    const BitMatrix a = parse_matrix(content);

    GBSCode gbs_code = build_gbs(a);
    LocalCode local = localize(gbs_code);
    const std::size_t before_pad = local.code.n;
    if (pad) local = pad_to(local, 2 * a.rows() * a.cols());

    std::size_t x_chain = 0, z_chain = 0, padding = 0;
    for (const auto& rec : local.ancillas) {
        if (rec.kind == AncillaKind::x_chain) ++x_chain;
        if (rec.kind == AncillaKind::z_chain) ++z_chain;
        if (rec.kind == AncillaKind::padding) ++padding;
    }

    json report;
    report["command"] = "localize";
    report["inputs"] = json::array({input_entry(matrix_path, content)});
    report["kernels"] = kernels::active().name;
    report["n_data"] = gbs_code.code.n;
    report["n_before_pad"] = before_pad;
    report["n"] = local.code.n;
    report["ancillas"] = {{"x_chain", x_chain}, {"z_chain", z_chain}, {"padding", padding}};
    report["k"] = local.code.k;
    report["check_locality"] = check_locality(local);
    report["code"] = code_to_json(local.code, true);

    if (!out_path.empty()) {
        save_code(out_path, local.code);
        report["out"] = out_path;
    }
    report["timing_ms"] = ms_since(start);

    if (!report["check_locality"].get<bool>()) {
        emit(report, "localize: LOCALITY CHECK FAILED");
        return 2;
    }
    emit(report, "localize: " + std::to_string(gbs_code.code.n) + " data qubits -> " +
                     std::to_string(local.code.n) + " total, k=" + std::to_string(local.code.k));
    return 0;
}

// ----------------------------------------------------------------- verify

BitMatrix matrix_from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask) {
    BitMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if ((mask >> (r * cols + c)) & 1u) a.set(r, c, true);
    return a;
}

PauliOp random_pauli(std::size_t n, Xoshiro256& rng) {
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.x.set(q, rng.next_bit());
        p.z.set(q, rng.next_bit());
    }
    return p;
}

SubsystemCode random_gauge_code(std::size_t n, Xoshiro256& rng) {
    const std::size_t count = 1 + rng.below(2 * n);
    std::vector<PauliOp> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_pauli(n, rng));
    return derive_code(n, std::move(gens));
}

Region random_region(std::size_t n, Xoshiro256& rng) {
    Region m(n);
    for (std::size_t q = 0; q < n; ++q)
        if (rng.next_bit()) m.add(q);
    return m;
}

int finish_verify(json& report, const std::string& scope, std::size_t instances,
                  std::size_t failures, Clock::time_point start) {
    report["instances"] = instances;
    report["failures"] = failures;
    report["pass"] = failures == 0;
    report["timing_ms"] = ms_since(start);
    emit(report, "verify " + scope + ": " + std::to_string(instances) + " instances, " +
                     std::to_string(failures) + " failures");
    return failures == 0 ? 0 : 1;
}

int run_verify_theorem2(std::size_t m_max, std::uint64_t cap) {
    const auto start = Clock::now();
    json report;
    report["command"] = "verify";
    report["scope"] = "theorem2-exhaustive";
    report["m"] = m_max;
    report["cap"] = cap;

    std::size_t instances = 0, failures = 0;
    for (std::size_t rows = 1; rows <= m_max; ++rows) {
        for (std::size_t cols = 1; cols <= m_max; ++cols) {
            const std::uint64_t total = std::uint64_t(1) << (rows * cols);
            for (std::uint64_t mask = 1; mask < total; ++mask) {
                const BitMatrix a = matrix_from_mask(rows, cols, mask);
                const TheoreticalParams theory = theoretical_params(a, cap);
                const GBSCode code = build_gbs(a);
                ++instances;
                if (code.code.k != theory.k || *distance_full(code.code, cap).value != theory.d)
                    ++failures;
            }
        }
    }
    return finish_verify(report, "theorem2-exhaustive", instances, failures, start);
}

int run_verify_cleaning(std::size_t n_max, std::size_t trials, std::uint64_t seed) {
    const auto start = Clock::now();
    json report;
    report["command"] = "verify";
    report["scope"] = "cleaning";
    report["n"] = n_max;
    report["trials"] = trials;
    report["seed"] = seed;

    // exhaustive sweep of the worked 3x3 example first, then random pairs
    const SubsystemCode example =
        build_gbs(BitMatrix::from_strings({"110", "011", "101"})).code;
    std::size_t instances = 0, failures = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Region m(example.n);
        for (std::size_t q = 0; q < example.n; ++q)
            if ((mask >> q) & 1u) m.add(q);
        ++instances;
        if (!cleaning_identity_holds(example, m)) ++failures;
    }
    Xoshiro256 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto code = random_gauge_code(1 + rng.below(n_max), rng);
        ++instances;
        if (!cleaning_identity_holds(code, random_region(code.n, rng))) ++failures;
    }
    return finish_verify(report, "cleaning", instances, failures, start);
}

int run_verify_lemma3(std::size_t n_max, std::size_t trials, std::uint64_t seed,
                      std::uint64_t cap) {
    const auto start = Clock::now();
    json report;
    report["command"] = "verify";
    report["scope"] = "lemma3";
    report["n"] = n_max;
    report["trials"] = trials;
    report["seed"] = seed;
    report["cap"] = cap;

    Xoshiro256 rng(seed);
    std::size_t instances = 0, failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        auto code = random_gauge_code(1 + rng.below(n_max), rng);
        const std::size_t d = code.k ? *distance_full(code, cap).value : 0;
        for (std::size_t q = 0; q < code.n; ++q) {
            auto ext = extend_with_ancilla(code, q);
            ++instances;
            if (ext.k != code.k) {
                ++failures;
                continue;
            }
            if (code.k && *distance_full(ext, cap).value != d) ++failures;
        }
    }
    return finish_verify(report, "lemma3", instances, failures, start);
}

int run_verify_restriction(std::size_t trials, std::uint64_t seed, std::uint64_t cap) {
    const auto start = Clock::now();
    json report;
    report["command"] = "verify";
    report["scope"] = "restriction";
    report["trials"] = trials;
    report["seed"] = seed;
    report["cap"] = cap;

    Xoshiro256 rng(seed);
    std::size_t instances = 0, failures = 0;
    while (instances < trials) {
        const std::size_t rows = 1 + rng.below(3), cols = 1 + rng.below(3);
        const std::uint64_t mask = 1 + rng.below((std::uint64_t(1) << (rows * cols)) - 1);
        const BitMatrix a = matrix_from_mask(rows, cols, mask);
        auto code = build_gbs(a).code;
        auto result = restriction_check(code, random_region(code.n, rng), 1, std::nullopt, cap);
        ++instances;
        if (!result.conclusive || !result.holds) ++failures;
    }
    return finish_verify(report, "restriction", instances, failures, start);
}

// ----------------------------------------------------------------- search

int run_search(const GVQuery& query, const std::string& out_path) {
    const auto start = Clock::now();
    GVResult result = gv_search(query);

    json report;
    report["command"] = "search";
    report["m"] = query.m;
    report["k"] = query.k;
    report["beta"] = query.beta;
    report["trials"] = query.max_trials;
    report["threads"] = query.threads;
    report["seed"] = result.seed;
    report["rng"] = result.rng;
    report["found"] = result.found;
    report["trials_used"] = result.trials_used;
    if (result.found) {
        report["d_row"] = result.d_row;
        report["d_col"] = result.d_col;
        report["rank"] = rank(*result.matrix);
        if (!out_path.empty()) {
            save_matrix(out_path, *result.matrix);
            report["out"] = out_path;
        } else {
            report["matrix"] = matrix_to_json(*result.matrix);
        }
    }
    report["timing_ms"] = ms_since(start);
    emit(report, result.found
                     ? "search: found after " + std::to_string(result.trials_used) +
                           " trials (d_row=" + std::to_string(result.d_row) +
                           ", d_col=" + std::to_string(result.d_col) + ")"
                     : "search: no matrix found within " + std::to_string(query.max_trials) +
                           " trials");
    return 0;
}

// ----------------------------------------------------------------- bounds

int run_bounds(const std::string& matrix_path, std::uint64_t cap) {
    const auto start = Clock::now();
    const std::string content = read_file(matrix_path);
    const BitMatrix a = parse_matrix(content);
    const BoundReport r = check_bounds(a, cap);

    json report = bounds_json(r);
    report["command"] = "bounds";
    report["cap"] = cap;
    report["inputs"] = json::array({input_entry(matrix_path, content)});
    report["timing_ms"] = ms_since(start);
    const bool all_ok = r.square_bound_ok && r.refined_bound_ok && r.rate_bound_ok;
    emit(report, all_ok ? "bounds: all pass" : "bounds: VIOLATION");
    return all_ok ? 0 : 1;
}

// --------------------------------------------------------------- hadamard

int run_hadamard(std::size_t k, const std::string& out_path) {
    const auto start = Clock::now();
    const BitMatrix a = hadamard_matrix(k);
    json report;
    report["command"] = "hadamard";
    report["k"] = k;
    report["rows"] = a.rows();
    report["cols"] = a.cols();
    report["n"] = a.weight();
    if (!out_path.empty()) {
        save_matrix(out_path, a);
        report["out"] = out_path;
    } else {
        report["matrix"] = matrix_to_json(a);
    }
    report["timing_ms"] = ms_since(start);
    emit(report, "hadamard: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " matrix, n=" + std::to_string(a.weight()));
    return 0;
}

// ---------------------------------------------------------------- regions

Region parse_region(const SubsystemCode& code, const std::string& qubits_csv,
                    const std::string& rect) {
    if (!qubits_csv.empty()) {
        Region m(code.n);
        std::size_t pos = 0;
        while (pos < qubits_csv.size()) {
            std::size_t next = qubits_csv.find(',', pos);
            if (next == std::string::npos) next = qubits_csv.size();
            const std::string token = qubits_csv.substr(pos, next - pos);
            try {
                const std::size_t q = std::stoul(token);
                if (q >= code.n) throw ParseError("region qubit out of range");
                m.add(q);
            } catch (const ParseError&) {
                throw;
            } catch (...) {
                throw ParseError("bad qubit index in region: " + token);
            }
            pos = next + 1;
        }
        return m;
    }
    // rectangle "r0:r1,c0:c1", inclusive, resolved through the layout
    if (!code.layout) throw MissingLayout("rectangle regions need a layout");
    long r0, r1, c0, c1;
    if (std::sscanf(rect.c_str(), "%ld:%ld,%ld:%ld", &r0, &r1, &c0, &c1) != 4)
        throw ParseError("rectangle must look like r0:r1,c0:c1");
    Region m(code.n);
    for (std::size_t q = 0; q < code.n; ++q) {
        const CellPos& p = code.layout->position(q);
        if (p.row >= r0 && p.row <= r1 && p.col >= c0 && p.col <= c1) m.add(q);
    }
    return m;
}

int run_regions(const std::string& code_path, const std::string& qubits_csv,
                const std::string& rect, std::size_t range, bool restriction,
                std::optional<std::size_t> known_distance, std::uint64_t cap) {
    const auto start = Clock::now();
    const std::string content = read_file(code_path);
    const SubsystemCode code = parse_code(content);
    const Region m = parse_region(code, qubits_csv, rect);

    json report;
    report["command"] = "regions";
    report["inputs"] = json::array({input_entry(code_path, content)});
    report["cap"] = cap;
    report["n"] = code.n;
    report["k"] = code.k;
    report["region"] = m.indices();
    report["region_size"] = m.count();
    report["dressed_logical_dim"] = dressed_logical_dim(code, m);
    report["bare_logical_dim"] = bare_logical_dim(code, m);
    report["cleaning_identity"] = cleaning_identity_holds(code, m);
    if (code.layout) {
        const Region boundary = boundary_region(*code.layout, m, range);
        report["range"] = range;
        report["boundary"] = boundary.indices();
        report["boundary_size"] = boundary.count();
    }
    if (auto witness = trivial_action_witness(code.gauge, m))
        report["gauge_witness_outside_region"] = witness->to_string();

    bool ok = report["cleaning_identity"].get<bool>();
    if (restriction) {
        const RestrictionReport r = restriction_check(code, m, range, known_distance, cap);
        json jr;
        jr["k_restricted"] = r.k_restricted;
        jr["boundary_size"] = r.boundary_size;
        jr["distance"] = r.distance;
        if (r.restricted_distance) jr["restricted_distance"] = *r.restricted_distance;
        jr["conclusive"] = r.conclusive;
        jr["holds"] = r.holds;
        report["restriction"] = jr;
        if (r.conclusive && !r.holds) ok = false;
    }
    report["timing_ms"] = ms_since(start);
    emit(report, ok ? "regions: all identities hold" : "regions: VIOLATION");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Bacon-Shor code toolkit"};
    app.require_subcommand(1);

    unsigned threads = 1;
    std::string kernels_choice = "auto";
    app.add_option("--threads", threads, "worker threads for parallel commands");
    app.add_option("--kernels", kernels_choice, "kernel backend: auto|scalar|avx2");

    // analyze
    std::string matrix_path, oracle = "none", out_path;
    std::size_t w_max = 0;
    std::uint64_t cap = kDefaultEnumCap;
    auto* analyze = app.add_subcommand("analyze", "derive and cross-check matrix code parameters");
    analyze->add_option("--matrix", matrix_path, "matrix file")->required();
    analyze->add_option("--oracle", oracle, "none|full|bounded")
        ->check(CLI::IsMember({"none", "full", "bounded"}));
    analyze->add_option("--wmax", w_max, "weight limit for the bounded oracle (default: theory d)");
    analyze->add_option("--cap", cap, "enumeration cap");

    // localize
    bool pad = false;
    auto* localize_cmd = app.add_subcommand("localize", "transform to nearest-neighbor form");
    localize_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    localize_cmd->add_flag("--pad", pad, "pad to two qubits per cell");
    localize_cmd->add_option("--out", out_path, "write the code file here");

    // verify
    auto* verify = app.add_subcommand("verify", "run a property suite; nonzero exit on violation");
    verify->require_subcommand(1);
    std::size_t verify_m = 3, verify_n = 6, verify_trials = 500;
    std::uint64_t verify_seed = 1;
    auto* v_t2 = verify->add_subcommand(
        "theorem2-exhaustive", "exhaustive parameter/oracle equivalence over small matrices");
    v_t2->add_option("--m", verify_m, "max matrix side");
    v_t2->add_option("--cap", cap, "enumeration cap");
    auto* v_clean = verify->add_subcommand("cleaning", "complementary-region count identity");
    v_clean->add_option("--n", verify_n, "max qubit count");
    v_clean->add_option("--trials", verify_trials, "random (code, region) pairs");
    v_clean->add_option("--seed", verify_seed, "rng seed");
    auto* v_l3 = verify->add_subcommand("lemma3", "ancilla extension invariance");
    v_l3->add_option("--n", verify_n, "max qubit count");
    v_l3->add_option("--trials", verify_trials, "random codes");
    v_l3->add_option("--seed", verify_seed, "rng seed");
    v_l3->add_option("--cap", cap, "enumeration cap");
    auto* v_restr = verify->add_subcommand("restriction", "restricted-code distance bound");
    v_restr->add_option("--trials", verify_trials, "random (code, region) pairs");
    v_restr->add_option("--seed", verify_seed, "rng seed");
    v_restr->add_option("--cap", cap, "enumeration cap");

    // search
    GVQuery query;
    query.max_trials = 1000;
    auto* search_cmd = app.add_subcommand("search", "random fixed-rank matrix search");
    search_cmd->add_option("--m", query.m, "matrix size")->required();
    search_cmd->add_option("--k", query.k, "target rank")->required();
    search_cmd->add_option("--beta", query.beta, "distance fraction in (0, 1/2)")->required();
    search_cmd->add_option("--trials", query.max_trials, "attempt budget");
    search_cmd->add_option("--seed", query.seed, "rng seed");
    search_cmd->add_option("--out", out_path, "write the found matrix here");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the parameter bounds");
    bounds_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    bounds_cmd->add_option("--cap", cap, "enumeration cap");

    // hadamard
    std::size_t hadamard_k = 1;
    auto* hadamard_cmd = app.add_subcommand("hadamard", "emit the inner-product matrix family");
    hadamard_cmd->add_option("--k", hadamard_k, "pattern length")->required();
    hadamard_cmd->add_option("--out", out_path, "write the matrix here");

    // regions
    std::string code_path, qubits_csv, rect;
    std::size_t range = 1;
    bool restriction = false;
    auto* regions_cmd = app.add_subcommand("regions", "region-restricted group diagnostics");
    regions_cmd->add_option("--code", code_path, "code file")->required();
    auto* q_opt = regions_cmd->add_option("--qubits", qubits_csv, "comma-separated qubit indices");
    auto* r_opt = regions_cmd->add_option("--rect", rect, "rectangle r0:r1,c0:c1 via the layout");
    q_opt->excludes(r_opt);
    regions_cmd->add_option("--range", range, "interaction range for the boundary");
    regions_cmd->add_flag("--restriction", restriction, "also run the restricted-distance check");
    std::size_t known_distance = 0;
    auto* dist_opt =
        regions_cmd->add_option("--distance", known_distance,
                                "known distance of the code (skips the parent distance sweep)");
    regions_cmd->add_option("--cap", cap, "enumeration cap");

    CLI11_PARSE(app, argc, argv);

    if (!kernels::select(kernels_choice)) {
        std::cerr << "kernel backend '" << kernels_choice << "' unavailable" << std::endl;
        return 2;
    }

    try {
        if (*analyze) return run_analyze(matrix_path, oracle, w_max, cap);
        if (*localize_cmd) return run_localize(matrix_path, pad, out_path);
        if (*verify) {
            if (*v_t2) return run_verify_theorem2(verify_m, cap);
            if (*v_clean) return run_verify_cleaning(verify_n, verify_trials, verify_seed);
            if (*v_l3) return run_verify_lemma3(verify_n, verify_trials, verify_seed, cap);
            if (*v_restr) return run_verify_restriction(verify_trials, verify_seed, cap);
        }
        if (*search_cmd) {
            query.threads = threads;
            return run_search(query, out_path);
        }
        if (*bounds_cmd) return run_bounds(matrix_path, cap);
        if (*hadamard_cmd) return run_hadamard(hadamard_k, out_path);
        if (*regions_cmd)
            return run_regions(code_path, qubits_csv, rect, range, restriction,
                               dist_opt->count() ? std::optional<std::size_t>(known_distance)
                                                 : std::nullopt,
                               cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
