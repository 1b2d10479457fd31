#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "serialize.hpp"
#include "weylwit/block_seq.hpp"
#include "weylwit/iso_models.hpp"
#include "weylwit/iso_witness.hpp"
#include "weylwit/twisted_models.hpp"
#include "weylwit/twisted_witness.hpp"
#include "weylwit/weyl.hpp"

namespace {

using weylwit::tools::Json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
}

void emit(const Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out.good()) throw IoError("cannot write " + out_path);
    out << text;
}

int worker_count() {
    const char* env = std::getenv("WEYLWIT_THREADS");
    if (env == nullptr) return 1;
    const int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

/* Run fn(0..n-1) on up to worker_count() threads; results land in index
 * order, so the output does not depend on the thread count. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers))
                fn(i);
        });
    for (std::thread& t : pool) t.join();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

/* "30" or "2:2,14" -> {30:1} or {2:2, 14:1} */
std::map<int, int> parse_factors(const std::string& text) {
    std::map<int, int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const std::size_t colon = item.find(':');
        const int d = std::stoi(item.substr(0, colon));
        const int mult = colon == std::string::npos ? 1 : std::stoi(item.substr(colon + 1));
        if (d < 1 || mult < 1) throw CLI::ValidationError("--factors", "indices must be >= 1");
        out[d] += mult;
    }
    if (out.empty()) throw CLI::ValidationError("--factors", "empty factor list");
    return out;
}

Json issues_to_json(const weylwit::ValidationReport& rep) {
    Json arr = Json::array();
    for (const weylwit::ValidationIssue& issue : rep.issues) {
        Json j;
        j["condition"] = issue.condition;
        j["t"] = issue.t;
        j["r"] = issue.r;
        j["u"] = issue.u;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json row_report_to_json(const weylwit::RowReport& rep) {
    Json j;
    j["min_length"] = rep.row.min_length;
    Json factors;
    for (const auto& [d, mult] : rep.row.factors) factors[std::to_string(d)] = mult;
    j["factors"] = std::move(factors);
    j["labels"] = rep.row.labels;
    Json checks;
    checks["degree_ok"] = rep.degree_ok;
    checks["no_fixed_vector"] = rep.no_fixed_vector;
    checks["found"] = rep.found;
    checks["length_ok"] = rep.length_ok;
    checks["exhaustive"] = rep.exhaustive;
    checks["inconclusive"] = rep.inconclusive;
    j["checks"] = std::move(checks);
    j["found_length"] = rep.found_length;
    j["representative_word"] = rep.representative_word;
    j["fingerprint"] = rep.fingerprint;
    return j;
}

int cmd_build_iso(const std::string& a_text, const std::string& b_text,
                  const std::string& out_path) {
    weylwit::IsoBlockSeq seq;
    try {
        seq = weylwit::derive_iso(parse_int_list(a_text), parse_int_list(b_text));
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid sequence: " << e.what() << "\n";
        return 2;
    }
    const weylwit::IsoWitness w = weylwit::normalize(weylwit::build_iso(seq));
    if (!weylwit::validate(w).ok()) {
        std::cerr << "internal check failed: canonical build does not validate\n";
        return 1;
    }
    emit(weylwit::tools::iso_to_json(w), out_path);
    return 0;
}

int cmd_build_twisted(const std::string& a_text, const std::string& b_text,
                      const std::string& out_path) {
    weylwit::TwistedBlockSeq seq;
    try {
        seq = weylwit::derive_twisted(parse_int_list(a_text), parse_int_list(b_text));
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid sequence: " << e.what() << "\n";
        return 2;
    }
    const weylwit::TwistedWitness w = weylwit::normalize_twisted(weylwit::build_twisted(seq));
    if (!weylwit::validate_twisted(w).ok()) {
        std::cerr << "internal check failed: canonical build does not validate\n";
        return 1;
    }
    emit(weylwit::tools::twisted_to_json(w), out_path);
    return 0;
}

int cmd_validate(const std::string& path, const std::string& out_path) {
    const Json doc = load_file(path);
    const std::string kind = weylwit::tools::witness_kind(doc);
    weylwit::ValidationReport rep;
    if (kind == "iso")
        rep = weylwit::validate(weylwit::tools::iso_from_json(doc));
    else
        rep = weylwit::validate_twisted(weylwit::tools::twisted_from_json(doc));
    Json out;
    out["schema"] = "v1";
    out["command"] = "validate";
    out["kind"] = kind;
    out["ok"] = rep.ok();
    out["issues"] = issues_to_json(rep);
    emit(out, out_path);
    return rep.ok() ? 0 : 1;
}

int cmd_normalize(const std::string& path, const std::string& out_path) {
    const Json doc = load_file(path);
    if (weylwit::tools::witness_kind(doc) == "iso")
        emit(weylwit::tools::iso_to_json(
                 weylwit::normalize(weylwit::tools::iso_from_json(doc))),
             out_path);
    else
        emit(weylwit::tools::twisted_to_json(
                 weylwit::normalize_twisted(weylwit::tools::twisted_from_json(doc))),
             out_path);
    return 0;
}

int cmd_transport(const std::string& path1, const std::string& path2,
                  const std::string& out_path) {
    const Json doc1 = load_file(path1);
    const Json doc2 = load_file(path2);
    const std::string kind = weylwit::tools::witness_kind(doc1);
    if (kind != weylwit::tools::witness_kind(doc2)) {
        std::cerr << "witness kinds differ\n";
        return 1;
    }
    weylwit::Matrix carrier;
    if (kind == "iso") {
        weylwit::IsoWitness w1 = weylwit::tools::iso_from_json(doc1);
        weylwit::IsoWitness w2 = weylwit::tools::iso_from_json(doc2);
        if (!w1.is_normalized()) w1 = weylwit::normalize(w1);
        if (!w2.is_normalized()) w2 = weylwit::normalize(w2);
        carrier = weylwit::transport(w1, w2);
    } else {
        weylwit::TwistedWitness w1 = weylwit::tools::twisted_from_json(doc1);
        weylwit::TwistedWitness w2 = weylwit::tools::twisted_from_json(doc2);
        if (!w1.is_normalized()) w1 = weylwit::normalize_twisted(w1);
        if (!w2.is_normalized()) w2 = weylwit::normalize_twisted(w2);
        carrier = weylwit::transport_twisted(w1, w2);
    }
    Json out;
    out["schema"] = "v1";
    out["command"] = "transport";
    out["kind"] = kind;
    out["matrix"] = weylwit::tools::matrix_to_json(carrier);
    emit(out, out_path);
    return 0;
}

int cmd_isotropy(const std::string& path, const std::string& out_path) {
    const Json doc = load_file(path);
    const std::string kind = weylwit::tools::witness_kind(doc);
    weylwit::IsotropyGroup group;
    if (kind == "iso") {
        weylwit::IsoWitness w = weylwit::tools::iso_from_json(doc);
        if (!w.is_normalized()) w = weylwit::normalize(w);
        group = weylwit::isotropy(w);
    } else {
        weylwit::TwistedWitness w = weylwit::tools::twisted_from_json(doc);
        if (!w.is_normalized()) w = weylwit::normalize_twisted(w);
        group = weylwit::isotropy_twisted(w);
    }
    Json out;
    out["schema"] = "v1";
    out["command"] = "isotropy";
    out["kind"] = kind;
    out["order"] = group.elements.size();
    out["free_rank"] = group.shape.free_rank();
    Json pairs = Json::array();
    for (const auto& [t, r] : group.shape.linked_pairs) pairs.push_back(Json::array({t, r}));
    out["linked_pairs"] = std::move(pairs);
    Json elems = Json::array();
    for (std::size_t i = 0; i < group.elements.size(); ++i) {
        Json e;
        e["signs"] = group.elements[i];
        e["det"] = weylwit::tools::scalar_to_json(weylwit::det(group.matrices[i]));
        elems.push_back(std::move(e));
    }
    out["elements"] = std::move(elems);
    emit(out, out_path);
    return 0;
}

int cmd_sl_refine(const std::string& path, const std::string& out_path) {
    const Json doc = load_file(path);
    if (weylwit::tools::witness_kind(doc) != "twisted") {
        std::cerr << "sl-refine applies to twisted witness files only\n";
        return 2;
    }
    weylwit::TwistedWitness w = weylwit::tools::twisted_from_json(doc);
    if (!w.is_normalized()) w = weylwit::normalize_twisted(w);
    const weylwit::SlRefinement ref = weylwit::sl_refinement(w);
    Json out;
    out["schema"] = "v1";
    out["command"] = "sl-refine";
    out["class_count"] = ref.class_count;
    out["det_ok"] = ref.det_ok;
    out["has_flip"] = ref.has_flip;
    if (ref.has_flip) out["flip_det"] = weylwit::tools::scalar_to_json(weylwit::det(ref.flip));
    emit(out, out_path);
    return ref.det_ok ? 0 : 1;
}

int cmd_component(const std::string& path, const std::string& out_path) {
    const Json doc = load_file(path);
    if (weylwit::tools::witness_kind(doc) != "iso") {
        std::cerr << "component applies to iso witness files only\n";
        return 2;
    }
    weylwit::IsoWitness w = weylwit::tools::iso_from_json(doc);
    if (!w.is_normalized()) w = weylwit::normalize(w);
    const int label = weylwit::isotropic_component(w);
    Json out;
    out["schema"] = "v1";
    out["command"] = "component";
    out["component"] = label;
    emit(out, out_path);
    return 0;
}

int cmd_verify_table(const std::string& type, unsigned long long budget, unsigned long long seed,
                     bool exhaustive_e7, const std::string& out_path) {
    std::vector<weylwit::RowReport> reports;
    const bool exhaustive =
        type == "G2" || type == "F4" || type == "E6" || (type == "E7" && exhaustive_e7);
    if (exhaustive) {
        reports = weylwit::verify_table(type, budget, seed, exhaustive_e7);
    } else {
        /* independent per-row searches; shardable across workers */
        const std::vector<weylwit::EllipticRow> rows = weylwit::builtin_table(type);
        reports.resize(rows.size());
        parallel_for(rows.size(), [&](std::size_t i) {
            const std::vector<weylwit::RowReport> one =
                weylwit::verify_table_row(type, i, budget, seed);
            reports[i] = one.front();
        });
    }
    bool ok = true;
    Json rows_json = Json::array();
    for (const weylwit::RowReport& rep : reports) {
        ok = ok && rep.degree_ok && rep.no_fixed_vector && rep.length_ok;
        rows_json.push_back(row_report_to_json(rep));
    }
    Json out;
    out["schema"] = "v1";
    out["command"] = "verify-table";
    out["type"] = type;
    out["seed"] = seed;
    out["budget"] = budget;
    out["rows"] = std::move(rows_json);
    out["ok"] = ok;
    emit(out, out_path);
    return ok ? 0 : 1;
}

int cmd_weyl_find(const std::string& type, const std::string& factors_text,
                  unsigned long long budget, unsigned long long seed,
                  const std::string& out_path) {
    const std::map<int, int> target = parse_factors(factors_text);
    const weylwit::RootSystem rs = weylwit::build_weyl(type);
    const weylwit::SearchResult sr = weylwit::find_elliptic_rep(rs, target, budget, seed);
    Json out;
    out["schema"] = "v1";
    out["command"] = "find";
    out["type"] = type;
    Json factors;
    for (const auto& [d, mult] : target) factors[std::to_string(d)] = mult;
    out["factors"] = std::move(factors);
    out["seed"] = seed;
    out["budget"] = budget;
    out["found"] = sr.found;
    out["steps"] = sr.steps;
    if (sr.found) {
        out["min_length"] = sr.min_length;
        out["word"] = weylwit::reduced_word(rs, sr.element);
    }
    emit(out, out_path);
    return sr.found ? 0 : 1;
}

struct SelftestSuite {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
};

void require(SelftestSuite& suite, bool ok, const std::string& what) {
    ++suite.checks;
    if (!ok) suite.failures.push_back(what);
}

int cmd_selftest(int max_dim, unsigned long long seed, const std::string& out_path) {
    std::vector<SelftestSuite> suites;

    {
        SelftestSuite s{"formula tables"};
        for (int p = 0; p <= 8; ++p) {
            const auto x = weylwit::odd_x_coeffs(p, 22);
            if (p >= 1) {
                require(s, weylwit::f_value(p, p) == 1, "unit value at the block radius");
                require(s, x[1] == 2 * p + 2, "first step of the odd-block sequence");
            }
            require(s, weylwit::f_value(0, 2 * p + 1) == 2, "constant profile at level zero");
            const auto n = weylwit::n_coeffs(2 * p + 1, 0);
            for (int u = 2; u <= 20; ++u) {
                weylwit::BigInt acc = 0;
                for (int j = 0; j <= u && j < static_cast<int>(n.size()); ++j)
                    acc += n[j] * x[u - j];
                require(s, acc == 0, "odd-block convolution");
            }
            if (p >= 1) {
                require(s, weylwit::phi_value(p, 2 * p + 1) == -(2 * p + 1),
                        "first twisted profile value past the window");
                require(s, weylwit::phi_value(p, 2 * p - 1) == 1, "twisted profile anchor");
            }
        }
        suites.push_back(std::move(s));
    }

    {
        SelftestSuite s{"symmetric pipeline"};
        const auto seqs = weylwit::admissible_iso(max_dim);
        std::vector<SelftestSuite> parts(seqs.size());
        parallel_for(seqs.size(), [&](std::size_t i) {
            SelftestSuite& part = parts[i];
            const weylwit::IsoBlockSeq seq = weylwit::derive_iso(seqs[i].first, seqs[i].second);
            const weylwit::IsoWitness w = weylwit::build_iso(seq);
            require(part, weylwit::validate(w).ok(), "canonical build validates");
            const weylwit::IsoWitness nw = weylwit::normalize(w);
            require(part, nw.is_normalized(), "normalization succeeds");
            const weylwit::IsotropyGroup iso = weylwit::isotropy(nw);
            const int free_rank = weylwit::sign_group(seq).free_rank();
            require(part, iso.elements.size() == (1ULL << free_rank),
                    "stabilizer order is 2^free-rank");
            if (seq.dim > 0)
                require(part,
                        weylwit::transport(nw, nw) == weylwit::Matrix::identity(seq.dim),
                        "self-transport is the identity");
        });
        for (const SelftestSuite& part : parts) {
            s.checks += part.checks;
            s.failures.insert(s.failures.end(), part.failures.begin(), part.failures.end());
        }
        suites.push_back(std::move(s));
    }

    {
        SelftestSuite s{"twisted pipeline"};
        const auto seqs = weylwit::admissible_twisted(std::min(max_dim, 11));
        std::vector<SelftestSuite> parts(seqs.size());
        parallel_for(seqs.size(), [&](std::size_t i) {
            SelftestSuite& part = parts[i];
            const weylwit::TwistedBlockSeq seq =
                weylwit::derive_twisted(seqs[i].first, seqs[i].second);
            const weylwit::TwistedWitness w = weylwit::build_twisted(seq);
            require(part, weylwit::validate_twisted(w).ok(), "canonical build validates");
            const weylwit::TwistedWitness nw = weylwit::normalize_twisted(w);
            require(part, nw.is_normalized(), "normalization succeeds");
            const weylwit::IsotropyGroup iso = weylwit::isotropy_twisted(nw);
            const int free_rank = weylwit::sign_group(seq).free_rank();
            require(part, iso.elements.size() == (1ULL << free_rank),
                    "stabilizer order is 2^free-rank");
            const weylwit::SlRefinement ref = weylwit::sl_refinement(nw);
            require(part, ref.det_ok, "squared twisted power has determinant one");
            if (seq.n > 0)
                require(part, (ref.class_count == 1) == (seq.a_at(1) > 0),
                        "special-linear class count rule");
        });
        for (const SelftestSuite& part : parts) {
            s.checks += part.checks;
            s.failures.insert(s.failures.end(), part.failures.begin(), part.failures.end());
        }
        suites.push_back(std::move(s));
    }

    {
        SelftestSuite s{"minimal-length tables"};
        for (const char* type : {"G2", "F4"}) {
            for (const weylwit::RowReport& rep : weylwit::verify_table(type)) {
                require(s, rep.degree_ok && rep.no_fixed_vector && rep.length_ok,
                        std::string(type) + " row verification");
            }
        }
        const weylwit::RootSystem g2 = weylwit::build_weyl("G2");
        const weylwit::SearchResult a =
            weylwit::find_elliptic_rep(g2, {{3, 1}}, 100000, seed);
        const weylwit::SearchResult b =
            weylwit::find_elliptic_rep(g2, {{3, 1}}, 100000, seed);
        require(s, a.found && b.found && a.element == b.element && a.steps == b.steps,
                "seeded search is reproducible");
        suites.push_back(std::move(s));
    }

    std::ostringstream report;
    report << "selftest seed=" << seed << " max-dim=" << max_dim << "\n";
    bool ok = true;
    for (const SelftestSuite& s : suites) {
        report << s.name << ": " << s.checks << " checks";
        if (s.failures.empty()) {
            report << ", all passed\n";
        } else {
            ok = false;
            report << ", " << s.failures.size() << " FAILED\n";
            for (const std::string& f : s.failures) report << "  FAIL: " << f << "\n";
        }
    }
    report << (ok ? "selftest: ok" : "selftest: FAILED") << "\n";
    if (out_path.empty()) {
        std::cout << report.str();
    } else {
        std::ofstream out(out_path);
        if (!out.good()) throw IoError("cannot write " + out_path);
        out << report.str();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact witness configurations and minimal-length table verification"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string a_text, b_text, out_path, path1, path2, type, factors_text;
    unsigned long long seed = 0, budget = 2000000;
    int max_dim = 10;
    bool exhaustive_e7 = true;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--out", out_path, "Write the JSON output to a file");
    };

    {
        CLI::App* cmd = app.add_subcommand("build-iso", "Build a canonical symmetric witness");
        cmd->add_option("--a", a_text, "Comma-separated a-entries")->required();
        cmd->add_option("--b", b_text, "Comma-separated b-entries");
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_build_iso(a_text, b_text, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("build-twisted", "Build a canonical twisted witness");
        cmd->add_option("--a", a_text, "Comma-separated a-entries (odd)")->required();
        cmd->add_option("--b", b_text, "Comma-separated b-entries (even)");
        add_out(cmd);
        cmd->callback(
            [&] { action = [&] { return cmd_build_twisted(a_text, b_text, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("validate", "Check every defining condition");
        cmd->add_option("file", path1, "Witness JSON file")->required();
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_validate(path1, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("normalize", "Rescale lines to canonical tables");
        cmd->add_option("file", path1, "Witness JSON file")->required();
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_normalize(path1, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("transport", "Map one witness onto another");
        cmd->add_option("file1", path1, "Source witness JSON file")->required();
        cmd->add_option("file2", path2, "Target witness JSON file")->required();
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_transport(path1, path2, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("isotropy", "Enumerate the configuration stabilizer");
        cmd->add_option("file", path1, "Witness JSON file")->required();
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_isotropy(path1, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("sl-refine", "Special-linear refinement data");
        cmd->add_option("file", path1, "Twisted witness JSON file")->required();
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_sl_refine(path1, out_path); }; });
    }
    {
        CLI::App* cmd = app.add_subcommand("component", "Isotropic-subspace component label");
        cmd->add_option("file", path1, "Symmetric witness JSON file")->required();
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_component(path1, out_path); }; });
    }
    {
        CLI::App* weyl = app.add_subcommand("weyl", "Weyl group table operations");
        weyl->require_subcommand(1);
        CLI::App* vt = weyl->add_subcommand("verify-table", "Verify the embedded rows");
        vt->add_option("--type", type, "G2, F4, E6, E7, or E8")->required();
        vt->add_option("--seed", seed, "Search seed");
        vt->add_option("--budget", budget, "Search steps per row");
        vt->add_flag("--exhaustive-e7,!--search-e7", exhaustive_e7,
                     "Verify rank 7 against the complete class partition");
        add_out(vt);
        vt->callback([&] {
            action = [&] {
                return cmd_verify_table(type, budget, seed, exhaustive_e7, out_path);
            };
        });
        CLI::App* fd = weyl->add_subcommand("find", "Search for an elliptic representative");
        fd->add_option("--type", type, "Type label, e.g. E8 or D5")->required();
        fd->add_option("--factors", factors_text, "Cyclotomic target, e.g. 2:2,14")->required();
        fd->add_option("--seed", seed, "Search seed");
        fd->add_option("--budget", budget, "Search steps");
        add_out(fd);
        fd->callback([&] {
            action = [&] { return cmd_weyl_find(type, factors_text, budget, seed, out_path); };
        });
    }
    {
        CLI::App* cmd = app.add_subcommand("selftest", "Run the deterministic property suites");
        cmd->add_option("--max-dim", max_dim, "Largest configuration dimension");
        cmd->add_option("--seed", seed, "Seed for the seeded checks");
        add_out(cmd);
        cmd->callback([&] { action = [&] { return cmd_selftest(max_dim, seed, out_path); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
