// so5cg: query, export and verify Spin(5) coupling coefficients for
// Lambda (x) (1,1).
//
// Exit codes: 0 ok, 1 failed verification, 2 malformed key or arguments,
// 3 absent channel, 4 I/O error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "so5cg/error.hpp"
#include "so5cg/full_cg.hpp"
#include "so5cg/oracle.hpp"
#include "so5cg/reduced_cg.hpp"
#include "so5cg/table_io.hpp"
#include "so5cg/verify.hpp"

using namespace so5cg;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kMalformed = 2, kAbsent = 3, kIo = 4 };

std::string float_str(const SqrtSum& v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", to_double(v));
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("cannot write to stdout");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open " + out_path + " for writing");
    out << text;
    if (!out) throw IoError("write to " + out_path + " failed");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// --target or --channel, exactly one.
Channel resolve_channel(const IrrepLabel& source, const std::string& target, const std::string& channel, int copy) {
    if (target.empty() == channel.empty()) throw MalformedKey("give exactly one of --target and --channel");
    if (!channel.empty()) {
        auto [a, b] = parse_pair(channel);
        return Channel::make(a, b, copy);
    }
    const IrrepLabel t = parse_irrep(target);
    return Channel::make(t.jbar1 - source.jbar1, t.jbar2 - source.jbar2, copy);
}

struct EvalArgs {
    std::string source, target, channel, source_so4, entry, part, source_m, part_m, target_m;
    int copy = 1;
    std::string format = "text";
};

int run_eval(const EvalArgs& a) {
    const IrrepLabel source = parse_irrep(a.source);
    const Channel channel = resolve_channel(source, a.target, a.channel, a.copy);
    const So4Label s = parse_so4(a.source_so4);
    const auto [dj1, dj2] = parse_pair(a.entry);
    const EntryShift entry = EntryShift::make(dj1, dj2, parse_so4(a.part));
    const ReducedKey key{source, channel, s, entry};

    nlohmann::json j{{"schema", kSchema},
                     {"source", to_json_label(source)},
                     {"target", to_json_label(key.target())},
                     {"copy", channel.copy},
                     {"source_so4", to_json_label(s)},
                     {"twice_dj1", entry.dj1.twice()},
                     {"twice_dj2", entry.dj2.twice()},
                     {"part", to_json_label(entry.part)}};
    SqrtSum value;
    const bool is_full = !a.source_m.empty() || !a.part_m.empty() || !a.target_m.empty();
    if (is_full) {
        if (a.source_m.empty() || a.part_m.empty())
            throw MalformedKey("full coefficients need --source-m and --part-m");
        const auto t = key.target_so4();
        if (!t) throw MalformedKey("target SO(4) label " + s.to_string() + " + " + entry.to_string() + " is negative");
        const auto [sm1, sm2] = parse_pair(a.source_m);
        const auto [pm1, pm2] = parse_pair(a.part_m);
        auto [tm1, tm2] = std::pair{sm1 + pm1, sm2 + pm2};
        if (!a.target_m.empty()) std::tie(tm1, tm2) = parse_pair(a.target_m);
        value = full(FullKey{key.target(), channel.copy, State{*t, tm1, tm2}, source, State{s, sm1, sm2},
                             State{entry.part, pm1, pm2}});
        j["twice_source_m"] = {sm1.twice(), sm2.twice()};
        j["twice_part_m"] = {pm1.twice(), pm2.twice()};
        j["twice_target_m"] = {tm1.twice(), tm2.twice()};
    } else {
        value = coefficient(key);
    }
    if (a.format == "json") {
        j["value"] = value.to_export_string();
        j["float"] = to_double(value);
        emit(dump(j), "");
    } else {
        emit(value.to_string() + "\n" + float_str(value) + "\n", "");
    }
    return kOk;
}

struct TableArgs {
    std::string source, target, channel, format = "csv", out;
    int copy = 1;
    bool no_cache = false;
};

int run_table(const TableArgs& a) {
    const IrrepLabel source = parse_irrep(a.source);
    const Channel channel = resolve_channel(source, a.target, a.channel, a.copy);
    std::optional<TableCache> cache = a.no_cache ? std::nullopt : TableCache::from_env();
    const ReducedTable t = cache ? cache->get(source, channel) : reduced_table(source, channel);
    emit(a.format == "json" ? dump(table_to_json(t)) : table_to_csv(t), a.out);
    return kOk;
}

int run_branch(const std::string& label, const std::string& format, const std::string& out) {
    const IrrepLabel rep = parse_irrep(label);
    const auto labels = branching(rep);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : labels) {
            auto j = to_json_label(s);
            j["dim"] = s.dim();
            arr.push_back(j);
        }
        emit(dump({{"schema", kSchema}, {"irrep", to_json_label(rep)}, {"dim", dim(rep)}, {"so4", arr}}), out);
    } else {
        std::string text = "twice_j1,twice_j2,dim\n";
        for (const auto& s : labels)
            text += std::to_string(s.j1.twice()) + "," + std::to_string(s.j2.twice()) + "," + std::to_string(s.dim()) + "\n";
        emit(text, out);
    }
    return kOk;
}

int run_decompose(const std::string& label, const std::string& format, const std::string& out) {
    const IrrepLabel rep = parse_irrep(label);
    const auto parts = decompose_with_14(rep);
    long total = 0;
    for (const auto& e : parts) total += e.multiplicity * dim(e.target);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : parts) {
            auto j = to_json_label(e.target);
            j["multiplicity"] = e.multiplicity;
            j["dim"] = dim(e.target);
            arr.push_back(j);
        }
        emit(dump({{"schema", kSchema}, {"source", to_json_label(rep)}, {"product_dim", 14 * dim(rep)},
                   {"total_dim", total}, {"targets", arr}}),
             out);
    } else {
        std::string text = "twice_jbar1,twice_jbar2,multiplicity,dim\n";
        for (const auto& e : parts)
            text += std::to_string(e.target.jbar1.twice()) + "," + std::to_string(e.target.jbar2.twice()) + "," +
                    std::to_string(e.multiplicity) + "," + std::to_string(dim(e.target)) + "\n";
        emit(text, out);
    }
    return kOk;
}

int run_matrix(const std::string& label, const std::string& format, const std::string& out) {
    const CouplingMatrix m = coupling_matrix(parse_irrep(label));
    emit(format == "json" ? dump(matrix_to_json(m)) : matrix_to_csv(m), out);
    return kOk;
}

struct VerifyArgs {
    std::string suite;
    int max_twice_j = 5;
    double tol = 1e-9;
    double projector_tol = 1e-8;
    long dim_cap = 64;
    std::vector<std::string> sources;
    std::string out;
};

template <class F>
SuiteResult timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SuiteResult oracle_suite(const VerifyArgs& a) {
    SuiteResult r;
    r.name = "oracle";
    std::vector<IrrepLabel> sources;
    for (const auto& s : a.sources) sources.push_back(parse_irrep(s));
    if (sources.empty())
        for (int a1 = 0; a1 <= 8; ++a1)
            for (int a2 = 0; a2 <= a1; ++a2) {
                const IrrepLabel l = IrrepLabel::make(HalfInt::from_twice(a1), HalfInt::from_twice(a2));
                if (dim(l) <= 35) sources.push_back(l);
            }
    OracleOptions opt;
    opt.tol = a.tol;
    opt.projector_tol = a.projector_tol;
    opt.dim_cap = a.dim_cap;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& s : sources) {
        try {
            const ComparisonReport rep = compare(s, opt);
            r.expect(rep.decomposition_match, s.to_string() + ": numeric decomposition differs");
            r.expect(rep.pass, s.to_string() + ": deviation above tolerance");
            reports.push_back(to_json(rep));
        } catch (const Error& e) {
            r.expect(false, s.to_string() + ": " + e.what());
        }
    }
    r.details["reports"] = reports;
    return r;
}

int run_verify(const VerifyArgs& a) {
    const int n = a.max_twice_j;
    const bool all = a.suite == "all";
    std::vector<SuiteResult> results;
    if (all || a.suite == "orthogonality") {
        results.push_back(timed([&] { return verify_reduced_unitarity(n); }));
        std::vector<IrrepLabel> sources;
        for (auto [a1, a2] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 1}, {4, 2}})
            if (a1 <= n) sources.push_back(IrrepLabel::make(HalfInt::from_twice(a1), HalfInt::from_twice(a2)));
        results.push_back(timed([&] { return verify_full_unitarity(sources, true); }));
        results.push_back(timed([&] { return verify_trivial_source(); }));
        results.push_back(timed([&] { return verify_su2(n); }));
    }
    if (all || a.suite == "mixing") results.push_back(timed([&] { return verify_mixing(n); }));
    if (all || a.suite == "symmetry") results.push_back(timed([&] { return verify_symmetry(n); }));
    if (all || a.suite == "presence") results.push_back(timed([&] { return verify_presence(n); }));
    if (all || a.suite == "oracle") results.push_back(timed([&] { return oracle_suite(a); }));

    bool pass = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) {
        pass = pass && r.pass;
        suites.push_back(to_json(r));
        if (!r.pass) std::cerr << "FAIL " << r.name << ": " << r.first_failure << "\n";
    }
    emit(dump({{"schema", kSchema}, {"max_twice_j", n}, {"pass", pass}, {"suites", suites}}), a.out);
    return pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin(5) coupling coefficients for Lambda (x) (1,1)"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"csv", "json"};

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "one reduced coefficient, or a full one when magnetic numbers are given");
    eval->add_option("--source", ev.source, "source irrep, e.g. 1,1/2")->required();
    eval->add_option("--target", ev.target, "target irrep");
    eval->add_option("--channel", ev.channel, "label shift, e.g. +1,-1 or 0,0");
    eval->add_option("--copy", ev.copy, "copy of the (0,0) shift")->check(CLI::Range(1, 2));
    eval->add_option("--source-so4", ev.source_so4, "SO(4) label s inside the source")->required();
    eval->add_option("--entry", ev.entry, "shift t - s")->required();
    eval->add_option("--part", ev.part, "SO(4) label P inside (1,1)")->required();
    eval->add_option("--source-m", ev.source_m, "m1,m2 of the source state");
    eval->add_option("--part-m", ev.part_m, "M1,M2 of the (1,1) state");
    eval->add_option("--target-m", ev.target_m, "m1,m2 of the target state (default: sum)");
    eval->add_option("--format", ev.format)->check(CLI::IsMember({"text", "json"}));

    TableArgs tb;
    auto* table = app.add_subcommand("table", "the 14-row reduced table of one channel for every source SO(4) label");
    table->add_option("--source", tb.source)->required();
    table->add_option("--target", tb.target);
    table->add_option("--channel", tb.channel);
    table->add_option("--copy", tb.copy)->check(CLI::Range(1, 2));
    table->add_option("--format", tb.format)->check(CLI::IsMember(formats));
    table->add_option("--out", tb.out);
    table->add_flag("--no-cache", tb.no_cache, "ignore $SO5CG_CACHE");

    std::string label, format = "csv", out;
    auto* branch = app.add_subcommand("branch", "SO(4) content of an irrep");
    branch->add_option("irrep", label)->required();
    branch->add_option("--format", format)->check(CLI::IsMember(formats));
    branch->add_option("--out", out);
    bool unused_no_cache = false;
    branch->add_flag("--no-cache", unused_no_cache);

    auto* decompose = app.add_subcommand("decompose", "irreps in source (x) (1,1)");
    decompose->add_option("source", label)->required();
    decompose->add_option("--format", format)->check(CLI::IsMember(formats));
    decompose->add_option("--out", out);
    decompose->add_flag("--no-cache", unused_no_cache);

    auto* matrix = app.add_subcommand("matrix", "full coupling matrix, nonzero entries");
    matrix->add_option("--source", label)->required();
    matrix->add_option("--format", format)->check(CLI::IsMember(formats));
    matrix->add_option("--out", out);

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "run invariant suites; JSON report, exit 1 on failure");
    verify->add_option("suite", vf.suite)
        ->required()
        ->check(CLI::IsMember({"orthogonality", "mixing", "symmetry", "presence", "oracle", "all"}));
    verify->add_option("--max-twice-j", vf.max_twice_j, "bound on 2 jb1")->check(CLI::Range(0, 12));
    verify->add_option("--tol", vf.tol, "oracle coefficient tolerance");
    verify->add_option("--projector-tol", vf.projector_tol, "oracle projector tolerance");
    verify->add_option("--dim-cap", vf.dim_cap, "largest irrep the oracle builds");
    verify->add_option("--source", vf.sources, "oracle sources (default: every irrep of dimension <= 35)");
    verify->add_option("--out", vf.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    }

    try {
        if (eval->parsed()) return run_eval(ev);
        if (table->parsed()) return run_table(tb);
        if (branch->parsed()) return run_branch(label, format, out);
        if (decompose->parsed()) return run_decompose(label, format, out);
        if (matrix->parsed()) return run_matrix(label, format, out);
        if (verify->parsed()) return run_verify(vf);
    } catch (const MalformedKey& e) {
        std::cerr << "malformed key: " << e.what() << "\n";
        return kMalformed;
    } catch (const ChannelAbsent& e) {
        std::cerr << "channel absent: " << e.what() << "\n";
        return kAbsent;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}
