#include "posit/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "posit/arith.hpp"
#include "posit/bench/report.hpp"
#include "posit/convert.hpp"
#include "posit/oracle.hpp"

namespace posit::cli {

namespace {

// Format tokens: p8/p16/p32 and the wider members of the same family
// (es = log2(ps) - 2), or explicit "p<ps>e<es>".
PositConfig parse_format(const std::string& token) {
    if (token.size() < 2 || (token[0] != 'p' && token[0] != 'P'))
        throw std::invalid_argument("unknown format: " + token);
    const std::string body = token.substr(1);
    const auto epos = body.find('e');
    if (epos != std::string::npos) {
        const int ps = std::stoi(body.substr(0, epos));
        const int es = std::stoi(body.substr(epos + 1));
        return PositConfig(ps, es);
    }
    const int ps = std::stoi(body);
    int es = 0;
    for (int w = ps; w > 4; w /= 2) ++es;  // 8->1, 16->2, 32->3, 64->4
    return PositConfig(ps, es);
}

bool is_float_format(const std::string& token) {
    return token == "f32" || token == "f64";
}

int cmd_inspect(const std::string& format, const std::string& hex,
                std::ostream& out) {
    const PositConfig cfg = parse_format(format);
    const PositBits bits = parse_hex(cfg, hex);
    const UnpackedPosit u = decode(cfg, bits);
    out << "pattern : 0x" << to_hex(cfg, bits) << "\n";
    out << "format  : posit(" << cfg.ps << "," << cfg.es << ")\n";
    if (u.sn) {
        out << "class   : " << (u.s ? "nar" : "zero") << "\n";
        return 0;
    }
    out << "class   : normal\n";
    out << "sign    : " << (u.s ? 1 : 0) << "\n";
    out << "regime  : k=" << u.k << " (rs=" << u.rs << ")\n";
    out << "exponent: e=" << u.e << " (ers=" << u.ers << ")\n";
    const double mant =
        std::ldexp(static_cast<double>(static_cast<std::uint64_t>(u.f)), -u.fs);
    out << "fraction: f=" << static_cast<std::uint64_t>(u.f) << " fs=" << u.fs
        << " (" << mant << ")\n";
    if (cfg.ps <= 32)
        out << "value   : " << format_decimal(cfg, bits, 17) << "\n";
    return 0;
}

int cmd_convert(const std::string& from, const std::string& to,
                const std::string& value, std::ostream& out) {
    double host = 0;
    if (is_float_format(from)) {
        char* end = nullptr;
        host = std::strtod(value.c_str(), &end);
        if (end == value.c_str())
            throw std::invalid_argument("malformed value: " + value);
        if (from == "f32") host = static_cast<float>(host);
    } else {
        const PositConfig src = parse_format(from);
        const PositBits bits = parse_hex(src, value);
        if (is_float_format(to)) {
            const double v = posit_to_binary64(src, bits);
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.17g", to == "f32"
                                                         ? static_cast<float>(v)
                                                         : v);
            out << buf << "\n";
            return 0;
        }
        const PositConfig dst = parse_format(to);
        out << "0x" << to_hex(dst, resize_posit(src, dst, bits)) << "\n";
        return 0;
    }
    if (is_float_format(to))
        throw std::invalid_argument("float-to-float conversion is not a posit op");
    const PositConfig dst = parse_format(to);
    out << "0x" << to_hex(dst, binary64_to_posit(dst, host)) << "\n";
    return 0;
}

int cmd_verify(const std::string& format, const std::string& op_token,
               bool exhaustive, std::uint64_t samples, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
    const PositConfig cfg = parse_format(format);
    std::vector<ArithOp> ops;
    if (op_token == "all") {
        ops = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div,
               ArithOp::Sqrt};
    } else {
        ops = {op_from_name(op_token)};
    }
    if (exhaustive && cfg.ps > 16) {
        err << "error: exhaustive mode unsupported for ps > 16; use --samples\n";
        return 2;
    }
    const oracle::ImplFn impl = [](const PositConfig& c, ArithOp o, PositBits a,
                                   PositBits b) { return apply(c, o, a, b); };
    bool all_ok = true;
    for (const ArithOp op : ops) {
        const oracle::MismatchReport report =
            exhaustive ? oracle::exhaustive_check(cfg, op, impl)
                       : oracle::sampled_check(cfg, op, impl, samples, seed);
        out << cfg.name() << " " << op_name(op) << ": " << report.checked
            << " checked, " << report.mismatches.size() << " mismatches\n";
        if (!report.ok()) {
            all_ok = false;
            out << report.to_text();
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_bench(bool level1, bool level2,
              const std::vector<std::string>& backends, bool check_paper,
              const std::string& json_path, const std::string& data_dir,
              std::uint64_t seed, std::ostream& out, std::ostream& err) {
    int status = 0;
    std::string json_l1, json_l2;
    if (level1) {
        const auto reports = bench::run_level1(backends);
        out << bench::level1_table(reports);
        json_l1 = bench::level1_json(reports);
        if (check_paper) {
            const auto check = bench::check_level1(reports);
            if (check.ok) {
                out << "accuracy table check: ok\n";
            } else {
                out << "accuracy table check: FAILED\n" << check.diagnostics;
                status = 1;
            }
        }
    }
    if (level2) {
        const std::string path = data_dir + "/iris.csv";
        bench::IrisData iris;
        try {
            iris = bench::load_iris_csv(path);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        bench::Level2Options opt;
        opt.mm_seed = seed;
        const auto runs = bench::run_level2(backends, iris, opt);
        out << bench::level2_table(runs);
        json_l2 = bench::level2_json(runs);
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        f << "{\n\"level1\": " << (json_l1.empty() ? "null" : json_l1)
          << ",\n\"level2\": " << (json_l2.empty() ? "null" : json_l2)
          << "\n}\n";
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"posit arithmetic toolbox"};
    app.require_subcommand(1);

    auto* inspect = app.add_subcommand("inspect", "break a pattern into fields");
    std::string format = "p32";
    std::string pattern;
    inspect->add_option("--format", format, "posit format (p8/p16/p32/p<ps>e<es>)");
    inspect->add_option("pattern", pattern, "hex bit pattern")->required();

    auto* convert = app.add_subcommand("convert", "convert between formats");
    std::string from, to, value;
    convert->add_option("--from", from, "source format (pN/f32/f64)")->required();
    convert->add_option("--to", to, "target format")->required();
    convert->add_option("value", value, "decimal value or hex pattern")->required();

    auto* verify = app.add_subcommand("verify", "check arithmetic against the exact oracle");
    std::string vformat = "p8";
    std::string op = "all";
    bool exhaustive = false;
    bool vall = false;
    std::uint64_t samples = 100000;
    std::uint64_t seed = oracle::kDefaultSeed;
    verify->add_option("--format", vformat, "posit format")->required();
    verify->add_option("--op", op, "add|sub|mul|div|sqrt|all");
    verify->add_flag("--all", vall, "verify every operation");
    verify->add_flag("--exhaustive", exhaustive, "full operand space (ps <= 16)");
    verify->add_option("--samples", samples, "sample count for sampled mode");
    verify->add_option("--seed", seed, "sampling seed");

    auto* bench = app.add_subcommand("bench", "run the accuracy benchmarks");
    bool level1 = false, level2 = false, check_paper = false;
    std::string backends_csv = "f32,p8,p16,p32";
    std::string json_path;
    std::string data_dir = std::getenv("POSIT_DATA_DIR")
                               ? std::getenv("POSIT_DATA_DIR")
                               : "data";
    std::uint64_t bseed = 42;
    bench->add_flag("--level1", level1, "constant-series benchmarks");
    bench->add_flag("--level2", level2, "ML kernels on the iris dataset");
    bench->add_option("--backends", backends_csv, "comma-separated backend list");
    bench->add_flag("--check-paper", check_paper,
                    "compare digit counts against the published table");
    bench->add_option("--json", json_path, "write reports as JSON");
    bench->add_option("--data", data_dir, "dataset directory");
    bench->add_option("--seed", bseed, "matrix generator seed");

    std::vector<std::string> argv_copy = args;
    std::vector<const char*> argv;
    argv.push_back("positool");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (inspect->parsed()) return cmd_inspect(format, pattern, out);
        if (convert->parsed()) return cmd_convert(from, to, value, out);
        if (verify->parsed())
            return cmd_verify(vformat, vall ? "all" : op, exhaustive, samples,
                              seed, out, err);
        if (bench->parsed()) {
            if (!level1 && !level2) level1 = true;
            std::vector<std::string> backends;
            std::stringstream ss(backends_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) backends.push_back(tok);
            return cmd_bench(level1, level2, backends, check_paper, json_path,
                             data_dir, bseed, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace posit::cli
