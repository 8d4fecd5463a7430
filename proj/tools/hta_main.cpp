// hta — exact (2k+1)-ary chain products on tensor spaces, associativity-law
// checking, current (tensor-product) algebras and free-operad computations,
// all over canonical JSON documents.
//
// Exit codes: 0 success / law holds, 1 law fails, 2 parse error,
// 3 shape mismatch, 4 flag misuse, 5 unsupported arity or target.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hta/hta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFails = 1;
constexpr int kExitParse = 2;
constexpr int kExitShape = 3;
constexpr int kExitFlags = 4;
constexpr int kExitUnsupported = 5;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hta::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hta::Json load_json(const std::string& path) { return hta::json_from_text(read_input(path)); }

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("HTA_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            throw hta::ParseError("HTA_SEED must be an unsigned integer");
        }
    }
    return fallback;
}

void emit(const hta::Json& j) { std::cout << hta::canonical_dump(j) << "\n"; }

struct FlagMisuse {
    std::string message;
};

int run_product(const std::string& spec_path, const std::vector<std::string>& files) {
    const hta::ProductSpec spec = hta::product_spec_from_json(load_json(spec_path));
    std::vector<hta::Tensor> args;
    args.reserve(files.size());
    for (const auto& f : files) args.push_back(hta::tensor_from_json(load_json(f)));
    const hta::Tensor result = hta::mu_chain(spec, args);
    emit(hta::tensor_to_json(result));
    return kExitOk;
}

int run_check(const std::string& table_path, const std::string& law, const std::string& sigma_csv) {
    const hta::NAryTable table = hta::table_from_json(load_json(table_path));

    const bool needs_sigma = law == "sigma-total" || law == "sigma-partial";
    if (needs_sigma && sigma_csv.empty())
        throw FlagMisuse{"--sigma is required for law '" + law + "'"};
    if (!needs_sigma && !sigma_csv.empty())
        throw FlagMisuse{"--sigma only applies to the sigma-* laws"};

    hta::LawReport report;
    if (needs_sigma) {
        std::vector<int> images;
        std::stringstream ss(sigma_csv);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            try {
                images.push_back(std::stoi(piece));
            } catch (...) {
                throw FlagMisuse{"--sigma must be a comma-separated image list"};
            }
        }
        if (static_cast<int>(images.size()) != table.n())
            throw FlagMisuse{"--sigma degree must equal the table arity"};
        std::optional<hta::Permutation> sigma;
        try {
            sigma.emplace(images);
        } catch (const hta::Error&) {
            throw FlagMisuse{"--sigma must be a permutation of 1..n"};
        }
        report = law == "sigma-total" ? hta::check_sigma_total(table, *sigma)
                                      : hta::check_sigma_partial(table, *sigma);
    } else if (law == "total") {
        report = hta::check_total(table);
    } else if (law == "partial") {
        report = hta::check_partial(table);
    } else {
        throw FlagMisuse{"unknown law '" + law + "'"};
    }

    emit(hta::law_report_to_json(report));
    return report.holds ? kExitOk : kExitLawFails;
}

int run_current(const std::string& left_path, const std::string& right_path, int k) {
    const hta::NAryTable left = hta::table_from_json(load_json(left_path));
    const hta::NAryTable right = hta::table_from_json(load_json(right_path));
    const hta::ProductAlgebra algebra = hta::tensor_algebra(left, right);
    const hta::CurrentIffResult iff = hta::verify_current_iff(left, right, k);

    hta::Json j;
    j["k"] = k;
    j["left"] = hta::table_to_json(algebra.left);
    j["right"] = hta::table_to_json(algebra.right);
    j["table"] = hta::table_to_json(algebra.table);
    j["forward"] = iff.forward;
    j["backward"] = iff.backward;
    emit(j);
    return kExitOk;
}

int run_operad(int arity, const std::string& target) {
    if (target != "dims" && target != "dual")
        throw hta::UnsupportedArity("operad target must be 'dims' or 'dual'");
    if (target == "dual" && arity != 5)
        throw hta::UnsupportedArity("the dual computation is defined at arity 5");

    if (target == "dims") {
        const hta::OperadDims dims = hta::operad_dims(arity);
        hta::Json j;
        j["arity"] = dims.arity;
        j["free_dim"] = dims.free_dim;
        j["ideal_rank"] = dims.ideal_rank;
        j["quotient_dim"] = dims.quotient_dim;
        emit(j);
    } else {
        const hta::DualOperadSummary s = hta::dual_operad_summary();
        hta::Json j;
        j["perp_dim"] = s.perp_dim;
        j["matches_partial_closure"] = s.matches_partial_closure;
        emit(j);
    }
    return kExitOk;
}

// Floating-point ternary chain kernel, timing only; numeric output carries
// no correctness contract.
int run_bench(int dim, int k, int iters) {
    if (dim < 1 || k < 1 || iters < 1) throw FlagMisuse{"bench needs positive --dim, --k, --iters"};
    std::mt19937_64 rng(seed_from_env(12345));
    const std::size_t n = static_cast<std::size_t>(dim);
    const std::size_t cube = n * n * n;
    const int arity = 2 * k + 1;

    std::vector<std::vector<double>> args(static_cast<std::size_t>(arity), std::vector<double>(cube));
    for (auto& a : args)
        for (auto& x : a) x = static_cast<double>(rng() % 19) - 9.0;

    auto at = [n](const std::vector<double>& d, std::size_t i, std::size_t j, std::size_t t) {
        return d[(i * n + j) * n + t];
    };

    double checksum = 0.0;
    const auto start = std::chrono::steady_clock::now();
    for (int it = 0; it < iters; ++it) {
        // state[i*n+j -> t], chained through dual contractions
        std::vector<double> state = args.back();
        for (int pos = arity - 2; pos >= 0; --pos) {
            const auto& next = args[static_cast<std::size_t>(pos)];
            if ((arity - 1 - pos) % 2 == 1) {
                // contract with a dual: M[k][lm] then apply next as map E^2 -> E
                std::vector<double> mid(n * cube, 0.0);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t kk = 0; kk < n; ++kk)
                            for (std::size_t l = 0; l < n; ++l)
                                for (std::size_t m = 0; m < n; ++m)
                                    mid[((i * n + j) * n + l) * n + m] +=
                                        at(state, i, j, kk) * at(next, l, m, kk);
                state.swap(mid);
            } else {
                std::vector<double> out(cube, 0.0);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t l = 0; l < n; ++l)
                            for (std::size_t m = 0; m < n; ++m)
                                for (std::size_t t = 0; t < n; ++t)
                                    out[(i * n + j) * n + t] +=
                                        state[((i * n + j) * n + l) * n + m] * at(next, l, m, t);
                state.swap(out);
            }
        }
        checksum += state[0];
    }
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();

    hta::Json j;
    j["dim"] = dim;
    j["k"] = k;
    j["iters"] = iters;
    j["seconds"] = seconds;
    j["chains_per_second"] = seconds > 0 ? iters / seconds : 0.0;
    j["checksum"] = checksum;
    emit(j);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (2k+1)-ary tensor products, associativity checkers and operad lab"};
    app.require_subcommand(1);

    auto* product = app.add_subcommand("product", "evaluate a chain product on tensor JSON files");
    std::string spec_path;
    std::vector<std::string> tensor_files;
    product->add_option("--spec", spec_path, "ProductSpec JSON file")->required();
    product->add_option("files", tensor_files, "2k+1 tensor JSON files ('-' for stdin)")->required();

    auto* check = app.add_subcommand("check", "check an associativity law on a table");
    std::string table_path, law, sigma_csv;
    check->add_option("--law", law, "partial | total | sigma-partial | sigma-total")->required();
    check->add_option("--sigma", sigma_csv, "permutation image list, e.g. 3,2,1");
    check->add_option("table", table_path, "NAryTable JSON file ('-' for stdin)")->required();

    auto* current = app.add_subcommand("current", "build a tensor-product algebra and check both iff directions");
    std::string left_path, right_path;
    int current_k = 1;
    current->add_option("--left", left_path, "left factor table JSON")->required();
    current->add_option("--right", right_path, "right factor table JSON")->required();
    current->add_option("--k", current_k, "chain parameter k, arity 2k+1")->required();

    auto* operad = app.add_subcommand("operad", "free-operad dimensions and the dual-operad check");
    int arity = 5;
    std::string target;
    operad->add_option("--arity", arity, "3, 5 or 7")->required();
    operad->add_option("--target", target, "dims | dual")->required();

    auto* bench = app.add_subcommand("bench", "time the floating-point contraction kernel");
    int bench_dim = 8, bench_k = 1, bench_iters = 100;
    bench->add_option("--dim", bench_dim, "dimension of E");
    bench->add_option("--k", bench_k, "chain parameter");
    bench->add_option("--iters", bench_iters, "iterations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitFlags;
    }

    try {
        if (product->parsed()) return run_product(spec_path, tensor_files);
        if (check->parsed()) return run_check(table_path, law, sigma_csv);
        if (current->parsed()) return run_current(left_path, right_path, current_k);
        if (operad->parsed()) return run_operad(arity, target);
        if (bench->parsed()) return run_bench(bench_dim, bench_k, bench_iters);
    } catch (const FlagMisuse& e) {
        std::cerr << e.message << "\n";
        return kExitFlags;
    } catch (const hta::UnsupportedArity& e) {
        std::cerr << e.what() << "\n";
        return kExitUnsupported;
    } catch (const hta::PreconditionFailed& e) {
        std::cerr << e.what() << "\n";
        return kExitLawFails;
    } catch (const hta::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const hta::IndexOutOfRange& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const hta::DuplicateEntry& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const hta::Error& e) {
        // shape-category errors: ShapeMismatch, ArityMismatch, DimMismatch
        std::cerr << e.what() << "\n";
        return kExitShape;
    }
    return kExitFlags;
}
