// ncx: exact computation with N-complexes over prime fields.
//
// Exit codes: 0 success, 1 malformed input, 2 mathematical validation
// failure. Input files hold the canonical JSON document form; "-" reads from
// stdin. All output is deterministic.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncx/cohomology.hpp"
#include "ncx/decompose.hpp"
#include "ncx/homext.hpp"
#include "ncx/io.hpp"
#include "ncx/tensor.hpp"

namespace {

using nlohmann::json;

struct LoadedComplex {
    std::string name;
    std::string bytes;
    ncx::NComplex complex;
};

std::string read_input(const std::string& path) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ncx::ParseError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

LoadedComplex load_complex(const std::string& path) {
    std::string bytes = read_input(path);
    ncx::NComplex m = ncx::deserialize(bytes);
    return {path, std::move(bytes), std::move(m)};
}

void write_document(const std::string& path, const ncx::NComplex& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ncx::ParseError("cannot open " + path + " for writing");
    out << ncx::serialize(m);
}

json input_echo(const LoadedComplex& in) {
    return json{{"name", in.name}, {"digest", ncx::digest_hex(in.bytes)}};
}

void print_report(const std::string& command, const json& inputs, const json& result,
                  const std::string& status = "ok") {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["result"] = result;
    report["status"] = status;
    std::cout << report.dump() << "\n";
}

json multiset_json(const ncx::SummandMultiset& ms) {
    json arr = json::array();
    for (const auto& [part, count] : ms)
        arr.push_back(json{{"i", part.start}, {"l", part.length}, {"n", count}});
    return arr;
}

ncx::RootOfUnity parse_root(const ncx::PrimeField& field, int order, const std::string& text) {
    if (text == "auto") return ncx::RootOfUnity::primitive(field, order);
    long long value = 0;
    try {
        std::size_t used = 0;
        value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw ncx::ParseError("--q expects \"auto\" or an integer, got \"" + text + "\"");
    }
    return ncx::RootOfUnity::from_value(field, field.reduce(value), order);
}

struct WindowOption {
    int lo = 0;
    int hi = 3;
};

WindowOption parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ncx::ParseError("--window expects LO:HI, got \"" + text + "\"");
    try {
        WindowOption w;
        w.lo = std::stoi(text.substr(0, colon));
        w.hi = std::stoi(text.substr(colon + 1));
        return w;
    } catch (const std::exception&) {
        throw ncx::ParseError("--window expects LO:HI, got \"" + text + "\"");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with N-complexes of F_p vector spaces"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON output");
    int exit_code = 0;

    // validate
    {
        auto* cmd = app.add_subcommand("validate", "check shape coherence and the nilpotency law");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file, "complex document (\"-\" for stdin)")->required();
        cmd->callback([&, file] {
            LoadedComplex in = load_complex(*file);
            ncx::Validation v = ncx::validate(in.complex);
            if (json_mode) {
                json result{{"valid", v.ok}};
                if (!v.ok) {
                    result["message"] = v.message;
                    result["degree"] = *v.degree;
                }
                print_report("validate", json::array({input_echo(in)}), result,
                             v.ok ? "ok" : "invalid");
            } else {
                std::cout << (v.ok ? "ok" : v.message) << "\n";
            }
            if (!v.ok) exit_code = 2;
        });
    }

    // ah
    {
        auto* cmd = app.add_subcommand("ah", "amplitude cohomology table");
        auto file = std::make_shared<std::string>();
        auto table_mode = std::make_shared<bool>(false);
        cmd->add_option("file", *file, "complex document")->required();
        cmd->add_flag("--table", *table_mode, "render as a table (default)");
        cmd->callback([&, file] {
            LoadedComplex in = load_complex(*file);
            ncx::AHTable table = ncx::ah_table(in.complex);
            if (json_mode) {
                json entries = json::array();
                for (const auto& [key, dim] : table.entries)
                    entries.push_back(json{{"i", key.first}, {"a", key.second}, {"dim", dim}});
                print_report("ah", json::array({input_echo(in)}),
                             json{{"N", table.order}, {"entries", entries}});
            } else {
                std::cout << ncx::render_ah_table(table, in.complex);
            }
        });
    }

    // decompose
    {
        auto* cmd = app.add_subcommand("decompose", "Krull-Schmidt summand multiset");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file, "complex document")->required();
        cmd->callback([&, file] {
            LoadedComplex in = load_complex(*file);
            ncx::SummandMultiset ms = ncx::decompose(in.complex);
            if (json_mode)
                print_report("decompose", json::array({input_echo(in)}),
                             json{{"summands", multiset_json(ms)}});
            else
                std::cout << ncx::render_multiset(ms);
        });
    }

    // tensor
    {
        auto* cmd = app.add_subcommand("tensor", "q-deformed tensor product");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        auto q_text = std::make_shared<std::string>("auto");
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("fileA", *file_a, "left factor")->required();
        cmd->add_option("fileB", *file_b, "right factor")->required();
        cmd->add_option("--q", *q_text, "root of unity: auto or a value of exact order N");
        cmd->add_option("-o,--output", *out_path, "write the product document here");
        cmd->callback([&, file_a, file_b, q_text, out_path] {
            LoadedComplex a = load_complex(*file_a);
            LoadedComplex b = load_complex(*file_b);
            ncx::RootOfUnity root = parse_root(a.complex.field(), a.complex.order(), *q_text);
            ncx::NComplex product = ncx::tensor(a.complex, b.complex, root);
            if (!out_path->empty()) write_document(*out_path, product);
            if (json_mode)
                print_report("tensor", json::array({input_echo(a), input_echo(b)}),
                             json{{"q", root.q.value},
                                  {"document", json::parse(ncx::serialize(product))}});
            else
                std::cout << ncx::summary_line(product);
        });
    }

    // contract
    {
        auto* cmd = app.add_subcommand("contract", "2-complex contraction");
        auto file = std::make_shared<std::string>();
        auto initial = std::make_shared<int>(0);
        auto amplitude = std::make_shared<int>(1);
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("file", *file, "complex document")->required();
        cmd->add_option("-e,--initial", *initial, "initial condition")->required();
        cmd->add_option("-a,--amplitude", *amplitude, "contraction amplitude")->required();
        cmd->add_option("-o,--output", *out_path, "write the contraction document here");
        cmd->callback([&, file, initial, amplitude, out_path] {
            LoadedComplex in = load_complex(*file);
            ncx::NComplex c = ncx::contract(in.complex, *initial, *amplitude);
            if (!out_path->empty()) write_document(*out_path, c);
            if (json_mode)
                print_report("contract", json::array({input_echo(in)}),
                             json{{"document", json::parse(ncx::serialize(c))}});
            else
                std::cout << ncx::summary_line(c);
        });
    }

    // hom
    {
        auto* cmd = app.add_subcommand("hom", "dimension of the chain-map space");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        cmd->add_option("fileA", *file_a, "source complex")->required();
        cmd->add_option("fileB", *file_b, "target complex")->required();
        cmd->callback([&, file_a, file_b] {
            LoadedComplex a = load_complex(*file_a);
            LoadedComplex b = load_complex(*file_b);
            int dim = ncx::hom_dim(a.complex, b.complex);
            if (json_mode)
                print_report("hom", json::array({input_echo(a), input_echo(b)}),
                             json{{"hom_dim", dim}});
            else
                std::cout << dim << "\n";
        });
    }

    // ext
    {
        auto* cmd = app.add_subcommand("ext", "Ext dimension in the positive category");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        auto degree = std::make_shared<int>(0);
        cmd->add_option("fileA", *file_a, "first argument")->required();
        cmd->add_option("fileB", *file_b, "second argument")->required();
        cmd->add_option("-n,--degree", *degree, "Ext degree")->required();
        cmd->callback([&, file_a, file_b, degree] {
            LoadedComplex a = load_complex(*file_a);
            LoadedComplex b = load_complex(*file_b);
            int dim = ncx::ext_dim(a.complex, b.complex, *degree);
            if (json_mode)
                print_report("ext", json::array({input_echo(a), input_echo(b)}),
                             json{{"ext_dim", dim}, {"n", *degree}});
            else
                std::cout << dim << "\n";
        });
    }

    // fusion
    {
        auto* cmd = app.add_subcommand("fusion", "Clebsch-Gordan fusion of two indecomposables");
        auto order = std::make_shared<int>(0);
        auto p = std::make_shared<std::uint32_t>(0);
        auto args = std::make_shared<std::vector<int>>();
        cmd->add_option("--N", *order, "nilpotency order")->required();
        cmd->add_option("--p", *p, "field modulus (must admit an order-N root)")->required();
        cmd->add_option("iujv", *args, "start/length pairs: i u j v")->expected(4);
        cmd->callback([&, order, p, args] {
            if (args->size() != 4) throw ncx::ParseError("fusion expects i u j v");
            int i = (*args)[0], u = (*args)[1], j = (*args)[2], v = (*args)[3];
            ncx::PrimeField field(*p);
            ncx::RootOfUnity root = ncx::RootOfUnity::primitive(field, *order);
            ncx::SummandMultiset expected = ncx::clebsch_gordan(*order, i, u, j, v);
            ncx::SummandMultiset got = ncx::decompose(
                ncx::tensor(ncx::indecomposable(field, *order, i, u),
                            ncx::indecomposable(field, *order, j, v), root));
            if (expected != got)
                throw ncx::Error("tensor decomposition disagrees with the closed form");
            if (json_mode)
                print_report("fusion", json::array(),
                             json{{"summands", multiset_json(expected)}});
            else
                std::cout << ncx::render_multiset_inline(expected);
        });
    }

    // random
    {
        auto* cmd = app.add_subcommand("random", "seeded random valid complex");
        auto order = std::make_shared<int>(0);
        auto p = std::make_shared<std::uint32_t>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto window_text = std::make_shared<std::string>("0:3");
        auto max_mult = std::make_shared<int>(6);
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--N", *order, "nilpotency order")->required();
        cmd->add_option("--p", *p, "field modulus")->required();
        cmd->add_option("--seed", *seed, "PRNG seed");
        cmd->add_option("--window", *window_text, "start window LO:HI");
        cmd->add_option("--max", *max_mult, "total multiplicity bound");
        cmd->add_option("-o,--output", *out_path, "write the document here");
        cmd->callback([&, order, p, seed, window_text, max_mult, out_path] {
            WindowOption w = parse_window(*window_text);
            ncx::RandomComplex rc =
                ncx::random_ncomplex(ncx::PrimeField(*p), *order, w.lo, w.hi, *max_mult, *seed);
            if (!out_path->empty()) write_document(*out_path, rc.complex);
            if (json_mode)
                print_report("random", json::array(),
                             json{{"document", json::parse(ncx::serialize(rc.complex))},
                                  {"summands", multiset_json(rc.summands)}});
            else
                std::cout << ncx::summary_line(rc.complex);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ncx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ncx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
