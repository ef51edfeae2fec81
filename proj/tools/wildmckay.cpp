// wildmckay: exact-arithmetic verification tool for three-dimensional wild
// quotient singularities in characteristic 3.
//
// Subcommands:
//   verify   one group: normal form, representation, conjugacy, triangulation,
//            Euler characteristic
//   sweep    all admissible groups of a kind up to a bound (CSV or JSON)
//   invring  invariant ring, resolution charts, quotient presentations,
//            exhaustive singular-locus scans
//   fan      triangulated junior simplex as JSON or SVG
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage/setup error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wildmckay/fan_export.hpp"
#include "wildmckay/pipeline.hpp"

namespace {

wmk::GroupKind parse_kind(const std::string& s) {
    if (s == "c3") return wmk::GroupKind::C3;
    if (s == "s3") return wmk::GroupKind::S3;
    throw CLI::ValidationError("--kind", "expected 'c3' or 's3'");
}

// "1,2,4;0,1,1" -> two residue triples
std::vector<wmk::Residue> parse_generators(const std::string& text) {
    std::vector<wmk::Residue> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::stringstream ps(part);
        std::string num;
        std::vector<int64_t> vals;
        while (std::getline(ps, num, ',')) vals.push_back(std::stoll(num));
        if (vals.size() != 3)
            throw CLI::ValidationError("--gens", "each generator needs three integers");
        out.push_back({vals[0], vals[1], vals[2]});
    }
    if (out.empty()) throw CLI::ValidationError("--gens", "no generators given");
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw wmk::IoError("cannot open output file: " + path);
    f << content;
    if (!f) throw wmk::IoError("write failed: " + path);
}

int emit_report(const wmk::VerificationReport& rep, const std::string& out,
                const std::string& format) {
    if (format == "json")
        write_output(out, rep.to_json_string());
    else
        write_output(out, rep.to_text());
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of wild quotient threefold invariants"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "INI file with per-subcommand sections, e.g. [verify] kind=s3");

    std::string kind_str = "c3";
    int64_t r = 7;
    std::string gens_str;
    std::string out_path;
    std::string format = "text";
    int64_t max_r = 13;
    int64_t max_degree = 14;
    std::string fields = "3,9";
    int64_t filtration = 8;

    CLI::App* verify = app.add_subcommand("verify", "verify a single group end to end");
    verify->fallthrough();
    verify->add_option("--kind", kind_str, "group kind: c3 or s3")->capture_default_str();
    verify->add_option("--r", r, "diagonal order r (coprime to 3)")->capture_default_str();
    verify->add_option("--gens", gens_str,
                       "diagonal generators, e.g. \"1,2,4\" or \"1,0,6;0,1,6\"");
    verify->add_option("--out", out_path, "output file ('-' or empty: stdout)");
    verify->add_option("--format", format, "text or json")->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "enumerate all admissible groups up to --max-r");
    sweep->fallthrough();
    sweep->add_option("--kind", kind_str, "group kind: c3 or s3")->capture_default_str();
    sweep->add_option("--max-r", max_r, "largest diagonal order to try")->capture_default_str();
    sweep->add_option("--out", out_path, "output file ('-' or empty: stdout)");
    sweep->add_option("--format", format, "csv or json")->capture_default_str();

    CLI::App* invring = app.add_subcommand(
        "invring", "verify the invariant ring, resolution charts and quotient scans");
    invring->fallthrough();
    invring->add_option("--max-degree", max_degree, "series audit bound")->capture_default_str();
    invring->add_option("--fields", fields, "comma list of scan field sizes (powers of 3)")
        ->capture_default_str();
    invring->add_option("--filtration", filtration, "presentation dimension bound")
        ->capture_default_str();
    invring->add_option("--out", out_path, "output file ('-' or empty: stdout)");
    invring->add_option("--format", format, "text or json")->capture_default_str();

    CLI::App* fan = app.add_subcommand("fan", "export the triangulated junior simplex");
    fan->fallthrough();
    fan->add_option("--kind", kind_str, "group kind: c3 or s3")->capture_default_str();
    fan->add_option("--r", r, "diagonal order r (coprime to 3)")->capture_default_str();
    fan->add_option("--gens", gens_str, "diagonal generators (c3 kind)");
    fan->add_option("--out", out_path, "output file ('-' or empty: stdout)");
    fan->add_option("--format", format, "json or svg")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            wmk::GroupKind kind = parse_kind(kind_str);
            std::vector<wmk::Residue> gens;
            if (!gens_str.empty())
                gens = parse_generators(gens_str);
            else if (kind == wmk::GroupKind::C3)
                gens = {wmk::Residue{1, 2, wmk::mod_nonneg(r - 3, r)}};
            else
                gens = {wmk::Residue{1, 0, wmk::mod_nonneg(-1, r)},
                        wmk::Residue{0, 1, wmk::mod_nonneg(-1, r)}};
            wmk::GroupSpec spec{kind, r, gens};
            return emit_report(wmk::verify_group_report(spec), out_path, format);
        }
        if (app.got_subcommand(sweep)) {
            wmk::GroupKind kind = parse_kind(kind_str);
            std::vector<wmk::SweepRow> rows = kind == wmk::GroupKind::C3
                                                  ? wmk::sweep_cyclic(max_r)
                                                  : wmk::sweep_symmetric(max_r);
            bool all = true;
            for (const wmk::SweepRow& x : rows) all = all && x.match;
            if (format == "json")
                write_output(out_path, wmk::sweep_to_json(rows).dump(2) + "\n");
            else
                write_output(out_path, wmk::sweep_to_csv(rows));
            return all ? 0 : 1;
        }
        if (app.got_subcommand(invring)) {
            std::vector<unsigned> degrees;
            std::stringstream ss(fields);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int64_t q = std::stoll(tok);
                unsigned m = 0;
                for (int64_t t = q; t > 1; t /= 3) {
                    if (t % 3 != 0)
                        throw CLI::ValidationError("--fields", "field sizes must be powers of 3");
                    ++m;
                }
                if (q < 3) throw CLI::ValidationError("--fields", "field sizes must be >= 3");
                degrees.push_back(m);
            }
            return emit_report(wmk::invariant_ring_report(max_degree, degrees, filtration),
                               out_path, format);
        }
        if (app.got_subcommand(fan)) {
            wmk::GroupKind kind = parse_kind(kind_str);
            wmk::Triangulation tri;
            wmk::OrbitClassification cls;
            int64_t chi = 0;
            if (kind == wmk::GroupKind::S3) {
                tri = wmk::triangulate_s3(r);
            } else {
                std::vector<wmk::Residue> gens =
                    gens_str.empty()
                        ? std::vector<wmk::Residue>{wmk::Residue{1, 2, wmk::mod_nonneg(r - 3, r)}}
                        : parse_generators(gens_str);
                wmk::GroupSpec spec{kind, r, gens};
                wmk::GroupCtx ctx = wmk::make_ctx(spec);
                tri = wmk::triangulate_c3(wmk::lattice_for(ctx));
            }
            cls = wmk::orbit_classify(tri);
            chi = wmk::euler_characteristic(cls, kind);
            if (format == "svg")
                write_output(out_path, wmk::fan_to_svg(tri, cls));
            else
                write_output(out_path, wmk::fan_to_json(tri, cls, chi).dump(2) + "\n");
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmk::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
