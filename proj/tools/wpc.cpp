// wpc: exact classification of finite degree-shift quotients of weighted
// projective lines. Every subcommand wraps exactly one library operation and
// prints JSON (tables also speak Markdown). Exit codes: 0 success, 1 domain
// error (with an error object on stdout), 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpc/classify.hpp"
#include "wpc/expr.hpp"
#include "wpc/lgroup.hpp"
#include "wpc/params.hpp"
#include "wpc/quotient.hpp"
#include "wpc/serialize.hpp"
#include "wpc/tables.hpp"
#include "wpc/tube.hpp"

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Comma-separated generator expressions; the literal "tL" names the full
// torsion subgroup; the empty string generates the trivial subgroup.
wpc::Subgroup parse_subgroup(const wpc::WeightType& p, const std::string& text,
                             std::uint64_t bound) {
    if (trim(text) == "tL")
        return wpc::full_torsion_subgroup(p, bound);
    std::vector<wpc::LElement> gens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string part = trim(text.substr(pos, comma - pos));
        if (!part.empty())
            gens.push_back(wpc::parse_element(p, part));
        pos = comma + 1;
    }
    return wpc::subgroup_generate(p, gens, bound);
}

void emit(const wpc::json& j) {
    std::cout << j.dump() << "\n";
}

void emit_rows(const std::vector<wpc::TableRow>& rows, const std::string& format) {
    if (format == "markdown")
        std::cout << wpc::markdown_table(rows);
    else
        emit(wpc::json_rows(rows));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quotients of weighted projective lines under finite degree-shift actions"};
    app.require_subcommand(1);

    std::string weights_s;
    std::string subgroup_s;
    std::string lambda_s;
    std::string row_s;
    std::string which;
    std::string format = "json";
    std::uint64_t bound = wpc::kDefaultTorsionBound;
    long long genus = 2;
    long long rank = 1, order = 1, image_k = 1;
    int n_max = 6, p_max = 3, slack = 0;

    auto format_opt = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or markdown")
            ->check(CLI::IsMember({"json", "markdown"}));
    };

    CLI::App* cmd_quotient = app.add_subcommand(
        "quotient", "Genus and weight data of the quotient by a torsion subgroup");
    cmd_quotient->add_option("--weights", weights_s, "ambient weights, e.g. 2,3,4")->required();
    cmd_quotient->add_option("--subgroup", subgroup_s,
                             "generator expressions, e.g. \"x1-2*x3\"; \"tL\" = full torsion")
        ->required();
    cmd_quotient->add_option("--bound", bound, "torsion materialization cap");

    CLI::App* cmd_torsion = app.add_subcommand("torsion", "The full torsion subgroup");
    cmd_torsion->add_option("--weights", weights_s)->required();
    cmd_torsion->add_option("--bound", bound);

    CLI::App* cmd_subgroups = app.add_subcommand("subgroups", "Every subgroup of the torsion group");
    cmd_subgroups->add_option("--weights", weights_s)->required();
    cmd_subgroups->add_option("--bound", bound);

    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "Representation type of the weighted line: domestic, tubular, or wild");
    cmd_classify->add_option("--weights", weights_s)->required();

    CLI::App* cmd_table = app.add_subcommand("table", "Classification tables");
    cmd_table->add_option("kind", which, "domestic | tubular | genus2 | arnold")
        ->required()
        ->check(CLI::IsMember({"domestic", "tubular", "genus2", "arnold"}));
    cmd_table->add_option("--n-max", n_max, "domestic family bound");
    cmd_table->add_option("--p-max", p_max, "domestic coprime-pair bound");
    cmd_table->add_option("--slack", slack, "widen every search bound (genus2)");
    format_opt(cmd_table);

    CLI::App* cmd_hyper = app.add_subcommand(
        "hyperelliptic", "The weight type and subgroup with smooth genus-g quotient");
    cmd_hyper->add_option("--genus", genus)->required();

    CLI::App* cmd_tube = app.add_subcommand("tube", "Tube decomposition under a finite action");
    cmd_tube->add_option("--rank", rank, "tube rank p")->required();
    cmd_tube->add_option("--order", order, "acting group order n")->required();
    cmd_tube->add_option("--image-k", image_k, "rotation image generator power k")->required();

    CLI::App* cmd_jinv = app.add_subcommand("jinv", "j-invariant of a 4-point parameter");
    cmd_jinv->add_option("--lambda", lambda_s, "exact rational, e.g. 25/16")->required();

    CLI::App* cmd_gamma = app.add_subcommand("gamma", "Anharmonic orbit of a parameter");
    cmd_gamma->add_option("--lambda", lambda_s)->required();

    CLI::App* cmd_transform = app.add_subcommand(
        "transform", "Quotient parameter of a 4-point tubular row at a rational lambda");
    cmd_transform
        ->add_option("--row", row_s, "x1-x2 x3-x4 x1-x3 x2-x4 x1-x4 x2-x3 klein omega")
        ->required();
    cmd_transform->add_option("--lambda", lambda_s)->required();

    CLI::App* cmd_search = app.add_subcommand(
        "search", "Exhaustive smooth-quotient census at a given genus (>= 2)");
    cmd_search->add_option("--genus", genus)->required();
    cmd_search->add_option("--slack", slack);
    format_opt(cmd_search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_quotient->parsed()) {
            wpc::WeightType p = wpc::parse_weights(weights_s);
            wpc::Subgroup h = parse_subgroup(p, subgroup_s, bound);
            emit(wpc::json_quotient(wpc::quotient_curve(p, h)));
        } else if (cmd_torsion->parsed()) {
            wpc::WeightType p = wpc::parse_weights(weights_s);
            wpc::json out = wpc::json_subgroup(p, wpc::full_torsion_subgroup(p, bound));
            out["weights"] = wpc::json_weights(p);
            emit(out);
        } else if (cmd_subgroups->parsed()) {
            wpc::WeightType p = wpc::parse_weights(weights_s);
            std::vector<wpc::Subgroup> subs = wpc::enumerate_subgroups(p, bound);
            wpc::json list = wpc::json::array();
            for (const wpc::Subgroup& h : subs)
                list.push_back(wpc::json_subgroup(p, h));
            emit(wpc::json{{"weights", wpc::json_weights(p)},
                           {"count", subs.size()},
                           {"subgroups", list}});
        } else if (cmd_classify->parsed()) {
            wpc::WeightType p = wpc::parse_weights(weights_s);
            emit(wpc::json{{"type", wpc::wpl_type_name(wpc::wpl_type(p))}});
        } else if (cmd_table->parsed()) {
            if (which == "domestic")
                emit_rows(wpc::table_domestic(n_max, p_max), format);
            else if (which == "tubular")
                emit_rows(wpc::table_tubular(), format);
            else if (which == "genus2")
                emit_rows(wpc::table_genus2(slack), format);
            else
                emit_rows(wpc::table_arnold(), format);
        } else if (cmd_hyper->parsed()) {
            auto [p, h] = wpc::hyperelliptic_subgroup(genus);
            wpc::json out;
            out["weights"] = wpc::json_weights(p);
            out["subgroup"] = wpc::json_subgroup(p, h);
            out["quotient"] = wpc::json_quotient(wpc::quotient_curve(p, h));
            emit(out);
        } else if (cmd_tube->parsed()) {
            wpc::TubeAction a{rank, order, image_k};
            a.validate();
            emit(wpc::json_tubes(wpc::tube_quotient(a)));
        } else if (cmd_jinv->parsed()) {
            emit(wpc::json{{"j", wpc::json_rational(
                                     wpc::j_invariant(wpc::Rational::parse(lambda_s)))}});
        } else if (cmd_gamma->parsed()) {
            emit(wpc::json_param_orbit(wpc::gamma_orbit(wpc::Rational::parse(lambda_s))));
        } else if (cmd_transform->parsed()) {
            wpc::TubularTransform tr = wpc::tubular_transform_by_row(trim(row_s));
            wpc::json out =
                wpc::json_param_orbit(wpc::tubular_param_transform(tr, wpc::Rational::parse(lambda_s)));
            out["transform"] = wpc::tubular_transform_name(tr);
            emit(out);
        } else if (cmd_search->parsed()) {
            emit_rows(wpc::search_genus(genus, slack), format);
        }
    } catch (const wpc::Error& e) {
        emit(wpc::json{{"error", wpc::json{{"code", e.code()}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        emit(wpc::json{{"error", wpc::json{{"code", "internal_error"}, {"message", e.what()}}}});
        return 1;
    }
    return 0;
}
