#include "logbundle/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "logbundle/arrangement.hpp"
#include "logbundle/errors.hpp"
#include "logbundle/io.hpp"
#include "logbundle/monoidal.hpp"
#include "logbundle/quadrics.hpp"
#include "logbundle/restriction.hpp"
#include "logbundle/rng.hpp"
#include "logbundle/schwarzenberger.hpp"
#include "logbundle/steiner.hpp"

namespace logbundle::cli {

namespace {

using io::Json;

struct Options {
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    std::string out;
    bool pretty = false;
    std::vector<std::string> files;
    std::vector<long> numbers;
};

Json integer_json(const Integer& z) { return z.get_str(); }

Json param_json(const Param& p) { return Json::array({io::to_json(p.s), io::to_json(p.t)}); }

Json poly_record(const MultiPoly& p, bool with_text) {
    Json out{{"terms", io::to_json(p)}};
    if (with_text) out["text"] = p.to_string();
    return out;
}

Json verdict_json(const IntertwinerVerdict& v) {
    Json out{{"verdict", to_string(v.kind)}, {"solution_dim", v.solution_dim}};
    if (v.g_i.rows() > 0) out["g_i"] = io::to_json(v.g_i);
    if (v.g_w.rows() > 0) out["g_w"] = io::to_json(v.g_w);
    return out;
}

// An arrangement document ({forms}) or a tensor document ({slices}).
SteinerTensor tensor_or_arrangement(const Json& j) {
    if (j.is_object() && j.contains("slices")) return io::tensor_from(j);
    return fundamental_tensor(io::arrangement_from(j));
}

std::vector<Matrix> lines_from(const Json& j, std::size_t n) {
    const Json& list = j.is_object() ? (j.contains("lines") ? j.at("lines") : Json::array({j})) : j;
    if (!list.is_array() || list.empty()) throw InputError("expected a nonempty list of lines");
    std::vector<Matrix> out;
    for (const auto& l : list) out.push_back(io::span_from(l, n));
    return out;
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Matrix flat_rows_from(const Json& j) { return io::matrix_from(j.is_object() ? need(j, "rows") : j); }

std::size_t need_d(std::size_t n, std::size_t m) {
    if (n == 0 || m < 1 || (m - 1) % n != 0) throw DomainError("length_mismatch", "need n d + 1 points");
    return (m - 1) / n;
}

using Handler = std::function<Json(const Options&)>;

Json gp_check(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    std::vector<std::size_t> bad;
    if (!general_position(pts, &bad)) throw DomainError("general_position", "points not in general position", bad);
    return {{"general_position", true}, {"n", pts.front().n()}, {"m", pts.size()}};
}

Json associate_cmd(const Options& o) { return io::to_json(associated(io::arrangement_from(io::read_file(o.files.at(0))))); }

Json self_associated_cmd(const Options& o) {
    return {{"self_associated", is_self_associated(io::points_from(io::read_file(o.files.at(0))))}};
}

Json tensor_cmd(const Options& o) { return io::to_json(fundamental_tensor(io::arrangement_from(io::read_file(o.files.at(0))))); }

Json chern_cmd(const Options& o) {
    const long n = o.numbers.at(0), m = o.numbers.at(1);
    Json c = Json::array();
    for (const auto& x : chern_coeffs(n, m)) c.push_back(integer_json(x));
    return {{"n", n}, {"m", m}, {"chern", c}};
}

Json cohomology_cmd(const Options& o) {
    const SteinerTensor t = tensor_or_arrangement(io::read_file(o.files.at(0)));
    const long k = o.numbers.at(0);
    Json h = Json::array();
    for (const auto& x : cohomology_dims(t, k)) h.push_back(integer_json(x));
    return {{"k", k}, {"h", h}};
}

Json line_table(const Options& o, const std::function<void(const SteinerTensor&, const LineSpan&, Json&)>& fill) {
    const Arrangement a = io::arrangement_from(io::read_file(o.files.at(0)));
    const SteinerTensor t = fundamental_tensor(a);
    const auto lines = lines_from(io::read_file(o.files.at(1)), a.n());
    Json rows = Json::array();
    for (const auto& l : lines) {
        Json row{{"line", io::to_json(l)}};
        fill(t, LineSpan(l), row);
        rows.push_back(row);
    }
    return {{"generic_type", generic_splitting_type(static_cast<long>(a.n()), static_cast<long>(a.m()))},
            {"lines", rows}};
}

Json splitting_cmd(const Options& o) {
    return line_table(o, [](const SteinerTensor& t, const LineSpan& l, Json& row) {
        row["type"] = splitting_type(t, l);
        row["jumping"] = is_jumping(t, l);
        row["super_jumping"] = is_super_jumping(t, l);
    });
}

Json jump_cmd(const Options& o) {
    return line_table(o, [](const SteinerTensor& t, const LineSpan& l, Json& row) { row["jumping"] = is_jumping(t, l); });
}

Json super_jump_cmd(const Options& o) {
    return line_table(o, [](const SteinerTensor& t, const LineSpan& l, Json& row) {
        row["super_jumping"] = is_super_jumping(t, l);
    });
}

Json connection_cmd(const Options& o) {
    const Arrangement a = io::arrangement_from(io::read_file(o.files.at(0)));
    const Json q = io::read_file(o.files.at(1));
    const std::size_t n = a.n();
    const LineSpan l(io::span_from(need(q, "line"), n));
    const LineSpan lambda(io::span_from(need(q, "lambda"), n));
    const LineSpan image = connection_map(a, l, io::point_from(need(q, "x"), n), lambda,
                                          io::point_from(need(q, "x2"), n));
    return {{"line", io::to_json(image.rows)}};
}

Json jumping_curve_cmd(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    const unsigned d = static_cast<unsigned>(need_d(2, pts.size()));
    const MultiPoly f = curve_equation_p2(pts, d);
    return {{"d", d}, {"degree", f.degree()}, {"polynomial", io::to_json(f)}, {"text", f.to_string()}};
}

Json monoid_basis_cmd(const Options& o) {
    const Matrix rows = flat_rows_from(io::read_file(o.files.at(0)));
    const long d = o.numbers.at(0);
    if (d < 2) throw DomainError("range", "monoids need d >= 2");
    if (mat_rank(rows) != rows.rows()) throw DomainError("degenerate_span", "flat rows must be independent");
    Json basis = Json::array();
    for (const auto& f : monoid_basis(rows, static_cast<unsigned>(d))) basis.push_back(poly_record(f, o.pretty));
    return {{"d", d}, {"dimension", basis.size()}, {"basis", basis}};
}

Json monoid_through_cmd(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    const Flat2 z(flat_rows_from(io::read_file(o.files.at(1))));
    const unsigned d = static_cast<unsigned>(o.numbers.empty() ? need_d(pts.front().n(), pts.size()) : o.numbers[0]);
    const auto f = monoid_through_points(z, d, pts);
    return {{"d", d}, {"monoid", f ? poly_record(*f, o.pretty) : Json()}};
}

Json membership_cmd(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    const Flat2 z(flat_rows_from(io::read_file(o.files.at(1))));
    if (z.rows.cols() != pts.front().size()) throw InputError("flat and points live in different spaces");
    return {{"member", monoidal_membership(pts, z)}, {"kernel_dim", monoidal_kernel_dim(pts, z)}};
}

Json rnc_through_cmd(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    const RNC c = rnc_through(pts);
    Json params = Json::array();
    for (const auto& p : pts) params.push_back(param_json(*point_on_rnc(c, p)));
    return {{"curve", io::to_json(c.coeff)}, {"parameters", params}};
}

Json schwarzenberger_cmd(const Options& o) {
    const Arrangement a = io::arrangement_from(io::read_file(o.files.at(0)));
    const RNC c = osculated_curve(a);
    const auto params = dual_parameters(a, c);
    Param q(0, 1);
    for (long k = 0; std::find(params.begin(), params.end(), q) != params.end(); ++k) q = Param(1, k);
    const ResidueIntertwiner r = build_residue_intertwiner(a, c, params, q);
    Json ps = Json::array();
    for (const auto& p : params) ps.push_back(param_json(p));
    return {{"curve", io::to_json(c.coeff)},
            {"parameters", ps},
            {"alpha", io::to_json(r.alpha)},
            {"beta", io::to_json(r.beta)},
            {"intertwines", intertwines(r.source, r.target, r.alpha, r.beta)},
            {"solver", verdict_json(intertwiner_solve(r.source, r.target))}};
}

Json iso_cmd(const Options& o) {
    const SteinerTensor t1 = tensor_or_arrangement(io::read_file(o.files.at(0)));
    const SteinerTensor t2 = tensor_or_arrangement(io::read_file(o.files.at(1)));
    return verdict_json(intertwiner_solve(t1, t2));
}

// A line inside a hyperplane of `a` (not a hyperplane of `b`) that is not
// super-jumping for `b`: the hyperplane index and the line.
std::optional<std::pair<std::size_t, Matrix>> separating_line(const Arrangement& a, const Arrangement& b,
                                                              const Options& o) {
    const SteinerTensor tb = fundamental_tensor(b);
    const auto others = b.sorted_forms();
    Rng rng(o.seed);
    for (std::size_t i = 0; i < a.m(); ++i) {
        if (std::binary_search(others.begin(), others.end(), a.form_list()[i])) continue;
        const Matrix basis = mat_kernel(Matrix::from_rows({a.forms().row(i)}));
        for (std::size_t k = 0; k < o.trials; ++k) {
            const Matrix rows = rng.int_matrix(2, basis.rows(), 9) * basis;
            if (mat_rank(rows) == 2 && !is_super_jumping(tb, LineSpan(rows))) return std::pair{i, rows};
        }
    }
    return std::nullopt;
}

Json torelli_cmd(const Options& o) {
    const Arrangement a1 = io::arrangement_from(io::read_file(o.files.at(0)));
    const Arrangement a2 = io::arrangement_from(io::read_file(o.files.at(1)));
    const TorelliVerdict v = torelli_classify(a1, a2);
    Json out{{"verdict", to_string(v.kind)}, {"solver", verdict_json(v.solver)}};
    if (v.curve) out["curve"] = io::to_json(v.curve->coeff);
    if (v.equation) out["equation"] = poly_record(*v.equation, true);
    if (v.kind == TorelliVerdict::Kind::NonIsomorphic) {
        const char* owner = "first";
        auto w = separating_line(a1, a2, o);
        if (!w) {
            owner = "second";
            w = separating_line(a2, a1, o);
        }
        Json sep;
        if (w) {
            const LineSpan l(w->second);
            sep = {{"line", io::to_json(w->second)},
                   {"hyperplane_of", owner},
                   {"index", w->first},
                   {"type_first", splitting_type(fundamental_tensor(a1), l)},
                   {"type_second", splitting_type(fundamental_tensor(a2), l)}};
        }
        out["separating_line"] = sep;
    }
    return out;
}

Json adjoint_cmd(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    const ProjPoint q = io::point_from(io::read_file(o.files.at(1)), pts.front().n());
    const AdjointResult r = is_adjoint_sampled(pts, q, o.trials, o.seed);
    return {{"adjoint", r.adjoint},
            {"witness", r.witness ? io::to_json(r.witness->rows) : Json()},
            {"trials", o.trials},
            {"seed", o.seed}};
}

Json castelnuovo_cmd(const Options& o) {
    const auto pts = io::points_from(io::read_file(o.files.at(0)));
    const auto c = castelnuovo_rnc(pts);
    return {{"conditions", conditions_imposed(pts)}, {"curve", c ? io::to_json(c->coeff) : Json()}};
}

struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> files;
    std::vector<const char*> numbers;
    std::size_t optional_numbers;  // trailing numbers that may be omitted
    Handler handler;
};

const std::vector<Command>& commands() {
    static const std::vector<Command> all{
        {"gp-check", "check general position of a point list", {"points"}, {}, 0, gp_check},
        {"associate", "associated arrangement", {"arrangement"}, {}, 0, associate_cmd},
        {"self-associated", "test self-association (m = 2n+2)", {"points"}, {}, 0, self_associated_cmd},
        {"tensor", "fundamental Steiner tensor", {"arrangement"}, {}, 0, tensor_cmd},
        {"chern", "Chern coefficients for (n, m)", {}, {"n", "m"}, 0, chern_cmd},
        {"cohomology", "h^q of the twist E(k)", {"arrangement-or-tensor"}, {"k"}, 0, cohomology_cmd},
        {"splitting-type", "splitting types on a list of lines", {"arrangement", "lines"}, {}, 0, splitting_cmd},
        {"jump-test", "jumping test on a list of lines", {"arrangement", "lines"}, {}, 0, jump_cmd},
        {"super-jump-test", "super-jumping test on a list of lines", {"arrangement", "lines"}, {}, 0,
         super_jump_cmd},
        {"connection", "transport a line along a non-jumping line", {"arrangement", "query"}, {}, 0,
         connection_cmd},
        {"jumping-curve", "equation of the curve of jumping lines (n = 2)", {"points"}, {}, 0, jumping_curve_cmd},
        {"monoid-basis", "basis of degree-d monoids with vertex a flat", {"flat"}, {"d"}, 0, monoid_basis_cmd},
        {"monoid-through", "a monoid through points with vertex a flat", {"points", "flat"}, {"d"}, 1,
         monoid_through_cmd},
        {"membership", "does some monoid with vertex the flat pass through the points", {"points", "flat"}, {}, 0,
         membership_cmd},
        {"rnc-through", "rational normal curve through n+3 points", {"points"}, {}, 0, rnc_through_cmd},
        {"schwarzenberger", "identify an osculating arrangement with a Schwarzenberger bundle", {"arrangement"}, {},
         0, schwarzenberger_cmd},
        {"iso", "isomorphism test of two Steiner tensors", {"first", "second"}, {}, 0, iso_cmd},
        {"torelli", "classify two arrangements with m >= 2n+3", {"first", "second"}, {}, 0, torelli_cmd},
        {"adjoint", "sampled adjoint-point test", {"points", "point"}, {}, 0, adjoint_cmd},
        {"castelnuovo", "quadric condition count and curve through m >= 2n+3 points", {"points"}, {}, 0,
         castelnuovo_cmd},
    };
    return all;
}

Json error_record(const std::string& kind, const std::string& message, const std::vector<std::size_t>& indices) {
    return {{"error", {{"kind", kind}, {"message", message}, {"indices", indices}}}};
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Exact computations with logarithmic bundles of hyperplane arrangements", "logbundle"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--seed", opt.seed, "seed for sampled operations")->capture_default_str();
    app.add_option("--trials", opt.trials, "number of samples")->capture_default_str();
    app.add_option("--out", opt.out, "write the document to this path");
    app.add_flag("--pretty", opt.pretty, "indent output and add text renderings");

    std::map<const CLI::App*, const Command*> by_app;
    std::vector<std::vector<std::string>> file_slots(commands().size());
    std::vector<std::vector<long>> number_slots(commands().size());
    for (std::size_t s = 0; s < commands().size(); ++s) {
        const Command& command = commands()[s];
        CLI::App* sub = app.add_subcommand(command.name, command.help);
        file_slots[s].resize(command.files.size());
        number_slots[s].resize(command.numbers.size());
        for (std::size_t k = 0; k < command.files.size(); ++k) sub->add_option(command.files[k], file_slots[s][k])->required();
        for (std::size_t k = 0; k < command.numbers.size(); ++k) {
            auto* option = sub->add_option(command.numbers[k], number_slots[s][k]);
            if (k + command.optional_numbers < command.numbers.size()) option->required();
        }
        by_app[sub] = &command;
    }

    Outcome result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const Command& command = *by_app.at(chosen);
    const std::size_t index = static_cast<std::size_t>(&command - commands().data());
    opt.files = file_slots[index];
    for (std::size_t k = 0; k < command.numbers.size(); ++k) {
        if (chosen->get_option(command.numbers[k])->count() > 0) opt.numbers.push_back(number_slots[index][k]);
    }

    Json doc;
    try {
        doc = command.handler(opt);
    } catch (const DomainError& e) {
        result.exit_code = 1;
        doc = error_record(e.kind(), e.what(), e.indices());
        err << "error (" << e.kind() << "): " << e.what() << "\n";
    } catch (const InputError& e) {
        result.exit_code = 2;
        result.err = std::string("malformed input: ") + e.what() + "\n";
        result.out = error_record("input", e.what(), {}).dump() + "\n";
        return result;
    } catch (const Json::exception& e) {
        result.exit_code = 2;
        result.err = std::string("malformed input: ") + e.what() + "\n";
        result.out = error_record("input", e.what(), {}).dump() + "\n";
        return result;
    }

    const std::string text = (opt.pretty ? doc.dump(2) : doc.dump()) + "\n";
    if (!opt.out.empty() && result.exit_code == 0) {
        std::ofstream file(opt.out);
        if (!file) {
            result.exit_code = 2;
            result.err = "cannot write '" + opt.out + "'\n";
            return result;
        }
        file << text;
    } else {
        result.out = text;
    }
    result.err += err.str();
    return result;
}

}  // namespace logbundle::cli
