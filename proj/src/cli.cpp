#include "adskit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adskit/constructions.hpp"
#include "adskit/filters.hpp"
#include "adskit/sequences.hpp"

using nlohmann::json;

namespace adskit::cli {

namespace {

json elem_json(const GroupCtx& g, Elem e) {
    if (g.kind() == GroupCtx::Kind::product) return g.format(e);
    return e;
}

json set_json(const GroupCtx& g, const std::vector<Elem>& set) {
    json arr = json::array();
    for (Elem e : set) arr.push_back(elem_json(g, e));
    return arr;
}

json claims_json(const ConstructedSet& cs) {
    json arr = json::array();
    for (const auto& c : cs.claims) {
        json j;
        j["type"] = c.type;
        j["params"] = c.params;
        if (!c.subgroup.empty()) j["subgroup"] = set_json(*cs.group, c.subgroup);
        arr.push_back(j);
    }
    return arr;
}

json constructed_json(const ConstructedSet& cs) {
    json j;
    j["family"] = cs.family;
    j["group"] = cs.group->descriptor();
    j["set"] = set_json(*cs.group, cs.set);
    j["claims"] = claims_json(cs);
    j["verified"] = cs.verified;
    j["provenance"] = cs.provenance;
    if (!cs.notes.empty()) j["notes"] = cs.notes;
    return j;
}

json verdicts_json(const GroupCtx& g, const Classification& cls) {
    json arr = json::array();
    if (cls.ds)
        arr.push_back({{"type", "DS"},
                       {"v", cls.ds->v},
                       {"k", cls.ds->k},
                       {"lambda", cls.ds->lambda}});
    if (cls.ads)
        arr.push_back({{"type", "ADS"},
                       {"v", cls.ads->v},
                       {"k", cls.ads->k},
                       {"lambda", cls.ads->lambda},
                       {"t", cls.ads->t},
                       {"S", set_json(g, cls.ads->S)}});
    if (cls.pds)
        arr.push_back({{"type", "PDS"},
                       {"v", cls.pds->v},
                       {"k", cls.pds->k},
                       {"lambda", cls.pds->lambda},
                       {"mu", cls.pds->mu},
                       {"regular", cls.pds->regular},
                       {"paley_type", cls.pds->paley_type}});
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

// Set argument: inline elements, or @file with one set on the first line.
std::vector<Elem> load_set(const GroupCtx& g, const std::string& arg) {
    if (!arg.empty() && arg[0] == '@')
        return parse_elem_list(g, first_line(read_file(arg.substr(1))));
    return parse_elem_list(g, arg);
}

// Paley-Hadamard seed specs: qr:p, singer:t, twin:p, hall:p, inline:<set>.
ConstructedSet load_ph(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("seed spec must be kind:param");
    std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (kind == "qr") return paley_hadamard_ds(PhKind::qr, std::stoull(rest));
    if (kind == "singer") return paley_hadamard_ds(PhKind::singer, std::stoull(rest));
    if (kind == "twin") return paley_hadamard_ds(PhKind::twin_prime, std::stoull(rest));
    if (kind == "hall") return paley_hadamard_ds(PhKind::hall_sextic, std::stoull(rest));
    throw std::invalid_argument("unknown seed kind: " + kind);
}

std::uint64_t env_budget(std::uint64_t fallback) {
    if (const char* e = std::getenv("ADSKIT_BUDGET")) return std::stoull(e);
    return fallback;
}

struct Output {
    std::string out_path;
    std::string format = "json";
    void emit(CommandResult& r, const json& payload) const {
        if (format == "json")
            r.payload = payload.dump(2) + "\n";
        else
            r.payload = payload.dump(2) + "\n";  // csv/text handled by callers
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << r.payload;
        }
    }
};

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::ruled_out: return "ruled_out";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

json report_json(const FeasibilityReport& rep) {
    json tests;
    for (const auto& [name, res] : rep.tests) {
        json t;
        t["verdict"] = verdict_name(res.verdict);
        if (!res.detail.empty()) t["detail"] = res.detail;
        tests[name] = t;
    }
    json j;
    j["params"] = {{"v", rep.params.v},
                   {"k", rep.params.k},
                   {"lambda", rep.params.lambda},
                   {"t", rep.params.t}};
    j["tests"] = tests;
    j["overall"] = rep.ruled_out ? "ruled_out" : "pass";
    return j;
}

}  // namespace

int CommandResult::exit_code() const {
    switch (status) {
        case Status::ok:
        case Status::ruled_out: return 0;
        case Status::precondition_failed: return 1;
        case Status::error: return 1;
    }
    return 1;
}

CommandResult dispatch(const std::vector<std::string>& argv) {
    CommandResult result;
    CLI::App app{"almost-difference-set toolkit"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--out", output.out_path, "write the payload to this path");
    app.add_option("--format", output.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    std::uint64_t budget = env_budget(100000000);
    app.add_option("--budget", budget, "subset budget for searches");
    std::int64_t seed_gamma = -1;
    app.add_option("--seed-gamma", seed_gamma,
                   "override the deterministic primitive element (field element code)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "classify a set");
    std::string v_group, v_set, v_from;
    verify->add_option("--group", v_group, "group descriptor (zv:v, gf:q, products with x)");
    verify->add_option("--set", v_set, "comma-separated elements or @file");
    verify->add_option("--from", v_from, "verify a construct output file");

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "run a generator from the catalog");
    std::string c_family, c_d1, c_d2, c_a, c_b, c_group_a, c_group_b, c_group, c_set,
        c_indices, c_seed;
    std::uint64_t c_q = 0, c_p = 0, c_m = 1, c_s = 2, c_l = 0, c_i = 0, c_j = 1, c_cl = 3,
                  c_t = 2, c_delta = 0, c_index = 0;
    std::int64_t c_d = -1;
    bool c_with_zero = false, c_include_row = false;
    construct->add_option("--family", c_family)->required();
    construct->add_option("--q", c_q);
    construct->add_option("--p", c_p);
    construct->add_option("--m", c_m);
    construct->add_option("--s", c_s);
    construct->add_option("--l", c_l);
    construct->add_option("--t", c_t);
    construct->add_option("--i", c_i);
    construct->add_option("--j", c_j);
    construct->add_option("--cl", c_cl, "third class index");
    construct->add_option("--index", c_index, "class index for cyclotomic families");
    construct->add_option("--delta", c_delta);
    construct->add_option("--d", c_d, "transfer element");
    construct->add_option("--group", c_group);
    construct->add_option("--set", c_set);
    construct->add_option("--d1", c_d1, "seed spec kind:param or inline:<set>");
    construct->add_option("--d2", c_d2);
    construct->add_option("--a", c_a);
    construct->add_option("--b", c_b);
    construct->add_option("--group-a", c_group_a);
    construct->add_option("--group-b", c_group_b);
    construct->add_option("--indices", c_indices, "comma-separated class indices");
    construct->add_option("--seed", c_seed);
    construct->add_flag("--with-zero", c_with_zero);
    construct->add_flag("--include-row", c_include_row);

    // ---- filter ----
    auto* filter = app.add_subcommand("filter", "feasibility battery for (v,k,lambda,t)");
    std::string f_params, f_w = "", f_tests = "all";
    bool f_symmetric = false;
    filter->add_option("--params", f_params, "v,k,lambda,t")->required();
    filter->add_option("--w", f_w, "comma-separated moduli for the Hall test");
    filter->add_flag("--symmetric-s", f_symmetric);
    filter->add_option("--tests", f_tests, "all or a comma-separated subset");

    // ---- search ----
    auto* search = app.add_subcommand("search", "exhaustive subset search");
    std::string s_group;
    std::uint64_t s_k = 0;
    std::int64_t s_lambda = -1, s_t = -1;
    bool s_no_dedup = false;
    search->add_option("--group", s_group)->required();
    search->add_option("--k", s_k)->required();
    search->add_option("--lambda", s_lambda);
    search->add_option("--t", s_t);
    search->add_flag("--no-dedup", s_no_dedup);

    // ---- autocorr ----
    auto* autoc = app.add_subcommand("autocorr", "autocorrelation spectrum");
    std::string a_seq, a_support;
    std::uint64_t a_period = 0;
    bool a_full = false;
    autoc->add_option("--seq", a_seq, "sequence file (one line of 0/1) or literal bits");
    autoc->add_option("--support", a_support, "support set");
    autoc->add_option("--period", a_period);
    autoc->add_flag("--full", a_full, "emit every shift value");

    // ---- interleave ----
    auto* inter = app.add_subcommand("interleave", "four-row interleaving of an ideal seed");
    std::string i_seed;
    std::uint64_t i_delta = 0;
    inter->add_option("--seed", i_seed, "qr:p | singer:t | twin:p | hall:p | @file")->required();
    inter->add_option("--delta", i_delta);

    // ---- cycnum ----
    auto* cyc = app.add_subcommand("cycnum", "cyclotomic number matrix");
    std::uint64_t y_q = 0, y_e = 0;
    std::string y_method = "direct";
    cyc->add_option("--q", y_q)->required();
    cyc->add_option("--e", y_e)->required();
    cyc->add_option("--method", y_method)->check(CLI::IsMember({"direct", "closed"}));

    // ---- table ----
    auto* table = app.add_subcommand("table", "reference tables");
    std::string t_candidates, t_summary;
    std::uint64_t t_vmax = 200, t_qmax = 200;
    table->add_option("--candidates", t_candidates, "t1 | tv2");
    table->add_option("--vmax", t_vmax);
    table->add_option("--summary", t_summary, "cyc624");
    table->add_option("--qmax", t_qmax);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        result.status = Status::error;
        result.diagnostics.push_back(e.what());
        result.payload = app.help();
        return result;
    }

    try {
        std::optional<std::uint64_t> gamma_override;
        if (seed_gamma >= 0) gamma_override = std::uint64_t(seed_gamma);
        (void)gamma_override;  // construct paths below make fields internally

        if (*verify) {
            std::shared_ptr<const GroupCtx> g;
            std::vector<Elem> D;
            if (!v_from.empty()) {
                json j = json::parse(read_file(v_from));
                g = GroupCtx::parse(j.at("group").get<std::string>());
                for (const auto& e : j.at("set")) {
                    if (e.is_string())
                        D.push_back(g->parse_elem(e.get<std::string>()));
                    else
                        D.push_back(e.get<std::uint64_t>());
                }
            } else {
                if (v_group.empty()) throw std::invalid_argument("verify needs --group or --from");
                g = GroupCtx::parse(v_group);
                D = load_set(*g, v_set);
            }
            auto spec = diff_spectrum(*g, D);
            auto cls = classify(*g, D, spec);
            json hist;
            {
                std::map<std::uint64_t, std::uint64_t> h;
                for (std::uint64_t x = 1; x < spec.v; ++x) ++h[spec.counts[x]];
                for (auto& [val, mult] : h) hist[std::to_string(val)] = mult;
            }
            json j;
            j["group"] = g->descriptor();
            j["set"] = set_json(*g, D);
            j["k"] = D.size();
            j["spectrum_histogram"] = hist;
            j["verdicts"] = verdicts_json(*g, cls);
            if (cls.ads) {
                auto [S, H] = lambda_sets(*g, D);
                j["S"] = set_json(*g, S);
                j["H_complement"] = set_json(*g, H);
            }
            output.emit(result, j);
            return result;
        }

        if (*construct) {
            ConstructedSet cs;
            auto fam = cyc_family_from_name(c_family);
            if (c_family == "paley_qr") {
                cs = paley_qr(c_q);
            } else if (fam) {
                cs = cyclotomic_ads(c_q, *fam, c_index);
            } else if (c_family == "ck_pds") {
                std::vector<std::uint64_t> I;
                std::stringstream ss(c_indices);
                std::string tok;
                while (std::getline(ss, tok, ',')) I.push_back(std::stoull(tok));
                cs = ck_pds(c_q, I);
            } else if (c_family == "ds_minus_elem" || c_family == "ads_plus_elem_to_ds" ||
                       c_family == "ds_plus_elem" || c_family == "ads_minus_elem_to_ds") {
                auto g = GroupCtx::parse(c_group);
                if (g->kind() != GroupCtx::Kind::cyclic)
                    throw std::invalid_argument("transfer constructions live in Z_v");
                TransferDirection dir =
                    c_family == "ds_minus_elem"         ? TransferDirection::ds_minus_elem
                    : c_family == "ads_plus_elem_to_ds" ? TransferDirection::ads_plus_elem_to_ds
                    : c_family == "ds_plus_elem"        ? TransferDirection::ds_plus_elem
                                                        : TransferDirection::ads_minus_elem_to_ds;
                cs = ds_ads_transfer(dir, g->order(), load_set(*g, c_set), Elem(c_d));
            } else if (c_family == "gmw_like_support") {
                cs = gmw_like_support(c_q);
            } else if (c_family == "pn_graph") {
                cs = pn_graph_ads(c_p, c_m, c_s);
            } else if (c_family == "ph_qr") {
                cs = paley_hadamard_ds(PhKind::qr, c_p);
            } else if (c_family == "singer") {
                cs = paley_hadamard_ds(PhKind::singer, c_t);
            } else if (c_family == "twin_prime") {
                cs = paley_hadamard_ds(PhKind::twin_prime, c_p);
            } else if (c_family == "hall_sextic") {
                cs = paley_hadamard_ds(PhKind::hall_sextic, c_p);
            } else if (c_family == "jungnickel") {
                auto A = GroupCtx::parse(c_group_a);
                auto B = GroupCtx::parse(c_group_b);
                auto d1 = load_set(*A, c_d1);
                auto d2 = load_set(*B, c_d2);
                cs = jungnickel_dds(A, d1, B, d2);
            } else if (c_family == "cor55") {
                ConstructedSet seed = load_ph(c_d1);
                std::uint64_t l = c_l ? c_l : seed.group->order();
                cs = cor55(l, seed.set, c_i);
            } else if (c_family == "dhm_quartic") {
                cs = dhm_quartic(c_q, c_i, c_j, c_cl, c_with_zero);
            } else if (c_family == "zlz_z4q") {
                cs = zlz_z4q(c_q);
            } else if (c_family == "zlz_pq_squares") {
                cs = zlz_pq_squares(c_p, c_q, c_include_row);
            } else if (c_family == "tang_ding") {
                ConstructedSet a = load_ph(c_a), b = load_ph(c_b);
                std::uint64_t l = c_l ? c_l : a.group->order();
                cs = tang_ding(l, a.set, b.set);
            } else if (c_family == "dpw_skew") {
                cs = dpw_skew(c_q);
            } else if (c_family == "interleave_support") {
                ConstructedSet seed = load_ph(c_seed.empty() ? c_d1 : c_seed);
                auto is = interleave_support(seed.set, seed.group->order(), c_delta);
                cs = is.cs;
            } else {
                throw std::invalid_argument("unknown family: " + c_family);
            }
            output.emit(result, constructed_json(cs));
            return result;
        }

        if (*filter) {
            std::vector<std::int64_t> nums;
            std::stringstream ss(f_params);
            std::string tok;
            while (std::getline(ss, tok, ',')) nums.push_back(std::stoll(tok));
            if (nums.size() != 4) throw std::invalid_argument("--params needs v,k,lambda,t");
            ParamSet p{nums[0], nums[1], nums[2], nums[3]};
            std::vector<std::int64_t> ws;
            if (!f_w.empty()) {
                std::stringstream sw(f_w);
                while (std::getline(sw, tok, ',')) ws.push_back(std::stoll(tok));
            }
            auto rep = run_all(p, ws, f_symmetric);
            if (f_tests != "all") {
                std::set<std::string> keep;
                std::stringstream st(f_tests);
                while (std::getline(st, tok, ',')) keep.insert(tok);
                FeasibilityReport filtered;
                filtered.params = rep.params;
                for (auto& [name, res] : rep.tests)
                    if (keep.count(name)) filtered.tests.emplace_back(name, res);
                filtered.ruled_out = false;
                for (auto& [_, res] : filtered.tests)
                    if (res.verdict == Verdict::ruled_out) filtered.ruled_out = true;
                rep = filtered;
            }
            if (rep.ruled_out) result.status = Status::ruled_out;
            output.emit(result, report_json(rep));
            return result;
        }

        if (*search) {
            auto g = GroupCtx::parse(s_group);
            SearchOptions opt;
            if (s_lambda >= 0) opt.lambda = s_lambda;
            if (s_t >= 0) opt.t = s_t;
            opt.budget = budget;
            opt.dedup = !s_no_dedup;
            auto found = brute_search(g, s_k, opt);
            json arr = json::array();
            for (const auto& cs : found) arr.push_back(constructed_json(cs));
            json j;
            j["group"] = g->descriptor();
            j["k"] = s_k;
            j["count"] = found.size();
            j["results"] = arr;
            output.emit(result, j);
            return result;
        }

        if (*autoc) {
            SeqBits s;
            if (!a_seq.empty()) {
                std::string text = a_seq.size() && a_seq[0] == '@'
                                       ? first_line(read_file(a_seq.substr(1)))
                                       : a_seq;
                s = parse_seq(text);
            } else {
                if (a_period == 0) throw std::invalid_argument("--support needs --period");
                auto zn = GroupCtx::cyclic(a_period);
                s = char_seq(load_set(*zn, a_support), a_period);
            }
            auto spec = autocorr_spectrum(s);
            json j;
            j["n"] = spec.n;
            j["levels"] = spec.levels;
            j["optimal"] = spec.optimal;
            j["ideal"] = spec.ideal;
            std::map<std::int64_t, std::uint64_t> dist;
            for (std::uint64_t w = 1; w < spec.n; ++w) ++dist[spec.values[w]];
            json d;
            for (auto& [val, mult] : dist) d[std::to_string(val)] = mult;
            j["offpeak_distribution"] = d;
            if (a_full) j["values"] = spec.values;
            if (auto ads = ads_from_sequence(s)) {
                j["ads"] = {{"v", ads->v},
                            {"k", ads->k},
                            {"lambda", ads->lambda},
                            {"t", ads->t}};
            }
            output.emit(result, j);
            return result;
        }

        if (*inter) {
            SeqBits seed;
            std::uint64_t l;
            if (!i_seed.empty() && i_seed[0] == '@') {
                seed = parse_seq(first_line(read_file(i_seed.substr(1))));
                l = seed.n;
            } else {
                ConstructedSet ph = load_ph(i_seed);
                l = ph.group->order();
                seed = char_seq(ph.set, l);
            }
            auto u = interleave(seed, i_delta);
            auto is = interleave_support(support(seed), l, i_delta);
            json j;
            j["period"] = u.n;
            j["sequence"] = format_seq(u);
            j["support"] = constructed_json(is.cs);
            output.emit(result, j);
            return result;
        }

        if (*cyc) {
            auto F = FieldCtx::make_q(y_q, FieldCtx::kDefaultOrderBound,
                                      seed_gamma >= 0
                                          ? std::optional<std::uint64_t>(seed_gamma)
                                          : std::nullopt);
            auto cctx = CycCtx::make(F, y_e);
            json rows = json::array();
            if (y_method == "closed") {
                auto [part, sign] = resolved_partition(cctx);
                for (std::uint64_t i = 0; i < y_e; ++i) {
                    json row = json::array();
                    for (std::uint64_t j2 = 0; j2 < y_e; ++j2)
                        row.push_back(cyc_number_closed(y_q, y_e, i, j2, part, sign));
                    rows.push_back(row);
                }
            } else {
                for (std::uint64_t i = 0; i < y_e; ++i) {
                    json row = json::array();
                    for (std::uint64_t j2 = 0; j2 < y_e; ++j2)
                        row.push_back(cctx.cyc_number_direct(i, j2));
                    rows.push_back(row);
                }
            }
            if (output.format == "csv") {
                std::string csv;
                for (auto& row : rows) {
                    for (std::size_t i2 = 0; i2 < row.size(); ++i2) {
                        if (i2) csv += ",";
                        csv += row[i2].dump();
                    }
                    csv += "\n";
                }
                result.payload = csv;
                if (!output.out_path.empty()) std::ofstream(output.out_path) << csv;
            } else {
                json j;
                j["q"] = y_q;
                j["e"] = y_e;
                j["gamma"] = F->gamma();
                j["method"] = y_method;
                j["matrix"] = rows;
                output.emit(result, j);
            }
            return result;
        }

        if (*table) {
            json j;
            if (t_candidates == "t1" || t_candidates == "tv2") {
                auto cands = t_candidates == "t1" ? t1_candidates(std::int64_t(t_vmax))
                                                  : tv2_candidates(std::int64_t(t_vmax));
                json arr = json::array();
                for (const auto& p : cands) {
                    auto res = t_candidates == "t1" ? parity_t1_test(p) : parity_tv2_test(p);
                    json e;
                    e["params"] = {p.v, p.k, p.lambda, p.t};
                    e["ruled_out"] = res.verdict == Verdict::ruled_out;
                    if (res.verdict == Verdict::ruled_out) e["detail"] = res.detail;
                    arr.push_back(e);
                }
                j["candidates"] = arr;
                j["vmax"] = t_vmax;
                j["kind"] = t_candidates;
            } else if (t_summary == "cyc624") {
                json arr = json::array();
                for (std::uint64_t q = 3; q <= t_qmax; q += 2) {
                    auto pp = prime_power(q);
                    if (!pp || pp->first == 2) continue;
                    auto F = FieldCtx::make_q(q);
                    json entry;
                    entry["q"] = q;
                    json fams = json::array();
                    struct Shape {
                        std::uint64_t e;
                        std::vector<std::uint64_t> I;
                        bool zero;
                        const char* name;
                    };
                    std::vector<Shape> shapes = {{2, {0}, false, "C2"},
                                                 {3, {0}, false, "C3"},
                                                 {3, {0}, true, "C3+0"},
                                                 {4, {0}, false, "C4"},
                                                 {4, {0}, true, "C4+0"},
                                                 {4, {0, 1}, false, "C4pair"}};
                    for (const auto& sh : shapes) {
                        if ((q - 1) % sh.e) continue;
                        auto cctx = CycCtx::make(F, sh.e);
                        std::vector<Elem> D;
                        for (auto i2 : sh.I) {
                            auto cls = cctx.cls(i2);
                            D.insert(D.end(), cls.begin(), cls.end());
                        }
                        if (sh.zero) D.push_back(0);
                        auto cls = classify(*F->as_group(), D);
                        if (cls.ads)
                            fams.push_back({{"shape", sh.name},
                                            {"ads", {cls.ads->v, cls.ads->k, cls.ads->lambda,
                                                     cls.ads->t}}});
                    }
                    if (!fams.empty()) {
                        entry["ads_shapes"] = fams;
                        arr.push_back(entry);
                    }
                }
                j["summary"] = arr;
                j["qmax"] = t_qmax;
            } else {
                throw std::invalid_argument("table needs --candidates t1|tv2 or --summary cyc624");
            }
            output.emit(result, j);
            return result;
        }

        throw std::invalid_argument("no subcommand given");
    } catch (const std::invalid_argument& e) {
        result.status = Status::precondition_failed;
        result.diagnostics.push_back(e.what());
        json j;
        j["status"] = "precondition_failed";
        j["error"] = e.what();
        result.payload = j.dump(2) + "\n";
        return result;
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.diagnostics.push_back(e.what());
        json j;
        j["status"] = "error";
        j["error"] = e.what();
        result.payload = j.dump(2) + "\n";
        return result;
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = dispatch(args);
    std::cout << result.payload;
    for (const auto& d : result.diagnostics) std::cerr << d << "\n";
    return result.exit_code();
}

}  // namespace adskit::cli
