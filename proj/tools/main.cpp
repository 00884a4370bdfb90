#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "whirl/ideal.hpp"
#include "whirl/orbit.hpp"
#include "whirl/parse.hpp"
#include "whirl/poset.hpp"
#include "whirl/ppartition.hpp"
#include "whirl/render.hpp"
#include "whirl/statistic.hpp"
#include "whirl/verify.hpp"
#include "whirl/whorm.hpp"

namespace {

using nlohmann::json;
using namespace whirl;

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("WHIRL_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw CLI::ValidationError("WHIRL_CAP must be a positive integer");
    }
    return kDefaultCap;
}

// The poset a partition lives on plus its bound: "V x [4]" gives (V, 4),
// a plain poset needs an explicit --k.
std::pair<Poset, int> base_and_bound(const std::string& text, std::optional<int> k) {
    Poset P = parse_poset(text);
    if (P.product()) {
        if (k && *k != P.product()->k)
            throw CLI::ValidationError("--k conflicts with the product poset's bound");
        return {*P.product()->base, P.product()->k};
    }
    if (!k) throw CLI::ValidationError("a non-product poset needs --k");
    return {P, *k};
}

json orbit_rows(const Poset& P, const OrbitBoard& board) {
    json rows = json::array();
    for (const auto& f : board.rows) {
        json row = json::array();
        for (int c : P.display_order()) row.push_back(f.labels[c]);
        rows.push_back(row);
    }
    return rows;
}

int run_ideals(const std::string& poset_text, bool list, bool as_json) {
    Poset P = parse_poset(poset_text);
    auto ideals = enumerate_ideals(P, enumeration_cap());
    if (as_json) {
        json out;
        out["poset"] = poset_to_json(P);
        out["count"] = ideals.size();
        if (list) {
            json all = json::array();
            for (OrderIdeal I : ideals) all.push_back(ideal_names(P, I));
            out["ideals"] = all;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << ideals.size() << "\n";
    if (list)
        for (OrderIdeal I : ideals) std::cout << ideal_bitstring(P, I) << "\n";
    return 0;
}

int run_rowmotion(const std::string& poset_text, const std::string& ideal_text, bool order_only,
                  bool as_json) {
    Poset P = parse_poset(poset_text);
    auto step = [&P](OrderIdeal I) { return rowmotion_direct(P, I); };
    std::size_t cap = enumeration_cap();

    if (!ideal_text.empty()) {
        OrderIdeal I = 0;
        std::istringstream in(ideal_text);
        std::string name;
        while (std::getline(in, name, ',')) {
            if (name.empty()) continue;
            int x = P.index_of(name);
            if (x < 0) throw CLI::ValidationError("unknown element '" + name + "'");
            I |= OrderIdeal{1} << x;
        }
        if (!is_order_ideal(P, I)) throw CLI::ValidationError("--ideal is not an order ideal");
        auto orbit = orbit_of(step, I, cap);
        if (as_json) {
            json out;
            out["length"] = orbit.length();
            json states = json::array();
            for (OrderIdeal J : orbit.states) states.push_back(ideal_names(P, J));
            out["orbit"] = states;
            std::cout << out.dump(2) << "\n";
        } else {
            for (OrderIdeal J : orbit.states) std::cout << ideal_bitstring(P, J) << "\n";
        }
        return 0;
    }

    auto orbits = all_orbits(step, enumerate_ideals(P, cap), cap);
    std::uint64_t order = 1;
    for (const auto& o : orbits) order = std::lcm(order, std::uint64_t{o.length()});
    if (as_json) {
        json out;
        out["order"] = order;
        if (!order_only) {
            json js = json::array();
            for (const auto& o : orbits)
                js.push_back({{"representative", ideal_bitstring(P, o.representative())},
                              {"length", o.length()}});
            out["orbits"] = js;
        }
        std::cout << out.dump(2) << "\n";
    } else if (order_only) {
        std::cout << order << "\n";
    } else {
        std::cout << "order " << order << "\n";
        for (const auto& o : orbits)
            std::cout << ideal_bitstring(P, o.representative()) << " length " << o.length()
                      << "\n";
    }
    return 0;
}

int run_whirl(const std::string& poset_text, const std::string& start, std::optional<int> k,
              bool as_json) {
    auto [P, bound] = base_and_bound(poset_text, k);
    PPartition f = parse_ppartition(P, start, bound);
    OrbitBoard board = make_orbit_board(P, f, enumeration_cap());
    if (as_json) {
        json out;
        out["length"] = board.length();
        out["columns"] = json::array();
        for (int c : P.display_order()) out["columns"].push_back(P.name(c));
        out["board"] = orbit_rows(P, board);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_board(board);
    }
    return 0;
}

int run_whorms(const std::string& poset_text, const std::string& start, std::optional<int> k,
               std::optional<int> super, bool color, bool as_json) {
    auto [P, bound] = base_and_bound(poset_text, k);
    PPartition f = parse_ppartition(P, start, bound);
    OrbitBoard orbit = make_orbit_board(P, f, enumeration_cap());
    OrbitBoard board = repeat_board(orbit, super ? *super : default_super_multiple(orbit));
    auto whorms = decompose_whorms(board);
    TailSumRecord sums = check_tail_sums(orbit);

    if (as_json) {
        json out;
        out["board"] = orbit_rows(P, board);
        json js = json::array();
        for (const auto& w : whorms) {
            WhormMetrics m = whorm_metrics(w, board);
            json cells = json::array();
            for (const auto& c : w.cells) cells.push_back({c.row, c.element, c.value});
            json tails = json::array();
            for (int x : w.tail_columns) tails.push_back(P.name(x));
            js.push_back({{"id", w.id},
                          {"tail_columns", tails},
                          {"t", m.tail_length},
                          {"h", m.head_length},
                          {"cells", cells}});
        }
        out["whorms"] = js;
        out["tail_sums"] = {{"ok", sums.ok},
                            {"alpha", sums.alpha},
                            {"tails", sums.tails},
                            {"failure", sums.failure}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_board(board, &whorms, color && isatty(STDOUT_FILENO));
        for (const auto& w : whorms) {
            WhormMetrics m = whorm_metrics(w, board);
            std::cout << "whorm " << static_cast<char>('a' + w.id % 26) << ": t=" << m.tail_length
                      << " h=" << m.head_length << " tails";
            for (int x : w.tail_columns) std::cout << " " << P.name(x);
            std::cout << "\n";
        }
        std::cout << "tail sums " << (sums.ok ? "ok" : "FAILED: " + sums.failure) << "\n";
    }
    return sums.ok ? 0 : 1;
}

int run_homomesy(const std::string& poset_text, const std::string& stat_text,
                 std::optional<int> k, bool as_json) {
    auto [P, bound] = base_and_bound(poset_text, k);
    std::size_t cap = enumeration_cap();
    Statistic stat = Statistic::parse(stat_text);
    auto orbits = all_orbits([&P](const PPartition& f) { return whirl::whirl(P, f); },
                             enumerate_ppartitions(P, bound, cap), cap);
    auto report = homomesy_check(
        stat_text, orbits,
        [&](const PPartition& f) { return stat.eval_partition(P, f); },
        [&](const PPartition& f) { return ppartition_tuple(P, f); });
    if (as_json) {
        json out;
        out["statistic"] = stat_text;
        out["homomesic"] = report.homomesic;
        if (report.homomesic) out["value"] = report.value.str();
        json js = json::array();
        for (const auto& o : report.orbits)
            js.push_back({{"representative", o.representative},
                          {"length", o.length},
                          {"average", o.average.str()}});
        out["orbits"] = js;
        std::cout << out.dump(2) << "\n";
    } else if (report.homomesic) {
        std::cout << "homomesic, " << report.value.str() << "\n";
    } else {
        const auto& a = report.orbits[report.witness_a];
        const auto& b = report.orbits[report.witness_b];
        std::cout << "not homomesic: orbit of " << a.representative << " averages "
                  << a.average.str() << ", orbit of " << b.representative << " averages "
                  << b.average.str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& claim, int n, int k, int m, const std::string& family,
               const std::string& poset_text, bool as_json) {
    VerificationReport rep;
    if (claim == "v-count") rep = verify_v_counting(k);
    else if (claim == "claw-count") rep = verify_claw_counting(n, k);
    else if (claim == "v-order") rep = verify_v_order(k);
    else if (claim == "v-halfway") rep = verify_halfway(k);
    else if (claim == "v-homomesy") rep = verify_v_homomesies(k);
    else if (claim == "flux") rep = verify_flux(k);
    else if (claim == "worder") rep = verify_worder(n, k);
    else if (claim == "claw-period") rep = verify_claw_period(n, k);
    else if (claim == "claw-homomesy") rep = verify_claw_homomesies(n, k);
    else if (claim == "equivariance") rep = verify_equivariance(parse_poset(poset_text), k);
    else if (claim == "jpr") rep = verify_jpr(n, k, m, family);
    else throw CLI::ValidationError("unknown claim id '" + claim + "'");

    if (as_json) {
        json out;
        out["claim"] = rep.claim;
        out["params"] = rep.params;
        out["verdict"] = verdict_name(rep.verdict);
        out["witnesses"] = rep.witnesses;
        out["detail"] = rep.detail;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.claim << " (" << rep.params << "): " << verdict_name(rep.verdict)
                  << "\n";
        for (const auto& w : rep.witnesses) std::cout << "  " << w << "\n";
        if (!rep.detail.empty() && rep.verdict != Verdict::verified)
            std::cout << "  " << rep.detail << "\n";
    }
    if (rep.verdict == Verdict::skipped) return 2;
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dynamics of rowmotion and whirling on poset families"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string poset_text, start, ideal_text, stat_text, claim;
    std::string family = "inj";
    std::optional<int> k_opt, super;
    int n = 3, k = 4, m = 1;
    bool list = false, order_only = false, color = false;

    auto* ideals = app.add_subcommand("ideals", "enumerate order ideals");
    ideals->add_option("poset", poset_text)->required();
    ideals->add_flag("--count", "print the count only (default)");
    ideals->add_flag("--list", list, "print every ideal");

    auto* rowm = app.add_subcommand("rowmotion", "rowmotion orbits of order ideals");
    rowm->add_option("poset", poset_text)->required();
    rowm->add_flag("--order", order_only, "print only the order of the map");
    rowm->add_option("--ideal", ideal_text, "starting ideal as comma-separated element names");

    auto* wh = app.add_subcommand("whirl", "orbit board of a bounded partition");
    wh->add_option("poset", poset_text)->required();
    wh->add_option("--start", start, "starting labels, display order")->required();
    wh->add_option("--k", k_opt, "label bound (implied by a product poset)");

    auto* wo = app.add_subcommand("whorms", "whorm decomposition and tail-sum checks");
    wo->add_option("poset", poset_text)->required();
    wo->add_option("--start", start, "starting labels, display order")->required();
    wo->add_option("--k", k_opt, "label bound (implied by a product poset)");
    wo->add_option("--super", super, "super-board multiple (default alpha(k+2)/length)");
    wo->add_flag("--color", color, "per-whorm ANSI colors when on a terminal");

    auto* hm = app.add_subcommand("homomesy", "statistic averages over all whirl orbits");
    hm->add_option("poset", poset_text)->required();
    hm->add_option("--stat", stat_text, "statistic expression")->required();
    hm->add_option("--k", k_opt, "label bound (implied by a product poset)");

    auto* vf = app.add_subcommand("verify", "check one named claim");
    vf->add_option("claim", claim, "claim id")->required();
    vf->add_option("--n", n, "claw width / function domain size");
    vf->add_option("--k", k, "label bound / codomain size");
    vf->add_option("--m", m, "multiplicity bound for function families");
    vf->add_option("--family", family, "function family: inj or sur");
    vf->add_option("--poset", poset_text, "base poset for equivariance")->default_val("V");

    for (auto* sub : {ideals, rowm, wh, wo, hm, vf}) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (*ideals) return run_ideals(poset_text, list, as_json);
        if (*rowm) return run_rowmotion(poset_text, ideal_text, order_only, as_json);
        if (*wh) return run_whirl(poset_text, start, k_opt, as_json);
        if (*wo) return run_whorms(poset_text, start, k_opt, super, color, as_json);
        if (*hm) return run_homomesy(poset_text, stat_text, k_opt, as_json);
        if (*vf) return run_verify(claim, n, k, m, family, poset_text, as_json);
        return 64;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
