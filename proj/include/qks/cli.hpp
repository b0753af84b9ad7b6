#pragma once

#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qks/fock.hpp"
#include "qks/grassmann.hpp"
#include "qks/hurwitz_oracle.hpp"
#include "qks/qseries_identity.hpp"

namespace qks {

struct RunConfig {
    std::string command;          // verify | tau | wave | oracle | bf-check | identities
    std::string model = "hurwitz";
    int N = 40;
    int j_max = 8;
    int k_max = 1;
    int l_max = 1;
    int d_max = 5;
    int b_max = 6;
    std::string format = "json"; // json | tsv
};

namespace detail {

inline nlohmann::json report_to_json(const CheckReport& rep) {
    nlohmann::json residual = nlohmann::json::array();
    for (auto& [e, c] : rep.residual) residual.push_back({e, c.to_string()});
    return {{"check", rep.check},
            {"model", rep.model},
            {"params", rep.params},
            {"status", rep.pass ? "pass" : "fail"},
            {"residual", residual}};
}

inline std::string params_str(const std::map<std::string, long long>& params) {
    std::string s;
    for (auto& [k, v] : params) {
        if (!s.empty()) s += ",";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

inline void emit_reports(std::vector<CheckReport> reports, const RunConfig& cfg,
                         std::ostream& out) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         auto ka = std::tie(a.check, a.model), kb = std::tie(b.check, b.model);
                         if (ka != kb) return ka < kb;
                         return params_str(a.params) < params_str(b.params);
                     });
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& rep : reports) arr.push_back(report_to_json(rep));
        out << arr.dump(2) << "\n";
        return;
    }
    for (auto& rep : reports)
        out << rep.check << "\t" << rep.model << "\t" << params_str(rep.params) << "\t"
            << (rep.pass ? "pass" : "fail") << "\t" << rep.residual.size() << "\n";
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    for (auto& rep : reports)
        if (!rep.pass) return false;
    return true;
}

inline PPoly model_tau(const ModelId& id, int d_max) {
    if (id.family == Family::hurwitz) return hurwitz_tau(d_max);
    auto Vb = AdmissibleBasis::from_model(id, std::max(d_max, 1), d_max + 1);
    return tau_from_basis(Vb, d_max);
}

inline void emit_tau(const PPoly& tau, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& [mu, c] : tau.terms())
            arr.push_back({{"mu", partition_str(mu)}, {"coeff", c.to_string()}});
        out << arr.dump(2) << "\n";
        return;
    }
    for (auto& [mu, c] : tau.terms()) out << partition_str(mu) << "\t" << c.to_string() << "\n";
}

} // namespace detail

// Executes the configured command, writing the report stream to out.
// Returns 0 (all checks pass), 1 (a check failed), 2 (usage), 3 (internal).
inline int run(const RunConfig& cfg, std::ostream& out) {
    try {
        if (cfg.N < 1 || cfg.j_max < 0 || cfg.k_max < 0 || cfg.l_max < 0 || cfg.d_max < 0 ||
            cfg.b_max < 0) {
            out << "error: bounds must be positive\n";
            return 2;
        }
        if (cfg.format != "json" && cfg.format != "tsv") {
            out << "error: unknown format " << cfg.format << "\n";
            return 2;
        }

        if (cfg.command == "verify") {
            ModelId id = ModelId::parse(cfg.model);
            std::vector<CheckReport> reports;
            reports.push_back(check_annihilation(id, cfg.N));
            reports.push_back(check_ladder(id, cfg.j_max, cfg.N));
            reports.push_back(check_recursion(id, cfg.j_max, cfg.N));
            reports.push_back(check_commutator(id));
            reports.push_back(check_w_constraints(id, cfg.k_max, cfg.l_max, cfg.j_max, cfg.N));
            detail::emit_reports(reports, cfg, out);
            return detail::all_pass(reports) ? 0 : 1;
        }

        if (cfg.command == "tau") {
            ModelId id = ModelId::parse(cfg.model);
            detail::emit_tau(detail::model_tau(id, cfg.d_max), cfg, out);
            return 0;
        }

        if (cfg.command == "wave") {
            ModelId id = ModelId::parse(cfg.model);
            ZSeries w = sato_wave(detail::model_tau(id, cfg.N), cfg.N);
            if (cfg.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (auto& [e, c] : w.coeffs()) arr.push_back({e, c.to_string()});
                out << arr.dump(2) << "\n";
            } else {
                out << w.to_tsv();
            }
            return 0;
        }

        if (cfg.command == "oracle") {
            auto rows = oracle_table(cfg.d_max, cfg.b_max);
            bool ok = true;
            for (auto& row : rows) ok = ok && row.match;
            if (cfg.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (auto& row : rows)
                    arr.push_back({{"d", weight(row.mu)},
                                   {"mu", partition_str(row.mu)},
                                   {"b", row.b},
                                   {"count", row.count},
                                   {"normalized", detail::rat_str(row.normalized)},
                                   {"tau_coeff", detail::rat_str(row.tau_coeff)},
                                   {"match", row.match}});
                out << arr.dump(2) << "\n";
            } else {
                out << "d\tmu\tb\tcount\tnormalized\ttau_coeff\tmatch\n";
                for (auto& row : rows)
                    out << weight(row.mu) << "\t" << partition_str(row.mu) << "\t" << row.b
                        << "\t" << row.count << "\t" << detail::rat_str(row.normalized) << "\t"
                        << detail::rat_str(row.tau_coeff) << "\t" << (row.match ? "yes" : "NO")
                        << "\n";
            }
            out << (ok ? "ALL MATCH" : "MISMATCH") << "\n";
            return ok ? 0 : 1;
        }

        if (cfg.command == "bf-check") {
            std::vector<CheckReport> reports;
            for (int m = 1; m <= 4; ++m) {
                reports.push_back(cross_check_operator({FermOp::alpha, m}, cfg.d_max));
                reports.push_back(cross_check_operator({FermOp::alpha, -m}, cfg.d_max));
            }
            for (int m : {-1, 0, 1}) reports.push_back(cross_check_operator({FermOp::L, m}, cfg.d_max));
            reports.push_back(cross_check_operator({FermOp::K0, 0}, cfg.d_max));
            detail::emit_reports(reports, cfg, out);
            return detail::all_pass(reports) ? 0 : 1;
        }

        if (cfg.command == "identities") {
            std::vector<CheckReport> reports;
            reports.push_back(q_product_identity_check(6, 20, true));
            reports.push_back(q_product_identity_check(8, 25, false));
            detail::emit_reports(reports, cfg, out);
            return detail::all_pass(reports) ? 0 : 1;
        }

        out << "error: unknown command " << cfg.command << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace qks
