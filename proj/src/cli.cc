#include "qap/cli.h"

#include <cstdio>
#include <random>
#include <sstream>

#include "json.hpp"

#include "qap/errors.h"
#include "qap/extension.h"
#include "qap/transform.h"

namespace qap::cli {

using nlohmann::json;

namespace {

constexpr int kMaxOracleBits = 3;
constexpr int kMaxQapCliBits = 6;

void guard(int p, int hi, const char *what) {
    if (p < 1 || p > hi) {
        throw ResourceError(std::string(what) + " requires 1 <= p <= " + std::to_string(hi));
    }
}

json display_list(const SpinorSet &s) {
    json out = json::array();
    for (const auto &x : s) {
        out.push_back(x.display());
    }
    return out;
}

CommandResult ok(std::string out) {
    return {0, std::move(out)};
}

CommandResult failed(std::string out) {
    return {1, std::move(out)};
}

/// Uniform over the atlas for p <= 4, otherwise a random Clifford image of
/// the intrinsic subalgebra.
CartanSubalgebra random_cartan(int p, std::mt19937_64 &rng, const std::vector<CartanSubalgebra> *pool) {
    if (pool) {
        std::uniform_int_distribution<size_t> pick(0, pool->size() - 1);
        return (*pool)[pick(rng)];
    }
    std::uniform_int_distribution<uint32_t> word(0, (uint32_t{1} << p) - 1);
    std::vector<BasicTransform> hs;
    for (int k = 0; k < 4 * p; k++) {
        hs.emplace_back(BitWord(p, word(rng)), BitWord(p, word(rng)));
    }
    return apply_circuit(SymbolicCircuit(hs), intrinsic_cartan(p));
}

}  // namespace

CellId parse_cell(const std::string &key) {
    unsigned idx = 0;
    int eps = 0;
    char tail = 0;
    if (std::sscanf(key.c_str(), "B:%u/eps:%d%c", &idx, &eps, &tail) != 2 || (eps != 0 && eps != 1)) {
        throw ContractError("cell must look like B:<index>/eps:<0|1>, got '" + key + "'");
    }
    return CellId{idx, eps};
}

std::string render_table_text(const QAPartition &q) {
    std::ostringstream out;
    uint32_t n = uint32_t{1} << q.p();
    out << q.cartan().label() << "\n";
    out << "C: " << q.cartan().base().str() << "\n";
    for (uint32_t i = 1; i < n; i++) {
        out << "B_" << i << " | W: " << q.cell(i, 1).str() << " | Ŵ: " << q.cell(i, 0).str() << "\n";
    }
    for (uint32_t i = 1; i < n; i++) {
        out << "B_" << i << " = {" << q.group()[i].elements().str() << "}\n";
    }
    return out.str();
}

std::string render_table_json(const QAPartition &q) {
    uint32_t n = uint32_t{1} << q.p();
    json j;
    j["label"] = q.cartan().label();
    j["p"] = q.p();
    j["kind"] = q.cartan().kind();
    j["cartan"] = display_list(q.cartan().base());
    json cells = json::object();
    json bis = json::object();
    for (uint32_t i = 0; i < n; i++) {
        for (int e = 1; e >= 0; e--) {
            cells[CellId{i, e}.key()] = display_list(q.cell(i, e));
        }
        bis["B:" + std::to_string(i)] = {{"flavor", flavor_name(q.group()[i].flavor())},
                                         {"elements", display_list(q.group()[i].elements())}};
    }
    j["cells"] = cells;
    j["bisubalgebras"] = bis;
    return j.dump(2) + "\n";
}

CommandResult cmd_count(const RunConfig &cfg) {
    guard(cfg.p, kMaxEnumerateBits, "count");
    CartanAtlas atlas = enumerate_all(cfg.p);
    bool match = atlas.size() == closed_form_total(cfg.p);
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j;
        j["p"] = cfg.p;
        for (int k = 0; k <= cfg.p; k++) {
            j["by_kind"].push_back(
                {{"kind", k}, {"enumerated", atlas.by_kind[k].size()}, {"closed_form", closed_form_count(cfg.p, k)}});
        }
        j["total"] = atlas.size();
        j["closed_form_total"] = closed_form_total(cfg.p);
        j["pass"] = match;
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
        out << "kind,enumerated,closed_form\n";
        for (int k = 0; k <= cfg.p; k++) {
            out << k << "," << atlas.by_kind[k].size() << "," << closed_form_count(cfg.p, k) << "\n";
        }
        out << "total," << atlas.size() << "," << closed_form_total(cfg.p) << "\n";
    } else {
        for (int k = 0; k <= cfg.p; k++) {
            out << (k ? " " : "") << atlas.by_kind[k].size();
        }
        out << " | total " << atlas.size() << "\n";
    }
    return match ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_enumerate(const RunConfig &cfg) {
    guard(cfg.p, kMaxEnumerateBits, "enumerate");
    CartanAtlas atlas = enumerate_all(cfg.p);
    std::ostringstream out;
    if (cfg.format == Format::csv) {
        out << "label,kind,eps_se,eps_mu\n";
    }
    for (const auto &c : atlas.members()) {
        auto ps = parity_strings(c);
        if (cfg.format == Format::csv) {
            out << c.label() << "," << c.kind() << "," << ps.se << "," << ps.mu << "\n";
        } else if (cfg.format == Format::text) {
            out << c.label() << "\n";
        } else {
            json j = {{"label", c.label()},
                      {"kind", c.kind()},
                      {"eps_se", ps.se},
                      {"eps_mu", ps.mu},
                      {"elements", display_list(c.base())}};
            out << j.dump() << "\n";
        }
    }
    return ok(out.str());
}

CommandResult cmd_table(const RunConfig &cfg) {
    CartanSubalgebra c = parse_label(cfg.label);
    guard(c.p(), kMaxQapCliBits, "table");
    QAPartition q = build_qap(c);
    return ok(cfg.format == Format::json ? render_table_json(q) : render_table_text(q));
}

CommandResult cmd_qap(const RunConfig &cfg) {
    CartanSubalgebra c = parse_label(cfg.label);
    guard(c.p(), kMaxQapCliBits, "qap");
    QAPartition q = build_qap(c);
    ClosureReport rep = verify_closure(q);
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j = json::parse(render_table_json(q));
        j["closure"] = {{"pass", rep.pass}, {"pairs_checked", rep.pairs_checked}, {"witness", rep.witness}};
        out << j.dump(2) << "\n";
    } else {
        uint32_t n = uint32_t{1} << c.p();
        out << c.label() << "\n";
        for (uint32_t i = 0; i < n; i++) {
            for (int e = 1; e >= 0; e--) {
                out << CellId{i, e}.key() << " [" << q.cell(i, e).size() << "]: " << q.cell(i, e).str() << "\n";
            }
        }
        out << "closure: " << (rep.pass ? "pass" : "FAIL " + rep.witness) << " (" << rep.pairs_checked
            << " anti-commuting pairs)\n";
    }
    return rep.pass ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_coqa(const RunConfig &cfg) {
    CartanSubalgebra c = parse_label(cfg.label);
    guard(c.p(), kMaxQapCliBits, "coqa");
    QAPartition q = build_qap(c);
    CoQuotientView v = coquotient_view(q, parse_cell(cfg.cell.empty() ? "B:1/eps:1" : cfg.cell));
    ClosureReport rep = verify_coquotient(q, v);
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j;
        j["label"] = c.label();
        j["center"] = v.center.key();
        for (const auto &pr : v.pairs) {
            j["pairs"].push_back({{"kind", pair_kind_name(pr.kind)},
                                  {"first", pr.first.key()},
                                  {"second", pr.second ? json(pr.second->key()) : json(nullptr)}});
        }
        j["pass"] = rep.pass;
        j["witness"] = rep.witness;
        out << j.dump(2) << "\n";
    } else {
        out << c.label() << " centered at " << v.center.key() << "\n";
        for (const auto &pr : v.pairs) {
            out << pair_kind_name(pr.kind) << " | " << pr.first.key() << " | "
                << (pr.second ? pr.second->key() : std::string("-")) << "\n";
        }
        out << "conjugate partition: " << (rep.pass ? "pass" : "FAIL " + rep.witness) << "\n";
    }
    return rep.pass ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_verify(const RunConfig &cfg) {
    guard(cfg.p, kMaxEnumerateBits, "verify");
    auto members = enumerate_all(cfg.p).members();
    std::vector<CartanSubalgebra> todo = members;
    if (cfg.p >= 5) {
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(todo.begin(), todo.end(), rng);
        todo.resize(std::min<size_t>(todo.size(), (size_t)cfg.n));
    }
    size_t passed = 0;
    std::string witness;
    for (const auto &c : todo) {
        try {
            ClosureReport rep = verify_closure(build_qap(c));
            if (rep.pass) {
                passed++;
            } else if (witness.empty()) {
                witness = c.label() + ": " + rep.witness;
            }
        } catch (const InvariantError &e) {
            if (witness.empty()) {
                witness = c.label() + ": " + e.what();
            }
        }
    }
    bool pass = passed == todo.size();
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j = {{"p", cfg.p}, {"checked", todo.size()}, {"passed", passed}, {"pass", pass}, {"witness", witness}};
        out << j.dump(2) << "\n";
    } else {
        out << "verify p=" << cfg.p << ": " << passed << "/" << todo.size() << " quotient algebra partitions closed"
            << (pass ? "" : " FAIL " + witness) << "\n";
    }
    return pass ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_oracle(const RunConfig &cfg) {
    guard(cfg.p, kMaxOracleBits, "oracle");
    int p = cfg.p;
    uint32_t total = uint32_t{1} << (2 * p);
    std::vector<ExactMatrix> mats;
    for (uint32_t a = 0; a < total; a++) {
        mats.push_back(to_matrix(PhasedSpinor(Spinor::from_code(p, a))));
    }
    uint64_t checked = 0;
    std::string witness;
    for (uint32_t a = 0; a < total && witness.empty(); a++) {
        Spinor s = Spinor::from_code(p, a);
        BasicTransform h(s.zeta(), s.alpha());
        ExactMatrix hm = unnormalized_matrix(h);
        ExactMatrix hd = hm.adjoint();
        for (uint32_t b = 0; b < total; b++) {
            Spinor t = Spinor::from_code(p, b);
            checked++;
            if (!(to_matrix(product(PhasedSpinor(s), PhasedSpinor(t))) == mats[a] * mats[b])) {
                witness = "product " + s.str() + " * " + t.str();
                break;
            }
            bool mcomm = mats[a] * mats[b] == mats[b] * mats[a];
            if (mcomm != commutes(s, t)) {
                witness = "commutation " + s.str() + ", " + t.str();
                break;
            }
            ExactMatrix lhs = hm * mats[b] * hd;
            ExactMatrix rhs = to_matrix(conjugate(h, PhasedSpinor(t))).scaled({2, 0});
            if (!(lhs == rhs)) {
                witness = "conjugation " + h.str() + " on " + t.str();
                break;
            }
        }
    }
    bool pass = witness.empty();
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j = {{"p", p}, {"pairs", checked}, {"pass", pass}, {"witness", witness}};
        out << j.dump(2) << "\n";
    } else {
        out << "oracle p=" << p << ": " << checked << " pairs " << (pass ? "agree" : "FAIL " + witness) << "\n";
    }
    return pass ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_classify(const RunConfig &cfg) {
    guard(cfg.p, kMaxEnumerateBits, "classify");
    CartanAtlas atlas = enumerate_all(cfg.p);
    ClassIndex idx = classify_local(atlas);
    size_t expected = size_t{1} << (cfg.p * (cfg.p - 1) / 2);
    size_t sum = 0;
    for (const auto &[k, v] : idx) {
        sum += v.size();
    }
    bool pass = idx.size() == expected && sum == atlas.size();
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j;
        j["p"] = cfg.p;
        for (const auto &[k, v] : idx) {
            j["classes"].push_back({{"eps_mu", k}, {"size", v.size()}});
        }
        j["class_count"] = idx.size();
        j["pass"] = pass;
        out << j.dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
        out << "eps_mu,size\n";
        for (const auto &[k, v] : idx) {
            out << (k.empty() ? "-" : k) << "," << v.size() << "\n";
        }
    } else {
        for (const auto &[k, v] : idx) {
            out << "eps_mu=" << (k.empty() ? "-" : k) << " : " << v.size() << "\n";
        }
        out << idx.size() << " classes, " << sum << " subalgebras\n";
    }
    return pass ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_connect(const RunConfig &cfg) {
    guard(cfg.p, kMaxQapCliBits, "connect");
    std::mt19937_64 rng(cfg.seed);
    std::vector<CartanSubalgebra> pool;
    if (cfg.p <= 4) {
        pool = enumerate_all(cfg.p).members();
    }
    int connected = 0;
    std::string witness;
    std::ostringstream log;
    for (int t = 0; t < cfg.n; t++) {
        CartanSubalgebra c = random_cartan(cfg.p, rng, pool.empty() ? nullptr : &pool);
        try {
            QAPartition q = build_qap(c);
            DecompositionSequence seq = random_sequence(q, rng);
            SymbolicCircuit qc = connect(seq);
            connected++;
            if (cfg.format == Format::text && t < 3) {
                log << "  " << c.label() << ": " << (qc.empty() ? "(identity)" : qc.str()) << "\n";
            }
        } catch (const InvariantError &e) {
            if (witness.empty()) {
                witness = c.label() + ": " + e.what();
            }
        }
    }
    bool pass = connected == cfg.n;
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j = {{"p", cfg.p}, {"seed", cfg.seed}, {"trials", cfg.n}, {"connected", connected}, {"pass", pass},
                  {"witness", witness}};
        out << j.dump(2) << "\n";
    } else {
        out << "connect p=" << cfg.p << " seed=" << cfg.seed << ": " << connected << "/" << cfg.n
            << " sequences connected" << (pass ? "" : " FAIL " + witness) << "\n"
            << log.str();
    }
    return pass ? ok(out.str()) : failed(out.str());
}

CommandResult cmd_lift(const RunConfig &cfg) {
    CartanSubalgebra c = parse_label(cfg.label);
    Lift up = local_lift(c);
    Lift cls = local_class_circuit(c);
    auto ps = mutual_parity(up.lifted);
    std::ostringstream out;
    if (cfg.format == Format::json) {
        json j = {{"label", c.label()},
                  {"lift", up.circuit.str()},
                  {"lifted", up.lifted.label()},
                  {"eps_se", ps.se},
                  {"eps_mu", ps.mu},
                  {"class_circuit", cls.circuit.str()},
                  {"representative", cls.lifted.label()},
                  {"local", cls.circuit.is_local()}};
        out << j.dump(2) << "\n";
    } else {
        out << "lift: " << (up.circuit.empty() ? "(identity)" : up.circuit.str()) << "\n";
        out << "lifted: " << up.lifted.label() << "  eps_se=" << ps.se << " eps_mu=" << ps.mu << "\n";
        out << "class: " << (cls.circuit.empty() ? "(identity)" : cls.circuit.str()) << " -> " << cls.lifted.label()
            << "\n";
    }
    return cls.circuit.is_local() ? ok(out.str()) : failed(out.str());
}

CommandResult run(const std::string &command, const RunConfig &cfg) {
    try {
        if (command == "count") return cmd_count(cfg);
        if (command == "enumerate") return cmd_enumerate(cfg);
        if (command == "table") return cmd_table(cfg);
        if (command == "qap") return cmd_qap(cfg);
        if (command == "coqa") return cmd_coqa(cfg);
        if (command == "verify") return cmd_verify(cfg);
        if (command == "oracle") return cmd_oracle(cfg);
        if (command == "classify") return cmd_classify(cfg);
        if (command == "connect") return cmd_connect(cfg);
        if (command == "lift") return cmd_lift(cfg);
        return {2, "unknown command '" + command + "'\n"};
    } catch (const InvariantError &e) {
        return {1, std::string("invariant failure: ") + e.what() + "\n"};
    } catch (const ResourceError &e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const ContractError &e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace qap::cli
