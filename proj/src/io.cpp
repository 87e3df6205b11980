#include "herlat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace herlat {

using json = nlohmann::ordered_json;

namespace {

json rat_to_json(const Rat& q) {
    if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return rat_str(q);
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ParseError(where + ": expected a rational as integer or \"p/q\" string");
}

Int int_from_json(const json& j, const std::string& where) {
    Rat q = rat_from_json(j, where);
    if (!is_integer(q)) throw ParseError(where + ": expected an integer");
    return q.get_num();
}

json matq_to_json(const MatQ& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatQ matq_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a matrix");
    std::size_t cols = j[0].size();
    MatQ m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(where + ": ragged matrix at row " + std::to_string(i));
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = rat_from_json(j[i][c], where + "[" + std::to_string(i) + "]");
    }
    return m;
}

json vec_rat_to_json(const std::vector<Rat>& v) {
    json row = json::array();
    for (const auto& q : v) row.push_back(rat_to_json(q));
    return row;
}

std::vector<Rat> vec_rat_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Rat> v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

void require_fields(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError(where + ": unexpected field '" + it.key() + "'");
}

json powerbound_to_json(const PowerBound& b) {
    json out = json::array();
    for (const auto& [base, exp] : b.factors()) {
        json pair = json::array();
        pair.push_back(rat_str(base));
        pair.push_back(rat_str(exp));
        out.push_back(std::move(pair));
    }
    return out;
}

PowerBound powerbound_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a factor list");
    PowerBound b;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError(where + ": factor must be a [base, exponent] pair");
        b.push(rat_from_json(pair[0], where), rat_from_json(pair[1], where));
    }
    return b;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    const Algebra& a = inst.algebra();
    json root;
    root["format"] = "herlat-instance-1";
    json alg;
    alg["type"] = a.kind() == AlgebraKind::TypeI ? "I" : "II";
    json mp = json::array();
    for (const auto& c : a.field().minpoly()) {
        if (!c.fits_slong_p()) throw Error("instance_to_json: minpoly coefficient too large");
        mp.push_back(c.get_si());
    }
    alg["minpoly"] = std::move(mp);
    if (a.kind() == AlgebraKind::TypeII) {
        alg["a"] = vec_rat_to_json(a.qa());
        alg["b"] = vec_rat_to_json(a.qb());
    }
    root["algebra"] = std::move(alg);
    json action;
    action["t"] = matq_to_json(inst.act_t());
    if (a.kind() == AlgebraKind::TypeII) {
        action["i"] = matq_to_json(inst.act_i());
        action["j"] = matq_to_json(inst.act_j());
    }
    root["action"] = std::move(action);
    root["phi"] = matq_to_json(to_rat(inst.phi()));
    root["lattice"] = matq_to_json(inst.lattice().basis());
    return root.dump(1);
}

Instance instance_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    require_fields(root, {"format", "algebra", "action", "phi", "lattice"}, "instance");
    if (!root.contains("format") || root["format"] != "herlat-instance-1")
        throw ParseError("instance: missing or unknown format tag");
    if (!root.contains("algebra") || !root.contains("action") || !root.contains("phi") ||
        !root.contains("lattice"))
        throw ParseError("instance: missing required field");

    const json& alg = root["algebra"];
    require_fields(alg, {"type", "minpoly", "a", "b"}, "algebra");
    if (!alg.contains("type") || !alg.contains("minpoly"))
        throw ParseError("algebra: missing type or minpoly");
    std::string type = alg["type"].get<std::string>();
    std::vector<Int> minpoly;
    for (const auto& c : alg["minpoly"]) minpoly.push_back(int_from_json(c, "minpoly"));
    NumberField field(minpoly);

    Algebra a = [&] {
        if (type == "I") {
            if (alg.contains("a") || alg.contains("b"))
                throw ParseError("algebra: type I takes no quaternion parameters");
            return Algebra::type1(field);
        }
        if (type != "II") throw ParseError("algebra: type must be \"I\" or \"II\"");
        if (!alg.contains("a") || !alg.contains("b"))
            throw ParseError("algebra: type II requires a and b");
        return Algebra::type2(field, vec_rat_from_json(alg["a"], "a"),
                              vec_rat_from_json(alg["b"], "b"));
    }();

    const json& action = root["action"];
    require_fields(action, {"t", "i", "j"}, "action");
    if (!action.contains("t")) throw ParseError("action: missing t");
    MatQ act_t = matq_from_json(action["t"], "action.t");
    MatQ act_i, act_j;
    if (a.kind() == AlgebraKind::TypeII) {
        if (!action.contains("i") || !action.contains("j"))
            throw ParseError("action: type II requires i and j");
        act_i = matq_from_json(action["i"], "action.i");
        act_j = matq_from_json(action["j"], "action.j");
    } else if (action.contains("i") || action.contains("j")) {
        throw ParseError("action: type I takes only t");
    }

    MatQ phi_q = matq_from_json(root["phi"], "phi");
    if (!is_integral(phi_q)) throw ParseError("phi: entries must be integers");
    MatQ lat = matq_from_json(root["lattice"], "lattice");
    try {
        return Instance(a, act_t, act_i, act_j, to_int_matrix(phi_q),
                        ZLattice(phi_q.rows(), lat));
    } catch (const InvalidParameters& e) {
        throw ParseError(std::string("instance validation: ") + e.what());
    }
}

std::string certificate_to_json(const ReductionCertificate& cert) {
    json root;
    root["format"] = "herlat-cert-1";
    json basis = json::array();
    for (const auto& row : cert.basis) {
        json r = json::array();
        for (const auto& c : row) {
            if (c.fits_slong_p())
                r.push_back(c.get_si());
            else
                r.push_back(c.get_str());
        }
        basis.push_back(std::move(r));
    }
    root["basis"] = std::move(basis);
    json trace = json::array();
    for (const auto& step : cert.case_trace) {
        json s = json::array();
        s.push_back(std::string(1, step.label));
        s.push_back(step.i);
        s.push_back(step.j);
        trace.push_back(std::move(s));
    }
    root["case_trace"] = std::move(trace);
    root["index"] = cert.index.get_str();
    json dgram = json::array();
    for (const auto& row : cert.d_gram) {
        json r = json::array();
        for (const auto& elem : row) r.push_back(vec_rat_to_json(elem));
        dgram.push_back(std::move(r));
    }
    root["d_gram"] = std::move(dgram);
    json norms = json::array();
    for (const auto& row : cert.norm_sq) {
        json r = json::array();
        for (const auto& q : row) r.push_back(rat_str(q));
        norms.push_back(std::move(r));
    }
    root["norm_sq"] = std::move(norms);
    root["eta_used"] = cert.eta_used.get_str();
    root["disc_R"] = cert.disc_r.get_str();
    root["disc_L"] = cert.disc_l.get_str();
    json bounds;
    bounds["index_eta"] = powerbound_to_json(cert.index_bound_eta);
    bounds["psi_eta"] = powerbound_to_json(cert.psi_bound_eta);
    bounds["index_disc_l"] = powerbound_to_json(cert.index_bound_disc_l);
    bounds["psi_disc_l"] = powerbound_to_json(cert.psi_bound_disc_l);
    root["bounds"] = std::move(bounds);
    return root.dump(1);
}

ReductionCertificate certificate_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    require_fields(root,
                   {"format", "basis", "case_trace", "index", "d_gram", "norm_sq", "eta_used",
                    "disc_R", "disc_L", "bounds"},
                   "certificate");
    if (!root.contains("format") || root["format"] != "herlat-cert-1")
        throw ParseError("certificate: missing or unknown format tag");
    for (const char* f : {"basis", "case_trace", "index", "d_gram", "norm_sq", "eta_used",
                          "disc_R", "disc_L", "bounds"})
        if (!root.contains(f)) throw ParseError(std::string("certificate: missing ") + f);

    ReductionCertificate cert;
    for (const auto& row : root["basis"]) {
        std::vector<Int> r;
        for (const auto& c : row) r.push_back(int_from_json(c, "basis"));
        cert.basis.push_back(std::move(r));
    }
    for (const auto& step : root["case_trace"]) {
        if (!step.is_array() || step.size() != 3)
            throw ParseError("case_trace: expected [label, i, j]");
        std::string label = step[0].get<std::string>();
        if (label.size() != 1 || (label[0] != 'a' && label[0] != 'b' && label[0] != 'c'))
            throw ParseError("case_trace: label must be a, b or c");
        cert.case_trace.push_back({label[0],
                                   static_cast<std::size_t>(step[1].get<std::uint64_t>()),
                                   static_cast<std::size_t>(step[2].get<std::uint64_t>())});
    }
    cert.index = int_from_json(root["index"], "index");
    for (const auto& row : root["d_gram"]) {
        std::vector<AlgElem> r;
        for (const auto& elem : row) r.push_back(vec_rat_from_json(elem, "d_gram"));
        cert.d_gram.push_back(std::move(r));
    }
    for (const auto& row : root["norm_sq"]) {
        std::vector<Rat> r;
        for (const auto& q : row) r.push_back(rat_from_json(q, "norm_sq"));
        cert.norm_sq.push_back(std::move(r));
    }
    cert.eta_used = int_from_json(root["eta_used"], "eta_used");
    cert.disc_r = int_from_json(root["disc_R"], "disc_R");
    cert.disc_l = int_from_json(root["disc_L"], "disc_L");
    const json& bounds = root["bounds"];
    require_fields(bounds, {"index_eta", "psi_eta", "index_disc_l", "psi_disc_l"}, "bounds");
    for (const char* f : {"index_eta", "psi_eta", "index_disc_l", "psi_disc_l"})
        if (!bounds.contains(f)) throw ParseError(std::string("bounds: missing ") + f);
    cert.index_bound_eta = powerbound_from_json(bounds["index_eta"], "bounds.index_eta");
    cert.psi_bound_eta = powerbound_from_json(bounds["psi_eta"], "bounds.psi_eta");
    cert.index_bound_disc_l =
        powerbound_from_json(bounds["index_disc_l"], "bounds.index_disc_l");
    cert.psi_bound_disc_l = powerbound_from_json(bounds["psi_disc_l"], "bounds.psi_disc_l");
    return cert;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace herlat
