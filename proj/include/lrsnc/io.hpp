#ifndef LRSNC_IO_HPP
#define LRSNC_IO_HPP

// Text formats: zero patterns, generator CSV, constrained-code blocks, and the
// JSON documents for network instances and design reports.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lrsnc/constraints.hpp"
#include "lrsnc/construct.hpp"
#include "lrsnc/errors.hpp"
#include "lrsnc/gf.hpp"
#include "lrsnc/lrs.hpp"
#include "lrsnc/netsim.hpp"

namespace lrsnc {

namespace detail {

inline std::string_view strip(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto p = s.find(sep, start);
        out.emplace_back(strip(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

inline std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("expected a non-negative integer, got '" + tok + "'", line);
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw parse_error("integer out of range: '" + tok + "'", line);
    }
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep, auto&& f) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += f(v[i]);
    }
    return s;
}

inline std::string elem_str(Elem a) { return std::to_string(a.value); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Zero patterns: one line per row, space-separated 1-based columns, '-' empty.
// Blank lines and lines starting with '#' are skipped.

inline std::vector<std::vector<std::size_t>> parse_zero_pattern(std::istream& in) {
    std::vector<std::vector<std::size_t>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto s = detail::strip(line);
        if (s.empty() || s.front() == '#') continue;
        std::vector<std::size_t> row;
        if (s != "-") {
            std::istringstream ss{std::string(s)};
            std::string tok;
            while (ss >> tok) {
                const auto v = detail::parse_uint(tok, lineno);
                if (v == 0) throw parse_error("column indices are 1-based", lineno);
                row.push_back(static_cast<std::size_t>(v - 1));
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("pattern has no rows", 0);
    return rows;
}

inline std::vector<std::vector<std::size_t>> parse_zero_pattern(const std::string& text) {
    std::istringstream in(text);
    return parse_zero_pattern(in);
}

inline std::string format_zero_pattern(const SupportConstraint& sc) {
    std::string s;
    for (const auto& z : sc.zero_sets) {
        s += z.empty() ? "-" : detail::join(z, " ", [](std::size_t j) { return std::to_string(j + 1); });
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Generator CSV: "# p=..,e=..,m=..,k=..,partition=a b" then one row per line.

inline std::string generator_csv(const FieldTower& F, const Matrix<Elem>& G, const OrderedPartition& part) {
    std::ostringstream o;
    o << "# p=" << F.p() << ",e=" << F.e() << ",m=" << F.m() << ",k=" << G.rows() << ",partition=" << part.to_string()
      << '\n';
    for (std::size_t i = 0; i < G.rows(); ++i) {
        for (std::size_t j = 0; j < G.cols(); ++j) o << (j ? "," : "") << G(i, j).value;
        o << '\n';
    }
    return o.str();
}

// ---------------------------------------------------------------------------
// Constrained code: bracketed sections of CSV lines.

inline std::string serialize(const ConstrainedCode& cc) {
    const FieldTower& F = cc.code.field;
    auto digits = [](const std::vector<unsigned>& v) {
        return detail::join(v, ",", [](unsigned x) { return std::to_string(x); });
    };
    auto elems = [](const std::vector<Elem>& v) { return detail::join(v, ",", detail::elem_str); };
    auto matrix = [&](const Matrix<Elem>& M) {
        std::string s;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            const auto r = M.row(i);
            s += elems(std::vector<Elem>(r.begin(), r.end())) + '\n';
        }
        return s;
    };
    std::ostringstream o;
    o << "[field]\n" << F.p() << ',' << F.e() << ',' << F.m() << '\n';
    o << "base_modulus," << digits(F.base_modulus()) << '\n';
    o << "top_modulus," << digits(F.top_modulus()) << '\n';
    o << "[partition]\n"
      << detail::join(cc.code.partition.parts(), ",", [](std::size_t x) { return std::to_string(x); }) << '\n';
    o << "[k]\n" << cc.code.k << '\n';
    o << "[rows]\n" << cc.G.rows() << '\n';
    o << "[attempts]\n" << cc.attempts << '\n';
    o << "[representatives]\n" << elems(cc.code.reps) << '\n';
    o << "[multipliers]\n";
    for (const auto& b : cc.code.multipliers) o << elems(b) << '\n';
    o << "[zero_sets]\n";
    for (const auto& z : cc.sc.zero_sets)
        o << (z.empty() ? "-" : detail::join(z, ",", [](std::size_t j) { return std::to_string(j + 1); })) << '\n';
    o << "[T]\n" << matrix(cc.T);
    o << "[G]\n" << matrix(cc.G);
    return o.str();
}

/// Inverse of serialize; re-derives T and G from the stored parameters and
/// rejects the document if they differ from the stored matrices.
inline ConstrainedCode deserialize_constrained_code(const std::string& text) {
    struct Line {
        std::string text;
        std::size_t no;
    };
    std::vector<std::pair<std::string, std::vector<Line>>> sections;
    {
        std::istringstream in(text);
        std::string raw;
        std::size_t no = 0;
        while (std::getline(in, raw)) {
            ++no;
            const auto s = detail::strip(raw);
            if (s.empty() || s.front() == '#') continue;
            if (s.front() == '[') {
                if (s.back() != ']') throw parse_error("unterminated section header", no);
                sections.push_back({std::string(s.substr(1, s.size() - 2)), {}});
                continue;
            }
            if (sections.empty()) throw parse_error("content before the first section", no);
            sections.back().second.push_back({std::string(s), no});
        }
    }
    auto get = [&](const std::string& name) -> const std::vector<Line>& {
        for (const auto& [n, lines] : sections)
            if (n == name) return lines;
        throw parse_error("missing section [" + name + "]", 0);
    };
    auto uints = [](const Line& l, std::size_t skip = 0) {
        const auto toks = detail::split(l.text, ',');
        std::vector<std::uint64_t> v;
        for (std::size_t i = skip; i < toks.size(); ++i) v.push_back(detail::parse_uint(toks[i], l.no));
        return v;
    };
    auto single = [&](const std::string& name) {
        const auto& ls = get(name);
        if (ls.size() != 1) throw parse_error("section [" + name + "] needs exactly one line", ls.empty() ? 0 : ls[0].no);
        const auto v = uints(ls[0]);
        if (v.size() != 1) throw parse_error("section [" + name + "] needs one value", ls[0].no);
        return v[0];
    };

    const auto& fl = get("field");
    if (fl.size() != 3) throw parse_error("[field] needs p,e,m plus two modulus lines", fl.empty() ? 0 : fl[0].no);
    const auto pem = uints(fl[0]);
    if (pem.size() != 3) throw parse_error("expected p,e,m", fl[0].no);
    auto modulus = [&](const Line& l, const std::string& tag) {
        if (l.text.rfind(tag + ",", 0) != 0) throw parse_error("expected " + tag, l.no);
        std::vector<unsigned> d;
        for (auto x : uints(l, 1)) d.push_back(static_cast<unsigned>(x));
        return d;
    };
    FieldTower F;
    try {
        F = FieldTower::make(static_cast<unsigned>(pem[0]), static_cast<unsigned>(pem[1]), static_cast<unsigned>(pem[2]),
                             modulus(fl[1], "base_modulus"), modulus(fl[2], "top_modulus"));
    } catch (const invalid_field& e) {
        throw parse_error(e.what(), fl[0].no);
    }

    std::vector<std::size_t> parts;
    for (auto x : uints(get("partition").at(0))) parts.push_back(static_cast<std::size_t>(x));
    const OrderedPartition part(parts);
    const std::size_t k = single("k");
    const std::size_t rows = single("rows");

    auto elems_of = [&](const Line& l) {
        std::vector<Elem> v;
        for (auto x : uints(l)) {
            if (x >= F.size()) throw parse_error("element outside the field", l.no);
            v.push_back(Elem{x});
        }
        return v;
    };
    ConstrainedCode cc;
    cc.attempts = single("attempts");
    cc.code.field = F;
    cc.code.partition = part;
    cc.code.k = k;
    cc.code.reps = elems_of(get("representatives").at(0));
    for (const auto& l : get("multipliers")) cc.code.multipliers.push_back(elems_of(l));
    const auto rep = validate(cc.code);
    if (!rep.ok()) throw parse_error("invalid code: " + rep.to_string(), get("multipliers").at(0).no);

    std::vector<std::vector<std::size_t>> zs;
    for (const auto& l : get("zero_sets")) {
        std::vector<std::size_t> z;
        if (l.text != "-")
            for (auto x : uints(l)) {
                if (x == 0) throw parse_error("column indices are 1-based", l.no);
                z.push_back(static_cast<std::size_t>(x - 1));
            }
        zs.push_back(std::move(z));
    }
    cc.sc = SupportConstraint(part.length(), std::move(zs));

    auto matrix_of = [&](const std::string& name, std::size_t r, std::size_t c) {
        const auto& ls = get(name);
        if (ls.size() != r) throw parse_error("[" + name + "] has wrong number of rows", ls.empty() ? 0 : ls[0].no);
        Matrix<Elem> M(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            const auto v = elems_of(ls[i]);
            if (v.size() != c) throw parse_error("[" + name + "] row has wrong length", ls[i].no);
            for (std::size_t j = 0; j < c; ++j) M(i, j) = v[j];
        }
        return M;
    };
    cc.T = matrix_of("T", k, k);
    cc.G = matrix_of("G", rows, part.length());

    const Matrix<Elem> T = build_T(cc.code, cc.sc);
    const Matrix<Elem> G = multiply(top_ops(F), T, generator_matrix(cc.code)).block(0, 0, rows, part.length());
    if (!(T == cc.T)) throw parse_error("stored T does not match the code parameters", get("T").at(0).no);
    if (!(G == cc.G)) throw parse_error("stored G does not match T times the LRS generator", get("G").at(0).no);
    return cc;
}

// ---------------------------------------------------------------------------
// JSON documents. Access sets are 1-based on disk.

inline NetworkInstance instance_from_json(const nlohmann::json& j) {
    NetworkInstance inst;
    try {
        inst.h = j.at("h").get<std::size_t>();
        inst.r = j.at("r").get<std::vector<std::size_t>>();
        for (const auto& J : j.at("S")) {
            std::vector<std::size_t> s;
            for (const auto& g : J) {
                const auto v = g.get<std::size_t>();
                if (v == 0 || v > inst.h) throw parse_error("access set entry " + std::to_string(v) + " outside [1, h]", 0);
                s.push_back(v - 1);
            }
            inst.S.push_back(std::move(s));
        }
        inst.t = j.value("t", std::size_t{0});
        inst.rho = j.value("rho", std::size_t{0});
        inst.ell = j.value("ell", std::size_t{1});
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("network instance: ") + e.what(), 0);
    }
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
    return inst;
}

inline NetworkInstance parse_instance(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), 0);
    }
    return instance_from_json(j);
}

inline nlohmann::json to_json(const NetworkInstance& inst) {
    nlohmann::json S = nlohmann::json::array();
    for (const auto& J : inst.S) {
        nlohmann::json a = nlohmann::json::array();
        for (auto g : J) a.push_back(g + 1);
        S.push_back(a);
    }
    return {{"h", inst.h}, {"r", inst.r}, {"S", S}, {"t", inst.t}, {"rho", inst.rho}, {"ell", inst.ell}};
}

inline nlohmann::json to_json(const DesignResult& d) {
    nlohmann::json j;
    j["instance"] = to_json(d.inst);
    j["seed"] = d.seed;
    j["n_J"] = d.n_J;
    j["n"] = d.n;
    j["k"] = d.k;
    j["k_tilde"] = d.k_tilde;
    j["d"] = d.d;
    j["field"] = {{"q", d.field.q}, {"p", d.field.p}, {"e", d.field.e}, {"m", d.field.m}, {"m_sharp", d.field.m_sharp}};
    j["blocks"] = d.blocks.parts();
    j["packet_length"] = d.n + d.field.m;
    j["note"] = d.note;
    j["code"] = d.code ? nlohmann::json(serialize(*d.code)) : nlohmann::json(nullptr);
    return j;
}

inline DesignResult design_from_json(const nlohmann::json& j) {
    DesignResult d;
    try {
        d.inst = instance_from_json(j.at("instance"));
        d.seed = j.value("seed", std::uint64_t{0});
        d.n_J = j.at("n_J").get<std::vector<std::size_t>>();
        d.n = j.at("n").get<std::size_t>();
        d.k = j.at("k").get<std::size_t>();
        d.k_tilde = j.at("k_tilde").get<std::size_t>();
        d.d = j.at("d").get<std::size_t>();
        const auto& f = j.at("field");
        d.field.q = f.at("q").get<std::uint64_t>();
        d.field.p = f.at("p").get<unsigned>();
        d.field.e = f.at("e").get<unsigned>();
        d.field.m = f.at("m").get<unsigned>();
        d.field.m_sharp = f.value("m_sharp", 0u);
        d.blocks = OrderedPartition(j.at("blocks").get<std::vector<std::size_t>>());
        d.note = j.value("note", std::string{});
        if (j.contains("code") && !j.at("code").is_null())
            d.code = deserialize_constrained_code(j.at("code").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("design report: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("design report: ") + e.what(), 0);
    }
    if (d.n_J.size() != d.inst.S.size() || d.blocks.length() != d.n)
        throw parse_error("design report: lengths are inconsistent", 0);
    return d;
}

}  // namespace lrsnc

#endif  // LRSNC_IO_HPP
