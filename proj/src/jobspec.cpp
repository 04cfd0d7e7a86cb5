/*
   Copyright 2026 The rrcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rrcode/jobspec.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rrcode/errors.hpp"
#include "rrcode/rrbasis.hpp"

namespace rrcode {

namespace {

std::string trimmed(std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> whitespace_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Split on `delim` at bracket/paren depth zero; elements like "[1,0]" stay whole.
std::vector<std::string> split_top(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == delim && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int64_t parse_int(const std::string& s, int line, const std::string& what) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + s + "'");
    }
}

struct RawDirective {
    int line = 0;
    std::vector<std::string> tokens;  // without the directive word
};

FieldElement parse_element(const Field& k, const std::string& tok, int line) {
    try {
        return k.parse(tok);
    } catch (const Error& e) {
        throw ParseError(line, std::string(e.what()) + " in '" + tok + "'");
    }
}

Poly parse_poly(const Field& k, const std::string& list, int line) {
    std::vector<FieldElement> coeffs;
    for (const auto& piece : split_top(list, ','))
        coeffs.push_back(parse_element(k, piece, line));
    return Poly(k, std::move(coeffs));
}

// "(a,b)" -> affine point; leaves any "*m" suffix to the caller.
Point parse_point(const Field& k, const std::string& tok, int line) {
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
        throw ParseError(line, "expected point '(a,b)', got '" + tok + "'");
    std::vector<std::string> parts = split_top(tok.substr(1, tok.size() - 2), ',');
    if (parts.size() != 2) throw ParseError(line, "point needs two coordinates: '" + tok + "'");
    return Point::affine(parse_element(k, parts[0], line), parse_element(k, parts[1], line));
}

std::string value_of(const std::string& tok, const std::string& key) {
    // token "key=value" -> value, empty when the key does not match
    if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
        tok[key.size()] != '=')
        return {};
    return tok.substr(key.size() + 1);
}

}  // namespace

bool operator==(const JobSpec& a, const JobSpec& b) {
    if (a.field != b.field || a.singular_ok != b.singular_ok || a.divisor != b.divisor ||
        a.gpoints != b.gpoints || a.command != b.command || a.oracle != b.oracle)
        return false;
    if (a.curve.has_value() != b.curve.has_value()) return false;
    if (a.curve && (a.curve->f() != b.curve->f() || a.curve->h() != b.curve->h())) return false;
    if (a.kappa != b.kappa) return false;
    if (a.fit_shift.has_value() != b.fit_shift.has_value()) return false;
    if (a.fit_shift && (*a.fit_shift != *b.fit_shift || a.fit_elo != b.fit_elo ||
                        a.fit_ehi != b.fit_ehi))
        return false;
    return true;
}

JobSpec parse_jobspec(const std::string& text) {
    std::map<std::string, RawDirective> raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        std::vector<std::string> toks = whitespace_tokens(line);
        std::string head = toks.front();
        toks.erase(toks.begin());
        static const std::vector<std::string> known = {"field", "curve", "divisor",
                                                       "kappa", "g",     "cmd"};
        if (std::find(known.begin(), known.end(), head) == known.end())
            throw ParseError(lineno, "unknown directive '" + head + "'");
        if (raw.count(head)) throw ParseError(lineno, "duplicate directive '" + head + "'");
        raw[head] = RawDirective{lineno, std::move(toks)};
    }

    if (!raw.count("field")) throw ParseError(1, "missing field");
    if (!raw.count("cmd")) throw ParseError(1, "missing cmd");

    JobSpec job;

    {  // field p=.. t=.. [mod=..]
        const RawDirective& d = raw["field"];
        std::optional<int64_t> p;
        std::optional<int64_t> t;
        std::vector<int64_t> mod;
        for (const auto& tok : d.tokens) {
            if (auto v = value_of(tok, "p"); !v.empty())
                p = parse_int(v, d.line, "p");
            else if (auto v2 = value_of(tok, "t"); !v2.empty())
                t = parse_int(v2, d.line, "t");
            else if (auto v3 = value_of(tok, "mod"); !v3.empty())
                for (const auto& piece : split_top(v3, ','))
                    mod.push_back(parse_int(piece, d.line, "mod"));
            else
                throw ParseError(d.line, "unexpected token '" + tok + "' in field directive");
        }
        if (!p || !t) throw ParseError(d.line, "field requires p= and t=");
        try {
            job.field = Field::make(*p, static_cast<int>(*t), mod);
        } catch (const Error& e) {
            throw SemanticError(d.line, std::string(e.code()) + ": " + e.what());
        }
    }

    bool saw_exps = false;
    {  // cmd <name> [--oracle] [shift=..] [exps=lo,hi]
        const RawDirective& d = raw["cmd"];
        if (d.tokens.empty()) throw ParseError(d.line, "cmd requires a command name");
        job.command = d.tokens[0];
        static const std::vector<std::string> commands = {"basis", "encode",   "distance",
                                                          "dim",   "points",   "fitcurve"};
        if (std::find(commands.begin(), commands.end(), job.command) == commands.end())
            throw ParseError(d.line, "unknown command '" + job.command + "'");
        for (size_t i = 1; i < d.tokens.size(); ++i) {
            const std::string& tok = d.tokens[i];
            if (tok == "--oracle") {
                job.oracle = true;
            } else if (auto v = value_of(tok, "shift"); !v.empty()) {
                job.fit_shift = parse_element(job.field, v, d.line);
            } else if (auto v2 = value_of(tok, "exps"); !v2.empty()) {
                std::vector<std::string> parts = split_top(v2, ',');
                if (parts.size() != 2) throw ParseError(d.line, "exps takes two integers");
                job.fit_elo = static_cast<int>(parse_int(parts[0], d.line, "exps"));
                job.fit_ehi = static_cast<int>(parse_int(parts[1], d.line, "exps"));
                saw_exps = true;
            } else {
                throw ParseError(d.line, "unexpected token '" + tok + "' in cmd directive");
            }
        }
    }

    bool need_curve = job.command != "fitcurve";
    if (raw.count("curve")) {
        const RawDirective& d = raw["curve"];
        std::optional<Poly> f, h;
        for (const auto& tok : d.tokens) {
            if (auto v = value_of(tok, "f"); !v.empty())
                f = parse_poly(job.field, v, d.line);
            else if (auto v2 = value_of(tok, "h"); !v2.empty())
                h = parse_poly(job.field, v2, d.line);
            else if (tok == "singular_ok")
                job.singular_ok = true;
            else
                throw ParseError(d.line, "unexpected token '" + tok + "' in curve directive");
        }
        if (!f || !h) throw ParseError(d.line, "curve requires f= and h=");
        try {
            job.curve = Curve::make(job.field, *f, *h, job.singular_ok);
        } catch (const Error& e) {
            throw SemanticError(d.line, std::string(e.code()) + ": " + e.what());
        }
    } else if (need_curve) {
        throw ParseError(1, "missing curve");
    }

    if (raw.count("divisor")) {
        const RawDirective& d = raw["divisor"];
        for (const auto& tok : d.tokens) {
            std::vector<std::string> parts = split_top(tok, '*');
            if (parts.size() != 2)
                throw ParseError(d.line, "divisor entry needs '*<mult>': '" + tok + "'");
            int mult = static_cast<int>(parse_int(parts[1], d.line, "multiplicity"));
            if (mult < 1) throw SemanticError(d.line, "divisor multiplicities must be >= 1");
            if (parts[0] == "inf") {
                job.divisor.add(Point::infinity(), mult);
            } else {
                Point p = parse_point(job.field, parts[0], d.line);
                if (job.curve && !job.curve->on_curve(p))
                    throw SemanticError(d.line, "divisor point " + parts[0] + " is not on the curve");
                job.divisor.add(p, mult);
            }
        }
    }

    if (raw.count("kappa")) {
        const RawDirective& d = raw["kappa"];
        if (d.tokens.size() != 1) throw ParseError(d.line, "kappa takes one coefficient list");
        job.kappa = parse_poly(job.field, d.tokens[0], d.line);
    }

    if (raw.count("g")) {
        const RawDirective& d = raw["g"];
        for (const auto& tok : d.tokens) {
            Point p = parse_point(job.field, tok, d.line);
            if (job.command != "fitcurve" && job.curve && !job.curve->on_curve(p))
                throw SemanticError(d.line, "evaluation point " + tok + " is not on the curve");
            job.gpoints.push_back(p);
        }
    }

    if (job.command == "fitcurve") {
        const RawDirective& d = raw["cmd"];
        if (!job.fit_shift) throw ParseError(d.line, "fitcurve requires shift=");
        if (!saw_exps) throw ParseError(d.line, "fitcurve requires exps=<lo>,<hi>");
        if (job.gpoints.empty()) throw ParseError(d.line, "fitcurve reads samples from the g line");
    }
    if ((job.command == "encode" || job.command == "distance") && job.gpoints.empty())
        throw ParseError(raw["cmd"].line, job.command + " requires evaluation points (g line)");

    return job;
}

std::string render(const JobSpec& job) {
    const Field& k = job.field;
    std::ostringstream out;
    out << "field p=" << k.p() << " t=" << k.t();
    if (k.t() > 1) {
        out << " mod=";
        for (size_t i = 0; i < k.modulus().size(); ++i) {
            if (i) out << ",";
            out << k.modulus()[i];
        }
    }
    out << "\n";

    auto poly_list = [&k](const Poly& p) {
        if (p.is_zero()) return std::string("0");
        std::string s;
        for (int i = 0; i <= p.degree(); ++i) {
            if (i) s += ",";
            s += k.str(p.coeff(i));
        }
        return s;
    };
    auto point_str = [&k](const Point& p) {
        return "(" + k.str(p.x()) + "," + k.str(p.y()) + ")";
    };

    if (job.curve) {
        out << "curve f=" << poly_list(job.curve->f()) << " h=" << poly_list(job.curve->h());
        if (job.singular_ok) out << " singular_ok";
        out << "\n";
    }
    if (!job.divisor.entries().empty()) {
        out << "divisor";
        for (const auto& [p, m] : job.divisor.entries())
            out << " " << (p.is_infinity() ? "inf" : point_str(p)) << "*" << m;
        out << "\n";
    }
    if (job.kappa) out << "kappa " << poly_list(*job.kappa) << "\n";
    if (!job.gpoints.empty()) {
        out << "g";
        for (const auto& p : job.gpoints) out << " " << point_str(p);
        out << "\n";
    }
    out << "cmd " << job.command;
    if (job.oracle) out << " --oracle";
    if (job.fit_shift)
        out << " shift=" << k.str(*job.fit_shift) << " exps=" << job.fit_elo << ","
            << job.fit_ehi;
    out << "\n";
    return out.str();
}

namespace {

void run_encode_or_distance(const JobSpec& job, std::ostream& out, bool with_matrices) {
    LinearCode code = generator_matrix(*job.curve, job.divisor, job.gpoints, job.kappa);
    DistanceReport dist = min_distance(code);
    if (with_matrices) {
        ParityCheck pc = parity_check(code);
        out << code.gen().tsv() << "\n---\n" << pc.h.tsv() << "\n---\n";
        if (pc.permuted) {
            out << "pivot_cols=";
            for (size_t i = 0; i < pc.pivot_cols.size(); ++i)
                out << (i ? "," : "") << pc.pivot_cols[i];
            out << "\n";
        }
    }
    out << "code m=" << code.m() << " k=" << code.k() << " d=" << dist.d
        << " mds=" << (dist.mds ? "true" : "false")
        << " goppa_bound=" << static_cast<int>(code.m()) - *code.deg_d() << "\n";
}

}  // namespace

void run_job(const JobSpec& job, std::ostream& out) {
    const Field& k = job.field;
    if (job.command == "basis") {
        RRBasis basis = rr_basis(*job.curve, job.divisor, job.kappa);
        out << "dim=" << basis.elements.size()
            << " case=" << (basis.with_psi ? "with-psi" : "no-psi") << "\n";
        for (const auto& f : basis.elements) out << f.str() << "\n";
    } else if (job.command == "encode") {
        run_encode_or_distance(job, out, true);
    } else if (job.command == "distance") {
        run_encode_or_distance(job, out, false);
    } else if (job.command == "dim") {
        ReducedDivisor rd = decompose_reduced(*job.curve, job.divisor);
        out << "dim=" << rr_dim(job.curve->genus(), rd.j, rd.n) << "\n";
        if (job.oracle) out << "oracle=" << dim_oracle(*job.curve, job.divisor) << "\n";
    } else if (job.command == "points") {
        for (const auto& p : job.curve->rational_points()) {
            if (p.is_infinity())
                out << "inf\n";
            else
                out << "(" << k.str(p.x()) << "," << k.str(p.y()) << ")\n";
        }
    } else if (job.command == "fitcurve") {
        std::vector<std::pair<FieldElement, FieldElement>> samples;
        samples.reserve(job.gpoints.size());
        for (const auto& p : job.gpoints) samples.emplace_back(p.x(), p.y());
        CurveFit fit = fit_curve(k, *job.fit_shift, job.fit_elo, job.fit_ehi, samples);
        out << "shift=" << k.str(*job.fit_shift) << " exponents=" << job.fit_elo << ".."
            << job.fit_ehi << "\n";
        out << "shifted=";
        for (size_t i = 0; i < fit.shifted_coeffs.size(); ++i)
            out << (i ? "," : "") << k.str(fit.shifted_coeffs[i]);
        out << "\nplain=";
        if (fit.plain.is_zero()) {
            out << "0";
        } else {
            for (int i = 0; i <= fit.plain.degree(); ++i)
                out << (i ? "," : "") << k.str(fit.plain.coeff(i));
        }
        out << "\n";
    }
}

}  // namespace rrcode
