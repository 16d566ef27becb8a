#include "morlicz/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace morlicz {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (trim(s.substr(pos)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("not a number: '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

/// Splits "head(args)" respecting nested parentheses; returns false when the
/// text has no call shape (bare token).
bool split_call(const std::string& text, std::string& head, std::string& args) {
    std::size_t open = text.find('(');
    if (open == std::string::npos) return false;
    if (text.empty() || text.back() != ')')
        throw ParseError("unbalanced parentheses in '" + text + "'");
    head = trim(text.substr(0, open));
    args = text.substr(open + 1, text.size() - open - 2);
    return true;
}

/// Top-level comma split that ignores commas inside parentheses.
std::vector<std::string> split_args(const std::string& args, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : args) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + args + "'");
    out.push_back(trim(cur));
    return out;
}

} // namespace

std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string describe(const OrliczFunction& m) {
    using Kind = OrliczFunction::Kind;
    switch (m.kind()) {
        case Kind::Power:
            return "power(" + format_sig(m.param()) + ")";
        case Kind::NakanoExponent:
            return "nakano(" + format_sig(m.param()) + ")";
        case Kind::ExponentialExample:
            return "exp_example";
        case Kind::Zero:
            return "zero";
        case Kind::Weighted:
            return "weighted_log(" + format_sig(m.param()) + ", " + describe(*m.base()) + ")";
        case Kind::PowerScaled:
            return "power_scaled(" + format_sig(m.param()) + ", " + describe(*m.base()) + ")";
        case Kind::ArgScaled:
            return "arg_scaled(" + format_sig(m.param()) + ", " + describe(*m.base()) + ")";
        case Kind::Piecewise: {
            std::string out = "piecewise(" + describe(*m.base());
            const auto& segs = *m.segments();
            for (std::size_t k = 0; k < segs.size(); ++k) {
                out += "; " + std::to_string(k + 1) + "," + format_sig(segs[k].a) + "," +
                       format_sig(segs[k].b) + "," + format_sig(segs[k].log_na) + "," +
                       format_sig(segs[k].log_nb);
            }
            return out + ")";
        }
    }
    throw ParseError("unknown function kind");
}

OrliczFunction parse_function(const std::string& text) {
    std::string t = trim(text);
    if (t == "exp_example") return OrliczFunction::exponential_example();
    if (t == "zero") return OrliczFunction::zero();
    std::string head, args;
    if (!split_call(t, head, args)) throw ParseError("unknown function descriptor '" + t + "'");
    if (head == "power") return OrliczFunction::power(parse_double(args));
    if (head == "nakano") return OrliczFunction::nakano_exponent(parse_double(args));
    if (head == "weighted_log" || head == "power_scaled" || head == "arg_scaled") {
        auto parts = split_args(args);
        if (parts.size() != 2) throw ParseError(head + " needs two arguments");
        double p = parse_double(parts[0]);
        OrliczFunction base = parse_function(parts[1]);
        if (head == "weighted_log") return OrliczFunction::weighted_log(base, p);
        if (head == "power_scaled") return OrliczFunction::power_scaled(base, p);
        return OrliczFunction::arg_scaled(base, p);
    }
    if (head == "piecewise") {
        auto parts = split_args(args, ';');
        if (parts.empty()) throw ParseError("piecewise needs a generator");
        OrliczFunction base = parse_function(parts[0]);
        std::vector<PiecewiseSegment> segs;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            auto f = split_args(parts[i]);
            if (f.size() != 5) throw ParseError("piecewise row needs 5 fields");
            segs.push_back({parse_double(f[1]), parse_double(f[2]), parse_double(f[3]),
                            parse_double(f[4])});
        }
        return OrliczFunction::piecewise(base, std::move(segs));
    }
    throw ParseError("unknown function descriptor '" + t + "'");
}

std::string describe(const WeightSequence& w) {
    if (w.label() == "harmonic") return "harmonic";
    if (w.label() == "constant") return "constant(" + format_sig(w.weight(1)) + ")";
    if (w.label() == "section6") return "section6(" + std::to_string(w.probe_limit()) + ")";
    std::string out = "log_list(";
    for (std::size_t i = 1; i <= w.probe_limit(); ++i) {
        if (i > 1) out += ", ";
        out += format_sig(w.log_weight(i));
    }
    return out + ")";
}

WeightSequence parse_weights(const std::string& text) {
    std::string t = trim(text);
    if (t == "harmonic") return WeightSequence::harmonic();
    std::string head, args;
    if (!split_call(t, head, args)) throw ParseError("unknown weight descriptor '" + t + "'");
    if (head == "constant") return WeightSequence::constant(parse_double(args));
    if (head == "section6") return WeightSequence::section6(static_cast<int>(parse_double(args)));
    if (head == "log_list") {
        std::vector<double> lw;
        for (const auto& f : split_args(args)) lw.push_back(parse_double(f));
        return WeightSequence::from_log_values(std::move(lw));
    }
    throw ParseError("unknown weight descriptor '" + t + "'");
}

std::string describe(const MusielakFamily& fam) {
    std::ostringstream os;
    switch (fam.catalog()) {
        case MusielakFamily::Catalog::Constant:
            os << "catalog = constant\n";
            os << "function = " << describe(*fam.base()) << "\n";
            break;
        case MusielakFamily::Catalog::Weighted:
            os << "catalog = weighted\n";
            os << "function = " << describe(*fam.base()) << "\n";
            os << "weights = " << describe(*fam.weight_seq()) << "\n";
            break;
        case MusielakFamily::Catalog::Nakano: {
            os << "catalog = nakano\n";
            os << "exponents =";
            for (double p : *fam.nakano_exponents()) os << " " << format_sig(p);
            os << "\n";
            break;
        }
        case MusielakFamily::Catalog::Custom:
            throw ParseError("custom families have no serialized form");
    }
    return os.str();
}

MusielakFamily parse_family(const std::string& text) {
    Config c = parse_config(text);
    const std::string& cat = c.get("catalog");
    if (cat == "constant") return MusielakFamily::constant(parse_function(c.get("function")));
    if (cat == "weighted")
        return MusielakFamily::weighted(parse_function(c.get("function")),
                                        parse_weights(c.get("weights")));
    if (cat == "nakano") {
        std::vector<double> ps;
        std::istringstream is(c.get("exponents"));
        std::string tok;
        while (is >> tok) ps.push_back(parse_double(tok));
        return MusielakFamily::nakano(std::move(ps));
    }
    throw ParseError("unknown family catalog '" + cat + "'");
}

std::string describe(const BoundedDomain& s) {
    std::ostringstream os;
    os << "dim = " << s.dim() << "\n";
    os << "norm_radius = " << format_sig(s.norm_radius()) << "\n";
    os << "positive = " << (s.positive() ? 1 : 0) << "\n";
    for (std::size_t i = 0; i < s.boxes().size(); ++i)
        os << "box" << (i + 1) << " = " << format_sig(s.boxes()[i].first) << " "
           << format_sig(s.boxes()[i].second) << "\n";
    return os.str();
}

BoundedDomain parse_domain(const std::string& text) {
    Config c = parse_config(text);
    std::size_t dim = static_cast<std::size_t>(c.get_long("dim"));
    double radius = c.get_double("norm_radius");
    bool positive = c.has("positive") && c.get_long("positive") != 0;
    std::vector<std::pair<double, double>> boxes;
    for (std::size_t i = 1; c.has("box" + std::to_string(i)); ++i) {
        std::istringstream is(c.get("box" + std::to_string(i)));
        double lo, hi;
        if (!(is >> lo >> hi)) throw ParseError("malformed box line");
        boxes.emplace_back(lo, hi);
    }
    return BoundedDomain(dim, radius, positive, std::move(boxes));
}

std::string to_csv(const FiniteVector& x) {
    std::string out = "index,value\n";
    for (std::size_t i = 0; i < x.dim(); ++i)
        out += std::to_string(i + 1) + "," + format_sig(x[i]) + "\n";
    return out;
}

FiniteVector vector_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || trim(line) != "index,value")
        throw ParseError("vector file must start with header 'index,value'");
    std::vector<std::pair<std::size_t, double>> rows;
    std::size_t max_index = 0;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        auto cells = split(trim(line), ',');
        if (cells.size() != 2) throw ParseError("vector row needs 2 fields: '" + line + "'");
        long idx = static_cast<long>(parse_double(cells[0]));
        if (idx < 1) throw ParseError("vector indices are 1-based");
        rows.emplace_back(static_cast<std::size_t>(idx), parse_double(cells[1]));
        max_index = std::max(max_index, static_cast<std::size_t>(idx));
    }
    FiniteVector x(max_index);
    for (auto& [i, v] : rows) x[i - 1] = v;
    return x;
}

const std::string& Config::get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw ParseError("missing config key '" + key + "'");
    return it->second;
}

double Config::get_double(const std::string& key) const { return parse_double(get(key)); }

long Config::get_long(const std::string& key) const {
    double v = parse_double(get(key));
    long l = static_cast<long>(v);
    if (static_cast<double>(l) != v) throw ParseError("config key '" + key + "' must be integral");
    return l;
}

Config parse_config(const std::string& text) {
    Config c;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError("line " + std::to_string(lineno) +
                                                  ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key");
        if (!section.empty()) key = section + "." + key;
        c.values[key] = trim(t.substr(eq + 1));
    }
    return c;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), width_(header.size()) {
    if (header.empty()) throw ParseError("csv header must be nonempty");
    for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
    os_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw ParseError("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << "\n";
}

void CsvWriter::row_numeric(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_sig(v));
    row(s);
}

} // namespace morlicz
