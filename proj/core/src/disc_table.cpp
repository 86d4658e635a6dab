#include "fs19/disc_table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs19 {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

DiscriminantTable parse_disc_table(const std::string& csv_text) {
    DiscriminantTable t;
    std::istringstream in(csv_text);
    std::string line;
    bool have_limit = false;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = strip(line.substr(1));
            size_t colon = body.find(':');
            if (colon == std::string::npos) continue;
            std::string key = strip(body.substr(0, colon));
            std::string val = strip(body.substr(colon + 1));
            if (key == "source") t.source = val;
            else if (key == "flavor") t.flavor = val;
            else if (key == "limit") {
                t.asymptotic_limit = parse_rational(val);
                have_limit = true;
            }
            continue;
        }
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("disc table: malformed row: " + line);
        DiscTableRow row;
        row.degree = std::stol(strip(line.substr(0, comma)));
        row.min_root_disc = parse_rational(strip(line.substr(comma + 1)));
        t.rows.push_back(std::move(row));
    }
    if (!have_limit) throw std::invalid_argument("disc table: missing '# limit:' directive");
    if (t.rows.empty()) throw std::invalid_argument("disc table: no rows");
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].degree < 1 || t.rows[i].min_root_disc <= 0)
            throw std::invalid_argument("disc table: nonpositive entry");
        if (i && t.rows[i].degree <= t.rows[i - 1].degree)
            throw std::invalid_argument("disc table: degrees not increasing");
        if (i && t.rows[i].min_root_disc < t.rows[i - 1].min_root_disc)
            throw std::invalid_argument("disc table: values not monotone");
        if (t.rows[i].min_root_disc >= t.asymptotic_limit)
            throw std::invalid_argument("disc table: row exceeds asymptotic limit");
    }
    return t;
}

DiscriminantTable load_disc_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open disc table: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_disc_table(ss.str());
}

DegreeBound degree_bound_from_table(const Rational& bound, const DiscriminantTable& t) {
    DegreeBound out;
    if (bound >= t.asymptotic_limit) {
        out.unbounded = true;
        return out;
    }
    // First row whose minimum exceeds the bound: everything from that degree
    // on is excluded (monotone table), so the bound is that degree - 1.
    for (const auto& row : t.rows) {
        if (row.min_root_disc > bound) {
            out.degree = row.degree - 1;
            return out;
        }
    }
    // Table exhausted below the asymptotic limit: cannot certify any bound.
    out.unbounded = true;
    return out;
}

}  // namespace fs19
