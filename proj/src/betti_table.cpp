#include "betti/betti_table.hpp"

#include <cstdio>
#include <istream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "betti/errors.hpp"
#include "betti/index_set.hpp"

namespace betti {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

BettiTable::BettiTable(int r, int n, TableMode mode) : r_(r), n_(n), mode_(mode) {
    validate_table_shape(r, n);
    const std::size_t cells = static_cast<std::size_t>(columns()) * rows();
    if (mode_ == TableMode::exact)
        exact_.assign(cells, Rat(0));
    else
        real_.assign(cells, 0.0);
}

int BettiTable::index_of(int p, int q) const { return p * n_ + (q - 1); }

void BettiTable::require_in_range(int p, int q) const {
    if (p < 0 || p > r_ - n_ || q < 1 || q > n_)
        throw parameter_error("entry (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                              ") outside an n=" + std::to_string(n_) + ", r=" + std::to_string(r_) +
                              " table");
}

const Rat& BettiTable::exact_at(int p, int q) const {
    require_in_range(p, q);
    if (!is_exact()) throw mode_error("exact entry requested from a real-mode table");
    return exact_[index_of(p, q)];
}

double BettiTable::at(int p, int q) const {
    require_in_range(p, q);
    return is_exact() ? to_double(exact_[index_of(p, q)]) : real_[index_of(p, q)];
}

void BettiTable::set(int p, int q, Rat value) {
    require_in_range(p, q);
    if (!is_exact()) throw mode_error("rational entry assigned to a real-mode table");
    if (value < 0) throw parameter_error("Betti table entries must be nonnegative");
    exact_[index_of(p, q)] = std::move(value);
}

void BettiTable::set(int p, int q, double value) {
    require_in_range(p, q);
    if (is_exact()) throw mode_error("double entry assigned to an exact-mode table");
    if (value < 0) throw parameter_error("Betti table entries must be nonnegative");
    real_[index_of(p, q)] = value;
}

void BettiTable::add_scaled(const Rat& scale, const BettiTable& other) {
    if (!is_exact() || !other.is_exact()) throw mode_error("add_scaled needs exact tables");
    if (r_ != other.r_ || n_ != other.n_)
        throw parameter_error("add_scaled shape mismatch");
    if (scale < 0) throw parameter_error("add_scaled expects a nonnegative scale");
    for (std::size_t i = 0; i < exact_.size(); ++i) exact_[i] += scale * other.exact_[i];
}

BettiTable BettiTable::to_real() const {
    BettiTable out(r_, n_, TableMode::real);
    for (int p = 0; p <= r_ - n_; ++p)
        for (int q = 1; q <= n_; ++q) out.set(p, q, at(p, q));
    return out;
}

std::string BettiTable::to_csv() const {
    std::ostringstream out;
    out << "# n=" << n_ << " r=" << r_ << " mode=" << (is_exact() ? "exact" : "real") << "\n";
    out << (is_exact() ? "p,q,num,den" : "p,q,value") << "\n";
    for (int p = 0; p <= r_ - n_; ++p) {
        for (int q = 1; q <= n_; ++q) {
            if (is_exact()) {
                const Rat& v = exact_[index_of(p, q)];
                out << p << ',' << q << ',' << boost::multiprecision::numerator(v).str() << ','
                    << boost::multiprecision::denominator(v).str() << "\n";
            } else {
                out << p << ',' << q << ',' << format_double(real_[index_of(p, q)]) << "\n";
            }
        }
    }
    return out.str();
}

BettiTable BettiTable::from_csv(std::istream& in) {
    std::string line;
    int meta_n = -1, meta_r = -1;
    std::string meta_mode;
    bool header_seen = false;
    bool exact = true;
    struct Cell {
        int q;
        Rat exact;
        double real;
    };
    std::map<int, std::vector<Cell>> cells;  // keyed by p
    int max_p = -1, max_q = -1;

    auto parse_meta = [&](const std::string& comment) {
        std::istringstream words(comment);
        std::string word;
        while (words >> word) {
            if (word.rfind("n=", 0) == 0) meta_n = std::stoi(word.substr(2));
            if (word.rfind("r=", 0) == 0) meta_r = std::stoi(word.substr(2));
            if (word.rfind("mode=", 0) == 0) meta_mode = word.substr(5);
        }
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            parse_meta(line.substr(1));
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (!header_seen) {
            if (fields.size() == 4 && fields[2] == "num")
                exact = true;
            else if (fields.size() == 3 && fields[2] == "value")
                exact = false;
            else
                throw parameter_error("unrecognized Betti table CSV header: '" + line + "'");
            header_seen = true;
            continue;
        }
        if (fields.size() != (exact ? 4u : 3u))
            throw parameter_error("malformed Betti table CSV row: '" + line + "'");
        Cell cell{};
        int p = 0;
        try {
            p = std::stoi(fields[0]);
            cell.q = std::stoi(fields[1]);
            if (exact)
                cell.exact = parse_fraction(fields[2] + "/" + fields[3]);
            else
                cell.real = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw parameter_error("malformed Betti table CSV row: '" + line + "'");
        }
        max_p = std::max(max_p, p);
        max_q = std::max(max_q, cell.q);
        cells[p].push_back(cell);
    }
    if (!header_seen || cells.empty()) throw parameter_error("empty Betti table CSV");
    if (!meta_mode.empty() && (meta_mode == "exact") != exact)
        throw parameter_error("CSV metadata mode disagrees with header schema");
    const int n = meta_n > 0 ? meta_n : max_q;
    const int r = meta_r > 0 ? meta_r : max_p + n;
    BettiTable table(r, n, exact ? TableMode::exact : TableMode::real);
    for (const auto& [p, row] : cells)
        for (const Cell& cell : row) {
            if (exact)
                table.set(p, cell.q, cell.exact);
            else
                table.set(p, cell.q, cell.real);
        }
    return table;
}

BettiTable BettiTable::from_csv_string(const std::string& text) {
    std::istringstream in(text);
    return from_csv(in);
}

std::string BettiTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n_;
    doc["r"] = r_;
    doc["mode"] = is_exact() ? "exact" : "real";
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (int p = 0; p <= r_ - n_; ++p)
        for (int q = 1; q <= n_; ++q) {
            nlohmann::ordered_json cell;
            cell["p"] = p;
            cell["q"] = q;
            if (is_exact())
                cell["value"] = fraction_string(exact_[index_of(p, q)]);
            else
                cell["value"] = real_[index_of(p, q)];
            entries.push_back(std::move(cell));
        }
    return doc.dump(2);
}

BettiTable BettiTable::from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw parameter_error(std::string("Betti table JSON parse failure: ") + ex.what());
    }
    if (!doc.contains("n") || !doc.contains("r") || !doc.contains("mode") ||
        !doc.contains("entries"))
        throw parameter_error("Betti table JSON missing n/r/mode/entries");
    const bool exact = doc["mode"] == "exact";
    BettiTable table(doc["r"].get<int>(), doc["n"].get<int>(),
                     exact ? TableMode::exact : TableMode::real);
    for (const auto& cell : doc["entries"]) {
        const int p = cell.at("p").get<int>();
        const int q = cell.at("q").get<int>();
        if (exact)
            table.set(p, q, parse_fraction(cell.at("value").get<std::string>()));
        else
            table.set(p, q, cell.at("value").get<double>());
    }
    return table;
}

}  // namespace betti
