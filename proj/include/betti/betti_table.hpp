#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "betti/numeric.hpp"

namespace betti {

enum class TableMode { exact, real };

// An n x (r+1-n) grid of entries k_{p,q}, p in [0, r-n] (columns), q in [1, n]
// (rows). Exact tables hold nonnegative rationals, sampled tables doubles.
class BettiTable {
public:
    BettiTable(int r, int n, TableMode mode);

    int r() const { return r_; }
    int n() const { return n_; }
    int columns() const { return r_ - n_ + 1; }  // p = 0 .. r-n
    int rows() const { return n_; }              // q = 1 .. n
    TableMode mode() const { return mode_; }
    bool is_exact() const { return mode_ == TableMode::exact; }

    const Rat& exact_at(int p, int q) const;
    double at(int p, int q) const;  // exact entries are converted on read

    void set(int p, int q, Rat value);     // exact mode only
    void set(int p, int q, double value);  // real mode only

    // this += scale * other (shapes and exact modes must match).
    void add_scaled(const Rat& scale, const BettiTable& other);

    BettiTable to_real() const;

    bool operator==(const BettiTable& other) const = default;

    // CSV: optional "# key=value" metadata lines, a header row, then one row
    // per grid entry in (p, q) order. Exact: p,q,num,den. Real: p,q,value.
    std::string to_csv() const;
    static BettiTable from_csv(std::istream& in);
    static BettiTable from_csv_string(const std::string& text);

    // JSON: {"n":..,"r":..,"mode":"exact"|"real","entries":[{"p","q","value"},..]}
    // with rationals rendered as "num/den" strings.
    std::string to_json() const;
    static BettiTable from_json_string(const std::string& text);

private:
    int index_of(int p, int q) const;
    void require_in_range(int p, int q) const;

    int r_ = 0;
    int n_ = 0;
    TableMode mode_ = TableMode::exact;
    std::vector<Rat> exact_;
    std::vector<double> real_;
};

}  // namespace betti
