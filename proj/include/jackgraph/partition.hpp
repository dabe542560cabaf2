#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "jackgraph/rational.hpp"

namespace jackgraph {

/// Integer partition = weakly decreasing sequence of positive parts.
/// Stored without trailing zeros; the empty sequence is the empty diagram.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;            // |lambda|, number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;       // 1-based row length, 0 beyond length

    /// Number of parts equal to j.
    int multiplicity(int j) const;
    /// z_lambda = prod j^{m_j} m_j!
    Rat z() const;

    Partition conjugate() const;
    bool contains(const Partition& other) const;  // other subset of *this

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;                // "[3,3,1]", "[]"
    static Partition parse(const std::string&);   // inverse of to_string

private:
    std::vector<int> parts_;
};

/// A cell (i,j) of a Young diagram, 1-based rows and columns.
struct Box {
    int row = 1;
    int col = 1;
};

/// Arm a(b) = lambda_i - j and leg l(b) = lambda'_j - i of a box inside lambda.
struct ArmLeg {
    int arm = 0;
    int leg = 0;
};
ArmLeg arm_leg(const Partition& lambda, Box b);

/// theta-content c_theta(i,j) = (j-1) - theta (i-1).
Rat theta_content(Box b, const Rat& theta);

/// Frobenius parameters a_j = nu_j - j, b_j = nu'_j - j + 1 for j = 1..d.
struct Frobenius {
    std::vector<int> a;
    std::vector<int> b;
};
Frobenius frobenius(const Partition& nu);
Partition from_frobenius(const Frobenius& f);

/// All diagrams obtained by adding one box / removing one box.
std::vector<Partition> covers(const Partition& lambda);
std::vector<Partition> cocovers(const Partition& nu);

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);
/// Partitions of all sizes 0..n, by level, reverse-lex within each level.
std::vector<Partition> enumerate_up_to(int n);

enum class Dominance { LessOrEqual, Greater, Incomparable, Equal };
/// Dominance comparison of two partitions of the same size.
Dominance dominance_leq(const Partition& lambda, const Partition& nu);

/// Row lengths of nu+ (boxes with c_theta > 0) and column lengths of nu-
/// (boxes with c_theta <= 0).  Requires theta > 0.
struct PosNegSplit {
    std::vector<int> pos_rows;
    std::vector<int> neg_cols;
};
PosNegSplit split_positive_negative(const Partition& nu, const Rat& theta);

}  // namespace jackgraph
