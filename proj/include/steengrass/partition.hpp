#pragma once

#include "steengrass/numeric.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steengrass {

/// Integer partition: a weakly decreasing list of positive parts.
/// Values are canonical (sorted, no zeros) and immutable after construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// 1-indexed part access; parts beyond the length read as 0.
    int part(int i) const;
    int multiplicity(int value) const;
    /// (value, multiplicity) pairs, values decreasing.
    std::vector<std::pair<int, int>> part_multiplicities() const;

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    /// Concatenate parts and re-sort.
    Partition union_with(const Partition& other) const;
    Partition add_part(int value) const;
    /// Remove one copy of `value`; throws if absent.
    Partition remove_part(int value) const;
    /// lambda - 1: subtract one from every part, dropping zeros.
    Partition subtract_one() const;
    bool fits_in_box(int rows, int cols) const;

    /// ||lambda||: the product of the factorials of the multiplicities.
    Int sym_factor() const;
    /// z_lambda = prod_i i^{m_i} m_i!
    Int z() const;

    std::string to_string() const;  // "[3,1]", "[]"
    /// Accepts "[3,1]", "3,1", "[]" or "".
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Total order: length first, then lexicographic on parts.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
    void normalize();
};

/// Dominance order on partitions of equal weight; throws on weight mismatch.
bool dominance_leq(const Partition& a, const Partition& b);

/// (content, hooklength) of the box at 1-indexed (row, col); throws if outside.
std::pair<int, int> content_hook(const Partition& p, int row, int col);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, int max_length, int max_part);
/// All partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// All mu of the given weight with inner <= mu.
std::vector<Partition> partitions_containing(const Partition& inner, int weight);
/// All nu with inner <= nu <= outer of the given weight.
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer,
                                          int weight);

/// Skew diagram outer/inner; the constructor checks inner <= outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_);

    int size() const { return outer.weight() - inner.weight(); }
    bool empty() const { return size() == 0; }
    bool has_box(int row, int col) const;
    /// Boxes as 1-indexed (row, col), row-major.
    std::vector<std::pair<int, int>> boxes() const;
    /// Column lengths of the shape, sorted decreasingly.
    Partition column_lengths() const;
    Partition row_lengths() const;
};

/// Broken-border-strip data of a skew shape. cc is empty when the shape
/// contains a 2x2 block (the "infinitely many components" sentinel).
struct StripAnalysis {
    std::optional<int> cc;
    int ht = -1;  // occupied rows minus one; -1 for the empty shape
    std::vector<int> sharp_contents;
    std::vector<int> dull_contents;

    bool is_broken_border_strip() const { return cc.has_value(); }
    /// Sum over sharp corners minus sum over dull corners.
    int corner_content_sum() const;
};

StripAnalysis analyze_strip(const SkewShape& shape);

struct FrameComponent {
    Partition pi;
    Partition rho;
    int content = 0;  // content of rho's (1,1) box inside the original outer shape
};

/// Smallest-weight pair (pi, rho) with rho/pi the given shape up to
/// up-left translation, plus the per-component frames northeast to southwest.
struct MinimalFrame {
    Partition pi;
    Partition rho;
    int content = 0;
    std::vector<FrameComponent> components;
};

MinimalFrame minimal_frame(const SkewShape& shape);

enum class StripDirection { add, remove };

/// All partitions reached from `p` by adding/removing a broken border strip of
/// the given size with at most `max_components` components, with analyses.
std::vector<std::pair<Partition, StripAnalysis>> strip_moves(const Partition& p, int size,
                                                             StripDirection direction,
                                                             int max_components);

/// Largest k with lambda'_k + ... + lambda'_l > n or lambda'_{k+1} + ... = n,
/// where lambda' is the conjugate of p; 0 if no such k exists.
int m_stat(const Partition& p, int n);

}  // namespace steengrass
