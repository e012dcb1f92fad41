#include "steengrass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace steengrass {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts)
{
    normalize();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    normalize();
}

void Partition::normalize()
{
    for (int v : parts_)
        if (v < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

int Partition::weight() const
{
    int s = 0;
    for (int v : parts_)
        s += v;
    return s;
}

int Partition::part(int i) const
{
    if (i < 1)
        throw std::invalid_argument("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::multiplicity(int value) const
{
    int c = 0;
    for (int v : parts_)
        c += (v == value);
    return c;
}

std::vector<std::pair<int, int>> Partition::part_multiplicities() const
{
    std::vector<std::pair<int, int>> out;
    for (int v : parts_) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const
{
    if (inner.length() > length())
        return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

Partition Partition::union_with(const Partition& other) const
{
    std::vector<int> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(v));
}

Partition Partition::add_part(int value) const
{
    if (value <= 0)
        throw std::invalid_argument("add_part: part must be positive");
    std::vector<int> v = parts_;
    v.push_back(value);
    return Partition(std::move(v));
}

Partition Partition::remove_part(int value) const
{
    std::vector<int> v = parts_;
    auto it = std::find(v.begin(), v.end(), value);
    if (it == v.end())
        throw std::invalid_argument("remove_part: no part equal to " + std::to_string(value));
    v.erase(it);
    return Partition(std::move(v));
}

Partition Partition::subtract_one() const
{
    std::vector<int> v;
    v.reserve(parts_.size());
    for (int p : parts_)
        if (p > 1)
            v.push_back(p - 1);
    return Partition(std::move(v));
}

bool Partition::fits_in_box(int rows, int cols) const
{
    return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

Int Partition::sym_factor() const
{
    Int r = 1;
    for (auto [value, mult] : part_multiplicities()) {
        (void)value;
        r *= factorial(mult);
    }
    return r;
}

Int Partition::z() const
{
    Int r = 1;
    for (auto [value, mult] : part_multiplicities())
        r *= int_pow(value, mult) * factorial(mult);
    return r;
}

std::string Partition::to_string() const
{
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition Partition::parse(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '[' || text.front() == '('))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == ']' || text.back() == ')'))
        text.remove_suffix(1);
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        size_t end = (comma == std::string_view::npos) ? text.size() : comma;
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        if (tok.empty())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    // Reject non-sorted input such as "1,3": partitions are weakly decreasing.
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: '" +
                                        std::string(text) + "'");
    return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    if (auto c = length() <=> other.length(); c != 0)
        return c;
    for (int i = 0; i < length(); ++i)
        if (auto c = parts_[i] <=> other.parts_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

bool dominance_leq(const Partition& a, const Partition& b)
{
    if (a.weight() != b.weight())
        throw std::invalid_argument("dominance order compares partitions of equal weight");
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb)
            return false;
    }
    return true;
}

std::pair<int, int> content_hook(const Partition& p, int row, int col)
{
    if (row < 1 || col < 1 || col > p.part(row))
        throw std::invalid_argument("box outside diagram");
    Partition conj = p.conjugate();
    int content = col - row;
    int hook = p.part(row) + conj.part(col) - row - col + 1;
    return {content, hook};
}

std::vector<Partition> partitions_of(int n)
{
    return partitions_of(n, n, n);
}

std::vector<Partition> partitions_of(int n, int max_length, int max_part)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int rem, int maxp, int rows) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (rows == 0)
            return;
        for (int v = std::min(rem, maxp); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v, rows - 1);
            cur.pop_back();
        }
    };
    rec(n, max_part, max_length);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int max_val) {
        out.emplace_back(cur);
        if (row > rows)
            return;
        for (int v = max_val; v >= 1; --v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(1, cols);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> partitions_containing(const Partition& inner, int weight)
{
    int extra = weight - inner.weight();
    if (extra < 0)
        return {};
    int width = (inner.empty() ? 0 : inner.parts()[0]) + extra;
    int height = inner.length() + extra;
    std::vector<int> big(height, width);
    return partitions_between(inner, Partition(std::move(big)), weight);
}

std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer,
                                          int weight)
{
    std::vector<Partition> out;
    if (!outer.contains(inner))
        return out;
    if (weight < inner.weight() || weight > outer.weight())
        return out;
    std::vector<int> cur;
    int rows = outer.length();
    std::function<void(int, int, int)> rec = [&](int row, int prev, int rem) {
        if (row > rows) {
            if (rem == 0)
                out.emplace_back(cur);
            return;
        }
        int lo = inner.part(row);
        int hi = std::min(prev, outer.part(row));
        for (int v = hi; v >= lo; --v) {
            int take = v - lo;
            if (take > rem)
                continue;
            cur.push_back(v);
            rec(row + 1, v, rem - take);
            cur.pop_back();
        }
    };
    rec(1, outer.empty() ? 0 : outer.parts()[0], weight - inner.weight());
    std::sort(out.begin(), out.end());
    return out;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_))
{
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape requires inner <= outer");
}

bool SkewShape::has_box(int row, int col) const
{
    return row >= 1 && col >= 1 && col > inner.part(row) && col <= outer.part(row);
}

std::vector<std::pair<int, int>> SkewShape::boxes() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= outer.length(); ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j)
            out.emplace_back(i, j);
    return out;
}

Partition SkewShape::column_lengths() const
{
    std::map<int, int> len;
    for (auto [r, c] : boxes())
        ++len[c];
    std::vector<int> v;
    for (auto& [c, l] : len)
        v.push_back(l);
    return Partition(std::move(v));
}

Partition SkewShape::row_lengths() const
{
    std::vector<int> v;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i) > inner.part(i))
            v.push_back(outer.part(i) - inner.part(i));
    return Partition(std::move(v));
}

int StripAnalysis::corner_content_sum() const
{
    int s = 0;
    for (int c : sharp_contents)
        s += c;
    for (int c : dull_contents)
        s -= c;
    return s;
}

StripAnalysis analyze_strip(const SkewShape& shape)
{
    StripAnalysis res;
    auto bx = shape.boxes();
    if (bx.empty()) {
        res.cc = 0;
        res.ht = -1;
        return res;
    }

    bool has_block = false;
    for (auto [r, c] : bx) {
        if (shape.has_box(r, c + 1) && shape.has_box(r + 1, c) && shape.has_box(r + 1, c + 1)) {
            has_block = true;
            break;
        }
    }

    std::vector<int> rows;
    for (auto [r, c] : bx) {
        rows.push_back(r);
        bool above = shape.has_box(r - 1, c);
        bool left = shape.has_box(r, c - 1);
        bool nw = shape.has_box(r - 1, c - 1);
        if (!above && !left)
            res.sharp_contents.push_back(c - r);
        else if (above && left && !nw)
            res.dull_contents.push_back(c - r);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    res.ht = static_cast<int>(rows.size()) - 1;
    std::sort(res.sharp_contents.begin(), res.sharp_contents.end());
    std::sort(res.dull_contents.begin(), res.dull_contents.end());

    if (!has_block) {
        // Within a row, skew boxes form one interval, so components are
        // consecutive row ranges joined when column intervals meet.
        int components = 0;
        int prev_row = -10, prev_lo = 0, prev_hi = -1;
        for (int i = 1; i <= shape.outer.length(); ++i) {
            int lo = shape.inner.part(i) + 1, hi = shape.outer.part(i);
            if (lo > hi)
                continue;
            bool joined = (i == prev_row + 1) && !(hi < prev_lo || lo > prev_hi);
            if (!joined)
                ++components;
            prev_row = i;
            prev_lo = lo;
            prev_hi = hi;
        }
        res.cc = components;
    }
    return res;
}

MinimalFrame minimal_frame(const SkewShape& shape)
{
    if (shape.empty())
        throw std::invalid_argument("minimal_frame of an empty skew shape");

    auto frame_of_rows = [&](int r0, int r1) -> FrameComponent {
        int shift = shape.inner.part(r0) + shape.outer.part(r0);
        for (int i = r0; i <= r1; ++i)
            if (shape.outer.part(i) > shape.inner.part(i))
                shift = std::min(shift, shape.inner.part(i));
        int n = r1 - r0 + 1;
        std::vector<int> outer_vals(n), inner_vals(n);
        // Rows without boxes take the next row's outer value: the unique
        // smallest-weight completion compatible with partition order.
        for (int i = r1; i >= r0; --i) {
            int idx = i - r0;
            if (shape.outer.part(i) > shape.inner.part(i)) {
                outer_vals[idx] = shape.outer.part(i) - shift;
                inner_vals[idx] = shape.inner.part(i) - shift;
            } else {
                int next = (idx + 1 < n) ? outer_vals[idx + 1] : 0;
                outer_vals[idx] = next;
                inner_vals[idx] = next;
            }
        }
        FrameComponent fc;
        fc.rho = Partition(outer_vals);
        fc.pi = Partition(inner_vals);
        fc.content = (shift + 1) - r0;
        return fc;
    };

    std::vector<std::pair<int, int>> ranges;  // consecutive row ranges of components
    {
        int comp_start = 0;
        int prev_row = -10, prev_lo = 0, prev_hi = -1;
        for (int i = 1; i <= shape.outer.length(); ++i) {
            int lo = shape.inner.part(i) + 1, hi = shape.outer.part(i);
            if (lo > hi)
                continue;
            bool joined = (i == prev_row + 1) && !(hi < prev_lo || lo > prev_hi);
            if (!joined) {
                if (comp_start != 0)
                    ranges.emplace_back(comp_start, prev_row);
                comp_start = i;
            }
            prev_row = i;
            prev_lo = lo;
            prev_hi = hi;
        }
        if (comp_start != 0)
            ranges.emplace_back(comp_start, prev_row);
    }

    MinimalFrame mf;
    FrameComponent whole = frame_of_rows(ranges.front().first, ranges.back().second);
    mf.pi = whole.pi;
    mf.rho = whole.rho;
    mf.content = whole.content;
    for (auto [a, b] : ranges)
        mf.components.push_back(frame_of_rows(a, b));
    return mf;
}

std::vector<std::pair<Partition, StripAnalysis>> strip_moves(const Partition& p, int size,
                                                             StripDirection direction,
                                                             int max_components)
{
    if (size <= 0)
        throw std::invalid_argument("strip size must be positive");
    std::vector<Partition> candidates;
    std::vector<int> cur;

    if (direction == StripDirection::add) {
        // mu >= p with |mu/p| = size and no 2x2 block in mu/p, which is
        // equivalent to mu_i <= p_{i-1} + 1 for i >= 2.
        std::function<void(int, int)> rec = [&](int row, int rem) {
            if (rem == 0) {
                std::vector<int> full = cur;
                for (int i = row; i <= p.length(); ++i)
                    full.push_back(p.parts()[i - 1]);
                candidates.emplace_back(std::move(full));
                return;
            }
            if (row > p.length() + size)
                return;
            int lo = p.part(row);
            int hi = (row == 1) ? p.part(1) + rem : std::min(cur[row - 2], p.part(row - 1) + 1);
            hi = std::min(hi, lo + rem);
            if (row > p.length())
                lo = std::max(lo, 1);
            for (int v = hi; v >= lo; --v) {
                if (v == 0)
                    break;
                cur.push_back(v);
                rec(row + 1, rem - (v - p.part(row)));
                cur.pop_back();
            }
            // Rows past p's length may simply not exist once rem hits 0;
            // handled by the rem == 0 branch above.
        };
        rec(1, size);
    } else {
        if (size > p.weight())
            return {};
        // mu <= p with |p/mu| = size and no 2x2 block in p/mu, which is
        // equivalent to mu_i >= p_{i+1} - 1.
        std::function<void(int, int)> rec = [&](int row, int rem) {
            if (row > p.length()) {
                if (rem == 0)
                    candidates.emplace_back(cur);
                return;
            }
            int hi = std::min(p.parts()[row - 1], row == 1 ? p.parts()[0] : cur[row - 2]);
            int lo = std::max(0, p.part(row + 1) - 1);
            for (int v = hi; v >= lo; --v) {
                int take = p.parts()[row - 1] - v;
                if (take > rem)
                    break;
                cur.push_back(v);
                rec(row + 1, rem - take);
                cur.pop_back();
            }
        };
        rec(1, size);
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::pair<Partition, StripAnalysis>> out;
    for (const Partition& mu : candidates) {
        SkewShape sk = (direction == StripDirection::add) ? SkewShape(mu, p) : SkewShape(p, mu);
        StripAnalysis an = analyze_strip(sk);
        if (an.is_broken_border_strip() && *an.cc >= 1 && *an.cc <= max_components)
            out.emplace_back(mu, std::move(an));
    }
    return out;
}

int m_stat(const Partition& p, int n)
{
    Partition conj = p.conjugate();
    int l = conj.length();
    std::vector<int> suffix(l + 2, 0);
    for (int k = l; k >= 1; --k)
        suffix[k] = suffix[k + 1] + conj.part(k);
    for (int k = l; k >= 1; --k)
        if (suffix[k] > n || suffix[k + 1] == n)
            return k;
    return 0;
}

}  // namespace steengrass
